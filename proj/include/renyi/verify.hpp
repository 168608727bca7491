#pragma once

// Property suites: every identity and inequality the library claims, run
// over seeded random instances. Shared by the `verify` CLI command and the
// acceptance tests.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "renyi/order.hpp"

namespace renyi::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  int checks = 0;          // individual assertions evaluated
  std::string failure;     // first failing check, empty when passed
  std::string note;        // exploratory findings (never affects pass/fail)
};

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  std::string only_suite;  // empty = all
};

/// Names of all registered suites, in execution order.
std::vector<std::string> suite_names();

/// Runs the selected suites; throws validation_error for an unknown suite name.
std::vector<SuiteResult> run_property_suites(const VerifyOptions& opts);

/// Divergence indirection used by the identity suites, so the harness can be
/// self-tested: injecting a perturbed divergence must make named suites fail.
using DivergenceDensitiesFn = double (*)(std::span<const double> p, std::span<const double> q,
                                         std::span<const double> w, Order order);
void set_divergence_hook(DivergenceDensitiesFn fn);  // nullptr restores the default
void inject_faulty_divergence();                     // test fixture: biased divergence

}  // namespace renyi::verify
