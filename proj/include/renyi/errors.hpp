#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

/// Input violates a numeric invariant (normalization, negativity, NaN, ...).
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structural mismatch between objects (different alphabets, wrong sizes).
class structural_error : public validation_error {
 public:
  explicit structural_error(const std::string& what) : validation_error(what) {}
};

/// Attempt to condition or slice where the measure carries no mass.
class out_of_support_error : public validation_error {
 public:
  explicit out_of_support_error(const std::string& what) : validation_error(what) {}
};

/// Operation not defined for the requested order (e.g. Sibson decomposition at alpha=0).
class unsupported_order_error : public std::runtime_error {
 public:
  explicit unsupported_order_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace renyi
