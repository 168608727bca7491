// Command-line front end: single quantities, alpha sweeps, capacity reports,
// and the property/verification suites. Exit codes: 0 success, 1 property
// failure, 2 input validation, 3 unsupported order/domain.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "renyi/capacity.hpp"
#include "renyi/divergence.hpp"
#include "renyi/entropy.hpp"
#include "renyi/json_io.hpp"
#include "renyi/mutual_information.hpp"
#include "renyi/oracle.hpp"
#include "renyi/verify.hpp"

namespace {

using namespace renyi;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUnsupportedOrder = 3;

struct OutputOptions {
  std::string format = "table";  // table | json | csv
  bool bits = false;
};

double in_unit(double nats, const OutputOptions& out) {
  return out.bits ? nats / std::log(2.0) : nats;
}

std::string unit_name(const OutputOptions& out) { return out.bits ? "bits" : "nats"; }

void print_value(const std::string& quantity, const Order& alpha, double value,
                 const OutputOptions& out) {
  double v = in_unit(value, out);
  if (out.format == "json") {
    json j{{"quantity", quantity}, {"alpha", alpha.to_string()}, {"value", v},
           {"unit", unit_name(out)}};
    std::printf("%s\n", j.dump().c_str());
  } else if (out.format == "csv") {
    std::printf("alpha,value\n%s,%.12g\n", alpha.to_string().c_str(), v);
  } else {
    std::printf("%.6f\n", v);
  }
}

std::vector<Order> parse_alphas(const std::string& csv) {
  std::vector<Order> alphas;
  std::string token;
  for (size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || csv[i] == ',') {
      if (!token.empty()) alphas.push_back(Order::parse(token));
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(csv[i]))) {
      token.push_back(csv[i]);
    }
  }
  if (alphas.empty()) throw validation_error("no orders given");
  return alphas;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RENYI_LAB_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

void add_solver_flags(CLI::App* cmd, SolverConfig* cfg) {
  cmd->add_option("--tol", cfg->tol, "solver convergence tolerance");
  cmd->add_option("--max-iter", cfg->max_iter, "solver iteration cap");
  cmd->add_option("--restarts", cfg->restarts, "random restarts");
  cmd->add_option("--seed", cfg->seed, "deterministic seed (env RENYI_LAB_SEED overrides default)");
}

json optimizer_json(const MiResult& r) {
  json j;
  if (r.optimizer_mu) j["optimizer_mu"] = io::to_json(*r.optimizer_mu);
  if (r.optimizer_nu) j["optimizer_nu"] = io::to_json(*r.optimizer_nu);
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Renyi information measures on finite measured alphabets"};
  app.require_subcommand(1);

  OutputOptions out;
  std::string alpha_str = "1";
  SolverConfig cfg;
  cfg.seed = default_seed();

  // ---- entropy ----
  auto* entropy = app.add_subcommand("entropy", "Renyi entropy of a distribution or joint");
  std::string entropy_file;
  bool conditional = false, average = false;
  entropy->add_option("input", entropy_file, "distribution or joint JSON file")->required();
  entropy->add_option("--alpha", alpha_str, "order in [0, inf]")->required();
  entropy->add_flag("--conditional", conditional, "conditional entropy h(X|Y) of a joint");
  entropy->add_flag("--average", average, "P_Y-averaged per-slice entropy of a joint");
  entropy->add_flag("--bits", out.bits, "report bits instead of nats");
  entropy->add_option("--output", out.format, "table|json|csv");

  // ---- divergence ----
  auto* divergence = app.add_subcommand("divergence", "Renyi divergence between two distributions");
  std::string div_p, div_q;
  divergence->add_option("p", div_p, "first distribution JSON file")->required();
  divergence->add_option("q", div_q, "second distribution JSON file")->required();
  divergence->add_option("--alpha", alpha_str, "order in [0, inf]")->required();
  divergence->add_flag("--bits", out.bits, "report bits instead of nats");
  divergence->add_option("--output", out.format, "table|json|csv");

  // ---- mi ----
  auto* mi = app.add_subcommand("mi", "alpha-mutual information of a joint distribution");
  std::string mi_file, functional = "sibson", direction = "xy";
  bool show_optimizer = false;
  mi->add_option("input", mi_file, "joint JSON file")->required();
  mi->add_option("--alpha", alpha_str, "order")->required();
  mi->add_option("--functional", functional, "arimoto|sibson|augustin|lp");
  mi->add_option("--direction", direction, "xy|yx");
  mi->add_flag("--show-optimizer", show_optimizer, "print the optimizing measure(s)");
  mi->add_flag("--bits", out.bits, "report bits instead of nats");
  mi->add_option("--output", out.format, "table|json|csv");
  add_solver_flags(mi, &cfg);

  // ---- capacity ----
  auto* cap = app.add_subcommand("capacity", "order-alpha channel capacities and the radius");
  std::string cap_file, cap_functional = "I";
  cap->add_option("input", cap_file, "channel JSON file")->required();
  cap->add_option("--alpha", alpha_str, "order")->required();
  cap->add_option("--functional", cap_functional, "I|K|J|radius|all");
  cap->add_option("--direction", direction, "xy|yx (I and K only)");
  cap->add_flag("--show-optimizer", show_optimizer, "print best input / center");
  cap->add_flag("--bits", out.bits, "report bits instead of nats");
  cap->add_option("--output", out.format, "table|json|csv");
  add_solver_flags(cap, &cfg);

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run the property/verification suites");
  int trials = 100;
  std::string only_suite, inject_fault;
  std::uint64_t verify_seed = default_seed();
  verify_cmd->add_option("--trials", trials, "random instances per suite");
  verify_cmd->add_option("--seed", verify_seed, "instance seed");
  verify_cmd->add_option("--suite", only_suite, "run a single named suite");
  verify_cmd->add_option("--output", out.format, "table|json");
  verify_cmd->add_option("--inject-fault", inject_fault,
                         "self-test: 'divergence' biases the divergence used by identity suites");

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "CSV rows of (alpha, value) for plotting");
  std::string sweep_file, quantity = "entropy", alphas_csv;
  double tail_t = 0.1;
  sweep->add_option("input", sweep_file, "input JSON file")->required();
  sweep->add_option("--quantity", quantity,
                    "entropy|conditional-entropy|average-conditional-entropy|arimoto|sibson|"
                    "augustin|lp|tailbound|radius");
  sweep->add_option("--alphas", alphas_csv, "comma-separated orders")->required();
  sweep->add_option("--t", tail_t, "threshold for the tailbound quantity");
  sweep->add_flag("--bits", out.bits, "report bits instead of nats");
  add_solver_flags(sweep, &cfg);

  CLI11_PARSE(app, argc, argv);

  if (entropy->parsed()) {
    Order a = Order::parse(alpha_str);
    json j = io::load_json_file(entropy_file);
    io::ObjectKind kind = io::detect_kind(j);
    double value = 0.0;
    std::string what;
    if (kind == io::ObjectKind::Distribution) {
      if (conditional || average)
        throw validation_error("--conditional/--average need a joint distribution input");
      value = renyi_entropy(io::distribution_from_json(j), a);
      what = "entropy";
    } else if (kind == io::ObjectKind::Joint) {
      JointDistribution joint = io::joint_from_json(j);
      if (conditional && average)
        throw validation_error("--conditional and --average are mutually exclusive");
      if (conditional) {
        value = conditional_renyi_entropy(joint, a);
        what = "conditional-entropy";
      } else if (average) {
        value = average_conditional_renyi_entropy(joint, a);
        what = "average-conditional-entropy";
      } else {
        value = renyi_entropy(joint.flatten(), a);
        what = "joint-entropy";
      }
    } else {
      throw validation_error("entropy expects a distribution or joint input");
    }
    print_value(what, a, value, out);
    return kExitOk;
  }

  if (divergence->parsed()) {
    Order a = Order::parse(alpha_str);
    Distribution p = io::distribution_from_json(io::load_json_file(div_p));
    Distribution q = io::distribution_from_json(io::load_json_file(div_q));
    print_value("divergence", a, renyi_divergence(p, q, a), out);
    return kExitOk;
  }

  if (mi->parsed()) {
    Order a = Order::parse(alpha_str);
    JointDistribution joint = io::joint_from_json(io::load_json_file(mi_file));
    Direction dir = direction == "yx" ? Direction::YtoX : Direction::XtoY;
    if (direction != "xy" && direction != "yx")
      throw validation_error("--direction must be xy or yx");
    MiResult r;
    if (functional == "arimoto") {
      r.value = arimoto_mi(joint, a, dir);
    } else if (functional == "sibson") {
      r = sibson_mi(joint, a, dir);
    } else if (functional == "augustin") {
      r = augustin_csiszar_mi(joint, a, cfg, dir);
    } else if (functional == "lp") {
      r = lapidoth_pfister_mi(joint, a, cfg);
    } else {
      throw validation_error("--functional must be one of arimoto|sibson|augustin|lp");
    }
    if (out.format == "json") {
      json rep{{"quantity", functional},
               {"direction", direction},
               {"alpha", a.to_string()},
               {"value", in_unit(r.value, out)},
               {"unit", unit_name(out)},
               {"converged", r.converged}};
      if (show_optimizer) rep.update(optimizer_json(r));
      std::printf("%s\n", rep.dump().c_str());
    } else {
      print_value(functional, a, r.value, out);
      if (show_optimizer) {
        json opt = optimizer_json(r);
        std::printf("%s\n", opt.dump().c_str());
      }
    }
    return kExitOk;
  }

  if (cap->parsed()) {
    Order a = Order::parse(alpha_str);
    Channel channel = io::channel_from_json(io::load_json_file(cap_file));
    if (cap_functional == "all") {
      CapacityEqualitiesReport rep = capacity_equalities_check(channel, a, cfg);
      json j{{"alpha", a.to_string()},
             {"unit", unit_name(out)},
             {"c_k_yx", in_unit(rep.c_k_yx, out)},
             {"c_i_xy", in_unit(rep.c_i_xy, out)},
             {"c_j", in_unit(rep.c_j, out)},
             {"c_k_xy", in_unit(rep.c_k_xy, out)},
             {"radius", in_unit(rep.radius, out)},
             {"c_i_yx", in_unit(rep.c_i_yx, out)},
             {"max_middle_spread", in_unit(rep.max_middle_spread, out)},
             {"outer_gap_low", in_unit(rep.outer_gap_low, out)},
             {"outer_gap_high", in_unit(rep.outer_gap_high, out)},
             {"chain_holds", rep.chain_holds},
             {"conclusive", rep.conclusive},
             {"tolerance", rep.tolerance}};
      if (out.format == "json") {
        std::printf("%s\n", j.dump().c_str());
      } else {
        std::printf("C_K(Y~>X) = %.6f\nC_I(X~>Y) = %.6f\nC_J       = %.6f\nC_K(X~>Y) = %.6f\n"
                    "radius    = %.6f\nC_I(Y~>X) = %.6f\nchain %s (middle spread %.2e)\n",
                    in_unit(rep.c_k_yx, out), in_unit(rep.c_i_xy, out), in_unit(rep.c_j, out),
                    in_unit(rep.c_k_xy, out), in_unit(rep.radius, out), in_unit(rep.c_i_yx, out),
                    rep.chain_holds ? "holds" : "VIOLATED", rep.max_middle_spread);
      }
      if (!rep.conclusive) return kExitPropertyFailure;
      return rep.chain_holds ? kExitOk : kExitPropertyFailure;
    }

    CapacityResult r{0.0, Distribution::uniform(channel.input_space()), std::nullopt, 0.0, 0, true};
    std::string what;
    Direction dir = direction == "yx" ? Direction::YtoX : Direction::XtoY;
    if (cap_functional == "radius") {
      r = renyi_radius(channel, a, cfg);
      what = "radius";
    } else if (cap_functional == "I") {
      r = capacity(channel,
                   dir == Direction::YtoX ? CapacityFunctional::SibsonYX
                                          : CapacityFunctional::SibsonXY,
                   a, cfg);
      what = "capacity-I";
    } else if (cap_functional == "K") {
      r = capacity(channel,
                   dir == Direction::YtoX ? CapacityFunctional::AugustinYX
                                          : CapacityFunctional::AugustinXY,
                   a, cfg);
      what = "capacity-K";
    } else if (cap_functional == "J") {
      r = capacity(channel, CapacityFunctional::LapidothPfister, a, cfg);
      what = "capacity-J";
    } else {
      throw validation_error("--functional must be one of I|K|J|radius|all");
    }
    if (out.format == "json") {
      json j{{"quantity", what},
             {"alpha", a.to_string()},
             {"value", in_unit(r.value, out)},
             {"unit", unit_name(out)},
             {"certificate_gap", r.certificate_gap},
             {"converged", r.converged}};
      if (show_optimizer) {
        j["argmax_input"] = io::to_json(r.argmax_input);
        if (r.center) j["center"] = io::to_json(*r.center);
      }
      std::printf("%s\n", j.dump().c_str());
    } else {
      print_value(what, a, r.value, out);
      if (show_optimizer) {
        std::printf("%s\n", io::to_json(r.argmax_input).dump().c_str());
        if (r.center) std::printf("%s\n", io::to_json(*r.center).dump().c_str());
      }
    }
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    if (!inject_fault.empty()) {
      if (inject_fault != "divergence")
        throw validation_error("--inject-fault supports only 'divergence'");
      verify::inject_faulty_divergence();
    }
    verify::VerifyOptions opts;
    opts.trials = trials;
    opts.seed = verify_seed;
    opts.only_suite = only_suite;
    std::vector<verify::SuiteResult> results = verify::run_property_suites(opts);
    verify::set_divergence_hook(nullptr);
    bool all_passed = true;
    json failures = json::array();
    for (const auto& r : results) {
      all_passed = all_passed && r.passed;
      if (out.format != "json") {
        std::printf("%-34s %s  (%d checks)%s%s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                    r.checks, r.failure.empty() ? "" : ("  " + r.failure).c_str(),
                    r.note.empty() ? "" : ("  [" + r.note + "]").c_str());
      }
      if (!r.passed) failures.push_back({{"suite", r.name}, {"failure", r.failure}});
    }
    if (out.format == "json") {
      json j{{"trials", trials}, {"seed", verify_seed}, {"passed", all_passed},
             {"failures", failures}};
      json suites = json::array();
      for (const auto& r : results)
        suites.push_back({{"name", r.name},
                          {"passed", r.passed},
                          {"checks", r.checks},
                          {"failure", r.failure},
                          {"note", r.note}});
      j["suites"] = suites;
      std::printf("%s\n", j.dump().c_str());
    } else if (!all_passed) {
      std::printf("FAILED: %s\n", failures.dump().c_str());
    }
    return all_passed ? kExitOk : kExitPropertyFailure;
  }

  if (sweep->parsed()) {
    std::vector<Order> alphas = parse_alphas(alphas_csv);
    json j = io::load_json_file(sweep_file);
    io::ObjectKind kind = io::detect_kind(j);

    if (quantity == "tailbound") {
      if (kind != io::ObjectKind::Joint) throw validation_error("tailbound expects a joint input");
      JointDistribution joint = io::joint_from_json(j);
      std::printf("alpha,empirical,bound\n");
      for (const Order& a : alphas) {
        TailBound tb = dependence_tail_bound(joint, a, tail_t);
        std::printf("%s,%.12g,%.12g\n", a.to_string().c_str(), tb.empirical_prob, tb.bound);
      }
      return kExitOk;
    }

    std::printf("alpha,value\n");
    for (const Order& a : alphas) {
      double v = 0.0;
      if (quantity == "entropy") {
        v = kind == io::ObjectKind::Joint ? renyi_entropy(io::joint_from_json(j).flatten(), a)
                                          : renyi_entropy(io::distribution_from_json(j), a);
      } else if (quantity == "conditional-entropy") {
        v = conditional_renyi_entropy(io::joint_from_json(j), a);
      } else if (quantity == "average-conditional-entropy") {
        v = average_conditional_renyi_entropy(io::joint_from_json(j), a);
      } else if (quantity == "arimoto") {
        v = arimoto_mi(io::joint_from_json(j), a);
      } else if (quantity == "sibson") {
        v = sibson_mi(io::joint_from_json(j), a).value;
      } else if (quantity == "augustin") {
        v = augustin_csiszar_mi(io::joint_from_json(j), a, cfg).value;
      } else if (quantity == "lp") {
        v = lapidoth_pfister_mi(io::joint_from_json(j), a, cfg).value;
      } else if (quantity == "radius") {
        v = renyi_radius(io::channel_from_json(j), a, cfg).value;
      } else {
        throw validation_error("unknown sweep quantity '" + quantity + "'");
      }
      std::printf("%s,%.12g\n", a.to_string().c_str(), in_unit(v, out));
    }
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const unsupported_order_error& e) {
    std::fprintf(stderr, "unsupported order: %s\n", e.what());
    return kExitUnsupportedOrder;
  } catch (const validation_error& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
}
