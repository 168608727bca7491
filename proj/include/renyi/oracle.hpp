#pragma once

// Brute-force certifiers: exhaustive simplex-grid minimization for the
// mutual-information objectives, grid maximization for capacities, a
// limit prober for the order-limit propositions, and a classic
// Blahut-Arimoto reference for the Shannon case. These deliberately avoid
// the closed forms and solver shortcuts used by the main implementation.

#include <cstdint>
#include <functional>
#include <vector>

#include "renyi/capacity.hpp"
#include "renyi/mutual_information.hpp"
#include "renyi/order.hpp"
#include "renyi/spaces.hpp"

namespace renyi::oracle {

/// Exhaustive enumeration of probability vectors with denominators 1/step
/// on the (dimension-1)-simplex, in integer-composition form so every point
/// sums to 1 exactly up to one final division.
class SimplexGrid {
 public:
  SimplexGrid(int dimension, double step);

  int dimension() const { return dim_; }
  double step() const { return 1.0 / static_cast<double>(denom_); }
  std::uint64_t point_count() const;

  /// Visits every grid point; the span passed to the visitor is reused.
  void for_each(const std::function<void(const std::vector<double>&)>& visit) const;

 private:
  int dim_;
  std::int64_t denom_;
};

/// Guard on exhaustive enumerations (total evaluated grid points, counting
/// the product of the two grids for the Lapidoth-Pfister objective).
inline constexpr std::uint64_t kGridPointGuard = 2'000'000'000ULL;

enum class MiObjective { Sibson, Augustin, LapidothPfister };

struct GridMinResult {
  double value = 0.0;
  std::vector<double> argmin_mu;   // masses on T (Sibson/Augustin) or S (LP first factor)
  std::vector<double> argmin_nu;   // masses on T, LP only
  std::uint64_t points = 0;
};

/// Exhaustive minimum of the chosen objective over the simplex grid (the
/// product of two grids for LapidothPfister). Ties broken toward the
/// lexicographically smallest argmin. Throws validation_error with a size
/// estimate when the enumeration would exceed kGridPointGuard.
GridMinResult grid_minimize_divergence(MiObjective objective, const JointDistribution& joint,
                                       Order order, double step);

struct GridMaxResult {
  double value = 0.0;
  std::vector<double> argmax;  // input masses
  std::uint64_t points = 0;
};

/// Exhaustive maximum of the chosen mutual information over the input
/// simplex grid. Inner minimizations use the (separately certified) module
/// solvers; SibsonXY/YX are evaluated in closed form.
GridMaxResult grid_maximize_capacity(const Channel& channel, CapacityFunctional functional,
                                     Order order, double step, const SolverConfig& inner = {});

struct LimitReport {
  std::vector<double> alphas;
  std::vector<double> values;
  double limit_value = 0.0;
  double terminal_gap = 0.0;          // |values.back() - limit_value|
  bool monotone_toward_limit = false; // successive probes approach the limit one-sidedly
};

/// Evaluates fn along a geometric grid approaching the target order (0, 1
/// or infinity) and reports the convergence direction and terminal gap
/// against the caller-supplied limit value.
LimitReport limit_prober(const std::function<double(double)>& fn, Order target, double limit_value);

/// Shannon capacity by classic Blahut-Arimoto alternating optimization,
/// used to cross-check the order-1 collapse of every capacity here.
double shannon_capacity_blahut_arimoto(const Channel& channel, double tol = 1e-12,
                                       int max_iter = 200000);

}  // namespace renyi::oracle
