#pragma once

// The four alpha-mutual-information functionals: Arimoto's reference-
// dependent difference form, Sibson's (closed form), Augustin-Csiszar's
// (convex minimization over output measures), and Lapidoth-Pfister's
// (minimization over both product factors).

#include <cstdint>
#include <optional>

#include "renyi/order.hpp"
#include "renyi/spaces.hpp"

namespace renyi {

struct SolverConfig {
  double tol = 1e-10;       // objective-decrease convergence threshold
  int max_iter = 10000;     // per restart
  int restarts = 8;         // random restarts in addition to warm starts
  std::uint64_t seed = 0;   // deterministic restart sampling
};

enum class Direction { XtoY, YtoX };

struct MiResult {
  double value = 0.0;
  std::optional<Distribution> optimizer_mu;  // on T (or S for YtoX quantities)
  std::optional<Distribution> optimizer_nu;  // second factor, J only
  int iterations = 0;
  bool converged = true;
};

/// I^(gamma)_alpha(X ~> Y) = h_alpha(X) - h_alpha(X|Y). Depends on the
/// reference weights by design; >= 0 with equality iff independent for
/// alpha in (0, inf). Any order in [0, inf].
double arimoto_mi(const JointDistribution& joint, Order order, Direction dir = Direction::XtoY);

/// Sibson's I_alpha = min over mu of D_alpha(P_XY || P_X (x) mu), computed
/// in closed form as -h^{P_X}_alpha(X|Y) with the optimizer q_star attached.
/// Order in (0, inf); equals Shannon mutual information at order 1.
MiResult sibson_mi(const JointDistribution& joint, Order order, Direction dir = Direction::XtoY);

/// Augustin-Csiszar K_alpha = min over probability mu on the output side of
/// E_X D_alpha(P_{Y|X} || mu), solved by a damped fixed-point iteration on
/// the stationarity condition with a projected-subgradient fallback.
MiResult augustin_csiszar_mi(const JointDistribution& joint, Order order,
                             const SolverConfig& cfg = {}, Direction dir = Direction::XtoY);

/// Lapidoth-Pfister J_alpha = min over (mu, nu) of D_alpha(P_XY || mu (x) nu),
/// solved by exact alternating coordinate minimization (each step is the
/// Sibson optimizer along one coordinate) with multi-start. Symmetric in X,Y.
MiResult lapidoth_pfister_mi(const JointDistribution& joint, Order order,
                             const SolverConfig& cfg = {});

/// Exact P_Y-probability of the event
///   { y : D_alpha(P_{X|Y=y} || gamma) - D_alpha(P_X || gamma) < t }
/// together with the Markov bound e^{beta t} e^{-beta I^(gamma)_alpha},
/// beta = (1-alpha)/alpha. Requires alpha in (0,1); the bound trivializes
/// at alpha >= 1.
struct TailBound {
  double empirical_prob;
  double bound;
};
TailBound dependence_tail_bound(const JointDistribution& joint, Order order, double t);

/// The escort input with density proportional to (dP/dgamma)^alpha. Feeding
/// it through the channel of the joint turns Arimoto's mutual information
/// into a Sibson one: I^(gamma)_alpha(X ~> Y) = I_alpha(tilted, W).
Distribution tilted_input(const Distribution& dist, Order order);

}  // namespace renyi
