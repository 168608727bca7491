#pragma once

// Order-alpha channel capacities for the I/K/J functionals, the Renyi
// radius (a convex minimax over output measures), and the equality web
// relating them.

#include <optional>
#include <string>
#include <vector>

#include "renyi/mutual_information.hpp"
#include "renyi/order.hpp"
#include "renyi/spaces.hpp"

namespace renyi {

enum class CapacityFunctional { SibsonXY, SibsonYX, AugustinXY, AugustinYX, LapidothPfister };

std::string to_string(CapacityFunctional f);

struct CapacityResult {
  double value = 0.0;
  Distribution argmax_input;              // best input found
  std::optional<Distribution> center;     // radius center q, when applicable
  double certificate_gap = 0.0;           // max-min duality gap where available
  int iterations = 0;
  bool converged = true;
};

/// S_alpha(W) = min over probability q of max over rows D_alpha(row || q).
/// Solved by exponentiated-gradient descent on an annealed softmax smoothing
/// of the finite max, polished by subgradient steps on the true max. The
/// certificate_gap is value minus a Sibson-MI lower bound at the dual input
/// weights. Order in (0, inf]; order infinity has the closed form
/// log sum_y max_x W(y|x)-mass.
CapacityResult renyi_radius(const Channel& channel, Order order, const SolverConfig& cfg = {});

/// sup over input distributions of the chosen mutual information of
/// (P, W), by multiplicative-weights ascent over the input simplex with
/// random restarts. The returned value is a certified lower bound; for
/// SibsonXY the radius provides the matching upper bound (certificate_gap).
/// Order in (0, inf); infinity is accepted for SibsonXY only.
CapacityResult capacity(const Channel& channel, CapacityFunctional functional, Order order,
                        const SolverConfig& cfg = {});

/// Computes all six quantities of the alpha >= 1 chain
///   C_{K,yx} <= C_{I,xy} = C_J = C_{K,xy} = S_alpha <= C_{I,yx}
/// and checks it with solver slack. The outer inequalities are reported,
/// never asserted as equalities.
struct CapacityEqualitiesReport {
  double c_k_yx = 0, c_i_xy = 0, c_j = 0, c_k_xy = 0, radius = 0, c_i_yx = 0;
  double max_middle_spread = 0;  // max pairwise gap among the four middle terms
  double outer_gap_low = 0;      // C_{I,xy} - C_{K,yx}
  double outer_gap_high = 0;     // C_{I,yx} - S_alpha
  bool chain_holds = false;
  bool conclusive = false;  // false when any inner solver failed to converge
  double tolerance = 1e-4;
};
CapacityEqualitiesReport capacity_equalities_check(const Channel& channel, Order order,
                                                   const SolverConfig& cfg = {});

/// For alpha in [1/2, 1): sup_P J_alpha(P, W) = S_alpha(W) on finite
/// alphabets. Also exercises the inner reduction sup_P f(P, mu) =
/// max_x D_alpha(W(x) || mu) against sampled mu.
struct LpRadiusReport {
  double c_j = 0;
  double radius = 0;
  double gap = 0;                   // |c_j - radius|
  double inner_reduction_slack = 0; // max over sampled (P, mu) of f(P,mu) - max_x D
  bool holds = false;
  bool conclusive = false;
};
LpRadiusReport lp_capacity_radius_check(const Channel& channel, Order order,
                                        const SolverConfig& cfg = {});

}  // namespace renyi
