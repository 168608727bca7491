#pragma once

// Renyi divergence at all orders, the generalized Sibson identity with its
// explicit optimizer, and the variational formula for conditional entropy.

#include <span>
#include <vector>

#include "renyi/order.hpp"
#include "renyi/spaces.hpp"

namespace renyi {

/// D_alpha(p||q) for distributions on the same measured alphabet.
/// Nonnegative, zero iff p == q (alpha > 0), nondecreasing in the order,
/// independent of the reference weights. +inf on absolute-continuity
/// failure (alpha > 1 or alpha = 1) and on disjoint supports (alpha < 1).
double renyi_divergence(const Distribution& p, const Distribution& q, Order order);

/// Same, but the second argument is a possibly unnormalized finite measure
/// given by its density w.r.t. the space of p.
double renyi_divergence_vs_measure(const Distribution& p, std::span<const double> q_density,
                                   Order order);

/// Density-level core: p, q nonnegative densities w.r.t. common weights w;
/// p must be a probability density, q may be unnormalized.
double renyi_divergence_densities(std::span<const double> p, std::span<const double> q,
                                  std::span<const double> w, Order order);

/// D_alpha(P_XY || gamma (x) lambda) where lambda is a probability measure
/// on T given by its density w.r.t. eta.
double divergence_from_product_reference(const JointDistribution& joint,
                                         std::span<const double> lambda_density, Order order);

/// D_alpha(P_XY || mu (x) nu), both factors given as densities w.r.t. the
/// joint's reference weights.
double divergence_from_product_measure(const JointDistribution& joint,
                                       std::span<const double> mu_density,
                                       std::span<const double> nu_density, Order order);

/// The exact decomposition
///   D_alpha(P_XY || gamma (x) lambda) = -h_alpha(X|Y) + D_alpha(q_star || lambda)
/// valid for every probability lambda on T. q_star has density proportional
/// to phi(y) = (int_S F(x,y)^alpha dgamma)^(1/alpha); at order 1 it is P_Y.
struct SibsonDecomposition {
  Distribution q_star;      // the optimizing output measure
  double mu_star_mass;      // ||mu_star|| (may overflow to +inf at extreme orders)
  double log_mu_star_mass;  // log ||mu_star||, always finite for valid joints
  double h_cond;            // -(alpha/(alpha-1)) log ||mu_star||
};
SibsonDecomposition sibson_decomposition(const JointDistribution& joint, Order order);

/// h_alpha(X|Y) computed through the variational formula
///   h = -min over probability lambda of D_alpha(P_XY || gamma (x) lambda),
/// evaluated at the explicit minimizer q_star. Independent arithmetic route
/// from conditional_renyi_entropy; the two agree to ~1e-10.
double variational_conditional_entropy(const JointDistribution& joint, Order order);

}  // namespace renyi
