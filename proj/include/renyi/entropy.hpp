#pragma once

// Renyi entropy of order alpha with respect to an arbitrary reference
// measure, the Arimoto-style conditional version, and the averaged
// per-slice alternative. All values are in nats and may be +/-inf.

#include <span>
#include <vector>

#include "renyi/order.hpp"
#include "renyi/spaces.hpp"

namespace renyi {

/// h_alpha(X) = (alpha/(1-alpha)) log ||f||_alpha. Order 0 gives
/// log gamma(supp f), order 1 the Shannon entropy w.r.t. gamma, order
/// infinity -log max_i f[i]. Nonincreasing in the order.
double renyi_entropy(const Distribution& dist, Order order);

/// exp(-renyi_entropy); equals 1/gamma(supp f) at order 0.
double renyi_probability(const Distribution& dist, Order order);

/// Arimoto conditional entropy h_alpha(X|Y): a weighted power mean of the
/// conditional Renyi probabilities, computed from the joint density as
/// (alpha/(1-alpha)) log int_T (int_S F^alpha dgamma)^(1/alpha) deta.
/// Order 0 is the P_Y-ess-sup of per-slice order-0 entropies; order
/// infinity is the closed-form limit -log int_T max_x F(x,y) deta(y).
double conditional_renyi_entropy(const JointDistribution& joint, Order order);

/// The P_Y-average of per-slice entropies E_Y h_alpha(X|Y=y). Not the same
/// object as conditional_renyi_entropy except at order 1.
double average_conditional_renyi_entropy(const JointDistribution& joint, Order order);

/// Both sides of the reference-change bound
///   h^mu(X|Y) >= h^gamma(X|Y) - log M,   M = max ratio old/new weight,
/// where the references on S and T are replaced by mu_x and mu_y.
struct SensitivityBound {
  double lhs;    // h with the new references
  double rhs;    // h with the original references minus log M
  double log_m;  // log of the density bound M
};
SensitivityBound reference_sensitivity_check(const JointDistribution& joint,
                                             const std::vector<double>& mu_x,
                                             const std::vector<double>& mu_y, Order order);

namespace detail {

/// log sum_i f[i]^alpha * w[i], max-factored so it is stable for alpha up to
/// ~1e3 and down to ~1e-3. Terms with f[i] == 0 are dropped. Requires at
/// least one positive f[i] with positive weight.
double log_power_sum(std::span<const double> f, std::span<const double> w, double alpha);

/// Shannon entropy -sum f log f w over the support.
double shannon_entropy(std::span<const double> f, std::span<const double> w);

}  // namespace detail

}  // namespace renyi
