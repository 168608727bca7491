#include "renyi/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi/entropy.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double renyi_divergence_densities(std::span<const double> p, std::span<const double> q,
                                  std::span<const double> w, Order order) {
  if (p.size() != q.size() || p.size() != w.size())
    throw structural_error("renyi_divergence: density lengths differ");

  switch (order.kind()) {
    case Order::Kind::Zero: {
      double nu_supp = 0.0;
      for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) nu_supp += q[i] * w[i];
      return -std::log(nu_supp);  // +inf when nu(supp p) = 0
    }
    case Order::Kind::One: {
      double d = 0.0;
      for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return kInf;
        d += p[i] * std::log(p[i] / q[i]) * w[i];
      }
      return d;
    }
    case Order::Kind::Infinity: {
      double r = 0.0;
      for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return kInf;
        r = std::max(r, p[i] / q[i]);
      }
      return std::log(r);
    }
    case Order::Kind::Finite:
      break;
  }

  const double alpha = order.value();
  // log sum p^alpha q^(1-alpha) w, accumulated in the log domain.
  double tmax = -kInf;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      if (alpha > 1.0) return kInf;  // absolute-continuity failure
      continue;                      // 0^(1-alpha) term vanishes for alpha < 1
    }
    double t = alpha * std::log(p[i]) + (1.0 - alpha) * std::log(q[i]) + std::log(w[i]);
    tmax = std::max(tmax, t);
  }
  if (tmax == -kInf) {
    // Disjoint supports at alpha < 1: log 0 / (alpha - 1) = +inf.
    return kInf;
  }
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0 || q[i] == 0.0) continue;
    double t = alpha * std::log(p[i]) + (1.0 - alpha) * std::log(q[i]) + std::log(w[i]);
    acc += std::exp(t - tmax);
  }
  return (tmax + std::log(acc)) / (alpha - 1.0);
}

double renyi_divergence(const Distribution& p, const Distribution& q, Order order) {
  if (p.space() != q.space())
    throw structural_error("renyi_divergence: arguments live on different measured alphabets");
  return renyi_divergence_densities(p.density(), q.density(), p.space().gamma(), order);
}

double renyi_divergence_vs_measure(const Distribution& p, std::span<const double> q_density,
                                   Order order) {
  if (q_density.size() != static_cast<size_t>(p.size()))
    throw structural_error("renyi_divergence: measure density length does not match alphabet");
  return renyi_divergence_densities(p.density(), q_density, p.space().gamma(), order);
}

double divergence_from_product_reference(const JointDistribution& joint,
                                         std::span<const double> lambda_density, Order order) {
  if (lambda_density.size() != static_cast<size_t>(joint.ny()))
    throw structural_error("divergence_from_product_reference: lambda length does not match T");
  const int nx = joint.nx();
  const int ny = joint.ny();
  std::vector<double> p(static_cast<size_t>(nx * ny));
  std::vector<double> q(p.size());
  std::vector<double> w(p.size());
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      size_t k = static_cast<size_t>(i * ny + j);
      p[k] = joint.f(i, j);
      q[k] = lambda_density[static_cast<size_t>(j)];
      w[k] = joint.space_x().gamma(i) * joint.space_y().gamma(j);
    }
  }
  return renyi_divergence_densities(p, q, w, order);
}

double divergence_from_product_measure(const JointDistribution& joint,
                                       std::span<const double> mu_density,
                                       std::span<const double> nu_density, Order order) {
  if (mu_density.size() != static_cast<size_t>(joint.nx()) ||
      nu_density.size() != static_cast<size_t>(joint.ny()))
    throw structural_error("divergence_from_product_measure: factor lengths do not match");
  const int nx = joint.nx();
  const int ny = joint.ny();
  std::vector<double> p(static_cast<size_t>(nx * ny));
  std::vector<double> q(p.size());
  std::vector<double> w(p.size());
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      size_t k = static_cast<size_t>(i * ny + j);
      p[k] = joint.f(i, j);
      q[k] = mu_density[static_cast<size_t>(i)] * nu_density[static_cast<size_t>(j)];
      w[k] = joint.space_x().gamma(i) * joint.space_y().gamma(j);
    }
  }
  return renyi_divergence_densities(p, q, w, order);
}

SibsonDecomposition sibson_decomposition(const JointDistribution& joint, Order order) {
  if (order.is_zero() || order.is_infinity())
    throw unsupported_order_error("sibson_decomposition: order must lie in (0, inf)");

  if (order.is_one()) {
    Distribution q_star = joint.marginal_y();
    return {q_star, 1.0, 0.0, conditional_renyi_entropy(joint, order)};
  }

  const double alpha = order.value();
  const int nx = joint.nx();
  const int ny = joint.ny();
  const auto& gx = joint.space_x().gamma();
  const auto& gy = joint.space_y().gamma();

  std::vector<double> log_phi(static_cast<size_t>(ny), -kInf);
  std::vector<double> slice(static_cast<size_t>(nx));
  for (int j = 0; j < ny; ++j) {
    bool nonempty = false;
    for (int i = 0; i < nx; ++i) {
      slice[static_cast<size_t>(i)] = joint.f(i, j);
      nonempty = nonempty || slice[static_cast<size_t>(i)] > 0.0;
    }
    if (!nonempty) continue;
    log_phi[static_cast<size_t>(j)] = detail::log_power_sum(slice, gx, alpha) / alpha;
  }

  double tmax = -kInf;
  for (int j = 0; j < ny; ++j)
    if (log_phi[static_cast<size_t>(j)] != -kInf)
      tmax = std::max(tmax, log_phi[static_cast<size_t>(j)] + std::log(gy[static_cast<size_t>(j)]));
  double acc = 0.0;
  for (int j = 0; j < ny; ++j)
    if (log_phi[static_cast<size_t>(j)] != -kInf)
      acc += std::exp(log_phi[static_cast<size_t>(j)] + std::log(gy[static_cast<size_t>(j)]) - tmax);
  double log_mass = tmax + std::log(acc);

  std::vector<double> q_density(static_cast<size_t>(ny), 0.0);
  for (int j = 0; j < ny; ++j)
    if (log_phi[static_cast<size_t>(j)] != -kInf)
      q_density[static_cast<size_t>(j)] = std::exp(log_phi[static_cast<size_t>(j)] - log_mass);

  SibsonDecomposition out{Distribution(joint.space_y(), std::move(q_density)),
                          std::exp(log_mass), log_mass,
                          -(alpha / (alpha - 1.0)) * log_mass};
  return out;
}

double variational_conditional_entropy(const JointDistribution& joint, Order order) {
  if (order.is_zero() || order.is_infinity())
    throw unsupported_order_error("variational_conditional_entropy: order must lie in (0, inf)");
  SibsonDecomposition dec = sibson_decomposition(joint, order);
  return -divergence_from_product_reference(joint, dec.q_star.density(), order);
}

}  // namespace renyi
