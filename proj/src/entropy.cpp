#include "renyi/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace renyi {

namespace detail {

double log_power_sum(std::span<const double> f, std::span<const double> w, double alpha) {
  double fmax = 0.0;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] > fmax) fmax = f[i];
  if (fmax == 0.0) return -std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] > 0.0) s += std::pow(f[i] / fmax, alpha) * w[i];
  }
  return alpha * std::log(fmax) + std::log(s);
}

double shannon_entropy(std::span<const double> f, std::span<const double> w) {
  double h = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] > 0.0) h -= f[i] * std::log(f[i]) * w[i];
  }
  return h;
}

namespace {

double entropy_densities(std::span<const double> f, std::span<const double> w, Order order) {
  switch (order.kind()) {
    case Order::Kind::Zero: {
      double support_mass = 0.0;
      for (size_t i = 0; i < f.size(); ++i)
        if (f[i] > 0.0) support_mass += w[i];
      return std::log(support_mass);
    }
    case Order::Kind::One:
      return shannon_entropy(f, w);
    case Order::Kind::Infinity: {
      double fmax = 0.0;
      for (double x : f) fmax = std::max(fmax, x);
      return -std::log(fmax);
    }
    case Order::Kind::Finite:
      break;
  }
  double alpha = order.value();
  return log_power_sum(f, w, alpha) / (1.0 - alpha);
}

}  // namespace

}  // namespace detail

double renyi_entropy(const Distribution& dist, Order order) {
  return detail::entropy_densities(dist.density(), dist.space().gamma(), order);
}

double renyi_probability(const Distribution& dist, Order order) {
  return std::exp(-renyi_entropy(dist, order));
}

double conditional_renyi_entropy(const JointDistribution& joint, Order order) {
  const int nx = joint.nx();
  const int ny = joint.ny();
  const auto& gx = joint.space_x().gamma();
  const auto& gy = joint.space_y().gamma();

  // Marginal density of Y and per-slice views of F.
  std::vector<double> slice(static_cast<size_t>(nx));
  auto load_slice = [&](int j) {
    double g = 0.0;
    for (int i = 0; i < nx; ++i) {
      slice[static_cast<size_t>(i)] = joint.f(i, j);
      g += joint.f(i, j) * gx[static_cast<size_t>(i)];
    }
    return g;
  };

  switch (order.kind()) {
    case Order::Kind::Zero: {
      // P_Y-ess-sup of the per-slice order-0 entropies.
      double best = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < ny; ++j) {
        if (load_slice(j) <= 0.0) continue;
        double support_mass = 0.0;
        for (int i = 0; i < nx; ++i)
          if (slice[static_cast<size_t>(i)] > 0.0) support_mass += gx[static_cast<size_t>(i)];
        best = std::max(best, std::log(support_mass));
      }
      return best;
    }
    case Order::Kind::One: {
      double h = 0.0;
      for (int j = 0; j < ny; ++j) {
        double g = load_slice(j);
        if (g <= 0.0) continue;
        for (int i = 0; i < nx; ++i) {
          double F = slice[static_cast<size_t>(i)];
          if (F > 0.0) h -= F * std::log(F / g) * gx[static_cast<size_t>(i)] * gy[static_cast<size_t>(j)];
        }
      }
      return h;
    }
    case Order::Kind::Infinity: {
      // -log int max_x F(x,y) deta(y), the alpha -> inf limit.
      double s = 0.0;
      for (int j = 0; j < ny; ++j) {
        double m = 0.0;
        for (int i = 0; i < nx; ++i) m = std::max(m, joint.f(i, j));
        s += m * gy[static_cast<size_t>(j)];
      }
      return -std::log(s);
    }
    case Order::Kind::Finite:
      break;
  }

  const double alpha = order.value();
  // h = (alpha/(1-alpha)) * log sum_j eta_j phi_j with
  // log phi_j = (1/alpha) log sum_i F_ij^alpha gamma_i; the outer sum is
  // evaluated in the log domain since phi_j blows up as alpha -> 0.
  std::vector<double> terms;
  terms.reserve(static_cast<size_t>(ny));
  for (int j = 0; j < ny; ++j) {
    bool nonempty = false;
    for (int i = 0; i < nx; ++i) nonempty = nonempty || joint.f(i, j) > 0.0;
    if (!nonempty) continue;
    load_slice(j);
    double log_phi = detail::log_power_sum(slice, gx, alpha) / alpha;
    terms.push_back(log_phi + std::log(gy[static_cast<size_t>(j)]));
  }
  double tmax = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - tmax);
  double log_outer = tmax + std::log(acc);
  return alpha / (1.0 - alpha) * log_outer;
}

double average_conditional_renyi_entropy(const JointDistribution& joint, Order order) {
  const int nx = joint.nx();
  const int ny = joint.ny();
  const auto& gx = joint.space_x().gamma();
  const auto& gy = joint.space_y().gamma();
  std::vector<double> slice(static_cast<size_t>(nx));
  double h = 0.0;
  for (int j = 0; j < ny; ++j) {
    double g = 0.0;
    for (int i = 0; i < nx; ++i) g += joint.f(i, j) * gx[static_cast<size_t>(i)];
    if (g <= 0.0) continue;
    for (int i = 0; i < nx; ++i) slice[static_cast<size_t>(i)] = joint.f(i, j) / g;
    h += g * gy[static_cast<size_t>(j)] * detail::entropy_densities(slice, gx, order);
  }
  return h;
}

SensitivityBound reference_sensitivity_check(const JointDistribution& joint,
                                             const std::vector<double>& mu_x,
                                             const std::vector<double>& mu_y, Order order) {
  if (static_cast<int>(mu_x.size()) != joint.nx() || static_cast<int>(mu_y.size()) != joint.ny())
    throw structural_error("reference_sensitivity_check: weight vector sizes do not match joint");
  for (double m : mu_x)
    if (!(m > 0.0) || !std::isfinite(m))
      throw validation_error("reference_sensitivity_check: new weights must be strictly positive");
  for (double m : mu_y)
    if (!(m > 0.0) || !std::isfinite(m))
      throw validation_error("reference_sensitivity_check: new weights must be strictly positive");

  const auto& gx = joint.space_x().gamma();
  const auto& gy = joint.space_y().gamma();
  double M = 0.0;
  for (int i = 0; i < joint.nx(); ++i) M = std::max(M, gx[static_cast<size_t>(i)] / mu_x[static_cast<size_t>(i)]);
  for (int j = 0; j < joint.ny(); ++j) M = std::max(M, gy[static_cast<size_t>(j)] / mu_y[static_cast<size_t>(j)]);

  // Same point masses, rewritten as densities w.r.t. the new weights.
  MeasuredAlphabet new_x(joint.space_x().labels(), mu_x);
  MeasuredAlphabet new_y(joint.space_y().labels(), mu_y);
  std::vector<std::vector<double>> density(static_cast<size_t>(joint.nx()));
  for (int i = 0; i < joint.nx(); ++i) {
    density[static_cast<size_t>(i)].resize(static_cast<size_t>(joint.ny()));
    for (int j = 0; j < joint.ny(); ++j)
      density[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          joint.f(i, j) * (gx[static_cast<size_t>(i)] / mu_x[static_cast<size_t>(i)]) *
          (gy[static_cast<size_t>(j)] / mu_y[static_cast<size_t>(j)]);
  }
  JointDistribution rescaled(new_x, new_y, std::move(density));

  SensitivityBound out;
  out.log_m = std::log(M);
  out.lhs = conditional_renyi_entropy(rescaled, order);
  out.rhs = conditional_renyi_entropy(joint, order) - out.log_m;
  return out;
}

}  // namespace renyi
