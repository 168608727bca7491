#include "renyi/mutual_information.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "renyi/detail/numeric.hpp"
#include "renyi/divergence.hpp"
#include "renyi/entropy.hpp"
#include "renyi/generators.hpp"

namespace renyi {

namespace {

using detail::kInf;
using detail::log_sum_exp;
using detail::project_simplex;

// Builds the joint re-referenced so that the weights on S become the point
// masses of P_X (support-restricted). The density matrix is then exactly the
// channel row densities.
JointDistribution reweight_to_input_masses(const JointDistribution& joint) {
  InputAndChannel parts = decompose_joint(joint);
  MeasuredAlphabet space_x(parts.input.space().labels(), parts.input.masses());
  std::vector<std::vector<double>> density(static_cast<size_t>(parts.input.size()));
  for (int i = 0; i < parts.input.size(); ++i)
    density[static_cast<size_t>(i)] = parts.channel.row(i).density();
  return JointDistribution(space_x, joint.space_y(), std::move(density));
}

}  // namespace

double arimoto_mi(const JointDistribution& joint, Order order, Direction dir) {
  const JointDistribution& j = joint;
  if (dir == Direction::YtoX) {
    JointDistribution s = swap(joint);
    return renyi_entropy(s.marginal_x(), order) - conditional_renyi_entropy(s, order);
  }
  return renyi_entropy(j.marginal_x(), order) - conditional_renyi_entropy(j, order);
}

MiResult sibson_mi(const JointDistribution& joint, Order order, Direction dir) {
  if (order.is_zero() || order.is_infinity())
    throw unsupported_order_error("sibson_mi: order must lie in (0, inf)");
  JointDistribution j = (dir == Direction::YtoX) ? swap(joint) : joint;
  JointDistribution reweighted = reweight_to_input_masses(j);
  SibsonDecomposition dec = sibson_decomposition(reweighted, order);
  MiResult out;
  out.value = -dec.h_cond;
  out.optimizer_mu = dec.q_star;
  out.iterations = 0;
  out.converged = true;
  return out;
}

// ---------------------------------------------------------------------------
// Augustin-Csiszar
// ---------------------------------------------------------------------------

namespace {

struct AugustinProblem {
  std::vector<double> p;                    // input masses over supp(P_X)
  std::vector<std::vector<double>> rows;    // row densities w.r.t. eta
  std::vector<double> eta;                  // output weights
  MeasuredAlphabet space_y;
  Order order;

  double objective(const std::vector<double>& m) const {
    double g = 0.0;
    for (size_t x = 0; x < rows.size(); ++x) {
      double d = renyi_divergence_densities(rows[x], m, eta, order);
      if (d == kInf) return kInf;
      g += p[x] * d;
    }
    return g;
  }
};

// Stationarity fixed point: m'(y) propto sum_x p(x) w_x r_x(y)^alpha m(y)^(1-alpha),
// with w_x the per-row normalizers. Each summand is a normalized tilted row,
// so m' integrates to 1 without explicit renormalization.
std::vector<double> augustin_fixed_point(const AugustinProblem& prob,
                                         const std::vector<double>& m) {
  const double alpha = prob.order.value();
  const size_t ny = prob.eta.size();
  std::vector<double> next(ny, 0.0);
  std::vector<double> terms;
  terms.reserve(ny);
  for (size_t x = 0; x < prob.rows.size(); ++x) {
    const auto& r = prob.rows[x];
    terms.clear();
    for (size_t j = 0; j < ny; ++j) {
      if (r[j] > 0.0 && m[j] > 0.0)
        terms.push_back(alpha * std::log(r[j]) + (1.0 - alpha) * std::log(m[j]) +
                        std::log(prob.eta[j]));
    }
    double log_s = log_sum_exp(terms);
    for (size_t j = 0; j < ny; ++j) {
      if (r[j] > 0.0 && m[j] > 0.0)
        next[j] += prob.p[x] * std::exp(alpha * std::log(r[j]) + (1.0 - alpha) * std::log(m[j]) -
                                        log_s);
    }
  }
  return next;
}

// Subgradient of the objective in mass coordinates q_j = m_j eta_j.
std::vector<double> augustin_gradient_masses(const AugustinProblem& prob,
                                             const std::vector<double>& m) {
  const double alpha = prob.order.value();
  const size_t ny = prob.eta.size();
  std::vector<double> grad(ny, 0.0);
  for (size_t x = 0; x < prob.rows.size(); ++x) {
    const auto& r = prob.rows[x];
    double s = 0.0;
    for (size_t j = 0; j < ny; ++j)
      if (r[j] > 0.0 && m[j] > 0.0)
        s += std::pow(r[j], alpha) * std::pow(m[j], 1.0 - alpha) * prob.eta[j];
    for (size_t j = 0; j < ny; ++j) {
      if (r[j] > 0.0 && m[j] > 0.0) {
        double rm = std::pow(r[j], alpha) * std::pow(m[j], -alpha);
        grad[j] += -prob.p[x] * rm / s;
      }
    }
  }
  return grad;
}

}  // namespace

MiResult augustin_csiszar_mi(const JointDistribution& joint, Order order, const SolverConfig& cfg,
                             Direction dir) {
  if (order.is_zero() || order.is_infinity())
    throw unsupported_order_error("augustin_csiszar_mi: order must lie in (0, inf)");
  JointDistribution j = (dir == Direction::YtoX) ? swap(joint) : joint;

  // Direction X ~> Y averages divergences of the rows P_{Y|X=x} over P_X.
  InputAndChannel parts = decompose_joint(j);
  const Distribution p_y = j.marginal_y();

  if (order.is_one()) {
    double v = 0.0;
    for (int x = 0; x < parts.input.size(); ++x)
      v += parts.input.mass(x) * renyi_divergence(parts.channel.row(x), p_y, order);
    MiResult out;
    out.value = v;
    out.optimizer_mu = p_y;
    out.converged = true;
    return out;
  }

  AugustinProblem prob{parts.input.masses(), {}, j.space_y().gamma(), j.space_y(), order};
  prob.rows.reserve(static_cast<size_t>(parts.input.size()));
  for (int x = 0; x < parts.input.size(); ++x) prob.rows.push_back(parts.channel.row(x).density());

  std::vector<double> m = p_y.density();
  double g = prob.objective(m);
  MiResult out;
  out.converged = false;

  // Phase one: the damped fixed point. For alpha > 1 the raw update can
  // settle into a slow near-cycle, so the phase is capped and any sign of
  // stagnation hands over to the gradient phase permanently.
  bool gradient_phase = false;
  double step = 0.0;  // persistent relative gradient step
  int iter = 0;
  int stall = 0;
  const int fp_cap = std::min(300, cfg.max_iter);
  const double fp_min_progress = std::max(cfg.tol, 1e-9);
  for (; iter < cfg.max_iter; ++iter) {
    double decrease = 0.0;
    if (!gradient_phase) {
      std::vector<double> cand = augustin_fixed_point(prob, m);
      double gc = prob.objective(cand);
      if (!(gc < g)) {
        bool accepted = false;
        double s = 0.5;
        for (int k = 0; k < 10; ++k, s *= 0.5) {
          std::vector<double> mix(m.size());
          for (size_t t = 0; t < m.size(); ++t) mix[t] = (1.0 - s) * m[t] + s * cand[t];
          double gm = prob.objective(mix);
          if (gm < g) {
            cand = std::move(mix);
            gc = gm;
            accepted = true;
            break;
          }
        }
        if (!accepted) {
          gradient_phase = true;
          continue;
        }
      }
      decrease = g - gc;
      m = std::move(cand);
      g = gc;
      if (decrease < fp_min_progress || iter >= fp_cap) {
        gradient_phase = true;  // let the gradient phase finish and certify
      }
      continue;
    }

    // Exponentiated-gradient descent in the mass coordinates: multiplicative
    // updates stay well conditioned when the optimizer sits near the simplex
    // boundary, where Euclidean projection steps crawl.
    std::vector<double> grad = augustin_gradient_masses(prob, m);
    double gn = 0.0;
    for (double v : grad) gn = std::max(gn, std::abs(v));
    if (gn == 0.0) {
      out.converged = true;
      break;
    }
    if (step == 0.0) step = 0.5;
    std::vector<double> q(m.size());
    for (size_t t = 0; t < m.size(); ++t) q[t] = m[t] * prob.eta[t];
    bool accepted = false;
    double gc = g;
    std::vector<double> best_m;
    for (double s = step; s > 1e-16; s *= 0.5) {
      double smax = -kInf;
      for (size_t t = 0; t < q.size(); ++t)
        if (q[t] > 0.0) smax = std::max(smax, -(s / gn) * grad[t]);
      std::vector<double> qq(q.size(), 0.0);
      double z = 0.0;
      for (size_t t = 0; t < q.size(); ++t) {
        if (q[t] > 0.0) qq[t] = q[t] * std::exp(-(s / gn) * grad[t] - smax);
        z += qq[t];
      }
      std::vector<double> mm(qq.size());
      for (size_t t = 0; t < qq.size(); ++t) mm[t] = qq[t] / z / prob.eta[t];
      double gm = prob.objective(mm);
      if (gm < g) {
        accepted = true;
        gc = gm;
        best_m = std::move(mm);
        step = std::min(s * 2.0, 1e3);
        break;
      }
    }
    if (!accepted) {
      out.converged = true;  // no descent step exists at line-search resolution
      break;
    }
    decrease = g - gc;
    m = std::move(best_m);
    g = gc;
    if (decrease < cfg.tol) {
      if (++stall >= 3) {
        out.converged = true;
        break;
      }
    } else {
      stall = 0;
    }
  }
  out.value = g;
  out.iterations = iter;
  out.optimizer_mu = Distribution(j.space_y(), m);
  return out;
}

// ---------------------------------------------------------------------------
// Lapidoth-Pfister
// ---------------------------------------------------------------------------

namespace {

struct LpProblem {
  std::vector<double> logM;  // log point masses, -inf marks zeros (row-major)
  int nx = 0, ny = 0;
  double alpha = 0.0;

  double objective(const std::vector<double>& u, const std::vector<double>& v) const {
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(nx * ny));
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < ny; ++j) {
        double lm = logM[static_cast<size_t>(i * ny + j)];
        if (lm == -kInf) continue;
        if (u[static_cast<size_t>(i)] == 0.0 || v[static_cast<size_t>(j)] == 0.0) {
          if (alpha > 1.0) return kInf;
          continue;
        }
        terms.push_back(alpha * lm + (1.0 - alpha) * (std::log(u[static_cast<size_t>(i)]) +
                                                      std::log(v[static_cast<size_t>(j)])));
      }
    }
    double lse = log_sum_exp(terms);
    if (lse == -kInf) return kInf;
    return lse / (alpha - 1.0);
  }

  // Optimal second factor for fixed u: v_j propto (sum_i M_ij^alpha u_i^(1-alpha))^(1/alpha).
  std::vector<double> best_v(const std::vector<double>& u) const {
    std::vector<double> logc(static_cast<size_t>(ny), -kInf);
    std::vector<double> terms;
    for (int j = 0; j < ny; ++j) {
      terms.clear();
      for (int i = 0; i < nx; ++i) {
        double lm = logM[static_cast<size_t>(i * ny + j)];
        if (lm == -kInf || u[static_cast<size_t>(i)] == 0.0) continue;
        terms.push_back(alpha * lm + (1.0 - alpha) * std::log(u[static_cast<size_t>(i)]));
      }
      logc[static_cast<size_t>(j)] = log_sum_exp(terms);
    }
    std::vector<double> logv(static_cast<size_t>(ny));
    for (int j = 0; j < ny; ++j)
      logv[static_cast<size_t>(j)] =
          logc[static_cast<size_t>(j)] == -kInf ? -kInf : logc[static_cast<size_t>(j)] / alpha;
    double z = log_sum_exp(logv);
    std::vector<double> v(static_cast<size_t>(ny), 0.0);
    for (int j = 0; j < ny; ++j)
      if (logv[static_cast<size_t>(j)] != -kInf)
        v[static_cast<size_t>(j)] = std::exp(logv[static_cast<size_t>(j)] - z);
    return v;
  }

  std::vector<double> best_u(const std::vector<double>& v) const {
    std::vector<double> terms;
    std::vector<double> logu(static_cast<size_t>(nx));
    for (int i = 0; i < nx; ++i) {
      terms.clear();
      for (int j = 0; j < ny; ++j) {
        double lm = logM[static_cast<size_t>(i * ny + j)];
        if (lm == -kInf || v[static_cast<size_t>(j)] == 0.0) continue;
        terms.push_back(alpha * lm + (1.0 - alpha) * std::log(v[static_cast<size_t>(j)]));
      }
      double lc = log_sum_exp(terms);
      logu[static_cast<size_t>(i)] = lc == -kInf ? -kInf : lc / alpha;
    }
    double z = log_sum_exp(logu);
    std::vector<double> u(static_cast<size_t>(nx), 0.0);
    for (int i = 0; i < nx; ++i)
      if (logu[static_cast<size_t>(i)] != -kInf)
        u[static_cast<size_t>(i)] = std::exp(logu[static_cast<size_t>(i)] - z);
    return u;
  }
};

}  // namespace

MiResult lapidoth_pfister_mi(const JointDistribution& joint, Order order, const SolverConfig& cfg) {
  if (order.is_zero() || order.is_infinity())
    throw unsupported_order_error("lapidoth_pfister_mi: order must lie in (0, inf)");

  const Distribution px = joint.marginal_x();
  const Distribution py = joint.marginal_y();

  if (order.is_one()) {
    // KL(P_XY || mu x nu) = I(X;Y) + KL(P_X||mu) + KL(P_Y||nu): exact minimum
    // at the marginals.
    double v = divergence_from_product_measure(joint, px.density(), py.density(), order);
    MiResult out;
    out.value = v;
    out.optimizer_mu = px;
    out.optimizer_nu = py;
    out.converged = true;
    return out;
  }

  LpProblem prob;
  prob.nx = joint.nx();
  prob.ny = joint.ny();
  prob.alpha = order.value();
  prob.logM.resize(static_cast<size_t>(prob.nx * prob.ny));
  for (int i = 0; i < prob.nx; ++i)
    for (int j = 0; j < prob.ny; ++j) {
      double m = joint.mass(i, j);
      prob.logM[static_cast<size_t>(i * prob.ny + j)] = m > 0.0 ? std::log(m) : -kInf;
    }

  gen::Rng rng(cfg.seed);
  double best = kInf;
  std::vector<double> best_u, best_v;
  int best_iters = 0;
  bool best_conv = false;

  for (int r = 0; r <= cfg.restarts; ++r) {
    std::vector<double> u, v;
    if (r == 0) {
      u = px.masses();
      v = py.masses();
    } else {
      u = gen::dirichlet(rng, prob.nx);
      v = gen::dirichlet(rng, prob.ny);
    }
    double obj = prob.objective(u, v);
    bool conv = false;
    int it = 0;
    for (; it < cfg.max_iter; ++it) {
      v = prob.best_v(u);
      u = prob.best_u(v);
      double next = prob.objective(u, v);
      if (obj - next < cfg.tol) {
        obj = std::min(obj, next);
        conv = true;
        break;
      }
      obj = next;
    }
    if (obj < best) {
      best = obj;
      best_u = u;
      best_v = v;
      best_iters = it;
      best_conv = conv;
    }
  }

  MiResult out;
  out.value = best;
  out.iterations = best_iters;
  out.converged = best_conv;
  out.optimizer_mu = Distribution::from_masses(joint.space_x(), best_u);
  out.optimizer_nu = Distribution::from_masses(joint.space_y(), best_v);
  return out;
}

TailBound dependence_tail_bound(const JointDistribution& joint, Order order, double t) {
  if (!order.is_finite() || order.value() >= 1.0)
    throw unsupported_order_error(
        "dependence_tail_bound: requires alpha in (0,1); the bound trivializes at alpha >= 1");
  const double alpha = order.value();
  const double beta = (1.0 - alpha) / alpha;
  const auto& gx = joint.space_x().gamma();
  std::vector<double> ones(static_cast<size_t>(joint.nx()), 1.0);

  const Distribution px = joint.marginal_x();
  double d_x = renyi_divergence_densities(px.density(), ones, gx, order);

  double prob = 0.0;
  std::vector<double> slice(static_cast<size_t>(joint.nx()));
  for (int j = 0; j < joint.ny(); ++j) {
    double g = 0.0;
    for (int i = 0; i < joint.nx(); ++i) g += joint.f(i, j) * gx[static_cast<size_t>(i)];
    if (g <= 0.0) continue;
    for (int i = 0; i < joint.nx(); ++i) slice[static_cast<size_t>(i)] = joint.f(i, j) / g;
    double d_slice = renyi_divergence_densities(slice, ones, gx, order);
    if (d_slice - d_x < t) prob += g * joint.space_y().gamma(j);
  }

  double mi = arimoto_mi(joint, order, Direction::XtoY);
  return {prob, std::exp(beta * t - beta * mi)};
}

Distribution tilted_input(const Distribution& dist, Order order) {
  if (order.is_zero() || order.is_infinity())
    throw unsupported_order_error("tilted_input: order must be finite");
  if (order.is_one()) return dist;
  const double alpha = order.value();
  double log_z = detail::log_power_sum(dist.density(), dist.space().gamma(), alpha);
  std::vector<double> density(static_cast<size_t>(dist.size()), 0.0);
  for (int i = 0; i < dist.size(); ++i) {
    if (dist.density(i) > 0.0)
      density[static_cast<size_t>(i)] = std::exp(alpha * std::log(dist.density(i)) - log_z);
  }
  return Distribution(dist.space(), std::move(density));
}

}  // namespace renyi
