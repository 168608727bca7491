#include "renyi/capacity.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "renyi/detail/numeric.hpp"
#include "renyi/divergence.hpp"
#include "renyi/generators.hpp"

namespace renyi {

namespace {

using detail::kInf;
using detail::log_sum_exp;

// Channel rows as point masses, the coordinate system every solver here
// works in (divergences are reference-independent).
struct MassChannel {
  int nin = 0, nout = 0;
  std::vector<double> r;  // row-major nin x nout

  static MassChannel from(const Channel& ch) {
    MassChannel mc;
    mc.nin = ch.num_inputs();
    mc.nout = ch.num_outputs();
    mc.r.resize(static_cast<size_t>(mc.nin * mc.nout));
    for (int x = 0; x < mc.nin; ++x)
      for (int j = 0; j < mc.nout; ++j)
        mc.r[static_cast<size_t>(x * mc.nout + j)] = ch.row(x).mass(j);
    return mc;
  }
  double operator()(int x, int j) const { return r[static_cast<size_t>(x * nout + j)]; }
};

// Closed-form Sibson mutual information from joint point masses N[a][b],
// conditioning on the row index a.
double sibson_from_joint_masses(const std::vector<double>& N, int na, int nb, Order order) {
  std::vector<double> pa(static_cast<size_t>(na), 0.0);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) pa[static_cast<size_t>(a)] += N[static_cast<size_t>(a * nb + b)];

  if (order.is_one()) {
    std::vector<double> qb(static_cast<size_t>(nb), 0.0);
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b) qb[static_cast<size_t>(b)] += N[static_cast<size_t>(a * nb + b)];
    double mi = 0.0;
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b) {
        double n = N[static_cast<size_t>(a * nb + b)];
        if (n > 0.0) mi += n * std::log(n / (pa[static_cast<size_t>(a)] * qb[static_cast<size_t>(b)]));
      }
    return mi;
  }

  const double alpha = order.value();
  std::vector<double> outer;
  outer.reserve(static_cast<size_t>(nb));
  std::vector<double> terms;
  for (int b = 0; b < nb; ++b) {
    terms.clear();
    for (int a = 0; a < na; ++a) {
      double n = N[static_cast<size_t>(a * nb + b)];
      if (n > 0.0)
        terms.push_back((1.0 - alpha) * std::log(pa[static_cast<size_t>(a)]) + alpha * std::log(n));
    }
    double la = log_sum_exp(terms);
    if (la != -kInf) outer.push_back(la / alpha);
  }
  return alpha / (alpha - 1.0) * log_sum_exp(outer);
}

double sibson_xy_value(const std::vector<double>& p, const MassChannel& ch, Order order) {
  std::vector<double> N(static_cast<size_t>(ch.nin * ch.nout));
  for (int x = 0; x < ch.nin; ++x)
    for (int j = 0; j < ch.nout; ++j)
      N[static_cast<size_t>(x * ch.nout + j)] = p[static_cast<size_t>(x)] * ch(x, j);
  return sibson_from_joint_masses(N, ch.nin, ch.nout, order);
}

double sibson_yx_value(const std::vector<double>& p, const MassChannel& ch, Order order) {
  std::vector<double> N(static_cast<size_t>(ch.nout * ch.nin));
  for (int x = 0; x < ch.nin; ++x)
    for (int j = 0; j < ch.nout; ++j)
      N[static_cast<size_t>(j * ch.nin + x)] = p[static_cast<size_t>(x)] * ch(x, j);
  return sibson_from_joint_masses(N, ch.nout, ch.nin, order);
}

// Exact gradient of the Sibson X~>Y value in the input masses. Constant
// shifts are irrelevant to multiplicative-weights updates.
std::vector<double> sibson_xy_gradient(const std::vector<double>& p, const MassChannel& ch,
                                       Order order) {
  std::vector<double> g(static_cast<size_t>(ch.nin), 0.0);
  if (order.is_one()) {
    std::vector<double> q(static_cast<size_t>(ch.nout), 0.0);
    for (int x = 0; x < ch.nin; ++x)
      for (int j = 0; j < ch.nout; ++j) q[static_cast<size_t>(j)] += p[static_cast<size_t>(x)] * ch(x, j);
    for (int x = 0; x < ch.nin; ++x) {
      double d = 0.0;
      for (int j = 0; j < ch.nout; ++j)
        if (ch(x, j) > 0.0) d += ch(x, j) * std::log(ch(x, j) / q[static_cast<size_t>(j)]);
      g[static_cast<size_t>(x)] = d;
    }
    return g;
  }
  const double alpha = order.value();
  std::vector<double> logA(static_cast<size_t>(ch.nout), -kInf);
  std::vector<double> terms;
  for (int j = 0; j < ch.nout; ++j) {
    terms.clear();
    for (int x = 0; x < ch.nin; ++x)
      if (p[static_cast<size_t>(x)] > 0.0 && ch(x, j) > 0.0)
        terms.push_back(std::log(p[static_cast<size_t>(x)]) + alpha * std::log(ch(x, j)));
    logA[static_cast<size_t>(j)] = log_sum_exp(terms);
  }
  std::vector<double> loggt;
  loggt.reserve(static_cast<size_t>(ch.nout));
  for (int j = 0; j < ch.nout; ++j)
    if (logA[static_cast<size_t>(j)] != -kInf) loggt.push_back(logA[static_cast<size_t>(j)] / alpha);
  double logG = log_sum_exp(loggt);
  for (int x = 0; x < ch.nin; ++x) {
    terms.clear();
    for (int j = 0; j < ch.nout; ++j) {
      if (ch(x, j) > 0.0 && logA[static_cast<size_t>(j)] != -kInf)
        terms.push_back((1.0 - alpha) / alpha * logA[static_cast<size_t>(j)] +
                        alpha * std::log(ch(x, j)));
    }
    double num = log_sum_exp(terms);
    g[static_cast<size_t>(x)] = num == -kInf ? 0.0 : std::exp(num - logG) / (alpha - 1.0);
  }
  return g;
}

// Divergence of one channel row from an output measure, all in masses.
double row_divergence(const MassChannel& ch, int x, const std::vector<double>& q, Order order) {
  std::vector<double> row(static_cast<size_t>(ch.nout));
  for (int j = 0; j < ch.nout; ++j) row[static_cast<size_t>(j)] = ch(x, j);
  std::vector<double> ones(static_cast<size_t>(ch.nout), 1.0);
  return renyi_divergence_densities(row, q, ones, order);
}

std::vector<double> row_divergence_gradient(const MassChannel& ch, int x,
                                            const std::vector<double>& q, Order order) {
  std::vector<double> g(static_cast<size_t>(ch.nout), 0.0);
  if (order.is_one()) {
    for (int j = 0; j < ch.nout; ++j)
      if (ch(x, j) > 0.0) g[static_cast<size_t>(j)] = -ch(x, j) / q[static_cast<size_t>(j)];
    return g;
  }
  const double alpha = order.value();
  double s = 0.0;
  for (int j = 0; j < ch.nout; ++j)
    if (ch(x, j) > 0.0 && q[static_cast<size_t>(j)] > 0.0)
      s += std::pow(ch(x, j), alpha) * std::pow(q[static_cast<size_t>(j)], 1.0 - alpha);
  for (int j = 0; j < ch.nout; ++j)
    if (ch(x, j) > 0.0 && q[static_cast<size_t>(j)] > 0.0)
      g[static_cast<size_t>(j)] =
          -std::pow(ch(x, j), alpha) * std::pow(q[static_cast<size_t>(j)], -alpha) / s;
  return g;
}

std::vector<double> normalize_masses(std::vector<double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  for (double& x : v) x /= s;
  return v;
}

Distribution masses_to_distribution(const MeasuredAlphabet& space, const std::vector<double>& m) {
  return Distribution::from_masses(space, normalize_masses(m));
}

}  // namespace

std::string to_string(CapacityFunctional f) {
  switch (f) {
    case CapacityFunctional::SibsonXY: return "I_xy";
    case CapacityFunctional::SibsonYX: return "I_yx";
    case CapacityFunctional::AugustinXY: return "K_xy";
    case CapacityFunctional::AugustinYX: return "K_yx";
    case CapacityFunctional::LapidothPfister: return "J";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Renyi radius
// ---------------------------------------------------------------------------

CapacityResult renyi_radius(const Channel& channel, Order order, const SolverConfig& cfg) {
  if (order.is_zero())
    throw unsupported_order_error("renyi_radius: order must lie in (0, inf]");
  MassChannel ch = MassChannel::from(channel);

  if (order.is_infinity()) {
    // min_q max_x log max_j r_xj/q_j is solved by q_j propto max_x r_xj.
    std::vector<double> m(static_cast<size_t>(ch.nout), 0.0);
    for (int j = 0; j < ch.nout; ++j)
      for (int x = 0; x < ch.nin; ++x) m[static_cast<size_t>(j)] = std::max(m[static_cast<size_t>(j)], ch(x, j));
    double total = 0.0;
    for (double v : m) total += v;
    CapacityResult out{std::log(total), Distribution::uniform(channel.input_space()),
                       masses_to_distribution(channel.output_space(), m), 0.0, 0, true};
    return out;
  }

  auto true_max = [&](const std::vector<double>& q) {
    double m = -kInf;
    for (int x = 0; x < ch.nin; ++x) m = std::max(m, row_divergence(ch, x, q, order));
    return m;
  };

  // Smoothed objective and gradient at temperature tau.
  auto smoothed = [&](const std::vector<double>& q, double tau, std::vector<double>* grad) {
    std::vector<double> d(static_cast<size_t>(ch.nin));
    double dmax = -kInf;
    for (int x = 0; x < ch.nin; ++x) {
      d[static_cast<size_t>(x)] = row_divergence(ch, x, q, order);
      dmax = std::max(dmax, d[static_cast<size_t>(x)]);
    }
    double z = 0.0;
    for (int x = 0; x < ch.nin; ++x) z += std::exp((d[static_cast<size_t>(x)] - dmax) / tau);
    double val = dmax + tau * std::log(z);
    if (grad) {
      grad->assign(static_cast<size_t>(ch.nout), 0.0);
      for (int x = 0; x < ch.nin; ++x) {
        double w = std::exp((d[static_cast<size_t>(x)] - dmax) / tau) / z;
        if (w < 1e-300) continue;
        std::vector<double> gx = row_divergence_gradient(ch, x, q, order);
        for (int j = 0; j < ch.nout; ++j) (*grad)[static_cast<size_t>(j)] += w * gx[static_cast<size_t>(j)];
      }
    }
    return val;
  };

  // Start from the row barycenter: positive wherever any row has mass.
  std::vector<double> q(static_cast<size_t>(ch.nout), 0.0);
  for (int x = 0; x < ch.nin; ++x)
    for (int j = 0; j < ch.nout; ++j) q[static_cast<size_t>(j)] += ch(x, j) / ch.nin;
  q = normalize_masses(std::move(q));

  auto eg_step = [&](const std::vector<double>& qq, const std::vector<double>& g, double lr) {
    std::vector<double> next(qq.size());
    double smax = -kInf;
    for (size_t j = 0; j < qq.size(); ++j) smax = std::max(smax, -lr * g[j]);
    for (size_t j = 0; j < qq.size(); ++j) next[j] = qq[j] * std::exp(-lr * g[j] - smax);
    return normalize_masses(std::move(next));
  };

  int iters = 0;
  const int per_phase = std::max(50, cfg.max_iter / 8);
  for (double tau : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    std::vector<double> grad;
    double val = smoothed(q, tau, &grad);
    double lr = 0.1;
    for (int it = 0; it < per_phase; ++it, ++iters) {
      double gnorm = 0.0;
      for (double g : grad) gnorm = std::max(gnorm, std::abs(g));
      if (gnorm == 0.0) break;
      bool accepted = false;
      double v2 = val;
      std::vector<double> q2;
      while (lr * gnorm > 1e-14) {
        q2 = eg_step(q, grad, lr / gnorm);
        v2 = smoothed(q2, tau, nullptr);
        if (v2 < val) {
          accepted = true;
          break;
        }
        lr *= 0.5;
      }
      if (!accepted) break;
      double decrease = val - v2;
      q = std::move(q2);
      val = smoothed(q, tau, &grad);
      lr = std::min(lr * 1.4, 10.0);
      if (decrease < std::max(cfg.tol, tau * 1e-8)) break;
    }
  }

  // Polish on the true max with Polyak-style diminishing steps.
  std::vector<double> q_best = q;
  double best = true_max(q);
  for (int it = 0; it < 400; ++it, ++iters) {
    std::vector<double> d(static_cast<size_t>(ch.nin));
    double dmax = -kInf;
    for (int x = 0; x < ch.nin; ++x) {
      d[static_cast<size_t>(x)] = row_divergence(ch, x, q, order);
      dmax = std::max(dmax, d[static_cast<size_t>(x)]);
    }
    if (dmax < best) {
      best = dmax;
      q_best = q;
    }
    // Average the gradients of near-active rows.
    std::vector<double> g(static_cast<size_t>(ch.nout), 0.0);
    int active = 0;
    for (int x = 0; x < ch.nin; ++x) {
      if (d[static_cast<size_t>(x)] >= dmax - 1e-10) {
        std::vector<double> gx = row_divergence_gradient(ch, x, q, order);
        for (int j = 0; j < ch.nout; ++j) g[static_cast<size_t>(j)] += gx[static_cast<size_t>(j)];
        ++active;
      }
    }
    for (double& v : g) v /= active;
    double gnorm = 0.0;
    for (double v : g) gnorm = std::max(gnorm, std::abs(v));
    if (gnorm == 0.0) break;
    double lr = 0.05 / (1.0 + it / 25.0);
    q = eg_step(q, g, lr / gnorm);
  }
  double final_val = true_max(q);
  if (final_val < best) {
    best = final_val;
    q_best = q;
  }

  // Lower bound from the tie weights over active rows (weak duality).
  std::vector<double> tie(static_cast<size_t>(ch.nin), 0.0);
  {
    double dmax = -kInf;
    std::vector<double> d(static_cast<size_t>(ch.nin));
    for (int x = 0; x < ch.nin; ++x) {
      d[static_cast<size_t>(x)] = row_divergence(ch, x, q_best, order);
      dmax = std::max(dmax, d[static_cast<size_t>(x)]);
    }
    for (int x = 0; x < ch.nin; ++x)
      tie[static_cast<size_t>(x)] = std::exp((d[static_cast<size_t>(x)] - dmax) / 1e-4);
    tie = normalize_masses(std::move(tie));
  }
  double lower = sibson_xy_value(tie, ch, order);

  CapacityResult out{best, masses_to_distribution(channel.input_space(), tie),
                     masses_to_distribution(channel.output_space(), q_best),
                     std::max(0.0, best - lower), iters, true};
  return out;
}

// ---------------------------------------------------------------------------
// Capacities by multiplicative-weights ascent over the input simplex
// ---------------------------------------------------------------------------

namespace {

struct AscentResult {
  double value = -kInf;
  std::vector<double> p;
  int iterations = 0;
  bool converged = false;
};

// Maximizes `eval` over the input simplex. `grad`, when provided, returns an
// exact or envelope (super)gradient; otherwise central differences on the
// renormalized evaluation are used.
AscentResult mw_maximize(int dim, const SolverConfig& cfg,
                         const std::function<double(const std::vector<double>&)>& eval,
                         const std::function<std::vector<double>(const std::vector<double>&)>& grad) {
  gen::Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);

  auto fd_grad = [&](const std::vector<double>& p) {
    std::vector<double> g(p.size(), 0.0);
    const double h = 1e-6;
    for (size_t x = 0; x < p.size(); ++x) {
      std::vector<double> hi = p, lo = p;
      hi[x] += h;
      lo[x] = std::max(0.0, lo[x] - h);
      double vhi = eval(normalize_masses(hi));
      double vlo = eval(normalize_masses(lo));
      g[x] = (vhi - vlo) / (hi[x] - lo[x]);
    }
    return g;
  };

  AscentResult best;
  const int outer_cap = std::min(cfg.max_iter, 4000);
  for (int r = 0; r <= cfg.restarts; ++r) {
    std::vector<double> p =
        r == 0 ? std::vector<double>(static_cast<size_t>(dim), 1.0 / dim) : gen::dirichlet(rng, dim);
    double v = eval(p);
    double lr = 1.0;
    bool conv = false;
    int it = 0;
    int stall = 0;
    for (; it < outer_cap; ++it) {
      std::vector<double> g = grad ? grad(p) : fd_grad(p);
      double gmax = -kInf;
      for (double x : g) gmax = std::max(gmax, x);
      bool accepted = false;
      std::vector<double> p2;
      double v2 = v;
      while (lr > 1e-13) {
        p2.resize(p.size());
        for (size_t x = 0; x < p.size(); ++x) p2[x] = p[x] * std::exp(lr * (g[x] - gmax));
        p2 = normalize_masses(std::move(p2));
        v2 = eval(p2);
        if (v2 >= v - 1e-14) {
          accepted = true;
          break;
        }
        lr *= 0.5;
      }
      if (!accepted) {
        conv = true;
        break;
      }
      double gain = v2 - v;
      p = std::move(p2);
      v = v2;
      lr = std::min(lr * 1.5, 50.0);
      if (gain < std::max(cfg.tol, 1e-12)) {
        if (++stall >= 3) {
          conv = true;
          break;
        }
      } else {
        stall = 0;
      }
    }
    if (v > best.value) {
      best.value = v;
      best.p = p;
      best.iterations = it;
      best.converged = conv;
    }
  }
  return best;
}

}  // namespace

CapacityResult capacity(const Channel& channel, CapacityFunctional functional, Order order,
                        const SolverConfig& cfg) {
  if (order.is_zero())
    throw unsupported_order_error("capacity: order must lie in (0, inf)");
  MassChannel ch = MassChannel::from(channel);

  if (order.is_infinity()) {
    if (functional != CapacityFunctional::SibsonXY)
      throw unsupported_order_error("capacity: order infinity is supported for I_xy only");
    // I_inf(P,W) = log sum_j max_{x in supp P} r_xj: any full-support input
    // achieves the supremum.
    std::vector<double> m(static_cast<size_t>(ch.nout), 0.0);
    for (int j = 0; j < ch.nout; ++j)
      for (int x = 0; x < ch.nin; ++x) m[static_cast<size_t>(j)] = std::max(m[static_cast<size_t>(j)], ch(x, j));
    double total = 0.0;
    for (double v : m) total += v;
    CapacityResult radius_ref = renyi_radius(channel, order, cfg);
    CapacityResult out{std::log(total), Distribution::uniform(channel.input_space()),
                       radius_ref.center, std::abs(radius_ref.value - std::log(total)), 0, true};
    return out;
  }

  SolverConfig inner = cfg;
  inner.restarts = 2;
  inner.max_iter = std::min(cfg.max_iter, 5000);
  inner.tol = std::min(cfg.tol, 1e-11);

  std::function<double(const std::vector<double>&)> eval;
  std::function<std::vector<double>(const std::vector<double>&)> grad;  // may stay empty

  auto joint_at = [&](const std::vector<double>& p) {
    return make_joint_from_input_and_channel(
        Distribution::from_masses(channel.input_space(), p), channel);
  };

  switch (functional) {
    case CapacityFunctional::SibsonXY:
      eval = [&](const std::vector<double>& p) { return sibson_xy_value(p, ch, order); };
      grad = [&](const std::vector<double>& p) { return sibson_xy_gradient(p, ch, order); };
      break;
    case CapacityFunctional::SibsonYX:
      eval = [&](const std::vector<double>& p) { return sibson_yx_value(p, ch, order); };
      break;
    case CapacityFunctional::AugustinXY:
      eval = [&](const std::vector<double>& p) {
        return augustin_csiszar_mi(joint_at(p), order, inner).value;
      };
      // Envelope supergradient: K is a minimum of functions linear in P.
      grad = [&](const std::vector<double>& p) {
        MiResult mi = augustin_csiszar_mi(joint_at(p), order, inner);
        std::vector<double> g(p.size(), 0.0);
        for (int x = 0; x < ch.nin; ++x)
          g[static_cast<size_t>(x)] = renyi_divergence(channel.row(x), *mi.optimizer_mu, order);
        return g;
      };
      break;
    case CapacityFunctional::AugustinYX:
      eval = [&](const std::vector<double>& p) {
        return augustin_csiszar_mi(joint_at(p), order, inner, Direction::YtoX).value;
      };
      break;
    case CapacityFunctional::LapidothPfister:
      eval = [&](const std::vector<double>& p) {
        return lapidoth_pfister_mi(joint_at(p), order, inner).value;
      };
      break;
  }

  AscentResult a = mw_maximize(ch.nin, cfg, eval, grad);

  CapacityResult out{a.value, masses_to_distribution(channel.input_space(), a.p), std::nullopt,
                     0.0, a.iterations, a.converged};
  if (functional == CapacityFunctional::SibsonXY) {
    CapacityResult rad = renyi_radius(channel, order, cfg);
    out.center = rad.center;
    out.certificate_gap = std::max(0.0, rad.value - a.value);
  }
  return out;
}

CapacityEqualitiesReport capacity_equalities_check(const Channel& channel, Order order,
                                                   const SolverConfig& cfg) {
  if (!(order.is_one() || order.is_infinity() || (order.is_finite() && order.value() >= 1.0)))
    throw unsupported_order_error("capacity_equalities_check: requires alpha >= 1");
  if (order.is_infinity())
    throw unsupported_order_error(
        "capacity_equalities_check: order infinity is not covered (K and J undefined there)");

  CapacityEqualitiesReport rep;
  CapacityResult ci_xy = capacity(channel, CapacityFunctional::SibsonXY, order, cfg);
  CapacityResult ci_yx = capacity(channel, CapacityFunctional::SibsonYX, order, cfg);
  CapacityResult ck_xy = capacity(channel, CapacityFunctional::AugustinXY, order, cfg);
  CapacityResult ck_yx = capacity(channel, CapacityFunctional::AugustinYX, order, cfg);
  CapacityResult cj = capacity(channel, CapacityFunctional::LapidothPfister, order, cfg);
  CapacityResult rad = renyi_radius(channel, order, cfg);

  rep.c_i_xy = ci_xy.value;
  rep.c_i_yx = ci_yx.value;
  rep.c_k_xy = ck_xy.value;
  rep.c_k_yx = ck_yx.value;
  rep.c_j = cj.value;
  rep.radius = rad.value;
  rep.conclusive = ci_xy.converged && ci_yx.converged && ck_xy.converged && ck_yx.converged &&
                   cj.converged && rad.converged;

  double middle[4] = {rep.c_i_xy, rep.c_j, rep.c_k_xy, rep.radius};
  double lo = middle[0], hi = middle[0];
  for (double v : middle) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  rep.max_middle_spread = hi - lo;
  rep.outer_gap_low = rep.c_i_xy - rep.c_k_yx;
  rep.outer_gap_high = rep.c_i_yx - rep.radius;
  rep.chain_holds = rep.max_middle_spread <= rep.tolerance &&
                    rep.c_k_yx <= rep.radius + rep.tolerance &&
                    rep.c_i_yx >= rep.radius - rep.tolerance;
  return rep;
}

LpRadiusReport lp_capacity_radius_check(const Channel& channel, Order order,
                                        const SolverConfig& cfg) {
  if (!order.is_finite() || order.value() < 0.5 || order.value() >= 1.0)
    throw unsupported_order_error("lp_capacity_radius_check: requires alpha in [1/2, 1)");

  LpRadiusReport rep;
  CapacityResult cj = capacity(channel, CapacityFunctional::LapidothPfister, order, cfg);
  CapacityResult rad = renyi_radius(channel, order, cfg);
  rep.c_j = cj.value;
  rep.radius = rad.value;
  rep.gap = std::abs(cj.value - rad.value);
  rep.conclusive = cj.converged && rad.converged;
  rep.holds = rep.gap <= 1e-4;

  // Inner reduction: sup_P f(P, mu) = max_x D_alpha(W(x)||mu), where
  // f(P, mu) = beta log int e^{D/beta} dP with beta = alpha/(alpha-1) < 0.
  MassChannel ch = MassChannel::from(channel);
  const double beta = order.value() / (order.value() - 1.0);
  gen::Rng rng(cfg.seed ^ 0xc2b2ae3d27d4eb4fULL);
  double worst = -kInf;
  for (int s = 0; s < 16; ++s) {
    std::vector<double> mu = gen::dirichlet(rng, ch.nout);
    std::vector<double> d(static_cast<size_t>(ch.nin));
    double dmax = -kInf;
    for (int x = 0; x < ch.nin; ++x) {
      d[static_cast<size_t>(x)] = row_divergence(ch, x, mu, order);
      dmax = std::max(dmax, d[static_cast<size_t>(x)]);
    }
    for (int t = 0; t < 12; ++t) {
      std::vector<double> p = t < ch.nin ? std::vector<double>(static_cast<size_t>(ch.nin), 0.0)
                                         : gen::dirichlet(rng, ch.nin);
      if (t < ch.nin) p[static_cast<size_t>(t)] = 1.0;  // point masses hit the sup
      double acc = 0.0;
      for (int x = 0; x < ch.nin; ++x)
        acc += p[static_cast<size_t>(x)] * std::exp(d[static_cast<size_t>(x)] / beta);
      double f = beta * std::log(acc);
      worst = std::max(worst, f - dmax);
    }
  }
  rep.inner_reduction_slack = worst;
  return rep;
}

}  // namespace renyi
