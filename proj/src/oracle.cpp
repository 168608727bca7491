#include "renyi/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "renyi/detail/numeric.hpp"
#include "renyi/divergence.hpp"
#include "renyi/errors.hpp"

namespace renyi::oracle {

namespace {

using detail::kInf;

// Integer compositions of n into d parts, visited in lexicographic order.
template <typename Visit>
void for_each_composition(std::int64_t n, int d, std::vector<std::int64_t>& k, int pos,
                          Visit&& visit) {
  if (pos == d - 1) {
    k[static_cast<size_t>(pos)] = n;
    visit(k);
    return;
  }
  for (std::int64_t v = 0; v <= n; ++v) {
    k[static_cast<size_t>(pos)] = v;
    for_each_composition(n - v, d, k, pos + 1, visit);
  }
}

std::uint64_t binomial_guarded(std::int64_t n, std::int64_t r) {
  long double acc = 1.0L;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= static_cast<long double>(n - r + i);
    acc /= static_cast<long double>(i);
    if (acc > 1e19L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc + 0.5L);
}

void check_guard(std::uint64_t points, const char* what) {
  if (points > kGridPointGuard)
    throw validation_error(std::string(what) + ": grid would enumerate " + std::to_string(points) +
                           " points, above the guard of " + std::to_string(kGridPointGuard));
}

std::vector<std::vector<double>> materialize_grid(const SimplexGrid& grid) {
  std::vector<std::vector<double>> pts;
  pts.reserve(static_cast<size_t>(grid.point_count()));
  grid.for_each([&](const std::vector<double>& p) { pts.push_back(p); });
  return pts;
}

}  // namespace

SimplexGrid::SimplexGrid(int dimension, double step) : dim_(dimension) {
  if (dimension < 1) throw structural_error("SimplexGrid: dimension must be >= 1");
  if (!(step > 0.0) || step > 1.0) throw validation_error("SimplexGrid: step must lie in (0, 1]");
  denom_ = std::llround(1.0 / step);
  if (denom_ < 1) denom_ = 1;
}

std::uint64_t SimplexGrid::point_count() const {
  return binomial_guarded(denom_ + dim_ - 1, dim_ - 1);
}

void SimplexGrid::for_each(const std::function<void(const std::vector<double>&)>& visit) const {
  std::vector<std::int64_t> k(static_cast<size_t>(dim_));
  std::vector<double> p(static_cast<size_t>(dim_));
  const double inv = 1.0 / static_cast<double>(denom_);
  for_each_composition(denom_, dim_, k, 0, [&](const std::vector<std::int64_t>& comp) {
    for (int i = 0; i < dim_; ++i) p[static_cast<size_t>(i)] = static_cast<double>(comp[static_cast<size_t>(i)]) * inv;
    visit(p);
  });
}

GridMinResult grid_minimize_divergence(MiObjective objective, const JointDistribution& joint,
                                       Order order, double step) {
  if (order.is_zero() || order.is_infinity())
    throw unsupported_order_error("grid_minimize_divergence: order must lie in (0, inf)");

  const int nx = joint.nx();
  const int ny = joint.ny();
  std::vector<double> M(static_cast<size_t>(nx * ny));
  std::vector<double> px(static_cast<size_t>(nx), 0.0), qy(static_cast<size_t>(ny), 0.0);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double m = joint.mass(i, j);
      M[static_cast<size_t>(i * ny + j)] = m;
      px[static_cast<size_t>(i)] += m;
      qy[static_cast<size_t>(j)] += m;
    }

  GridMinResult out;
  const bool is_one = order.is_one();
  const double alpha = order.value();

  if (objective == MiObjective::Sibson) {
    SimplexGrid grid(ny, step);
    check_guard(grid.point_count(), "grid_minimize_divergence(sibson)");
    out.points = grid.point_count();
    if (is_one) {
      double c0 = 0.0;  // sum M log(M/p_i), the mu-independent part
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
          double m = M[static_cast<size_t>(i * ny + j)];
          if (m > 0.0) c0 += m * std::log(m / px[static_cast<size_t>(i)]);
        }
      double best = kInf;
      grid.for_each([&](const std::vector<double>& u) {
        double s = 0.0;
        for (int j = 0; j < ny; ++j) {
          if (qy[static_cast<size_t>(j)] == 0.0) continue;
          if (u[static_cast<size_t>(j)] == 0.0) {
            s = kInf;
            break;
          }
          s -= qy[static_cast<size_t>(j)] * std::log(u[static_cast<size_t>(j)]);
        }
        if (s < best) {
          best = s;
          out.argmin_mu = u;
        }
      });
      out.value = c0 + best;
    } else {
      // D = log(sum_j c_j u_j^(1-alpha)) / (alpha-1) with c_j = sum_i M^alpha p^(1-alpha).
      std::vector<double> c(static_cast<size_t>(ny), 0.0);
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
          double m = M[static_cast<size_t>(i * ny + j)];
          if (m > 0.0)
            c[static_cast<size_t>(j)] +=
                std::pow(m, alpha) * std::pow(px[static_cast<size_t>(i)], 1.0 - alpha);
        }
      const bool minimize_f = alpha > 1.0;
      double best_f = minimize_f ? kInf : -kInf;
      grid.for_each([&](const std::vector<double>& u) {
        double f = 0.0;
        for (int j = 0; j < ny; ++j) {
          if (c[static_cast<size_t>(j)] == 0.0) continue;
          f += c[static_cast<size_t>(j)] * std::pow(u[static_cast<size_t>(j)], 1.0 - alpha);
        }
        if (minimize_f ? f < best_f : f > best_f) {
          best_f = f;
          out.argmin_mu = u;
        }
      });
      out.value = std::log(best_f) / (alpha - 1.0);
    }
    return out;
  }

  if (objective == MiObjective::Augustin) {
    SimplexGrid grid(ny, step);
    check_guard(grid.point_count(), "grid_minimize_divergence(augustin)");
    out.points = grid.point_count();
    // Rows r_xj = M_xj / p_x over supp(P_X).
    std::vector<int> rows;
    for (int i = 0; i < nx; ++i)
      if (px[static_cast<size_t>(i)] > 0.0) rows.push_back(i);
    double best = kInf;
    std::vector<double> upow(static_cast<size_t>(ny));
    grid.for_each([&](const std::vector<double>& u) {
      double g = 0.0;
      if (is_one) {
        for (int i : rows) {
          double d = 0.0;
          for (int j = 0; j < ny; ++j) {
            double r = M[static_cast<size_t>(i * ny + j)] / px[static_cast<size_t>(i)];
            if (r == 0.0) continue;
            if (u[static_cast<size_t>(j)] == 0.0) {
              d = kInf;
              break;
            }
            d += r * std::log(r / u[static_cast<size_t>(j)]);
          }
          if (d == kInf) {
            g = kInf;
            break;
          }
          g += px[static_cast<size_t>(i)] * d;
        }
      } else {
        for (int j = 0; j < ny; ++j)
          upow[static_cast<size_t>(j)] = std::pow(u[static_cast<size_t>(j)], 1.0 - alpha);
        for (int i : rows) {
          double s = 0.0;
          for (int j = 0; j < ny; ++j) {
            double r = M[static_cast<size_t>(i * ny + j)] / px[static_cast<size_t>(i)];
            if (r > 0.0) s += std::pow(r, alpha) * upow[static_cast<size_t>(j)];
          }
          double d = s > 0.0 ? std::log(s) / (alpha - 1.0) : kInf;
          if (d == kInf) {
            g = kInf;
            break;
          }
          g += px[static_cast<size_t>(i)] * d;
        }
      }
      if (g < best) {
        best = g;
        out.argmin_mu = u;
      }
    });
    out.value = best;
    return out;
  }

  // Lapidoth-Pfister: exhaustive over the product of both grids.
  SimplexGrid grid_u(nx, step), grid_v(ny, step);
  std::uint64_t pairs;
  if (__builtin_mul_overflow(grid_u.point_count(), grid_v.point_count(), &pairs))
    pairs = UINT64_MAX;
  check_guard(pairs, "grid_minimize_divergence(lp)");
  out.points = pairs;

  if (is_one) {
    // KL(P || mu x nu) separates: const - sum_i p_i log u_i - sum_j q_j log v_j.
    double c0 = 0.0;
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        double m = M[static_cast<size_t>(i * ny + j)];
        if (m > 0.0) c0 += m * std::log(m);
      }
    auto best_factor = [&](const SimplexGrid& grid, const std::vector<double>& w,
                           std::vector<double>* arg) {
      double best = kInf;
      grid.for_each([&](const std::vector<double>& u) {
        double s = 0.0;
        for (size_t j = 0; j < w.size(); ++j) {
          if (w[j] == 0.0) continue;
          if (u[j] == 0.0) {
            s = kInf;
            break;
          }
          s -= w[j] * std::log(u[j]);
        }
        if (s < best) {
          best = s;
          *arg = u;
        }
      });
      return best;
    };
    out.value = c0 + best_factor(grid_u, px, &out.argmin_mu) + best_factor(grid_v, qy, &out.argmin_nu);
    return out;
  }

  // f(u,v) = sum_i u_i^(1-alpha) d_i(v), d_i(v) = sum_j M_ij^alpha v_j^(1-alpha).
  // Minimized for alpha > 1, maximized for alpha < 1 (the log prefactor flips).
  std::vector<std::vector<double>> upts = materialize_grid(grid_u);
  std::vector<std::vector<double>> upow(upts.size(), std::vector<double>(static_cast<size_t>(nx)));
  for (size_t t = 0; t < upts.size(); ++t)
    for (int i = 0; i < nx; ++i)
      upow[t][static_cast<size_t>(i)] = std::pow(upts[t][static_cast<size_t>(i)], 1.0 - alpha);

  std::vector<double> Ma(M.size(), 0.0);
  for (size_t k = 0; k < M.size(); ++k) Ma[k] = M[k] > 0.0 ? std::pow(M[k], alpha) : 0.0;

  const bool minimize_f = alpha > 1.0;
  double best_f = minimize_f ? kInf : -kInf;
  std::vector<double> d(static_cast<size_t>(nx));
  std::vector<double> vpow(static_cast<size_t>(ny));
  grid_v.for_each([&](const std::vector<double>& v) {
    for (int j = 0; j < ny; ++j) vpow[static_cast<size_t>(j)] = std::pow(v[static_cast<size_t>(j)], 1.0 - alpha);
    for (int i = 0; i < nx; ++i) {
      double s = 0.0;
      for (int j = 0; j < ny; ++j) {
        double ma = Ma[static_cast<size_t>(i * ny + j)];
        if (ma > 0.0) s += ma * vpow[static_cast<size_t>(j)];
      }
      d[static_cast<size_t>(i)] = s;
    }
    for (size_t t = 0; t < upts.size(); ++t) {
      double f = 0.0;
      const auto& up = upow[t];
      for (int i = 0; i < nx; ++i) {
        if (d[static_cast<size_t>(i)] > 0.0) f += up[static_cast<size_t>(i)] * d[static_cast<size_t>(i)];
      }
      if (minimize_f ? f < best_f : f > best_f) {
        best_f = f;
        out.argmin_mu = upts[t];
        out.argmin_nu = v;
      }
    }
  });
  out.value = std::log(best_f) / (alpha - 1.0);
  return out;
}

GridMaxResult grid_maximize_capacity(const Channel& channel, CapacityFunctional functional,
                                     Order order, double step, const SolverConfig& inner) {
  SimplexGrid grid(channel.num_inputs(), step);
  check_guard(grid.point_count(), "grid_maximize_capacity");
  GridMaxResult out;
  out.points = grid.point_count();
  double best = -kInf;
  grid.for_each([&](const std::vector<double>& p) {
    bool any = false;
    for (double v : p) any = any || v > 0.0;
    if (!any) return;
    JointDistribution joint = make_joint_from_input_and_channel(
        Distribution::from_masses(channel.input_space(), p), channel);
    double v = 0.0;
    switch (functional) {
      case CapacityFunctional::SibsonXY:
        v = sibson_mi(joint, order).value;
        break;
      case CapacityFunctional::SibsonYX:
        v = sibson_mi(joint, order, Direction::YtoX).value;
        break;
      case CapacityFunctional::AugustinXY:
        v = augustin_csiszar_mi(joint, order, inner).value;
        break;
      case CapacityFunctional::AugustinYX:
        v = augustin_csiszar_mi(joint, order, inner, Direction::YtoX).value;
        break;
      case CapacityFunctional::LapidothPfister:
        v = lapidoth_pfister_mi(joint, order, inner).value;
        break;
    }
    if (v > best) {
      best = v;
      out.argmax = p;
    }
  });
  out.value = best;
  return out;
}

LimitReport limit_prober(const std::function<double(double)>& fn, Order target,
                         double limit_value) {
  LimitReport rep;
  rep.limit_value = limit_value;
  switch (target.kind()) {
    case Order::Kind::Zero:
      rep.alphas = {1e-1, 1e-2, 1e-3};
      break;
    case Order::Kind::One:
      rep.alphas = {1.0 + 1e-1, 1.0 + 1e-2, 1.0 + 1e-3, 1.0 + 1e-4};
      break;
    case Order::Kind::Infinity:
      rep.alphas = {1e1, 1e2, 1e3};
      break;
    case Order::Kind::Finite:
      throw unsupported_order_error("limit_prober: target must be 0, 1 or infinity");
  }
  for (double a : rep.alphas) rep.values.push_back(fn(a));
  rep.terminal_gap = std::abs(rep.values.back() - limit_value);
  bool monotone = true;
  int sign = 0;
  double prev_gap = kInf;
  for (double v : rep.values) {
    double g = v - limit_value;
    int s = g > 0 ? 1 : (g < 0 ? -1 : 0);
    if (s != 0) {
      if (sign == 0) sign = s;
      if (s != sign) monotone = false;
    }
    if (std::abs(g) > prev_gap + 1e-13) monotone = false;
    prev_gap = std::abs(g);
  }
  rep.monotone_toward_limit = monotone;
  return rep;
}

double shannon_capacity_blahut_arimoto(const Channel& channel, double tol, int max_iter) {
  const int nin = channel.num_inputs();
  const int nout = channel.num_outputs();
  std::vector<double> r(static_cast<size_t>(nin * nout));
  for (int x = 0; x < nin; ++x)
    for (int j = 0; j < nout; ++j) r[static_cast<size_t>(x * nout + j)] = channel.row(x).mass(j);

  std::vector<double> p(static_cast<size_t>(nin), 1.0 / nin);
  std::vector<double> q(static_cast<size_t>(nout));
  std::vector<double> logc(static_cast<size_t>(nin));
  for (int it = 0; it < max_iter; ++it) {
    q.assign(q.size(), 0.0);
    for (int x = 0; x < nin; ++x)
      for (int j = 0; j < nout; ++j) q[static_cast<size_t>(j)] += p[static_cast<size_t>(x)] * r[static_cast<size_t>(x * nout + j)];
    for (int x = 0; x < nin; ++x) {
      double d = 0.0;
      for (int j = 0; j < nout; ++j) {
        double w = r[static_cast<size_t>(x * nout + j)];
        if (w > 0.0) d += w * std::log(w / q[static_cast<size_t>(j)]);
      }
      logc[static_cast<size_t>(x)] = d;
    }
    double upper = -kInf, lower = 0.0;
    for (int x = 0; x < nin; ++x) {
      upper = std::max(upper, logc[static_cast<size_t>(x)]);
      lower += p[static_cast<size_t>(x)] * std::exp(logc[static_cast<size_t>(x)]);
    }
    lower = std::log(lower);
    if (upper - lower < tol) return lower;
    double z = 0.0;
    for (int x = 0; x < nin; ++x) {
      p[static_cast<size_t>(x)] *= std::exp(logc[static_cast<size_t>(x)]);
      z += p[static_cast<size_t>(x)];
    }
    for (double& v : p) v /= z;
  }
  // Fell out of the iteration budget; return the certified lower bound.
  double lower = 0.0;
  for (int x = 0; x < nin; ++x) lower += p[static_cast<size_t>(x)] * std::exp(logc[static_cast<size_t>(x)]);
  return std::log(lower);
}

}  // namespace renyi::oracle
