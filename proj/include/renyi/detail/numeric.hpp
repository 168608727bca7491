#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace renyi::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double log_sum_exp(std::span<const double> t) {
  double m = -kInf;
  for (double x : t) m = std::max(m, x);
  if (m == -kInf) return -kInf;
  double acc = 0.0;
  for (double x : t) acc += std::exp(x - m);
  return m + std::log(acc);
}

/// Euclidean projection onto the probability simplex.
inline std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  for (double& x : v) x = std::max(0.0, x - theta);
  return v;
}

}  // namespace renyi::detail
