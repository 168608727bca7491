#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "renyi/errors.hpp"

namespace renyi {

/// Extended-real order parameter alpha in [0, inf], with the three limit
/// orders carried as tags so call sites can branch on them exactly.
class Order {
 public:
  enum class Kind { Zero, One, Infinity, Finite };

  static Order zero() { return Order(Kind::Zero, 0.0); }
  static Order one() { return Order(Kind::One, 1.0); }
  static Order infinity() { return Order(Kind::Infinity, std::numeric_limits<double>::infinity()); }

  /// A finite order in (0,1) or (1,inf).
  static Order finite(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha) || alpha == 1.0) {
      throw unsupported_order_error("finite order must satisfy 0 < alpha < inf, alpha != 1; got " +
                                    std::to_string(alpha));
    }
    return Order(Kind::Finite, alpha);
  }

  /// Maps 0 -> Zero, 1 -> One, +inf -> Infinity, other valid values -> Finite.
  static Order from_value(double v) {
    if (std::isnan(v) || v < 0.0) {
      throw unsupported_order_error("order must lie in [0, inf]; got " + std::to_string(v));
    }
    if (v == 0.0) return zero();
    if (v == 1.0) return one();
    if (std::isinf(v)) return infinity();
    return finite(v);
  }

  /// Accepts "0", "1", "inf"/"infinity", or a decimal literal.
  static Order parse(std::string_view s);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_one() const { return kind_ == Kind::One; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  /// 0, 1, +inf, or the finite alpha.
  double value() const { return alpha_; }

  std::string to_string() const;

  friend bool operator==(const Order& a, const Order& b) {
    return a.kind_ == b.kind_ && a.alpha_ == b.alpha_;
  }

 private:
  Order(Kind k, double a) : kind_(k), alpha_(a) {}
  Kind kind_;
  double alpha_;
};

}  // namespace renyi
