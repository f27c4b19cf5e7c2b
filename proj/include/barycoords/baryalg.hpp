#pragma once

// Operators on the unit interval and the binary operations x y p = x(1-p) + yp
// of a convex set. Restricted to {0, 1} the interval operators are the Boolean
// NOT / AND / OR / IMPLIES.

#include <utility>

#include "barycoords/errors.hpp"

namespace barycoords::baryalg {

/// An operator p of the open unit interval.
class Operator {
 public:
  explicit Operator(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0)) {
      throw Error(ErrorCode::OutOfRange, "operator must lie in the open interval (0, 1)");
    }
  }
  double value() const noexcept { return p_; }

 private:
  double p_;
};

constexpr double complement(double p) { return 1.0 - p; }
constexpr double product(double p, double q) { return p * q; }
constexpr double dual_product(double p, double q) { return p + q - p * q; }
constexpr double implication(double p, double q) { return p == 0.0 ? 1.0 : q / p; }

/// x y p = x(1 - p) + y p. Accepts p in the closed interval so that the
/// boundary selections x (p = 0) and y (p = 1) are available.
template <typename T>
constexpr T binary_op(const T& x, const T& y, double p) {
  return x * (1.0 - p) + y * p;
}

/// (a, b) -> (c, d) with x (y z a) b = (x y c) z d: d = ab, c = (b - ab)/(1 - ab).
inline std::pair<Operator, Operator> skew_assoc_transform(Operator a, Operator b) {
  const double d = a.value() * b.value();
  const double c = (b.value() - d) / (1.0 - d);
  return {Operator(c), Operator(d)};
}

/// Inverse of skew_assoc_transform: (c, d) -> (d / (c∘d), c∘d).
inline std::pair<Operator, Operator> skew_assoc_inverse(Operator c, Operator d) {
  const double b = dual_product(c.value(), d.value());
  return {Operator(d.value() / b), Operator(b)};
}

}  // namespace barycoords::baryalg
