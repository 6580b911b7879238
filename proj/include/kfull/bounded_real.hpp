#pragma once

// Midpoint-radius reals. A BoundedReal promises that the exact quantity lies in
// [value - radius, value + radius]. Arithmetic uses first-order interval rules
// (radii add under +/-, relative radii add under *, /) plus one rounding unit
// of the working precision per operation.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <iosfwd>
#include <string>

namespace kfull {

inline constexpr int kWorkingDigits = 80;

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<kWorkingDigits>,
                                           boost::multiprecision::et_off>;

/// Relative error charged per arithmetic operation and per elementary function.
const Real& arithmetic_eps();
const Real& function_eps();

/// 10^-digits as a Real.
Real pow10_neg(int digits);

class BoundedReal {
 public:
  BoundedReal() = default;
  BoundedReal(Real value, Real radius = Real(0));
  static BoundedReal exact(const Real& v) { return BoundedReal(v, Real(0)); }
  static BoundedReal from_bounds(const Real& lo, const Real& hi);

  const Real& value() const { return value_; }
  const Real& radius() const { return radius_; }
  Real lower() const { return value_ - radius_; }
  Real upper() const { return value_ + radius_; }
  bool contains(const Real& x) const;
  bool strictly_positive() const { return lower() > 0; }

  /// Widens the radius by extra >= 0 (truncation tails and similar).
  BoundedReal widened(const Real& extra) const;
  /// Tightens to the intersection with [lo, hi]; throws std::logic_error if disjoint.
  BoundedReal intersected(const Real& lo, const Real& hi) const;

  BoundedReal& operator+=(const BoundedReal& o);
  BoundedReal& operator-=(const BoundedReal& o);
  BoundedReal& operator*=(const BoundedReal& o);
  BoundedReal& operator/=(const BoundedReal& o);

  friend BoundedReal operator+(BoundedReal a, const BoundedReal& b) { return a += b; }
  friend BoundedReal operator-(BoundedReal a, const BoundedReal& b) { return a -= b; }
  friend BoundedReal operator*(BoundedReal a, const BoundedReal& b) { return a *= b; }
  friend BoundedReal operator/(BoundedReal a, const BoundedReal& b) { return a /= b; }
  BoundedReal operator-() const { return BoundedReal(-value_, radius_); }

  /// Multiplication by an exactly representable scalar (binomials, powers of two).
  BoundedReal scaled(const Real& c) const;

  double to_double() const { return value_.convert_to<double>(); }
  double radius_upper_double() const;

 private:
  Real value_{0};
  Real radius_{0};
};

BoundedReal exp(const BoundedReal& x);
BoundedReal expm1(const BoundedReal& x);
BoundedReal log(const BoundedReal& x);
BoundedReal log1p(const BoundedReal& x);

/// Fixed-point decimal rendering with the given number of fractional digits.
std::string format_fixed(const Real& x, int decimals);
/// Scientific rendering with the given number of significant digits.
std::string format_sci(const Real& x, int significant);

std::ostream& operator<<(std::ostream& os, const BoundedReal& x);

/// Binomial coefficient as an exact Real (exact while it fits the mantissa).
Real binomial(unsigned n, unsigned k);
Real factorial(unsigned n);

/// Upper bound for sum_{n > N} x^n / n!, x >= 0.
Real poisson_tail(const Real& x, unsigned N);

}  // namespace kfull
