#include "kfull/bounded_real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kfull {

const Real& arithmetic_eps() {
  // cpp_bin_float<80> carries 267 mantissa bits; 2^-260 leaves headroom.
  static const Real eps = ldexp(Real(1), -260);
  return eps;
}

const Real& function_eps() {
  static const Real eps = ldexp(Real(1), -250);
  return eps;
}

Real pow10_neg(int digits) { return pow(Real(10), -digits); }

BoundedReal::BoundedReal(Real value, Real radius) : value_(std::move(value)), radius_(std::move(radius)) {
  if (radius_ < 0) throw std::invalid_argument("negative radius");
}

BoundedReal BoundedReal::from_bounds(const Real& lo, const Real& hi) {
  if (hi < lo) throw std::invalid_argument("empty interval");
  return BoundedReal((lo + hi) / 2, (hi - lo) / 2 * (1 + arithmetic_eps()));
}

bool BoundedReal::contains(const Real& x) const { return abs(x - value_) <= radius_; }

BoundedReal BoundedReal::widened(const Real& extra) const {
  if (extra < 0) throw std::invalid_argument("negative widening");
  return BoundedReal(value_, radius_ + extra);
}

BoundedReal BoundedReal::intersected(const Real& lo, const Real& hi) const {
  Real a = std::max(lower(), lo);
  Real b = std::min(upper(), hi);
  if (b < a) throw std::logic_error("bounded value disagrees with its a-priori bound");
  if (a == lower() && b == upper()) return *this;
  return from_bounds(a, b);
}

BoundedReal& BoundedReal::operator+=(const BoundedReal& o) {
  value_ += o.value_;
  radius_ += o.radius_ + abs(value_) * arithmetic_eps();
  return *this;
}

BoundedReal& BoundedReal::operator-=(const BoundedReal& o) {
  value_ -= o.value_;
  radius_ += o.radius_ + abs(value_) * arithmetic_eps();
  return *this;
}

BoundedReal& BoundedReal::operator*=(const BoundedReal& o) {
  Real r = abs(value_) * o.radius_ + abs(o.value_) * radius_ + radius_ * o.radius_;
  value_ *= o.value_;
  radius_ = r + abs(value_) * arithmetic_eps();
  return *this;
}

BoundedReal& BoundedReal::operator/=(const BoundedReal& o) {
  const Real denom = abs(o.value_);
  if (denom <= o.radius_) throw std::domain_error("division by an interval containing zero");
  Real r = (abs(value_) * o.radius_ + denom * radius_) / (denom * (denom - o.radius_));
  value_ /= o.value_;
  radius_ = r + abs(value_) * arithmetic_eps();
  return *this;
}

BoundedReal BoundedReal::scaled(const Real& c) const {
  Real v = value_ * c;
  return BoundedReal(v, radius_ * abs(c) + abs(v) * arithmetic_eps());
}

double BoundedReal::radius_upper_double() const {
  double r = radius_.convert_to<double>();
  return std::nextafter(r, std::numeric_limits<double>::infinity());
}

BoundedReal exp(const BoundedReal& x) {
  Real v = exp(x.value());
  // |e^{x+d} - e^x| <= e^x (e^r - 1) for |d| <= r.
  Real r = v * expm1(x.radius()) + v * function_eps();
  return BoundedReal(v, r);
}

BoundedReal expm1(const BoundedReal& x) {
  Real v = expm1(x.value());
  Real r = exp(x.value()) * expm1(x.radius()) + abs(v) * function_eps();
  return BoundedReal(v, r);
}

BoundedReal log(const BoundedReal& x) {
  if (x.lower() <= 0) throw std::domain_error("log of an interval reaching zero");
  Real v = log(x.value());
  Real r = x.radius() / x.lower() + abs(v) * function_eps() + function_eps();
  return BoundedReal(v, r);
}

BoundedReal log1p(const BoundedReal& x) {
  if (x.lower() <= -1) throw std::domain_error("log1p of an interval reaching -1");
  Real v = log1p(x.value());
  Real r = x.radius() / (1 + x.lower()) + abs(v) * function_eps();
  return BoundedReal(v, r);
}

std::string format_fixed(const Real& x, int decimals) {
  if (decimals > 0) return x.str(decimals, std::ios_base::fixed);
  // precision 0 means "all digits" to Boost
  std::string s = round(x).str(0, std::ios_base::fixed);
  return s.substr(0, s.find('.'));
}

std::string format_sci(const Real& x, int significant) {
  return x.str(significant, std::ios_base::scientific);
}

std::ostream& operator<<(std::ostream& os, const BoundedReal& x) {
  return os << format_sci(x.value(), 20) << " +/- " << format_sci(x.radius(), 3);
}

Real binomial(unsigned n, unsigned k) {
  if (k > n) return Real(0);
  if (k > n - k) k = n - k;
  Real r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return round(r);
}

Real factorial(unsigned n) {
  Real r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Real poisson_tail(const Real& x, unsigned N) {
  if (x < 0) throw std::invalid_argument("poisson_tail: negative argument");
  if (x == 0) return Real(0);
  // Sum terms explicitly until the term ratio x/(n+1) drops below 1/2, then
  // close with a geometric bound.
  Real term = pow(x, N + 1) / factorial(N + 1);
  Real sum = 0;
  unsigned n = N + 1;
  while (x / (n + 1) > Real(0.5)) {
    sum += term;
    term = term * x / (n + 1);
    ++n;
  }
  sum += term / (1 - x / (n + 1));
  return sum * (1 + function_eps());
}

}  // namespace kfull
