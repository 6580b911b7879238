#include "kfull/lambda_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kfull/core_arith.hpp"

namespace kfull::dirichlet {
namespace {

constexpr int kMaxDigits = 70;

void check_digits(int digits) {
  if (digits < 15 || digits > kMaxDigits)
    throw std::invalid_argument("digits must lie in [15, 70]");
}

}  // namespace

LambdaElement::LambdaElement(unsigned k, std::vector<u64> b) : k_(k), b_(std::move(b)) {
  if (k_ < 2) throw std::invalid_argument("k must be at least 2");
  if (b_.size() != k_ - 1) throw std::invalid_argument("lambda tuple must have k-1 entries");
  u64 product = 1;
  for (u64 x : b_) {
    if (x == 0) throw std::invalid_argument("lambda tuple entries must be positive");
    if (std::gcd(product, x) != 1) throw std::invalid_argument("lambda tuple entries must be coprime");
    if (__builtin_mul_overflow(product, x, &product))
      throw std::overflow_error("lambda tuple product overflows");
  }
  if (product < 2) throw std::invalid_argument("lambda tuple product must be at least 2");
  if (product > arith::kMaxFactorInput || !arith::is_squarefree(product))
    throw std::invalid_argument("lambda tuple product must be squarefree");
  power_ = 1;
  for (unsigned j = 0; j < b_.size(); ++j) power_ = checked_mul(power_, checked_pow(b_[j], k_ + j + 1));
}

std::string LambdaElement::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  return os.str();
}

LambdaElement LambdaElement::parse(unsigned k, const std::string& tuple) {
  std::vector<u64> b;
  std::stringstream ss(tuple);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed lambda tuple: " + tuple);
    b.push_back(std::stoull(item));
  }
  // A bare "2" for k = 3 means b = (2, 1).
  while (b.size() < k - 1 && !b.empty()) b.push_back(1);
  return LambdaElement(k, std::move(b));
}

std::vector<LambdaElement> enumerate_lambda(unsigned k, double bound, std::size_t cap) {
  if (!(bound > 2)) throw std::invalid_argument("enumerate_lambda: bound must exceed 2");
  const Real limit_real = floor(pow(Real(bound), static_cast<int>(k)));
  if (limit_real >= Real(kU128Max)) throw std::overflow_error("enumerate_lambda: bound too large");
  std::string digits = limit_real.str(0, std::ios_base::fixed);
  digits = digits.substr(0, digits.find('.'));
  const u128 limit = parse_u128(digits);

  auto shapes = arith::shapes_up_to(k, limit, false, cap);
  std::sort(shapes.begin(), shapes.end(),
            [](const arith::Shape& x, const arith::Shape& y) { return x.power < y.power; });
  std::vector<LambdaElement> out;
  out.reserve(shapes.size());
  for (auto& s : shapes) out.emplace_back(k, std::move(s.b));
  return out;
}

std::vector<LambdaElement> first_lambdas(unsigned k, std::size_t count) {
  double bound = 8;
  for (;;) {
    auto all = enumerate_lambda(k, bound);
    if (all.size() >= count) {
      all.erase(all.begin() + static_cast<std::ptrdiff_t>(count), all.end());
      return all;
    }
    bound *= 2;
  }
}

BoundedReal lambda_value(const LambdaElement& e, int digits) {
  check_digits(digits);
  const Real v = exp(log(Real(e.kth_power())) / e.k());
  return BoundedReal(v, v * function_eps() * 4);
}

BoundedReal lambda_inverse_power(const LambdaElement& e, unsigned m, int digits) {
  check_digits(digits);
  const Real v = exp(-log(Real(e.kth_power())) * m / e.k());
  return BoundedReal(v, v * function_eps() * (4 + m));
}

}  // namespace kfull::dirichlet
