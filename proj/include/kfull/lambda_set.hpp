#pragma once

// The shapes of proper k-full integers: lambda = (b_1^{k+1} ... b_{k-1}^{2k-1})^{1/k}
// over tuples with squarefree product >= 2. Elements are identified by their
// integer tuple; real values are recomputed on demand.

#include <cstdint>
#include <string>
#include <vector>

#include "kfull/bounded_real.hpp"
#include "kfull/int128.hpp"

namespace kfull::dirichlet {

class LambdaElement {
 public:
  /// Throws std::invalid_argument unless b has k-1 positive entries whose
  /// product is squarefree and >= 2, and std::overflow_error if lambda^k
  /// exceeds 128 bits.
  LambdaElement(unsigned k, std::vector<u64> b);

  unsigned k() const { return k_; }
  const std::vector<u64>& b() const { return b_; }
  /// lambda^k = prod b_j^{k+j}, exact.
  u128 kth_power() const { return power_; }

  /// Comma-separated tuple, e.g. "2,1".
  std::string to_string() const;
  static LambdaElement parse(unsigned k, const std::string& tuple);

  bool operator==(const LambdaElement& o) const { return k_ == o.k_ && b_ == o.b_; }
  /// Orders by lambda (equivalently by lambda^k).
  bool operator<(const LambdaElement& o) const { return power_ < o.power_; }

 private:
  unsigned k_;
  std::vector<u64> b_;
  u128 power_;
};

inline constexpr std::size_t kDefaultLambdaCap = 50'000'000;

/// Elements with lambda <= bound, ascending. Throws std::length_error past cap.
std::vector<LambdaElement> enumerate_lambda(unsigned k, double bound,
                                            std::size_t cap = kDefaultLambdaCap);

/// The first count elements of Lambda_k in increasing order.
std::vector<LambdaElement> first_lambdas(unsigned k, std::size_t count);

/// lambda with relative radius <= 10^-digits, digits in [15, 70].
BoundedReal lambda_value(const LambdaElement& e, int digits = 60);

/// lambda^{-m}, same precision contract.
BoundedReal lambda_inverse_power(const LambdaElement& e, unsigned m, int digits = 60);

}  // namespace kfull::dirichlet
