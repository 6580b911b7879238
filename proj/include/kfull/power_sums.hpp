#pragma once

// Dirichlet power sums P_k(m) = sum_{lambda in Lambda_k} lambda^{-m}, by two
// independent routes: truncated direct summation with an integral tail bound,
// and the Euler product
//     1 + P_k(m) = prod_p (1 + sum_{j=1}^{k-1} p^{-m(k+j)/k}),
// which holds because each prime divides at most one b_j.

#include <cstdint>
#include <vector>

#include "kfull/bounded_real.hpp"

namespace kfull::dirichlet {

inline constexpr std::uint64_t kDefaultPrimeCutoff = 100;

struct PowerSums {
  unsigned k = 2;
  std::vector<BoundedReal> values;  // values[m - 1] = P_k(m)

  const BoundedReal& operator()(unsigned m) const { return values.at(m - 1); }
  unsigned max_order() const { return static_cast<unsigned>(values.size()); }
};

/// Upper bound on the sum of lambda^{-m} over tuples with some coordinate > B:
///   sum_j  (B + 1/2)^{1 - s_j} / (s_j - 1) * prod_{i != j} zeta(s_i),  s_j = m(k+j)/k.
/// Ignores the squarefree condition. Nonincreasing in B.
double tail_bound(unsigned k, unsigned m, std::uint64_t B);

/// Sum over tuples with every coordinate <= B; radius = tail_bound + summation error.
/// Throws std::length_error when B^{k-1} exceeds 10^11.
BoundedReal power_sum_direct(unsigned k, unsigned m, std::uint64_t B);

/// P_k(1..m_max) in one sweep of the tuple space.
std::vector<BoundedReal> power_sums_direct(unsigned k, unsigned m_max, std::uint64_t B);

/// P_k(m) with relative radius <= 10^-digits: primes <= prime_cutoff are
/// multiplied in exactly, larger primes enter through a logarithmic expansion in
/// prime-zeta tails.
BoundedReal power_sum_euler(unsigned k, unsigned m, int digits = 40,
                            std::uint64_t prime_cutoff = kDefaultPrimeCutoff);

PowerSums power_sums_euler(unsigned k, unsigned m_max, int digits = 40,
                           std::uint64_t prime_cutoff = kDefaultPrimeCutoff);

}  // namespace kfull::dirichlet
