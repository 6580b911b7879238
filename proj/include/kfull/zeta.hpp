#pragma once

#include <cstdint>

#include "kfull/bounded_real.hpp"

namespace kfull::dirichlet {

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation with the
/// remainder bounded by the last retained Bernoulli term (times two).
/// Radius <= 10^-digits * value. Results are memoized per (s, digits);
/// the cache is shared between threads and never changes a returned value.
BoundedReal zeta(const Real& s, int digits = 40);

/// sum_{p > cutoff} p^{-s} via sum_n mu(n)/n log zeta_{>cutoff}(ns), where
/// zeta_{>cutoff} strips the Euler factors of primes <= cutoff.
BoundedReal prime_zeta_tail(const Real& s, std::uint64_t cutoff, int digits = 40);

/// Prime zeta function sum_p p^{-s}, s > 1.
BoundedReal prime_zeta(const Real& s, int digits = 40);

}  // namespace kfull::dirichlet
