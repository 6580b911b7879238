#include "kfull/zeta.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "kfull/core_arith.hpp"

namespace kfull::dirichlet {
namespace {

const Real& log_of(unsigned n) {
  static const std::vector<Real> table = [] {
    std::vector<Real> t(4097);
    for (unsigned i = 1; i < t.size(); ++i) t[i] = log(Real(i));
    return t;
  }();
  return table.at(n);
}

BoundedReal zeta_uncached(const Real& s, int digits) {
  const Real eps = pow10_neg(digits + 2);
  for (unsigned N = 16 + static_cast<unsigned>(digits);; N *= 2) {
    if (N > 4096) throw std::runtime_error("zeta: Euler-Maclaurin failed to converge");
    Real sum = 1;
    for (unsigned n = 2; n < N; ++n) sum += exp(-s * log_of(n));
    const Real n_pow = exp(-s * log_of(N));  // N^{-s}
    sum += N * n_pow / (s - 1) + n_pow / 2;

    // j-th correction: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    Real rising = s;
    Real n_neg = n_pow / N;
    Real last = 0;
    bool converged = false;
    for (unsigned j = 1; j <= 400; ++j) {
      const Real term = boost::math::bernoulli_b2n<Real>(static_cast<int>(j)) / factorial(2 * j) * rising * n_neg;
      sum += term;
      last = abs(term);
      if (last < eps) {
        converged = true;
        break;
      }
      rising *= (s + 2 * j - 1) * (s + 2 * j);
      n_neg /= Real(N) * N;
    }
    if (!converged) continue;
    const Real radius = 2 * last + sum * function_eps() * (N + 8);
    return BoundedReal(sum, radius);
  }
}

template <class Key, class F>
BoundedReal memoized(std::map<Key, BoundedReal>& cache, std::shared_mutex& mu, const Key& key,
                     F&& compute) {
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BoundedReal v = compute();
  std::unique_lock lock(mu);
  return cache.emplace(key, v).first->second;
}

}  // namespace

BoundedReal zeta(const Real& s, int digits) {
  if (!(s > 1)) throw std::domain_error("zeta: requires s > 1");
  static std::map<std::tuple<Real, int>, BoundedReal> cache;
  static std::shared_mutex mu;
  return memoized(cache, mu, std::tuple{s, digits}, [&] { return zeta_uncached(s, digits); });
}

BoundedReal prime_zeta_tail(const Real& s, std::uint64_t cutoff, int digits) {
  if (!(s > 1)) throw std::domain_error("prime_zeta: requires s > 1");
  if (cutoff < 2) throw std::invalid_argument("prime_zeta: cutoff must be at least 2");
  static std::map<std::tuple<Real, int, std::uint64_t>, BoundedReal> cache;
  static std::shared_mutex mu;
  return memoized(cache, mu, std::tuple{s, digits, cutoff}, [&] {
    const auto primes = arith::primes_up_to(cutoff);
    const Real eps = pow10_neg(digits + 2);
    const Real c = Real(cutoff);
    BoundedReal sum;
    for (unsigned n = 1;; ++n) {
      const Real sigma = s * n;
      // sum_{n' >= n} (1/n') log zeta_{>c}(n' s) <= c^{1-ns} / (n (ns - 1)) / (1 - c^{-s})
      const Real rest = pow(c, 1 - sigma) / (n * (sigma - 1)) / (1 - pow(c, -s));
      if (rest < eps) return sum.widened(rest);
      const int mu_n = arith::moebius(n);
      if (mu_n == 0) continue;
      BoundedReal term = log(zeta(sigma, digits + 4));
      for (u64 p : primes) term += log1p(BoundedReal(-exp(-sigma * log(Real(p))), function_eps()));
      const Real weight = Real(mu_n) / n;
      sum += term.scaled(weight);
    }
  });
}

BoundedReal prime_zeta(const Real& s, int digits) {
  constexpr std::uint64_t kCutoff = 100;
  BoundedReal head;
  for (u64 p : arith::primes_up_to(kCutoff)) {
    const Real v = exp(-s * log(Real(p)));
    head += BoundedReal(v, v * function_eps());
  }
  return head + prime_zeta_tail(s, kCutoff, digits);
}

}  // namespace kfull::dirichlet
