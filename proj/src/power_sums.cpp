#include "kfull/power_sums.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "kfull/core_arith.hpp"
#include "kfull/zeta.hpp"

namespace kfull::dirichlet {
namespace {

void check_km(unsigned k, unsigned m) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

Real exponent(unsigned k, unsigned m, unsigned j) { return Real(m) * (k + j) / k; }

// Calls f(c) for every composition c of t into parts summing to t.
void for_each_composition(unsigned parts, unsigned t, std::vector<unsigned>& c, unsigned pos,
                          const std::function<void(const std::vector<unsigned>&)>& f) {
  if (pos + 1 == parts) {
    c[pos] = t;
    f(c);
    return;
  }
  for (unsigned i = 0; i <= t; ++i) {
    c[pos] = i;
    for_each_composition(parts, t - i, c, pos + 1, f);
  }
}

}  // namespace

double tail_bound(unsigned k, unsigned m, std::uint64_t B) {
  check_km(k, m);
  if (B < 1) throw std::invalid_argument("tail_bound: B must be positive");
  const Real edge = Real(B) + Real(0.5);
  Real total = 0;
  for (unsigned j = 1; j < k; ++j) {
    const Real sj = exponent(k, m, j);
    Real term = pow(edge, 1 - sj) / (sj - 1);
    for (unsigned i = 1; i < k; ++i)
      if (i != j) term *= zeta(exponent(k, m, i), 20).upper();
    total += term;
  }
  const double d = (total * (1 + function_eps())).convert_to<double>();
  return std::nextafter(d, std::numeric_limits<double>::infinity());
}

std::vector<BoundedReal> power_sums_direct(unsigned k, unsigned m_max, std::uint64_t B) {
  check_km(k, m_max);
  if (B < 2) throw std::invalid_argument("power_sum_direct: B must be at least 2");
  if (std::pow(static_cast<double>(B), k - 1) > 1e11)
    throw std::length_error("power_sum_direct: tuple space exceeds cap");

  // Smallest-prime-factor sieve gives squarefreeness and the primes to block.
  std::vector<u64> spf(B + 1, 0);
  for (u64 i = 2; i <= B; ++i)
    if (spf[i] == 0)
      for (u64 j = i; j <= B; j += i)
        if (spf[j] == 0) spf[j] = i;
  std::vector<char> squarefree(B + 1, 1);
  for (u64 p = 2; p * p <= B; ++p)
    for (u64 j = p * p; j <= B; j += p * p) squarefree[j] = 0;
  auto primes_of = [&](u64 b) {
    std::vector<u64> ps;
    while (b > 1) {
      u64 p = spf[b];
      ps.push_back(p);
      while (b % p == 0) b /= p;
    }
    return ps;
  };

  // weight[j][b * m_max + (m-1)] = b^{-m(k+j)/k}
  std::vector<std::vector<double>> weight(k - 1, std::vector<double>((B + 1) * m_max));
  for (unsigned j = 1; j < k; ++j)
    for (u64 b = 1; b <= B; ++b)
      for (unsigned m = 1; m <= m_max; ++m)
        weight[j - 1][b * m_max + m - 1] =
            std::pow(static_cast<double>(b), -static_cast<double>(m) * (k + j) / k);

  std::vector<double> sum(m_max, 0.0), comp(m_max, 0.0);
  std::uint64_t terms = 0;
  std::vector<std::uint32_t> blocked(B + 1, 0);
  std::vector<std::vector<double>> partial(k, std::vector<double>(m_max, 1.0));

  auto rec = [&](auto&& self, unsigned slot, bool nontrivial) -> void {
    if (slot == k - 1) {
      if (!nontrivial) return;
      ++terms;
      const auto& x = partial[slot];
      for (unsigned i = 0; i < m_max; ++i) {  // Neumaier summation
        const double t = sum[i] + x[i];
        comp[i] += std::abs(sum[i]) >= std::abs(x[i]) ? (sum[i] - t) + x[i] : (x[i] - t) + sum[i];
        sum[i] = t;
      }
      return;
    }
    for (u64 b = 1; b <= B; ++b) {
      if (!squarefree[b] || blocked[b]) continue;
      // The last slot has no successors to block.
      const auto ps = slot + 2 < k ? primes_of(b) : std::vector<u64>{};
      for (u64 p : ps)
        for (u64 x = p; x <= B; x += p) ++blocked[x];
      const double* w = &weight[slot][b * m_max];
      for (unsigned i = 0; i < m_max; ++i) partial[slot + 1][i] = partial[slot][i] * w[i];
      self(self, slot + 1, nontrivial || b > 1);
      for (u64 p : ps)
        for (u64 x = p; x <= B; x += p) --blocked[x];
    }
  };
  rec(rec, 0, false);

  const double u = std::numeric_limits<double>::epsilon() / 2;
  std::vector<BoundedReal> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    const double s = sum[m - 1] + comp[m - 1];
    // Each term carries <= 2k rounding units; Neumaier adds 2u|S| + O(n u^2) sum|x|.
    const double float_err =
        (2.0 * k * u + 2 * u + 4.0 * static_cast<double>(terms) * u * u) * s * 1.01;
    out.emplace_back(Real(s), Real(tail_bound(k, m, B)) + Real(float_err));
  }
  return out;
}

BoundedReal power_sum_direct(unsigned k, unsigned m, std::uint64_t B) {
  return power_sums_direct(k, m, B).at(m - 1);
}

BoundedReal power_sum_euler(unsigned k, unsigned m, int digits, std::uint64_t prime_cutoff) {
  check_km(k, m);
  if (prime_cutoff < 2) throw std::invalid_argument("prime cutoff must be at least 2");
  std::vector<Real> s(k);
  for (unsigned j = 1; j < k; ++j) s[j] = exponent(k, m, j);

  // S = prod_{p <= cutoff}(1 + x_p) - 1, accumulated as S += x_p (1 + S) so
  // that the relative precision survives when P_k(m) is tiny.
  BoundedReal small;
  for (u64 p : arith::primes_up_to(prime_cutoff)) {
    const Real lp = log(Real(p));
    Real x = 0;
    for (unsigned j = 1; j < k; ++j) x += exp(-s[j] * lp);
    const BoundedReal xp(x, x * function_eps() * k);
    small += xp + small * xp;
  }

  const Real c = Real(prime_cutoff);
  // x_p <= (k-1) p^{-s_1} must stay below 1/2 past the cutoff for log(1+x) to expand.
  if ((k - 1) * pow(c + 1, -s[1]) >= Real(0.5))
    throw std::invalid_argument("prime cutoff too small for the logarithmic tail");

  const Real target = pow10_neg(digits + 2) * std::min(Real(1), small.lower());
  Real tail_sum_bound = 0;  // >= sum_{p > cutoff} x_p
  for (unsigned j = 1; j < k; ++j) tail_sum_bound += pow(c, 1 - s[j]) / (s[j] - 1);

  BoundedReal tail;
  if (tail_sum_bound <= target) {
    tail = BoundedReal::from_bounds(0, tail_sum_bound);
  } else {
    const int pz_digits = digits + 12 + static_cast<int>((s[1] * Real(0.302)).convert_to<double>());
    auto remainder = [&](unsigned T) {
      const Real e = s[1] * (T + 1);
      return pow(Real(k - 1), T + 1) * pow(c, 1 - e) / ((e - 1) * (T + 1));
    };
    unsigned T = 1;
    while (remainder(T) > target / 2) ++T;
    std::vector<unsigned> comp(k - 1);
    for (unsigned t = 1; t <= T; ++t) {
      BoundedReal power_t;  // sum_{p > cutoff} x_p^t
      for_each_composition(k - 1, t, comp, 0, [&](const std::vector<unsigned>& cs) {
        Real sigma = 0;
        Real multinomial = factorial(t);
        for (unsigned j = 0; j + 1 < k; ++j) {
          sigma += s[j + 1] * cs[j];
          multinomial /= factorial(cs[j]);
        }
        power_t += prime_zeta_tail(sigma, prime_cutoff, pz_digits).scaled(round(multinomial));
      });
      const Real coeff = Real(t % 2 == 1 ? 1 : -1) / t;
      tail += power_t.scaled(coeff);
    }
    tail = tail.widened(remainder(T));
  }
  return small + (BoundedReal::exact(1) + small) * expm1(tail);
}

PowerSums power_sums_euler(unsigned k, unsigned m_max, int digits, std::uint64_t prime_cutoff) {
  PowerSums ps{k, {}};
  ps.values.reserve(m_max);
  for (unsigned m = 1; m <= m_max; ++m) ps.values.push_back(power_sum_euler(k, m, digits, prime_cutoff));
  return ps;
}

}  // namespace kfull::dirichlet
