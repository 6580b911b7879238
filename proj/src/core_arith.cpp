#include "kfull/core_arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kfull {

u128 iroot(u128 x, unsigned k) {
  if (k == 0) throw std::invalid_argument("iroot: k must be positive");
  if (k == 1 || x < 2) return x;
  auto estimate = static_cast<long double>(x);
  u128 r = static_cast<u128>(std::pow(estimate, 1.0L / static_cast<long double>(k)));
  u128 p;
  // The long double estimate is within a few units; walk to the exact floor.
  while (r > 0 && (!try_pow(r, k, p) || p > x)) --r;
  while (try_pow(r + 1, k, p) && p <= x) ++r;
  return r;
}

u128 iroot_ceil(u128 x, unsigned k) {
  u128 r = iroot(x, k);
  u128 p;
  if (try_pow(r, k, p) && p == x) return r;
  return r + 1;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 parse_u128(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("not an unsigned integer: " + s);
    v = checked_add(checked_mul(v, 10), static_cast<u128>(c - '0'));
  }
  return v;
}

}  // namespace kfull

namespace kfull::arith {
namespace {

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Miller-Rabin with the first twelve prime bases is deterministic below 3.3e24.
bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Pollard-Brent; n must be an odd composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    constexpr u64 kBatch = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

void check_k(unsigned k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

}  // namespace

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= n / i)
      for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(u64 n) { return miller_rabin(n); }

Factorization factorize(u64 n) {
  if (n == 0 || n > kMaxFactorInput)
    throw std::out_of_range("factorize: input must lie in [1, 2^63-1]");
  Factorization result;
  for (u64 p : small_primes()) {
    if (p > n / p) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.push_back({p, e});
  }
  if (n == 1) return result;
  // Cofactor has no prime factor <= min(10^6, sqrt(n)); below 10^12 it is prime.
  std::vector<u64> big;
  if (n < kTrialLimit * kTrialLimit) {
    big.push_back(n);
  } else {
    factor_large(n, big);
  }
  std::sort(big.begin(), big.end());
  for (u64 p : big) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

int moebius(u64 n) {
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

bool is_squarefree(u64 n) { return moebius(n) != 0; }

bool is_kfull(u64 n, unsigned k) {
  check_k(k);
  const auto f = factorize(n);
  return std::all_of(f.begin(), f.end(), [k](const PrimePower& pp) { return pp.exponent >= k; });
}

bool is_perfect_power(u128 n, unsigned k) {
  u128 r = iroot(n, k);
  u128 p;
  return try_pow(r, k, p) && p == n;
}

u128 KFullRepr::shape_power() const {
  u128 v = 1;
  for (std::size_t j = 0; j < b.size(); ++j)
    v = checked_mul(v, checked_pow(b[j], k + static_cast<unsigned>(j) + 1));
  return v;
}

u128 KFullRepr::value() const { return checked_mul(checked_pow(a, k), shape_power()); }

bool KFullRepr::is_perfect_power() const {
  return std::all_of(b.begin(), b.end(), [](u64 x) { return x == 1; });
}

KFullRepr canonical_repr(u64 n, unsigned k) {
  check_k(k);
  KFullRepr r{k, 1, std::vector<u64>(k - 1, 1)};
  for (const auto& [p, e] : factorize(n)) {
    if (e < k) throw std::domain_error("canonical_repr: input is not k-full");
    const unsigned q = e / k;
    const unsigned rem = e % k;
    // p^e = (p^q)^k when k | e, else p^{k+rem} * (p^{q-1})^k with p in b_rem.
    if (rem == 0) {
      r.a *= static_cast<u64>(checked_pow(p, q));
    } else {
      r.b[rem - 1] *= p;
      r.a *= static_cast<u64>(checked_pow(p, q - 1));
    }
  }
  return r;
}

std::vector<Shape> shapes_up_to(unsigned k, u128 limit, bool include_trivial, std::size_t cap) {
  check_k(k);
  std::vector<Shape> out;
  if (limit == 0) return out;
  const u128 prime_limit = iroot(limit, k + 1);
  if (prime_limit > (u128{1} << 32))
    throw std::length_error("shape enumeration bound too large");
  const std::vector<u64> primes = primes_up_to(static_cast<u64>(prime_limit));

  std::vector<u64> b(k - 1, 1);
  auto emit = [&](u128 v) {
    if (out.size() >= cap) throw std::length_error("shape enumeration exceeds configured cap");
    out.push_back({v, b});
  };
  auto dfs = [&](auto&& self, std::size_t start, u128 v) -> void {
    for (std::size_t i = start; i < primes.size(); ++i) {
      const u64 p = primes[i];
      u128 w, nv;
      if (!try_pow(p, k + 1, w) || mul_overflows(v, w, nv) || nv > limit) break;
      for (unsigned j = 1; j < k; ++j) {
        if (!try_pow(p, k + j, w) || mul_overflows(v, w, nv) || nv > limit) break;
        b[j - 1] *= p;
        emit(nv);
        self(self, i + 1, nv);
        b[j - 1] /= p;
      }
    }
  };
  if (include_trivial) emit(1);
  dfs(dfs, 0, 1);
  return out;
}

}  // namespace kfull::arith
