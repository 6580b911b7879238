#pragma once

// Exact integer arithmetic on k-full integers: factorization, Moebius,
// canonical representation n = a^k b_1^{k+1} ... b_{k-1}^{2k-1}, and
// enumeration of k-full integers generated from their representations.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "kfull/int128.hpp"

namespace kfull::arith {

/// Largest argument accepted by factorize() and the predicates built on it.
inline constexpr u64 kMaxFactorInput = static_cast<u64>(std::numeric_limits<std::int64_t>::max());

struct PrimePower {
  u64 prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Prime powers sorted by strictly increasing prime; empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Trial division to 10^6, then Miller-Rabin (deterministic for 64 bits) and
/// Pollard-Brent on the cofactor. Throws std::out_of_range outside [1, 2^63-1].
Factorization factorize(u64 n);

bool is_prime(u64 n);
int moebius(u64 n);
bool is_squarefree(u64 n);
bool is_kfull(u64 n, unsigned k);
bool is_perfect_power(u128 n, unsigned k);

/// Primes <= n by a plain sieve of Eratosthenes.
std::vector<u64> primes_up_to(u64 n);

struct KFullRepr {
  unsigned k = 2;
  u64 a = 1;
  std::vector<u64> b;  // b_1..b_{k-1}

  /// a^k * prod b_j^{k+j}; throws std::overflow_error beyond 128 bits.
  u128 value() const;
  /// prod b_j^{k+j}, i.e. lambda^k for the shape of this integer.
  u128 shape_power() const;
  bool is_perfect_power() const;
  bool operator==(const KFullRepr&) const = default;
};

/// Unique representation of a k-full n. Throws std::domain_error if n is not k-full.
KFullRepr canonical_repr(u64 n, unsigned k);

/// A squarefree, pairwise coprime tuple b together with prod b_j^{k+j}.
struct Shape {
  u128 power;
  std::vector<u64> b;
};

/// All shapes with prod b_j^{k+j} <= limit (including the trivial all-ones
/// shape when include_trivial), in no particular order. Throws
/// std::length_error once more than cap shapes would be produced.
std::vector<Shape> shapes_up_to(unsigned k, u128 limit, bool include_trivial,
                                std::size_t cap = std::size_t{1} << 28);

struct KFullEntry {
  u128 value;
  KFullRepr repr;
};

/// The k-full integers <= x in increasing order (excluding perfect k-th powers
/// when proper_only). Built from shape progressions, never by testing integers.
std::vector<KFullEntry> enumerate_kfull(unsigned k, u128 x, bool proper_only);

/// Streams k-full integers in [lo, hi] in increasing order by a heap merge of
/// the progressions a^k * V, one per shape. Memory is O(number of shapes).
class KFullStream {
 public:
  struct Item {
    u128 value;
    u64 a;
    std::uint32_t shape;  // index into shapes()
  };

  KFullStream(unsigned k, u128 lo, u128 hi, bool proper_only);

  std::optional<Item> next();
  const Shape& shape(std::uint32_t index) const { return shapes_[index]; }
  std::span<const Shape> shapes() const { return shapes_; }
  KFullRepr repr(const Item& item) const;
  unsigned k() const { return k_; }

 private:
  struct HeapEntry {
    u128 value;
    u64 a;
    std::uint32_t shape;
    bool operator>(const HeapEntry& o) const { return value > o.value; }
  };
  void push_from(std::uint32_t shape, u64 a);

  unsigned k_;
  u128 hi_;
  std::vector<Shape> shapes_;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap_;
};

}  // namespace kfull::arith
