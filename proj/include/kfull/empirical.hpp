#pragma once

// Exact counting of proper k-full integers between consecutive k-th powers.
// For n >= 1 the left interval is (n^k, (n+1)^k) and the right interval is
// ((n+1)^k, (n+2)^k); n lies in A_{l,m} when they hold l and m such integers.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kfull/core_arith.hpp"
#include "kfull/density.hpp"
#include "kfull/lambda_set.hpp"

namespace kfull::empirical {

enum class Side { left, right };

struct IntervalHit {
  u64 n;
  Side side;
  u128 value;
  arith::KFullRepr repr;
};

/// Proper k-full values in both intervals of n, ascending. Throws
/// std::overflow_error when (n+2)^k exceeds 128 bits.
std::vector<IntervalHit> interval_hits(u64 n, unsigned k);

/// (l, m) for n.
std::pair<unsigned, unsigned> classify_pair(u64 n, unsigned k);

using Cell = std::pair<unsigned, unsigned>;

struct EmpiricalCounts {
  unsigned k = 2;
  u64 N = 0;
  std::map<Cell, u64> counts;
  u128 enumeration_bound = 0;  // (N+2)^k

  u64 total() const;
  u64 count(unsigned l, unsigned m) const;
  double frequency(unsigned l, unsigned m) const;
  unsigned max_index() const;
};

/// Classifies every n in [1, N] from one ascending sweep of proper k-full
/// values up to (N+2)^k. Any thread count yields identical counts.
EmpiricalCounts empirical_table(unsigned k, u64 N, unsigned threads = 1);

/// n <= N whose left interval holds exactly the shapes of I (one value each)
/// and whose right interval holds exactly the shapes of J.
/// Throws std::invalid_argument when I and J overlap.
std::vector<u64> members_B(unsigned k, const density::SubsetSpec& I, const density::SubsetSpec& J,
                           u64 N);

struct LemmaResult {
  bool criterion = false;  // {n/lambda} > 1 - j/lambda
  bool direct = false;     // some a^k lambda^k lies in (n^k, (n+j)^k)
  u64 witnesses = 0;       // number of such a
  int digits_used = 0;
};

/// Decides the fractional-part criterion with 30, 60, 120, then 240 digits,
/// stopping at the first precision whose error bound separates both sides.
/// Throws std::runtime_error if 240 digits do not suffice.
LemmaResult lemma_check(u64 n, const dirichlet::LambdaElement& e, unsigned j);

struct CellDeviation {
  unsigned l = 0, m = 0;
  double observed = 0;  // count / N
  double expected = 0;  // analytic density
  double deviation = 0;
};

struct ComparisonReport {
  double max_abs_deviation = 0;
  std::vector<CellDeviation> cells;
};

/// Every cell of the table plus every observed cell. Throws
/// std::invalid_argument on a k mismatch and std::out_of_range when an
/// observed cell lies outside the table.
ComparisonReport compare_tables(const EmpiricalCounts& emp, const density::DensityTable& ana);

}  // namespace kfull::empirical
