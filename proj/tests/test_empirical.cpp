#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "kfull/core_arith.hpp"
#include "kfull/density.hpp"
#include "kfull/empirical.hpp"

using namespace kfull;
using namespace kfull::empirical;
using dirichlet::LambdaElement;
using density::SubsetSpec;

namespace {

// Proper k-full integers in (lo, hi) by trial division.
unsigned slow_count(u64 lo, u64 hi, unsigned k) {
  unsigned c = 0;
  for (u64 x = lo + 1; x < hi; ++x)
    if (arith::is_kfull(x, k) && !arith::is_perfect_power(x, k)) ++c;
  return c;
}

u64 ipow(u64 n, unsigned k) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n;
  return r;
}

}  // namespace

TEST_CASE("classify_pair examples") {
  CHECK(classify_pair(1, 2) == Cell{0, 1});  // 8 lies in (4, 9)
  CHECK(classify_pair(2, 2) == Cell{1, 0});
  CHECK(classify_pair(3, 2) == Cell{0, 0});
  const auto hits = interval_hits(1, 2);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].value == 8);
  CHECK(hits[0].side == Side::right);
  CHECK(hits[0].repr.b == std::vector<u64>{2});
}

TEST_CASE("classify_pair agrees with trial division") {
  for (unsigned k : {2u, 3u})
    for (u64 n = 1; n <= (k == 2 ? 400u : 40u); ++n) {
      const Cell c = classify_pair(n, k);
      CHECK(c.first == slow_count(ipow(n, k), ipow(n + 1, k), k));
      CHECK(c.second == slow_count(ipow(n + 1, k), ipow(n + 2, k), k));
    }
}

TEST_CASE("empirical_table conservation and thread determinism") {
  for (unsigned k : {2u, 3u}) {
    const u64 N = k == 2 ? 20000 : 3000;
    const auto one = empirical_table(k, N, 1);
    CHECK(one.total() == N);
    u64 sum = 0;
    for (const auto& [cell, n] : one.counts) sum += n;
    CHECK(sum == N);
    for (unsigned threads : {2u, 3u, 8u}) CHECK(empirical_table(k, N, threads).counts == one.counts);
    // spot check against per-n classification
    for (u64 n : {u64(1), u64(17), N / 2, N})
      CHECK(one.count(classify_pair(n, k).first, classify_pair(n, k).second) > 0);
  }
  const auto small = empirical_table(2, 10);
  u64 zeros = 0;
  for (u64 n = 1; n <= 10; ++n)
    if (classify_pair(n, 2) == Cell{0, 0}) ++zeros;
  CHECK(small.count(0, 0) == zeros);
  CHECK(classify_pair(3, 2) == Cell{0, 0});
  CHECK(classify_pair(6, 2) == Cell{0, 0});
  CHECK(small.frequency(0, 0) == doctest::Approx(double(zeros) / 10));
  CHECK(small.enumeration_bound == 144);
}

TEST_CASE("members_B") {
  const SubsetSpec empty{2, {}};
  const SubsetSpec I{2, {LambdaElement(2, {2})}};
  const auto m = members_B(2, empty, empty, 40);
  CHECK(m == std::vector<u64>{3, 6, 12, 23, 26, 34});
  for (u64 n : m) CHECK(classify_pair(n, 2) == Cell{0, 0});

  // prefix stability
  const auto longer = members_B(2, I, empty, 4000);
  const auto shorter = members_B(2, I, empty, 1000);
  REQUIRE(shorter.size() <= longer.size());
  CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));

  // left interval holds exactly one value, with b = (2)
  for (u64 n : shorter) {
    const auto hits = interval_hits(n, 2);
    unsigned left = 0, right = 0;
    for (const auto& h : hits) {
      if (h.side == Side::left) {
        ++left;
        CHECK(h.repr.b == std::vector<u64>{2});
      } else {
        ++right;
      }
    }
    CHECK(left == 1);
    CHECK(right == 0);
  }
  // and every such n is listed
  std::size_t expect = 0;
  for (u64 n = 1; n <= 1000; ++n) {
    const auto hits = interval_hits(n, 2);
    if (hits.size() == 1 && hits[0].side == Side::left && hits[0].repr.b == std::vector<u64>{2}) ++expect;
  }
  CHECK(shorter.size() == expect);

  CHECK_THROWS_AS(members_B(2, I, I, 100), std::invalid_argument);
}

TEST_CASE("lemma_check examples") {
  // 8 = 1^2 * 8 lies in (2^2, 3^2)
  const LambdaElement two(2, {2});
  auto r = lemma_check(2, two, 1);
  CHECK(r.direct);
  CHECK(r.criterion);
  CHECK(r.witnesses == 1);
  r = lemma_check(3, two, 1);
  CHECK_FALSE(r.direct);
  CHECK_FALSE(r.criterion);
  CHECK(r.digits_used >= 30);
  // 8 lies in (1, 3^2)
  r = lemma_check(1, two, 2);
  CHECK(r.direct);
  CHECK(r.criterion);
}

TEST_CASE("lemma_check property") {
  std::mt19937_64 rng(11);
  const auto lambdas = dirichlet::first_lambdas(3, 30);
  const auto lambdas2 = dirichlet::first_lambdas(2, 30);
  for (int t = 0; t < 2000; ++t) {
    const u64 n = 1 + rng() % 1'000'000;
    const auto& e = (t % 2 ? lambdas : lambdas2)[rng() % 30];
    const auto r1 = lemma_check(n, e, 1);
    const auto r2 = lemma_check(n, e, 2);
    CHECK(r1.criterion == r1.direct);
    CHECK(r2.criterion == r2.direct);
    CHECK(r1.witnesses <= 1);
    CHECK(r2.witnesses <= 1);
    if (r1.criterion) CHECK(r2.criterion);
  }
}

TEST_CASE("compare_tables") {
  // synthetic counts equal to the analytic frequencies give no deviation
  const auto& engine = density::default_engine(2);
  const auto table = engine.table(2);
  EmpiricalCounts e;
  e.k = 2;
  e.N = 1'000'000'000;
  for (unsigned l = 0; l <= 2; ++l)
    for (unsigned m = 0; m <= 2; ++m)
      e.counts[{l, m}] = static_cast<u64>(std::llround(table.entry(l, m).to_double() * double(e.N)));
  const auto rep = compare_tables(e, table);
  CHECK(rep.max_abs_deviation < 1e-9);
  CHECK(rep.cells.size() == 9);

  e.counts[{3, 0}] = 1;
  CHECK_THROWS_AS(compare_tables(e, table), std::out_of_range);
  e.k = 3;
  CHECK_THROWS_AS(compare_tables(e, table), std::invalid_argument);
}

TEST_CASE("empirical frequencies approach the densities") {
  const auto counts = empirical_table(2, 200000, 4);
  const unsigned L = counts.max_index();
  const auto rep = compare_tables(counts, density::default_engine(2).table(L));
  CHECK(rep.max_abs_deviation < 0.01);
}
