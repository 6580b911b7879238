#include "kfull/empirical.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace kfull::empirical {
namespace {

// c[i] = number of proper k-full values in ((lo+i)^k, (lo+i+1)^k) for lo+i <= hi.
std::vector<std::uint32_t> interval_counts(unsigned k, u64 lo, u64 hi) {
  std::vector<std::uint32_t> c(hi - lo + 1, 0);
  arith::KFullStream stream(k, checked_pow(u128(lo), k) + 1, checked_pow(u128(hi) + 1, k) - 1, true);
  u64 cursor = lo;
  u128 next_power = checked_pow(u128(lo) + 1, k);
  while (auto item = stream.next()) {
    while (item->value > next_power) {
      ++cursor;
      next_power = checked_pow(u128(cursor) + 1, k);
    }
    ++c[cursor - lo];
  }
  return c;
}

template <unsigned Digits>
using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                            boost::multiprecision::et_off>;

// 1 if {n/lambda} > 1 - j/lambda, 0 if below, -1 if undecided at this precision.
template <unsigned Digits>
int criterion_at(u64 n, const dirichlet::LambdaElement& e, unsigned j) {
  using F = Float<Digits>;
  const F lambda = exp(log(F(to_string(e.kth_power()))) / e.k());
  const F x = F(n) / lambda;
  // Absolute error of x, of its fractional part and of j/lambda is far below this.
  const F err = pow(F(10), -static_cast<int>(Digits) + 12) * (1 + x);
  const F fl = floor(x);
  const F frac = x - fl;
  if (frac < err || 1 - frac < err) return -1;
  const F margin = frac - (1 - F(j) / lambda);
  if (abs(margin) < err) return -1;
  return margin > 0 ? 1 : 0;
}

}  // namespace

std::vector<IntervalHit> interval_hits(u64 n, unsigned k) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const u128 lo = checked_pow(u128(n), k);
  const u128 mid = checked_pow(u128(n) + 1, k);
  const u128 hi = checked_pow(u128(n) + 2, k);
  arith::KFullStream stream(k, lo + 1, hi - 1, true);
  std::vector<IntervalHit> out;
  while (auto item = stream.next())
    out.push_back({n, item->value < mid ? Side::left : Side::right, item->value, stream.repr(*item)});
  return out;
}

std::pair<unsigned, unsigned> classify_pair(u64 n, unsigned k) {
  unsigned l = 0, m = 0;
  for (const auto& h : interval_hits(n, k)) (h.side == Side::left ? l : m)++;
  return {l, m};
}

u64 EmpiricalCounts::total() const {
  u64 t = 0;
  for (const auto& [cell, c] : counts) t += c;
  return t;
}

u64 EmpiricalCounts::count(unsigned l, unsigned m) const {
  auto it = counts.find({l, m});
  return it == counts.end() ? 0 : it->second;
}

double EmpiricalCounts::frequency(unsigned l, unsigned m) const {
  return N == 0 ? 0.0 : static_cast<double>(count(l, m)) / static_cast<double>(N);
}

unsigned EmpiricalCounts::max_index() const {
  unsigned r = 0;
  for (const auto& [cell, c] : counts) r = std::max({r, cell.first, cell.second});
  return r;
}

EmpiricalCounts empirical_table(unsigned k, u64 N, unsigned threads) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  EmpiricalCounts out;
  out.k = k;
  out.N = N;
  out.enumeration_bound = checked_pow(u128(N) + 2, k);

  threads = std::max(1u, threads);
  const u64 chunks = std::min<u64>(N, std::max<u64>(threads, 1) * 4);
  const u64 step = (N + chunks - 1) / chunks;
  std::vector<std::map<Cell, u64>> partial(chunks);
  auto work = [&](u64 chunk) {
    const u64 lo = 1 + chunk * step;
    if (lo > N) return;
    const u64 hi = std::min(N, lo + step - 1);
    // One extra interval supplies the right-hand count of hi.
    const auto c = interval_counts(k, lo, hi + 1);
    for (u64 n = lo; n <= hi; ++n) ++partial[chunk][{c[n - lo], c[n - lo + 1]}];
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (u64 chunk = t; chunk < chunks; chunk += threads) work(chunk);
    });
  for (auto& th : pool) th.join();
  for (const auto& p : partial)
    for (const auto& [cell, c] : p) out.counts[cell] += c;
  return out;
}

std::vector<u64> members_B(unsigned k, const density::SubsetSpec& I, const density::SubsetSpec& J,
                           u64 N) {
  I.validate();
  J.validate();
  if (I.k != k || J.k != k) throw std::invalid_argument("subset k differs from requested k");
  for (const auto& x : I.elements)
    for (const auto& y : J.elements)
      if (x == y) throw std::invalid_argument("I and J overlap in " + x.to_string());
  std::vector<u64> out;
  if (N < 1) return out;

  auto sorted_tuples = [](const density::SubsetSpec& s) {
    std::vector<std::vector<u64>> t;
    for (const auto& e : s.elements) t.push_back(e.b());
    std::sort(t.begin(), t.end());
    return t;
  };
  const auto want_left = sorted_tuples(I);
  const auto want_right = sorted_tuples(J);

  // shapes_in[i] lists the shape tuples hit in ((i+1)^k, (i+2)^k).
  std::vector<std::vector<std::vector<u64>>> shapes_in(N + 1);
  arith::KFullStream stream(k, 2, checked_pow(u128(N) + 2, k) - 1, true);
  u64 cursor = 1;
  u128 next_power = checked_pow(u128(2), k);
  while (auto item = stream.next()) {
    while (item->value > next_power) {
      ++cursor;
      next_power = checked_pow(u128(cursor) + 1, k);
    }
    shapes_in[cursor - 1].push_back(stream.shape(item->shape).b);
  }
  for (auto& s : shapes_in) std::sort(s.begin(), s.end());
  for (u64 n = 1; n <= N; ++n)
    if (shapes_in[n - 1] == want_left && shapes_in[n] == want_right) out.push_back(n);
  return out;
}

LemmaResult lemma_check(u64 n, const dirichlet::LambdaElement& e, unsigned j) {
  if (j < 1) throw std::invalid_argument("j must be positive");
  const unsigned k = e.k();
  LemmaResult r;
  const u128 V = e.kth_power();
  const u128 lo = checked_pow(u128(n), k);
  const u128 hi = checked_pow(u128(n) + j, k);
  // a^k V in (lo, hi)  <=>  iroot(lo / V) < a <= iroot((hi - 1) / V)
  r.witnesses = static_cast<u64>(iroot((hi - 1) / V, k) - iroot(lo / V, k));
  r.direct = r.witnesses > 0;

  int decided = criterion_at<30>(n, e, j);
  r.digits_used = 30;
  if (decided < 0) decided = criterion_at<60>(n, e, j), r.digits_used = 60;
  if (decided < 0) decided = criterion_at<120>(n, e, j), r.digits_used = 120;
  if (decided < 0) decided = criterion_at<240>(n, e, j), r.digits_used = 240;
  if (decided < 0) throw std::runtime_error("lemma_check: precision escalation failed");
  r.criterion = decided == 1;
  return r;
}

ComparisonReport compare_tables(const EmpiricalCounts& emp, const density::DensityTable& ana) {
  if (emp.k != ana.k) throw std::invalid_argument("compare_tables: k mismatch");
  for (const auto& [cell, c] : emp.counts)
    if (cell.first > ana.L || cell.second > ana.L)
      throw std::out_of_range("compare_tables: observed cell outside the analytic table");
  ComparisonReport rep;
  for (unsigned l = 0; l <= ana.L; ++l)
    for (unsigned m = 0; m <= ana.L; ++m) {
      CellDeviation d;
      d.l = l;
      d.m = m;
      d.observed = emp.frequency(l, m);
      d.expected = ana.entry(l, m).to_double();
      d.deviation = std::abs(d.observed - d.expected);
      rep.max_abs_deviation = std::max(rep.max_abs_deviation, d.deviation);
      rep.cells.push_back(d);
    }
  return rep;
}

}  // namespace kfull::empirical
