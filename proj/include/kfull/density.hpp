#pragma once

// Asymptotic densities of k-full integers sorted by the shapes of their
// neighbours. Everything derives from the entire function
//     F_k(z) = prod_{lambda in Lambda_k} (1 + (z - 2)/lambda) = sum_n a_n z^n,
// whose coefficients give d(A_{l,m}) = C(l+m, l) a_{l+m}, and from
//     G_k(z) = F_k(z + 1) = sum_l d_{k,l} z^l.

#include <cstdint>
#include <string>
#include <vector>

#include "kfull/bounded_real.hpp"
#include "kfull/lambda_set.hpp"
#include "kfull/power_sums.hpp"

namespace kfull::density {

using dirichlet::LambdaElement;
using dirichlet::PowerSums;

struct XiSequence {
  unsigned k = 2;
  std::vector<BoundedReal> xi;  // xi[r], xi[0] = 1

  const BoundedReal& operator[](std::size_t r) const { return xi.at(r); }
  unsigned r_max() const { return static_cast<unsigned>(xi.size()) - 1; }
};

struct SeriesCoeffs {
  unsigned k = 2;
  std::vector<BoundedReal> a;  // a[n], n = 0..n_max

  const BoundedReal& operator[](std::size_t n) const { return a.at(n); }
  unsigned n_max() const { return static_cast<unsigned>(a.size()) - 1; }
};

/// Elementary symmetric sums of {1/lambda} by Newton's identities, each
/// intersected with the a-priori range [0, P_k(1)^r / r!].
/// Throws std::invalid_argument when ps has fewer than r_max orders.
XiSequence xi_from_power_sums(const PowerSums& ps, unsigned r_max);

/// Elementary symmetric sums of {1/lambda} over a finite set.
std::vector<Real> xi_direct(const std::vector<LambdaElement>& elements, unsigned r_max);

/// a_n = sum_{r >= n} C(r, n) (-2)^{r-n} xi_r for n <= n_max, each widened by
/// P^n/n! * poisson_tail(2P, r_max - n) with P >= xi_1 = P_k(1).
/// Throws std::runtime_error when that tail exceeds 10^-tail_digits.
SeriesCoeffs coeffs_a(const XiSequence& xi, unsigned n_max, int tail_digits = 20);

/// a_n from the product itself: the factors with lambda <= head_cutoff are
/// multiplied out, the rest enter as exp of their logarithm expanded in powers
/// of 1/(lambda - 2). Uses P_k(i) only, never the xi sequence.
SeriesCoeffs coeffs_product(const PowerSums& ps, unsigned n_max, double head_cutoff);

enum class Method { direct, inversion, xi };
enum class ShiuMethod { xi_alternating, row_sum };

std::string to_string(Method m);
Method parse_method(const std::string& s);

struct EngineConfig {
  int digits = 40;                  // precision of the power sums
  std::uint64_t prime_cutoff = 100;
  unsigned r_max = 0;               // 0 picks the guard from the tail bounds
  double head_cutoff = 1000;        // explicit factors in the product route
  unsigned n_max = 0;               // 0 picks it from the normalization tail
  unsigned max_index = 10;          // largest l + m that must be available
  int tail_digits = 20;             // truncation tails stay below 10^-tail_digits
};

struct SubsetSpec {
  unsigned k = 2;
  std::vector<LambdaElement> elements;

  /// Throws std::invalid_argument on repeated elements or mixed k.
  void validate() const;
};

struct DensityTable {
  unsigned k = 2;
  unsigned L = 0;
  Method method = Method::xi;
  std::vector<BoundedReal> entries;  // row-major (L+1) x (L+1)

  const BoundedReal& entry(unsigned l, unsigned m) const { return entries.at(l * (L + 1) + m); }
};

/// Immutable once constructed; safe to share between threads.
class DensityEngine {
 public:
  explicit DensityEngine(unsigned k, EngineConfig config = {});

  unsigned k() const { return k_; }
  const EngineConfig& config() const { return config_; }
  const PowerSums& power_sums() const { return ps_; }
  const XiSequence& xi() const { return xi_; }
  const SeriesCoeffs& coeffs(Method route = Method::xi) const;
  const std::vector<BoundedReal>& shiu() const { return shiu_; }
  unsigned n_max() const { return n_max_; }
  unsigned r_max() const { return xi_.r_max(); }

  /// C_k = F_k(0) = a_0.
  BoundedReal C() const { return coeffs_xi_[0]; }

  BoundedReal density_A(int l, int m, Method method = Method::xi) const;
  BoundedReal density_shiu(int l, ShiuMethod method = ShiuMethod::xi_alternating) const;
  /// Throws std::invalid_argument when I and J share an element.
  BoundedReal density_B(const SubsetSpec& I, const SubsetSpec& J) const;

  /// sum_n a_n 2^n including the tail bound; contains 1.
  BoundedReal normalization_check(Method route = Method::xi) const;
  /// sum_{n <= n_limit} a_n 2^n without any tail; below 1.
  BoundedReal partial_normalization(unsigned n_limit, Method route = Method::xi) const;

  BoundedReal eval_F(const Real& z) const;

  DensityTable table(unsigned L, Method method = Method::xi) const;

 private:
  unsigned k_;
  EngineConfig config_;
  Real p1_upper_;
  unsigned n_max_;
  PowerSums ps_;
  XiSequence xi_;
  SeriesCoeffs coeffs_xi_;
  SeriesCoeffs coeffs_direct_;
  std::vector<BoundedReal> shiu_;  // d_{k,j}, j <= n_max, from the xi sequence
};

/// Shared engine with the default configuration, built on first use per k.
const DensityEngine& default_engine(unsigned k);

}  // namespace kfull::density
