#include "kfull/density.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace kfull::density {
namespace {

Real sign(unsigned n) { return n % 2 == 0 ? Real(1) : Real(-1); }

// P^n / n!, the common a-priori bound on xi_n, a_n and d_{k,n}.
Real factorial_bound(const Real& P, unsigned n) { return pow(P, n) / factorial(n); }

BoundedReal nonnegative(const BoundedReal& x, const Real& hi) { return x.intersected(Real(0), hi); }

Real positive_infinity() { return Real(1) / Real(0); }

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::inversion: return "inversion";
    case Method::xi: return "xi";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "direct") return Method::direct;
  if (s == "inversion") return Method::inversion;
  if (s == "xi") return Method::xi;
  throw std::invalid_argument("unknown method: " + s);
}

XiSequence xi_from_power_sums(const PowerSums& ps, unsigned r_max) {
  if (ps.max_order() < r_max) throw std::invalid_argument("insufficient power sums for r_max");
  XiSequence out{ps.k, {BoundedReal::exact(1)}};
  if (r_max == 0) return out;
  const Real P = ps(1).upper();
  for (unsigned r = 1; r <= r_max; ++r) {
    BoundedReal s;
    for (unsigned i = 1; i <= r; ++i) {
      const BoundedReal term = out.xi[r - i] * ps(i);
      if (i % 2 == 1)
        s += term;
      else
        s -= term;
    }
    s /= BoundedReal::exact(r);
    out.xi.push_back(nonnegative(s, factorial_bound(P, r)));
  }
  return out;
}

std::vector<Real> xi_direct(const std::vector<LambdaElement>& elements, unsigned r_max) {
  std::vector<Real> e(r_max + 1, Real(0));
  e[0] = 1;
  for (const auto& el : elements) {
    const Real inv = dirichlet::lambda_inverse_power(el, 1).value();
    for (unsigned r = r_max; r >= 1; --r) e[r] += e[r - 1] * inv;
  }
  return e;
}

SeriesCoeffs coeffs_a(const XiSequence& xi, unsigned n_max, int tail_digits) {
  const unsigned R = xi.r_max();
  if (R < 1 || n_max > R) throw std::runtime_error("guard insufficient: r_max below n_max");
  const Real P = xi[1].upper();
  const Real eps = pow10_neg(tail_digits);
  SeriesCoeffs out{xi.k, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    BoundedReal s;
    for (unsigned r = n; r <= R; ++r)
      s += xi[r].scaled(sign(r - n) * binomial(r, n) * pow(Real(2), r - n));
    const Real tail = factorial_bound(P, n) * poisson_tail(2 * P, R - n);
    if (tail > eps)
      throw std::runtime_error("guard insufficient: r_max = " + std::to_string(R) +
                               " leaves a tail above the target at n = " + std::to_string(n));
    out.a.push_back(nonnegative(s.widened(tail), xi[n].upper()));
  }
  return out;
}

SeriesCoeffs coeffs_product(const PowerSums& ps, unsigned n_max, double head_cutoff) {
  const unsigned k = ps.k;
  const auto head = dirichlet::enumerate_lambda(k, head_cutoff);
  const Real H = Real(head_cutoff);
  const unsigned orders = ps.max_order();

  std::vector<BoundedReal> inv;  // 1/lambda over the head
  inv.reserve(head.size());
  for (const auto& e : head) inv.push_back(dirichlet::lambda_inverse_power(e, 1));

  // P_T(i) = sum over lambda > H of lambda^{-i} <= P_T(1) H^{1-i}.
  std::vector<BoundedReal> head_power(orders + 1);
  for (const auto& x : inv) {
    BoundedReal p = x;
    for (unsigned i = 1; i <= orders; ++i) {
      head_power[i] += p;
      p *= x;
    }
  }
  const BoundedReal tail1 = nonnegative(ps(1) - head_power[1], positive_infinity());
  const Real tail1_upper = tail1.upper();
  auto tail_bound = [&](unsigned i) { return tail1_upper * pow(H, 1 - static_cast<int>(i)); };
  auto tail_power = [&](unsigned i) {
    if (i == 1) return tail1;
    if (i > orders) return BoundedReal::from_bounds(0, tail_bound(i));
    return nonnegative(ps(i) - head_power[i], tail_bound(i));
  };

  const Real eps = pow10_neg(60);
  const Real q = 2 / H;

  // Q_T(i) = sum_{lambda > H} (lambda - 2)^{-i} = sum_j C(i+j-1, j) 2^j P_T(i+j).
  auto shifted_power = [&](unsigned i) {
    BoundedReal s;
    for (unsigned j = 0;; ++j) {
      const Real weight = binomial(i + j - 1, j) * pow(Real(2), j);
      const Real ratio = q * (i + j) / (j + 1);
      if (weight * tail_bound(i + j) < eps && ratio <= Real(0.5)) {
        // Remaining terms are dominated by a geometric series of ratio <= 1/2.
        return s.widened(2 * weight * tail_bound(i + j));
      }
      s += tail_power(i + j).scaled(weight);
    }
  };

  // log of the tail product = c0 + sum_i (-1)^{i-1} Q_T(i) z^i / i,
  // c0 = sum_{lambda > H} log(1 - 2/lambda) = -sum_i 2^i P_T(i) / i.
  BoundedReal c0;
  for (unsigned i = 1;; ++i) {
    const Real weight = pow(Real(2), i) / i;
    if (weight * tail_bound(i) < eps && q <= Real(0.25)) {
      c0 = c0.widened(2 * weight * tail_bound(i));
      break;
    }
    c0 -= tail_power(i).scaled(weight);
  }
  std::vector<BoundedReal> g(n_max + 1);
  for (unsigned i = 1; i <= n_max; ++i) g[i] = shifted_power(i).scaled(sign(i - 1) / i);

  // exp of the series: n e_n = sum_{i=1}^n i g_i e_{n-i}.
  std::vector<BoundedReal> e(n_max + 1);
  e[0] = exp(c0);
  for (unsigned n = 1; n <= n_max; ++n) {
    BoundedReal s;
    for (unsigned i = 1; i <= n; ++i) s += (g[i] * e[n - i]).scaled(Real(i));
    e[n] = s / BoundedReal::exact(n);
  }

  // Head factors (1 - 2/lambda) + z/lambda, all with nonnegative coefficients.
  std::vector<BoundedReal> poly(n_max + 1);
  poly[0] = BoundedReal::exact(1);
  for (const auto& x : inv) {
    const BoundedReal c = BoundedReal::exact(1) - x.scaled(Real(2));
    for (unsigned n = n_max; n >= 1; --n) poly[n] = poly[n] * c + poly[n - 1] * x;
    poly[0] *= c;
  }

  SeriesCoeffs out{k, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    BoundedReal s;
    for (unsigned i = 0; i <= n; ++i) s += poly[i] * e[n - i];
    out.a.push_back(nonnegative(s, positive_infinity()));
  }
  return out;
}

void SubsetSpec::validate() const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].k() != k) throw std::invalid_argument("subset mixes different k");
    for (std::size_t j = 0; j < i; ++j)
      if (elements[i] == elements[j]) throw std::invalid_argument("subset repeats an element");
  }
}

DensityEngine::DensityEngine(unsigned k, EngineConfig config) : k_(k), config_(config) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const Real eps = pow10_neg(config_.tail_digits);
  p1_upper_ = dirichlet::power_sum_euler(k, 1, config_.digits, config_.prime_cutoff).upper();
  const Real P = p1_upper_;

  // sum_{n > N} a_n 2^n <= poisson_tail(2P, N)
  n_max_ = config_.n_max;
  if (n_max_ == 0) {
    n_max_ = config_.max_index;
    while (poisson_tail(2 * P, n_max_) > eps) ++n_max_;
  }
  if (n_max_ < config_.max_index) throw std::invalid_argument("n_max below the requested max index");

  auto guard_ok = [&](unsigned R) {
    if (R < n_max_) return false;
    for (unsigned n = 0; n <= n_max_; ++n)
      if (factorial_bound(P, n) * poisson_tail(2 * P, R - n) > eps) return false;
    return true;
  };
  unsigned R = config_.r_max;
  if (R == 0) {
    R = n_max_;
    while (!guard_ok(R)) ++R;
  } else if (!guard_ok(R)) {
    throw std::runtime_error("guard insufficient: r_max = " + std::to_string(R) +
                             " cannot reach a tail below 1e-" + std::to_string(config_.tail_digits));
  }

  ps_ = dirichlet::power_sums_euler(k, R, config_.digits, config_.prime_cutoff);
  xi_ = xi_from_power_sums(ps_, R);
  coeffs_xi_ = coeffs_a(xi_, n_max_, config_.tail_digits);

  // d_{k,j} = sum_{i >= 0} (-1)^i C(j+i, j) xi_{j+i}
  for (unsigned j = 0; j <= n_max_; ++j) {
    BoundedReal s;
    for (unsigned r = j; r <= R; ++r) s += xi_[r].scaled(sign(r - j) * binomial(r, j));
    const Real tail = factorial_bound(P, j) * poisson_tail(P, R - j);
    shiu_.push_back(nonnegative(s.widened(tail), xi_[j].upper()));
  }

  coeffs_direct_ = coeffs_product(ps_, n_max_, config_.head_cutoff);
}

const SeriesCoeffs& DensityEngine::coeffs(Method route) const {
  return route == Method::direct ? coeffs_direct_ : coeffs_xi_;
}

BoundedReal DensityEngine::density_A(int l, int m, Method method) const {
  if (l < 0 || m < 0) throw std::invalid_argument("density indices must be nonnegative");
  const unsigned s = static_cast<unsigned>(l + m);
  if (s > n_max_) throw std::out_of_range("index beyond computed coefficients");
  const Real c = binomial(s, static_cast<unsigned>(l));
  switch (method) {
    case Method::xi: return coeffs_xi_[s].scaled(c);
    case Method::direct: return coeffs_direct_[s].scaled(c);
    case Method::inversion: {
      // a_s = sum_n (-1)^n C(s+n, n) d_{k,s+n}
      BoundedReal a;
      for (unsigned j = s; j <= n_max_; ++j) a += shiu_[j].scaled(sign(j - s) * binomial(j, s));
      a = a.widened(factorial_bound(p1_upper_, s) * poisson_tail(p1_upper_, n_max_ - s));
      return nonnegative(a, xi_[s].upper()).scaled(c);
    }
  }
  throw std::logic_error("unreachable");
}

BoundedReal DensityEngine::density_shiu(int l, ShiuMethod method) const {
  if (l < 0) throw std::invalid_argument("density index must be nonnegative");
  const unsigned ul = static_cast<unsigned>(l);
  if (ul > n_max_) throw std::out_of_range("index beyond computed coefficients");
  if (method == ShiuMethod::xi_alternating) return shiu_[ul];
  // d_{k,l} = sum_m d(A_{l,m}); the omitted m > M add at most P^l/l! poisson_tail(P, M).
  const unsigned M = n_max_ - ul;
  BoundedReal s;
  for (unsigned m = 0; m <= M; ++m) s += density_A(l, static_cast<int>(m), Method::xi);
  return s.widened(factorial_bound(p1_upper_, ul) * poisson_tail(p1_upper_, M));
}

BoundedReal DensityEngine::density_B(const SubsetSpec& I, const SubsetSpec& J) const {
  I.validate();
  J.validate();
  if (I.k != k_ || J.k != k_) throw std::invalid_argument("subset k differs from engine k");
  for (const auto& x : I.elements)
    for (const auto& y : J.elements)
      if (x == y) throw std::invalid_argument("I and J overlap in " + x.to_string());
  // (1/lambda) / (1 - 2/lambda) = 1 / (lambda - 2) for every lambda in I u J.
  BoundedReal v = C();
  for (const auto* set : {&I, &J})
    for (const auto& e : set->elements) v /= dirichlet::lambda_value(e) - BoundedReal::exact(2);
  return v;
}

BoundedReal DensityEngine::partial_normalization(unsigned n_limit, Method route) const {
  const unsigned N = std::min(n_limit, n_max_);
  BoundedReal s;
  for (unsigned n = 0; n <= N; ++n) {
    if (route == Method::inversion)
      s += shiu_[n];
    else
      s += coeffs(route)[n].scaled(pow(Real(2), n));
  }
  return s;
}

BoundedReal DensityEngine::normalization_check(Method route) const {
  // a_n 2^n <= (2P)^n/n! and d_{k,n} <= P^n/n!
  const Real x = route == Method::inversion ? p1_upper_ : 2 * p1_upper_;
  return partial_normalization(n_max_, route).widened(poisson_tail(x, n_max_));
}

BoundedReal DensityEngine::eval_F(const Real& z) const {
  const Real w = z - 2;
  const Real lambda_min = pow(Real(2), Real(k_ + 1) / k_);
  const Real eps = pow10_neg(config_.tail_digits);
  if (abs(w) < lambda_min) {
    // log F = sum_i (-1)^{i-1} w^i P(i) / i with P(i) <= P(1) lambda_min^{1-i}.
    const Real q = abs(w) / lambda_min;
    auto rest = [&](unsigned I) { return p1_upper_ * lambda_min * pow(q, I + 1) / ((I + 1) * (1 - q)); };
    unsigned I = 1;
    while (I < ps_.max_order() && rest(I) > eps) ++I;
    if (rest(I) <= eps || w == 0) {
      BoundedReal s;
      Real wi = 1;
      for (unsigned i = 1; i <= I && w != 0; ++i) {
        wi *= w;
        const BoundedReal power(wi, abs(wi) * arithmetic_eps() * i);
        s += (power * ps_(i)).scaled(sign(i - 1) / i);
      }
      return exp(w == 0 ? s : s.widened(rest(I)));
    }
  }
  BoundedReal s;
  Real zn = 1;
  for (unsigned n = 0; n <= n_max_; ++n) {
    s += coeffs_xi_[n] * BoundedReal(zn, abs(zn) * arithmetic_eps() * n);
    zn *= z;
  }
  return s.widened(poisson_tail(p1_upper_ * abs(z), n_max_));
}

DensityTable DensityEngine::table(unsigned L, Method method) const {
  if (2 * L > n_max_) throw std::out_of_range("table size beyond computed coefficients");
  DensityTable t{k_, L, method, {}};
  t.entries.reserve((L + 1) * (L + 1));
  for (unsigned l = 0; l <= L; ++l)
    for (unsigned m = 0; m <= L; ++m)
      t.entries.push_back(density_A(static_cast<int>(l), static_cast<int>(m), method));
  return t;
}

const DensityEngine& default_engine(unsigned k) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<DensityEngine>> engines;
  std::lock_guard lock(mu);
  auto& slot = engines[k];
  if (!slot) slot = std::make_unique<DensityEngine>(k);
  return *slot;
}

}  // namespace kfull::density
