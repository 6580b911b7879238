#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/constants/constants.hpp>
#include <cmath>

#include "kfull/core_arith.hpp"
#include "kfull/lambda_set.hpp"
#include "kfull/power_sums.hpp"
#include "kfull/zeta.hpp"

using namespace kfull;
using namespace kfull::dirichlet;

namespace {

// Frozen reference values computed independently with mpmath at 160 digits
// (closed form for k = 2, Euler product with prime zeta tails for k = 3).
const Real kZeta3("1.2020569031595942853997381615114499907649862923405");
const Real kZeta2("1.6449340668482264364724151666460251892189499012068");
const Real kZeta15("2.6123753486854883433485675679240716305708006524001");
const Real kC2("2.1732543125195541382370898404382237229067113291317");
const Real kZ43Z53("6.6466740225257516597933852486679396937270540794245");
const Real kPz2("0.45224742004106549850654336483224793417323134323989");
const Real kPz10("0.0009936035744369802178558507001477394163018725452852");
const Real kPz43("1.1281023141279018207397810754629859666847700646422");

const char* const kP2[] = {
    "1.17325431251955413823708984043822372290671132913166085674917575896705966173",
    "0.18156494901025691256939973416045426054702326076868261028304314887720542111",
    "0.0525934895482646848881100326414705913434705882408726448787806584766046307712",
    "0.0170927691304992766432721330979099204922190794941011346646517938189353358342",
    "0.00579596201196013885802241486261275739693635601790930391740530895518286879104",
    "0.00200456788079374398903554270148297262011975808467877963928687643056400356373",
    "0.000700365374722017404107574643847577882390049963175246990772325227137470069691",
    "0.000246026930453777256968562684541443381518955824964582587021243895983924150877",
    "0.0000866792761047260153505862707437952384046238045405520743190875141392190057777",
    "0.0000305873049511012776987990816614129422950109254598857182522316527376343274502",
};

const char* const kP3[] = {
    "3.65926612250065694127743110891362586213054336728325653847576924015303418087",
    "0.398105028048410820538154908534309355923010951798450299929746921048659074997",
    "0.114576315025302288937661068255265094999510544980197132256725528117743753212",
    "0.0385373195798538272135107784854937924725360524280279446223046352489146614961",
    "0.0137448928486802284206238123812944490741183588935235745915186272224092985584",
    "0.00505585022863197085195559916528685836435290035882929383247001921362606825837",
    "0.00189612534535890094915782893951038698558625431771866577630015181636938266168",
    "0.000720702146129669997140834044113081660416510665432844155535746727501702308846",
};

}  // namespace

TEST_CASE("enumerate_lambda small bounds") {
  auto l2 = enumerate_lambda(2, 30);
  REQUIRE(l2.size() == 5);
  const u64 b2[] = {2, 3, 5, 6, 7};
  const double v2[] = {2.82843, 5.19615, 11.18034, 14.69694, 18.52026};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(l2[i].b() == std::vector<u64>{b2[i]});
    CHECK(lambda_value(l2[i]).to_double() == doctest::Approx(v2[i]).epsilon(1e-6));
  }
  CHECK(enumerate_lambda(2, 2.5).empty());

  auto l3 = enumerate_lambda(3, 7);
  REQUIRE(l3.size() == 4);
  const std::vector<std::vector<u64>> b3{{2, 1}, {1, 2}, {3, 1}, {1, 3}};
  const double v3[] = {2.51984, 3.17480, 4.32675, 6.24025};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(l3[i].b() == b3[i]);
    CHECK(lambda_value(l3[i]).to_double() == doctest::Approx(v3[i]).epsilon(1e-6));
  }
  CHECK_THROWS_AS(enumerate_lambda(2, 1.5), std::invalid_argument);
}

TEST_CASE("enumerate_lambda matches brute force over tuples") {
  for (unsigned k : {2u, 3u, 4u}) {
    const double bound = 60;
    std::size_t expected = 0;
    const double limit = std::pow(bound, k);
    // tuples with squarefree product >= 2 and lambda^k <= bound^k
    std::vector<u64> b(k - 1, 1);
    auto rec = [&](auto&& self, unsigned j, double power) -> void {
      if (j == k - 1) {
        u64 prod = 1;
        for (u64 x : b) prod *= x;
        if (prod >= 2 && arith::is_squarefree(prod)) ++expected;
        return;
      }
      for (u64 x = 1; power * std::pow(double(x), k + j + 1) <= limit; ++x) {
        b[j] = x;
        self(self, j + 1, power * std::pow(double(x), k + j + 1));
      }
    };
    rec(rec, 0, 1.0);
    const auto got = enumerate_lambda(k, bound);
    CHECK(got.size() == expected);
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].kth_power() < got[i].kth_power());
  }
}

TEST_CASE("LambdaElement validation and parsing") {
  CHECK_THROWS_AS(LambdaElement(2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(LambdaElement(2, {4}), std::invalid_argument);
  CHECK_THROWS_AS(LambdaElement(3, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(LambdaElement(3, {2}), std::invalid_argument);
  CHECK_THROWS_AS(LambdaElement(3, {6, 3}), std::invalid_argument);
  CHECK(LambdaElement::parse(3, "2") == LambdaElement(3, {2, 1}));
  CHECK(LambdaElement::parse(3, "1,3").to_string() == "1,3");
  CHECK_THROWS_AS(LambdaElement::parse(2, "x"), std::invalid_argument);
  CHECK(LambdaElement(2, {2}).kth_power() == 8);
  CHECK(LambdaElement(3, {2, 3}).kth_power() == 16 * 243);
}

TEST_CASE("lambda_value") {
  const auto v = lambda_value(LambdaElement(2, {2}));
  CHECK(v.contains(sqrt(Real(8))));
  CHECK(v.radius() <= v.value() * Real("1e-60"));
  CHECK(lambda_value(LambdaElement(3, {2, 1})).contains(cbrt(Real(16))));
  CHECK_THROWS_AS(lambda_value(LambdaElement(2, {2}), 10), std::invalid_argument);
  const auto inv = lambda_inverse_power(LambdaElement(2, {3}), 4);
  CHECK(inv.contains(Real(1) / 729));
}

TEST_CASE("zeta values") {
  CHECK(zeta(Real(3)).contains(kZeta3));
  CHECK(zeta(Real(2)).contains(kZeta2));
  const Real pi = boost::math::constants::pi<Real>();
  CHECK(zeta(Real(2)).contains(pi * pi / 6));
  CHECK(zeta(Real(1.5)).contains(kZeta15));
  const auto c2 = zeta(Real(1.5)) / zeta(Real(3));
  CHECK(c2.contains(kC2));
  CHECK(c2.to_double() == doctest::Approx(2.173).epsilon(1e-3));
  for (double s : {1.1, 2.5, 7.0, 40.0}) {
    const auto z = zeta(Real(s), 30);
    CHECK(z.radius() <= z.value() * Real("1e-30"));
  }
  CHECK_THROWS_AS(zeta(Real(1)), std::domain_error);
}

TEST_CASE("prime zeta") {
  CHECK(prime_zeta(Real(2)).contains(kPz2));
  CHECK(prime_zeta(Real(10)).contains(kPz10));
  CHECK(prime_zeta(Real(4) / 3).contains(kPz43));
  // dominated by 2^-s for large s
  const auto big = prime_zeta(Real(60));
  CHECK(abs(big.value() / pow(Real(2), -60) - 1) < Real("1e-10"));
}

TEST_CASE("power_sum_euler against frozen values") {
  for (unsigned m = 1; m <= 10; ++m) CHECK(power_sum_euler(2, m).contains(Real(kP2[m - 1])));
  for (unsigned m = 1; m <= 8; ++m) CHECK(power_sum_euler(3, m).contains(Real(kP3[m - 1])));
  CHECK(power_sum_euler(2, 1).contains(kC2 - 1));
}

TEST_CASE("power_sum_euler matches the closed form for k = 2") {
  for (unsigned m = 1; m <= 40; m += 3) {
    const auto closed = zeta(Real(3 * m) / 2) / zeta(Real(3 * m)) - BoundedReal::exact(1);
    const auto e = power_sum_euler(2, m);
    CHECK(abs(closed.value() - e.value()) <= closed.radius() + e.radius());
    CHECK(e.radius() <= e.value() * Real("1e-40"));
  }
}

TEST_CASE("power_sum_euler keeps relative precision for large m") {
  for (unsigned k : {2u, 3u, 4u}) {
    const auto p = power_sum_euler(k, 150);
    const Real lead = pow(Real(2), -Real(150) * (k + 1) / k);  // the smallest lambda dominates
    CHECK(p.value() > lead);
    CHECK(p.value() < lead * Real(1.0001));
    CHECK(p.radius() <= p.value() * Real("1e-40"));
  }
}

TEST_CASE("power_sum_euler is independent of the prime cutoff") {
  for (unsigned m : {1u, 2u, 5u}) {
    const auto a = power_sum_euler(3, m, 40, 50);
    const auto b = power_sum_euler(3, m, 40, 400);
    CHECK(abs(a.value() - b.value()) <= a.radius() + b.radius());
  }
  CHECK_THROWS_AS(power_sum_euler(2, 1, 40, 1), std::invalid_argument);
}

TEST_CASE("tail_bound") {
  CHECK(tail_bound(2, 1, 10000) <= 0.02);
  // The squarefree tail sum_{b > 10^4} mu^2(b) b^{-3} is about 3e-9, so a
  // bound of 1.7e-12 would be false; the integral bound gives 5e-9.
  const double t = tail_bound(2, 2, 10000);
  CHECK(t <= 5e-9);
  double true_tail = 0;
  for (u64 b = 10001; b <= 2'000'000; ++b)
    if (arith::is_squarefree(b)) true_tail += std::pow(double(b), -3.0);
  CHECK(t >= true_tail);
  double prev = 1e300;
  for (u64 B : {10ULL, 100ULL, 1000ULL, 100000ULL, 10000000ULL}) {
    const double v = tail_bound(3, 2, B);
    CHECK(v < prev);
    CHECK(v >= 0);
    prev = v;
  }
  CHECK(tail_bound(2, 1, 1'000'000'000'000ULL) < 1e-5);
}

TEST_CASE("power_sum_direct") {
  const auto p = power_sum_direct(2, 1, 1'000'000);
  CHECK(p.radius() <= Real(2.1e-3));
  CHECK(p.contains(Real(kP2[0])));
  CHECK(p.to_double() == doctest::Approx(1.1733).epsilon(2.1e-3));

  const auto d = power_sum_direct(2, 3, 100);
  const auto e = power_sum_euler(2, 3);
  CHECK(abs(d.value() - e.value()) <= d.radius() + e.radius());

  const auto p3 = power_sum_direct(3, 1, 10000);
  CHECK(p3.value() < kZ43Z53 - 1);
  CHECK(p3.contains(Real(kP3[0])));

  for (unsigned k : {2u, 3u}) {
    const auto all = power_sums_direct(k, 8, 2000);
    for (unsigned m = 1; m <= 8; ++m) {
      const auto eu = power_sum_euler(k, m);
      CHECK(abs(all[m - 1].value() - eu.value()) <= all[m - 1].radius() + eu.radius());
    }
  }
  CHECK_THROWS_AS(power_sum_direct(3, 1, 1'000'000), std::length_error);
  CHECK_THROWS_AS(power_sum_direct(1, 1, 100), std::invalid_argument);
}
