#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "origami/errors.hpp"
#include "origami/sampling.hpp"
#include "origami/series.hpp"

using namespace origami;
using namespace test;

namespace {

PointAssignment t_point(const Rational& a, const Rational& b, const Ranks& r) {
  PointAssignment p{{t1, a}, {t2, b}};
  const long primes[] = {11, 13, 17, 19, 23, 29};
  int k = 0;
  for (const Slot& s : slots(r)) {
    p.set(s.weight(), q(primes[k], 3 + k));
    ++k;
  }
  return p;
}

Rational binomial(long n, long k) {
  Rational out = 1;
  for (long j = 1; j <= k; ++j) out = out * Rational(n - k + j) / Rational(j);
  return out;
}

}  // namespace

TEST_CASE("q-series arithmetic") {
  QSeries<Rational> a(3);
  a[1] = 1;  // q
  QSeries<Rational> b = QSeries<Rational>::one(3);
  b += a;  // 1 + q
  const QSeries<Rational> sq = b * b;
  CHECK(sq[0] == 1);
  CHECK(sq[1] == 2);
  CHECK(sq[2] == 1);
  CHECK(sq[3] == 0);
  CHECK(b.rescale_q(3)[1] == 3);
  CHECK(a.substitute_power(2)[2] == 1);
  CHECK(a.substitute_power(2)[1] == 0);
  CHECK_THROWS(b.exp());
  const QSeries<Rational> e = a.exp();  // exp(q)
  CHECK(e[3] == q(1, 6));
}

TEST_CASE("plethystic exponential") {
  const int N = 7;
  const auto one = plethystic_exp_linear<Rational>([](int) { return Rational(1); }, N);
  const auto two = plethystic_exp_linear<Rational>([](int) { return Rational(2); }, N);
  const auto zero = plethystic_exp_linear<Rational>([](int) { return Rational(0); }, N);
  for (int n = 0; n <= N; ++n) {
    CHECK(one[n] == 1);
    CHECK(two[n] == n + 1);
    CHECK(zero[n] == (n == 0 ? 1 : 0));
  }
  // Exp(q x) = 1/(1 - q x) for a single weight x
  const Rational x = q(3, 5);
  const auto geo = plethystic_exp_linear<Rational>([&](int k) { return pow(x, k); }, N);
  for (int n = 0; n <= N; ++n) CHECK(geo[n] == pow(x, n));
}

TEST_CASE("binomial series") {
  const auto c1 = binom_series(1, 5), c2 = binom_series(2, 5), half = binom_series(q(1, 2), 5);
  for (int n = 0; n <= 5; ++n) {
    CHECK(c1[n] == 1);
    CHECK(c2[n] == n + 1);
  }
  CHECK(half[2] == q(3, 8));
  const auto neg = binom_series(-3, 5);  // (1 - q)^3
  CHECK(neg[1] == -3);
  CHECK(neg[3] == -1);
  CHECK(neg[4] == 0);
}

TEST_CASE("localized series") {
  const Ranks r10(1, 0), r11(1, 1);
  const auto p = t_point(2, 3, r11);
  const auto z = z_localized(r11, p, 3);
  CHECK(z[0] == 1);
  // (1 - t1 t2)^2 / ((1 - t1)(1 - t2)); the cross blocks make this differ
  // from the sum 5/2 + 5 of the two rank-one contributions
  CHECK(z[1] == q(25, 2));
  const auto z10 = z_localized(r10, t_point(2, 3, r10), 2);
  CHECK(z10[1] == q(5, 2));
  // single fixed point of size 2 for rank (1,0): product formula by hand
  CHECK(z10[2] == q(85, 16));
  CHECK_THROWS_AS(z_localized(r10, PointAssignment{{t1, q(2)}, {t2, q(1)}, {w(1, 1), q(3)}}, 1), PoleAtPoint);
}

TEST_CASE("closed series") {
  const Ranks r11(1, 1);
  const auto z = z_closed(r11, t_point(2, 3, r11), 3);
  CHECK(z[0] == 1);
  CHECK(z[1] == q(25, 2));  // (1 - 6)^2 / ((1 - 2)(1 - 3))
  const auto zero_order = z_closed(r11, t_point(2, 3, r11), 0);
  CHECK(zero_order.order() == 0);
  CHECK(zero_order[0] == 1);
}

TEST_CASE("rank one product") {
  const Ranks r10(1, 0);
  const auto p = t_point(2, 3, r10);
  const auto prod = z_rank1_product(p, 8);
  CHECK(prod[0] == 1);
  CHECK(prod[1] == q(5, 2));
  CHECK(prod[2] == q(85, 16));
  const auto closed = z_closed(r10, p, 8);
  for (int n = 0; n <= 8; ++n) CHECK(prod[n] == closed[n]);
}

TEST_CASE("localized equals closed at seeded points") {
  for (auto [r1, r2] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
    const Ranks r(r1, r2);
    PointSampler sampler(r1 * 10 + r2);
    for (int k = 0; k < 3; ++k) {
      auto [a, b] = sampler.with_retries(torus_variables(r), [&](const PointAssignment& p) {
        return std::pair{z_localized(r, p, 4), z_closed(r, p, 4)};
      });
      CHECK(a == b);
    }
  }
}

TEST_CASE("framing independence and t1 <-> t2 symmetry") {
  const Ranks r(2, 1), mirror(1, 2);
  auto base = t_point(q(7, 3), q(4, 5), r);
  const auto z = z_localized(r, base, 4);
  for (int k = 2; k < 5; ++k) {
    PointAssignment p = base;
    p.set(w(1, 1), q(k, 11));
    p.set(w(2, 1), q(3 * k + 1, 2));
    CHECK(z_localized(r, p, 4) == z);
  }
  PointAssignment swapped{{t1, base.at(t2)}, {t2, base.at(t1)}};
  swapped.set(w(1, 1), base.at(w(2, 1)));
  swapped.set(w(2, 1), base.at(w(1, 1)));
  swapped.set(w(2, 2), base.at(w(1, 2)));
  CHECK(z_localized(mirror, swapped, 4) == z);
}

TEST_CASE("factorization") {
  const Ranks r(2, 2);
  const auto p = t_point(q(3, 2), q(5, 7), r);
  CHECK(z_localized(r, p, 4) == z_factorized(r, p, 4));
}

TEST_CASE("twist") {
  CHECK(no_twist(FixedPoint(Ranks(2, 1), {2, 1, 0})) == mono({{u1, -6}, {u2, -3}}));
  CHECK(no_twist(FixedPoint(Ranks(1, 0), {1})) == mono(u1, -1));
  CHECK(no_twist(FixedPoint(Ranks(1, 1), {0, 0})).is_trivial());
  const PointAssignment up{{u1, q(2)}, {u2, q(3)}, {w(1, 1), q(5)}};
  const auto loc = zhat_localized(Ranks(1, 0), up, 3);
  const auto closed = zhat_closed(Ranks(1, 0), up, 3);
  CHECK(loc[0] == 1);
  CHECK(loc[1] == q(35, 16));
  CHECK(loc == closed);
  // twisted coefficient = untwisted coefficient at t = u^2 times (u1^r1 u2^r2)^-n
  const Ranks r(1, 1);
  PointAssignment uw{{u1, q(2, 3)}, {u2, q(5, 2)}, {w(1, 1), q(7)}, {w(2, 1), q(3, 4)}};
  PointAssignment tw = uw;
  tw.set(t1, q(4, 9));
  tw.set(t2, q(25, 4));
  const auto hat = zhat_localized(r, uw, 3);
  const auto plain = z_localized(r, tw, 3);
  for (int n = 0; n <= 3; ++n) CHECK(hat[n] == plain[n] * pow(q(2, 3) * q(5, 2), -n));
  CHECK(hat == zhat_closed(r, uw, 3));
}

TEST_CASE("cohomological series") {
  const PointAssignment s{{t1, q(3)}, {t2, q(5)}, {w(1, 1), q(7)}, {w(2, 1), q(11, 2)}};
  const Rational s1 = 3, s2 = 5;
  CHECK(cohomological_exponent(Ranks(1, 1), s) == (s1 + s2) * (s1 + s2) / (s1 * s2));
  const auto loc11 = zcoh_localized(Ranks(1, 1), s, 3);
  CHECK(loc11[0] == 1);
  CHECK(loc11[1] == (s1 + s2) * (s1 + s2) / (s1 * s2));
  CHECK(loc11 == zcoh_closed(Ranks(1, 1), s, 3));
  const auto loc10 = zcoh_localized(Ranks(1, 0), s, 3);
  CHECK(loc10[1] == (s1 + s2) / s2);
  CHECK(loc10 == zcoh_closed(Ranks(1, 0), s, 3));
}

TEST_CASE("Euler characteristic series") {
  for (int r = 1; r <= 4; ++r) {
    const auto e = euler_char_series(Ranks(r, 0), 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(e[n] == binomial(n + r - 1, r - 1));
      CHECK(e[n] == Rational(static_cast<long>(fixed_points(Ranks(r, 0), n).size())));
    }
  }
  CHECK(euler_char_series(Ranks(2, 1), 3)[3] == 10);
}

TEST_CASE("CY vanishing certificates") {
  const Ranks r(1, 1);
  const PointAssignment rest{{t2, q(3)}, {w(1, 1), q(5)}, {w(2, 1), q(7, 2)}};
  const UnivarRatFun c1 = cy_vanishing_certificate(r, 1, rest);
  CHECK_FALSE(c1.has_pole_at(q(1, 3)));
  CHECK(c1(q(1, 3)) == 0);
  // at t1 = 2 it is the q coefficient of the series at (2, 3)
  CHECK(c1(2) == q(25, 2));
  PointAssignment full = rest;
  full.set(t1, q(7, 5));
  CHECK(c1(q(7, 5)) == z_localized(r, full, 1)[1]);
  CHECK(cy_vanishing_certificate(r, 0, rest) == UnivarRatFun(1));
  CHECK_THROWS_AS(cy_vanishing_certificate(r, -1, rest), PreconditionError);

  auto [c2, point] = cy_vanishing_certificate(Ranks(2, 1), 2, 42);
  const Rational x0 = 1 / point.at(t2);
  CHECK_FALSE(c2.has_pole_at(x0));
  CHECK(c2(x0) == 0);
  CHECK_FALSE(c2.is_zero());
  auto [again, point2] = cy_vanishing_certificate(Ranks(2, 1), 2, 42);
  CHECK(again == c2);
  CHECK(point2.values() == point.values());
}

TEST_CASE("sampler determinism and range") {
  PointSampler a(7), b(7), c(8);
  bool differs = false;
  for (int k = 0; k < 200; ++k) {
    const Rational x = a.next_value();
    CHECK(x == b.next_value());
    differs = differs || x != c.next_value();
    CHECK(x > 0);
    CHECK(x != 1);
    CHECK(x.get_num() <= 97);
    CHECK(x.get_den() <= 97);
  }
  CHECK(differs);
  PointSampler s(1);
  int calls = 0;
  CHECK_THROWS_AS(s.with_retries(std::vector<Var>{t1},
                                 [&](const PointAssignment&) -> int {
                                   ++calls;
                                   throw PoleAtPoint("always");
                                 }),
                  EvaluationExhausted);
  CHECK(calls == PointSampler::kMaxRetries + 1);
}
