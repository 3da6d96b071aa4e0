#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "support/random_poly.hpp"
#include "tautring/binomial.hpp"
#include "tautring/expr.hpp"
#include "tautring/ideals.hpp"
#include "tautring/operators.hpp"

using namespace tautring;

namespace {

TautPoly P(const char* s) { return parse_expr(s); }
TautPoly p(int i) { return Generator::p(i); }
TautPoly q(int i) { return Generator::q(i); }

}  // namespace

TEST_CASE("D on the worked examples") {
  const RingContext ctx = RingContext::for_genus(5);
  CHECK(apply_D(ctx, P("p2*p5")) == P("21*p6 - q1*p5 - q4*p2"));
  CHECK(format_expr(apply_D(ctx, P("p2*p5"))) == "21*p6 - p5*q1 - p2*q4");
  CHECK(apply_D(ctx, P("p1")) == TautPoly(Rational(-5)));
  CHECK(apply_D(ctx, P("p2^2")) == P("6*p3 - 2*q1*p2"));
  CHECK(apply_D(ctx, TautPoly(Rational(3))).is_zero());
  CHECK(apply_D(ctx, P("q1*q2")).is_zero());
}

TEST_CASE("D(p2 p_m) for m = 2..10") {
  const RingContext ctx = RingContext::for_genus(6);
  for (int m = 2; m <= 10; ++m) {
    const TautPoly expected = Rational(binom(m + 2, 2)) * p(m + 1) - q(1) * p(m) - q(m - 1) * p(2);
    INFO("m=" << m);
    CHECK(apply_D(ctx, p(2) * p(m)) == expected);
  }
}

TEST_CASE("D(q1 p_k) + q1 q_(k-1) = q_k") {
  for (int g = 2; g <= 6; ++g) {
    const RingContext ctx = RingContext::for_genus(g);
    for (int k = 2; k <= 10; ++k) CHECK(apply_D(ctx, q(1) * p(k)) + q(1) * q(k - 1) == q(k));
    CHECK(apply_D(ctx, q(1) * p(1)) == Rational(1 - g) * q(1));
  }
}

TEST_CASE("D(q1^m p1^n) = n(m+n-g-1) q1^m p1^(n-1)") {
  for (int g = 2; g <= 6; ++g) {
    const RingContext ctx = RingContext::for_genus(g);
    for (int m = 0; m <= 8; ++m) {
      for (int n = 0; m + n <= 8; ++n) {
        const TautPoly f = pow(q(1), m) * pow(p(1), n);
        const TautPoly expected =
            n == 0 ? TautPoly() : Rational(n * (m + n - g - 1)) * pow(q(1), m) * pow(p(1), n - 1);
        CHECK(apply_D(ctx, f) == expected);
      }
    }
  }
}

TEST_CASE("D agrees with the literal double sum of partial derivatives") {
  std::mt19937 rng(7);
  for (int g = 2; g <= 6; ++g) {
    const RingContext ctx = RingContext::for_genus(g);
    for (int trial = 0; trial < 40; ++trial) {
      const TautPoly f = testing::random_poly(rng, {5, 3, 4, 4});
      CHECK(apply_D(ctx, f) == oracle::operator_D(f, ctx.q0, 6));
    }
  }
}

TEST_CASE("D is linear") {
  std::mt19937 rng(17);
  const RingContext ctx = RingContext::for_genus(4);
  for (int trial = 0; trial < 100; ++trial) {
    const TautPoly f = testing::random_poly(rng);
    const TautPoly h = testing::random_poly(rng);
    const Rational a = testing::random_rational(rng);
    const Rational b = testing::random_rational(rng);
    CHECK(apply_D(ctx, a * f + b * h) == a * apply_D(ctx, f) + b * apply_D(ctx, h));
  }
}

TEST_CASE("D is homogeneous of bidegree (-1, 0) on every monomial of codim <= 8") {
  for (int g = 2; g <= 6; ++g) {
    const RingContext ctx{g, 8, Rational(g)};
    for (int c = 1; c <= 8; ++c) {
      for (const Monomial& m : monomial_basis(ctx, c)) {
        const TautPoly out = apply_D(ctx, TautPoly(m));
        if (out.is_zero()) continue;
        const BiDegree in = m.bidegree();
        CHECK(out.bidegree() == BiDegree{in.codim - 1, in.weight});
      }
    }
  }
}

TEST_CASE("pullback and pushforward examples") {
  const RingContext ctx = RingContext::for_genus(4);
  CHECK(pullback(ctx, -2, q(1)) == Rational(-2) * q(1));
  for (int i = 1; i <= 6; ++i) {
    const Rational sign = (i + 1) % 2 == 0 ? 1 : -1;
    CHECK(pullback(ctx, -1, p(i)) == sign * p(i));
    const Rational sign2 = (i - 1) % 2 == 0 ? 1 : -1;
    CHECK(pushforward(ctx, -1, p(i)) == sign2 * p(i));
  }
  const TautPoly f = P("p1 + p2*q1 - 3*q2");
  CHECK(pullback(ctx, 1, f) == f);
  CHECK(pullback(ctx, 0, P("7 + p2")) == P("7"));
  CHECK(pushforward(ctx, 0, P("p2 + q1")).is_zero());
  // codim above g: push-forward exponent is negative
  CHECK(pushforward(ctx, 2, pow(p(1), 6)) == Rational(Integer(1), Integer(16)) * pow(p(1), 6));
  CHECK_THROWS_AS(pushforward(ctx, 0, pow(p(1), 6)), std::domain_error);
}

TEST_CASE("weight actions compose") {
  std::mt19937 rng(23);
  for (int g = 2; g <= 5; ++g) {
    const RingContext ctx = RingContext::for_genus(g);
    for (int trial = 0; trial < 40; ++trial) {
      const TautPoly f = testing::random_poly(rng, {3, 2, 3, 4});
      const TautPoly h = testing::random_poly(rng, {3, 2, 3, 4});
      for (long k : {-3L, -1L, 2L, 3L}) {
        CHECK(pullback(ctx, k, f * h) == pullback(ctx, k, f) * pullback(ctx, k, h));
        CHECK(pullback(ctx, k, f + h) == pullback(ctx, k, f) + pullback(ctx, k, h));
        for (long l : {-2L, 2L, 5L}) CHECK(pullback(ctx, k * l, f) == pullback(ctx, k, pullback(ctx, l, f)));
      }
      const Rational k2g = pow(Rational(2), 2 * g);
      for (const BiDegree d : f.bidegrees()) {
        const TautPoly piece = graded_component(f, d);
        CHECK(pushforward(ctx, 2, pullback(ctx, 2, piece)) == k2g * piece);
        CHECK(pullback(ctx, 2, pushforward(ctx, 2, piece)) == k2g * piece);
      }
    }
  }
}

TEST_CASE("series_exp") {
  CHECK(series_exp(P("2*q1"), {3}) == P("1 + 2*q1 + 2*q1^2 + 4/3*q1^3"));
  CHECK(series_exp(TautPoly(), {5}) == TautPoly(Rational(1)));
  CHECK_THROWS_AS(series_exp(P("1 + p1"), {3}), std::invalid_argument);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    TautPoly f = testing::random_poly(rng, {3, 2, 2, 3});
    f = f - graded_component(f, {0, 0});
    CHECK(truncated_product(series_exp(f, {5}), series_exp(-f, {5}), 5) == TautPoly(Rational(1)));
  }
}
