#include <doctest.h>

#include <random>

#include "cdelab/errors.hpp"
#include "cdelab/parse.hpp"
#include "cdelab/roots.hpp"
#include "cdelab/series.hpp"
#include "support/random_scalars.hpp"

using namespace cdelab;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
  for (int n = 1; n <= 60; ++n) {
    if (euler_phi(n) > kMaxCyclotomicDegree) continue;
    CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
  }
}

TEST_CASE("unsupported orders are rejected") {
  CHECK_THROWS_AS(require_supported_order(0), InputError);
  CHECK_THROWS_AS(require_supported_order(19), InputError);
  CHECK_NOTHROW(require_supported_order(34));
  CHECK_NOTHROW(require_supported_order(60));
  CHECK_THROWS_AS(require_supported_order(61), InputError);
}

TEST_CASE("zeta_3 satisfies z^2 + z + 1 = 0") {
  const Cyclo z = Cyclo::zeta(3);
  CHECK((z * z + z + Cyclo(1)).is_zero());
  CHECK(z.pow(3).is_one());
  CHECK(z.inverse() == z * z);
  CHECK(z.galois(2) == z * z);
  CHECK(z.order() == 3);
  CHECK(z.degree() == 2);
}

TEST_CASE("orders 1 and 2 normalize to the rationals") {
  CHECK(Cyclo::zeta(1).is_one());
  CHECK(Cyclo::zeta(2) == Cyclo(-1));
  CHECK(Cyclo::zeta(2).order() == 1);
}

TEST_CASE("mixed orders embed into a common field") {
  const Cyclo i = Cyclo::zeta(4);
  const Cyclo w = Cyclo::zeta(3);
  const Cyclo s = i * w;
  CHECK(s.order() == 12);
  CHECK(s.pow(12).is_one());
  CHECK(!s.pow(6).is_one());
  CHECK((i * i) == Cyclo(-1));
  CHECK(Cyclo::zeta(12).pow(4) == w);
}

TEST_CASE("cyclotomic field axioms on random samples") {
  std::mt19937 rng(11);
  for (int order : {3, 4, 5, 7, 8, 12, 15}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Cyclo a = testing::random_cyclo(rng, order);
      const Cyclo b = testing::random_cyclo(rng, order);
      const Cyclo c = testing::random_cyclo(rng, order);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(a - a == Cyclo());
    }
  }
}

TEST_CASE("complex evaluation is a ring homomorphism") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Cyclo a = testing::random_cyclo(rng, 7);
    const Cyclo b = testing::random_cyclo(rng, 7);
    const auto lhs = (a * b).evaluate(3);
    const auto rhs = a.evaluate(3) * b.evaluate(3);
    CHECK(std::abs(lhs - rhs) < 1e-9L);
  }
}

TEST_CASE("parse_scalar examples") {
  const RatFunc q = parse_scalar("(z + t)", 3);
  CHECK(q.numerator() == Poly(std::vector<Cyclo>{Cyclo::zeta(3), Cyclo(1)}));
  CHECK(q.denominator().is_one());
  CHECK(q.is_integral());

  const RatFunc g = parse_scalar("1/(1-t)", 1);
  CHECK(g.is_integral());
  CHECK(g.reduce_at_zero().is_one());

  const RatFunc inv_t = parse_scalar("1/t", 1);
  CHECK(!inv_t.is_integral());
  CHECK(inv_t.valuation() == -1);

  CHECK(parse_scalar("(-1 + z^2)/(1 - 2*t)", 3).reduce_at_zero() == Cyclo::zeta(3).pow(2) - Cyclo(1));
  CHECK(parse_scalar("-t^2", 1) == -(RatFunc::t() * RatFunc::t()));
  CHECK(parse_scalar("t^-1", 1) == inv_t);
  CHECK(parse_scalar("2^(-2)", 1) == RatFunc(Rational(1, 4)));
  CHECK(parse_scalar("  3 * ( t + 1 ) ", 1) == RatFunc(Poly(std::vector<Cyclo>{3, 3})));
  CHECK(parse_scalar("z", 2) == RatFunc(-1));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_scalar("1 + * t", 1);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_scalar("(1 + t", 1), ParseError);
  CHECK_THROWS_AS(parse_scalar("x", 1), ParseError);
  CHECK_THROWS_AS(parse_scalar("", 1), ParseError);
  CHECK_THROWS_AS(parse_scalar("t^", 1), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/(t - t)", 1), DivisionByZeroError);
  CHECK_THROWS_AS(parse_scalar("0^-1", 1), DivisionByZeroError);
}

TEST_CASE("reduce_at_zero examples") {
  CHECK(parse_scalar("(1+t)/(1-t)", 1).reduce_at_zero().is_one());
  CHECK(parse_scalar("z + t", 3).reduce_at_zero() == Cyclo::zeta(3));
  CHECK(parse_scalar("t/(t^2+1)", 1).reduce_at_zero().is_zero());
  CHECK_THROWS_AS(parse_scalar("1/t", 1).reduce_at_zero(), NonIntegralError);
}

TEST_CASE("valuation examples") {
  CHECK(parse_scalar("t^2/(1-t)", 1).valuation() == 2);
  CHECK(RatFunc().valuation() == kInfiniteValuation);
  // (t^2 + t)/t^3 = (t + 1)/t^2
  CHECK(parse_scalar("(t^2+t)/t^3", 1).valuation() == -2);
  CHECK(parse_scalar("(t^2+t)/t^3", 1) == parse_scalar("(t+1)/t^2", 1));
}

TEST_CASE("canonical form") {
  const RatFunc x = parse_scalar("(2*t^2 - 2)/(4*t - 4)", 1);
  CHECK(x == parse_scalar("(t + 1)/2", 1));
  CHECK(x.denominator().is_one());
  const RatFunc y = parse_scalar("(t+1)/(3*t+2)", 3);
  CHECK(y.denominator().leading().is_one());
}

TEST_CASE("reduction at zero is a ring homomorphism on R") {
  std::mt19937 rng(2024);
  int samples = 0;
  for (int order : {1, 3, 4}) {
    for (int trial = 0; trial < 400; ++trial) {
      const RatFunc a = testing::random_ratfunc(rng, order, true);
      const RatFunc b = testing::random_ratfunc(rng, order, true);
      REQUIRE(a.is_integral());
      CHECK((a + b).reduce_at_zero() == a.reduce_at_zero() + b.reduce_at_zero());
      CHECK((a * b).reduce_at_zero() == a.reduce_at_zero() * b.reduce_at_zero());
      ++samples;
    }
  }
  CHECK(samples >= 1000);
}

TEST_CASE("valuation is a discrete valuation") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const RatFunc a = testing::random_ratfunc(rng, trial % 2 ? 3 : 1, false);
    const RatFunc b = testing::random_ratfunc(rng, trial % 2 ? 3 : 1, false);
    const int va = a.valuation();
    const int vb = b.valuation();
    const int vs = (a + b).valuation();
    CHECK(vs >= std::min(va, vb));
    if (va != vb) CHECK(vs == std::min(va, vb));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).valuation() == va + vb);
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const RatFunc a = testing::random_ratfunc(rng, 3, false);
    CHECK(RatFunc(a.numerator(), a.denominator()) == a);
    CHECK(parse_scalar(a.to_string(), 3) == a);
  }
}

TEST_CASE("field arithmetic on K") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc a = testing::random_ratfunc(rng, 3, false);
    const RatFunc b = testing::random_ratfunc(rng, 3, false);
    const RatFunc c = testing::random_ratfunc(rng, 3, false);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.shifted(3).valuation() == (a.is_zero() ? kInfiniteValuation : a.valuation() + 3));
  }
}

TEST_CASE("truncated series") {
  const auto g = TruncatedSeries::from_ratfunc(parse_scalar("1/(1-t)", 1), 5);
  for (int i = 0; i < 5; ++i) CHECK(g.coefficient(i).is_one());
  CHECK_THROWS_AS(TruncatedSeries::from_ratfunc(parse_scalar("1/t", 1), 3), NonIntegralError);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const RatFunc a = testing::random_ratfunc(rng, 3, true);
    const RatFunc b = testing::random_ratfunc(rng, 3, true);
    const int n = 1 + trial % 7;
    const auto sa = TruncatedSeries::from_ratfunc(a, n);
    const auto sb = TruncatedSeries::from_ratfunc(b, n);
    CHECK(TruncatedSeries::from_ratfunc(a + b, n) == sa + sb);
    CHECK(TruncatedSeries::from_ratfunc(a * b, n) == sa * sb);
    CHECK(sa.coefficient(0) == a.reduce_at_zero());
    if (!a.reduce_at_zero().is_zero()) CHECK((sa * sa.inverse()) == TruncatedSeries(n, Cyclo(1)));
  }
}

TEST_CASE("roots in cyclotomic fields") {
  const Poly x = Poly::variable();
  const Cyclo z = Cyclo::zeta(3);
  const Poly cubic = (x - Poly(Cyclo(1))) * (x - Poly(z)) * (x - Poly(z * z));
  CHECK(roots_in_field(cubic, 3).size() == 3);
  CHECK(roots_in_field(x * x + Poly(1), 1).empty());
  CHECK(roots_in_field(x * x + Poly(1), 4).size() == 2);
  CHECK(roots_in_field(x * x - Poly(2), 8).size() == 2);  // sqrt 2 lies in Q(zeta_8)
  CHECK(roots_in_field(x * x - Poly(2), 3).empty());
  const Poly rep = (x - Poly(Cyclo(Rational(1, 3)))) * (x - Poly(Cyclo(Rational(1, 3)))) *
                   (x + Poly(Cyclo(Rational(5, 7))));
  const auto r = roots_in_field(rep, 1);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Cyclo(Rational(-5, 7)));
  CHECK(r[1] == Cyclo(Rational(1, 3)));
  CHECK(squarefree_part(rep).degree() == 2);
}

TEST_CASE("roots of random split polynomials are recovered exactly") {
  std::mt19937 rng(4242);
  const Poly x = Poly::variable();
  for (int order : {1, 3, 4, 5, 8}) {
    for (int trial = 0; trial < 15; ++trial) {
      const int deg = 1 + trial % 5;
      Poly f(1);
      std::vector<Cyclo> expected;
      for (int i = 0; i < deg; ++i) {
        const Cyclo r = testing::random_cyclo(rng, order, 3);
        f = f * (x - Poly(r));
        if (std::none_of(expected.begin(), expected.end(), [&](const Cyclo& y) { return y == r; })) {
          expected.push_back(r);
        }
      }
      // An irreducible quadratic factor contributes nothing.
      f = f * (x * x - Poly(3) * x + Poly(Rational(7, 2)));
      const auto got = roots_in_field(f, order);
      CHECK(got.size() == expected.size());
      for (const auto& r : got) CHECK(f.evaluate(r).is_zero());
    }
  }
}
