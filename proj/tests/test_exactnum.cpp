#include <random>

#include "doctest.h"
#include "siegel/scalar.hpp"

using namespace siegel;

namespace {

RatFunc lin(long c1, long c0) { return RatFunc(UPoly({BigRational(c0), BigRational(c1)})); }

RatFunc random_ratfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  auto poly = [&](int deg) {
    std::vector<BigRational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng), 1 + (d(rng) + 6) % 4);
    return UPoly(std::move(c));
  };
  UPoly den = poly(2);
  while (den.is_zero()) den = poly(2);
  return RatFunc(poly(3), den);
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(BigRational(6, -4).to_string() == "-3/2");
  CHECK(BigRational(6, 3).to_string() == "2");
  CHECK(BigRational::parse("-10/4") == BigRational(-5, 2));
  CHECK(BigRational(1, 3) + BigRational(1, 6) == BigRational(1, 2));
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), DivisionByZero);
  CHECK_THROWS_AS(BigRational::parse("1/"), ParseError);
  CHECK(binomial(6, 3) == BigRational(20));
  CHECK(factorial(5) == BigRational(120));
}

TEST_CASE("ratfunc field operations") {
  const RatFunc a = RatFunc::a();
  const RatFunc two_a = a * RatFunc(2);
  const RatFunc den = lin(2, -1);
  CHECK((two_a / den + (-two_a) / den).is_zero());
  CHECK((two_a / den).eval_at(BigRational(5)) == BigRational(10, 9));
  // (4a^2 - 1)/(2a - 1) reduces to 2a + 1.
  const RatFunc q = (RatFunc(4) * a * a - RatFunc(1)) / den;
  CHECK(q == lin(2, 1));
  CHECK(q.den() == UPoly(BigRational(1)));
  CHECK_THROWS_AS(two_a / RatFunc(0), DivisionByZero);
}

TEST_CASE("ratfunc evaluation and poles") {
  CHECK(RatFunc(7).eval_at(BigRational(3, 7)) == BigRational(7));
  // C(2) = -2a for g = 2.
  CHECK((RatFunc(-2) * RatFunc::a()).eval_at(BigRational(5)) == BigRational(-10));
  for (int g = 1; g <= 6; ++g) {
    const RatFunc f = RatFunc(1) / lin(2, -g);
    try {
      (void)f.eval_at(BigRational(g, 2));
      FAIL("expected a pole");
    } catch (const PoleError& e) {
      CHECK(e.point() == BigRational(g, 2).to_string());
    }
  }
}

TEST_CASE("eval_at is a ring homomorphism on random inputs") {
  std::mt19937_64 rng(20261015);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc x = random_ratfunc(rng);
    const RatFunc y = random_ratfunc(rng);
    const BigRational a0(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
    try {
      const BigRational xv = x.eval_at(a0);
      const BigRational yv = y.eval_at(a0);
      CHECK((x * y).eval_at(a0) == xv * yv);
      CHECK((x + y).eval_at(a0) == xv + yv);
      CHECK((x - y).eval_at(a0) == xv - yv);
      if (!yv.is_zero() && !y.is_zero()) CHECK((x / y).eval_at(a0) == xv / yv);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("canonical form is unique") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const RatFunc x = random_ratfunc(rng);
    const RatFunc y = random_ratfunc(rng);
    if (y.is_zero()) continue;
    CHECK((x * y) / y == x);
    CHECK((x + y) - y == x);
    CHECK(x.den().leading() == BigRational(1));
    CHECK(UPoly::gcd(x.num(), x.den()).degree() <= 0);
  }
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFunc x = random_ratfunc(rng);
    CHECK(RatFunc::parse(x.to_string()) == x);
  }
  CHECK(RatFunc(5).to_string() == "5 ; 1");
  CHECK(BigRational::parse(BigRational(-7, 3).to_string()) == BigRational(-7, 3));
}

TEST_CASE("field tags") {
  CHECK(FieldTag::join(FieldTag::rational(), FieldTag::numeric(BigRational(5))) == FieldTag::numeric(BigRational(5)));
  CHECK_THROWS_AS(FieldTag::join(FieldTag::numeric(BigRational(3)), FieldTag::numeric(BigRational(5))), FieldMismatch);
  CHECK_THROWS_AS(FieldTag::join(FieldTag::symbolic(), FieldTag::numeric(BigRational(5))), FieldMismatch);
  CHECK(FieldTag::parse("numeric a=108") == FieldTag::numeric(BigRational(108)));
}
