#include "doctest.h"
#include "siegel/opgen.hpp"

using namespace siegel;

namespace {

const Symbol F = Symbol::function("F");
const RatFunc A = RatFunc::a();
const RatFunc K2 = RatFunc(2) * A;

RPoly rr(int h, int i, int j) { return RPoly::variable(VarId::r(h, i, j)); }
RPoly R(int g, std::vector<int> n) { return to_symbolic(coeff_R(g, MultiIndex(std::move(n)))); }

}  // namespace

TEST_CASE("constants C(m)") {
  CHECK(constant_C(2, A, 1) == K2 - RatFunc(1));
  CHECK(constant_C(2, A, 2) == -K2);
  CHECK(constant_C(2, A, 2).eval_at(BigRational(5)) == BigRational(-10));
  CHECK(constant_C(3, A, 1) == RatFunc(2) * (K2 - RatFunc(1)) * (K2 - RatFunc(2)));
  CHECK(constant_C(3, A, 2) == -K2 * (K2 - RatFunc(2)));
  CHECK(constant_C(3, A, 3) == RatFunc(2) * K2 * K2);
  for (int g = 2; g <= 6; ++g) {
    RatFunc closed = RatFunc(factorial(g - 1)) * K2.pow(g - 1);
    if ((g - 1) % 2) closed = -closed;
    CHECK(constant_C(g, A, g) == closed);
  }
  CHECK_THROWS_AS(constant_C(3, A, 4), Error);
  CHECK_THROWS_AS(constant_C(3, A, 0), Error);
}

TEST_CASE("Q for genus 2 and 3") {
  const RSpec q2 = build_Q(2, A);
  const RatFunc r = K2 / (K2 - RatFunc(1));
  CHECK(q2.Q == R(2, {1, 1}) - (R(2, {2, 0}) + R(2, {0, 2})).scaled(r));
  CHECK(q2.coefficients.at(MultiIndex({1, 1})) == RatFunc(1));

  const RSpec q3 = build_Q(3, A);
  CHECK(q3.coefficients.size() == 10);
  CHECK(q3.coefficients.at(MultiIndex({1, 1, 1})) == RatFunc(1));
  const RatFunc c1 = constant_C(3, A, 1);
  CHECK(q3.coefficients.at(MultiIndex({0, 2, 1})) == constant_C(3, A, 2) / c1);
  CHECK(q3.coefficients.at(MultiIndex({0, 0, 3})) == constant_C(3, A, 3) / c1);
  // The printed operator coefficients: 3 (2a)^2/((2a-1)(2a-2)) and -3(2a)/(2a-1) up to the orbit sizes.
  CHECK(q3.coefficients.at(MultiIndex({3, 0, 0})) * RatFunc(3) == RatFunc(3) * K2 * K2 / ((K2 - RatFunc(1)) * (K2 - RatFunc(2))));
  CHECK(q3.coefficients.at(MultiIndex({2, 1, 0})) * RatFunc(2) == -K2 / (K2 - RatFunc(1)));

  const QSpec q48 = build_Q(4, BigRational(8));
  CHECK(q48.Q.tag() == FieldTag::numeric(BigRational(8)));
  CHECK_THROWS_AS(build_Q(3, BigRational(1)), Error);
  CHECK_THROWS_AS(build_Q(1, A), Error);
}

TEST_CASE("apply_D11 hand computations") {
  const RPoly det1 = R(2, {2, 0});
  CHECK(apply_D11(2, 1, det1, K2) == rr(1, 2, 2).scaled(K2 - RatFunc(1)));
  CHECK(apply_D11(2, 1, R(2, {1, 1}), K2) == rr(2, 2, 2).scaled(K2));
  CHECK(apply_D11(2, 2, det1, K2).is_zero());
}

TEST_CASE("pluriharmonicity, symbolic in a") {
  for (int g = 2; g <= 3; ++g) CHECK(verify_pluriharmonic(build_Q(g, A)));
  for (int g = 2; g <= 6; ++g) CHECK(verify_harmonic_condition(g, A));
}

TEST_CASE("wrong second-order factor leaves the predicted residual") {
  const RSpec q2 = build_Q(2, A);
  const RPoly res = pluriharmonic_residual(q2, 1);
  CHECK(res == (rr(1, 2, 2) + rr(2, 2, 2)).scaled(K2 * RatFunc(BigRational(-1, 2)) / (K2 - RatFunc(1))));
  CHECK(!verify_pluriharmonic(q2, 1));
  // Built for factor 1, harmonic for factor 1 but not for the pullback operator.
  const RSpec wrong = build_Q(2, A, 1);
  CHECK(verify_pluriharmonic(wrong, 1));
  CHECK(!verify_pluriharmonic(wrong, 2));
}

TEST_CASE("stratum identities behind the harmonic condition") {
  // (k - m) C(m+1) + k m C(m) = 0 for m >= 2; the m = 1 stratum carries the factor g - 1.
  const RatFunc k = K2;
  for (int g = 2; g <= 5; ++g) {
    for (int m = 1; m < g; ++m) {
      RatFunc lhs = (k - RatFunc(m)) * constant_C(g, A, m + 1) + k * RatFunc(m) * constant_C(g, A, m);
      if (m == 1) lhs = k * constant_C(g, A, 1) + (k - RatFunc(1)) * RatFunc(g - 1) * constant_C(g, A, 2);
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("derivative lemma for all n and h") {
  for (int g = 2; g <= 3; ++g) {
    for (const auto& n : compositions(g, g)) {
      for (int h = 1; h <= g; ++h) CHECK(verify_deriv_lemma(g, n, h, K2));
    }
  }
}

TEST_CASE("X-space oracle") {
  const QPoly r111 = QPoly::variable(VarId::r(1, 1, 1));
  CHECK(xspace_oracle(2, 2, r111) == QPoly::constant(BigRational(4)));
  CHECK(xspace_oracle(2, 2, build_Q(2, BigRational(1)).Q).is_zero());
  CHECK(xspace_oracle(2, 4, build_Q(2, BigRational(2)).Q).is_zero());
  CHECK(!xspace_oracle(2, 2, build_Q(2, BigRational(1), 1).Q).is_zero());
  CHECK_THROWS_AS(xspace_oracle(3, 6, r111), Error);
}

TEST_CASE("operator agrees with the oracle on whether Q is harmonic") {
  for (long a = 1; a <= 2; ++a) {
    for (int s : {1, 2}) {
      const QSpec q = build_Q(2, BigRational(a), s);
      const bool oracle = xspace_oracle(2, static_cast<int>(2 * a), q.Q).is_zero();
      CHECK(oracle == verify_pluriharmonic(q, 2));
    }
  }
}

TEST_CASE("jet images of Q") {
  CHECK(jet_apply(build_Q(2, A).Q, F, 2) == printed_jet_Q2(F));
  const RJet d3 = jet_apply(build_Q(3, A).Q, F, 3);
  CHECK(d3 == printed_jet_Q3(F, true));
  CHECK(!(d3 == printed_jet_Q3(F, false)));
  for (int g = 2; g <= 4; ++g) {
    const RSpec q = build_Q(g, A);
    CHECK(jet_mod_symbol(jet_apply(q.Q, F, g), F) == to_symbolic(jet_det_partial(F, g).scaled(factorial(g))));
    CHECK(jet_mod_symbol(operator_jet(q, F), F) == to_symbolic(jet_det_partial(F, g)));
  }
  CHECK(jet_mod_symbol(printed_jet_Q2(F), F) == to_symbolic(jet_det_partial(F, 2).scaled(BigRational(2))));
}

TEST_CASE("OPSPEC1 round trip") {
  const RSpec q = build_Q(3, A);
  const std::string text = to_opspec1(q);
  const RSpec back = parse_opspec1<RatFunc>(text);
  CHECK(back.Q == q.Q);
  CHECK(back.coefficients == q.coefficients);
  CHECK(to_opspec1(back) == text);
  const QSpec n = build_Q(2, BigRational(5));
  CHECK(to_opspec1(parse_opspec1<BigRational>(to_opspec1(n))) == to_opspec1(n));
  CHECK_THROWS_AS(parse_opspec1<BigRational>(text), FieldMismatch);
}
