#include "doctest.h"
#include "siegel/jetops.hpp"
#include "siegel/poly_io.hpp"

using namespace siegel;

namespace {

const Symbol F = Symbol::function("F");

QJet jv(std::vector<IndexPair> p) { return QJet::var(JetVar(F, std::move(p))); }
QJet bare() { return QJet::symbol(F); }

}  // namespace

TEST_CASE("jet variables are canonical") {
  CHECK(JetVar(F, {{2, 1}}) == JetVar(F, {{1, 2}}));
  CHECK(JetVar(F, {{2, 2}, {1, 1}}) == JetVar(F, {{1, 1}, {2, 2}}));
  CHECK(JetVar(F, {{1, 1}}).differentiated(2, 1) == JetVar(F, {{1, 1}, {1, 2}}));
  CHECK_THROWS_AS(JetVar(Symbol::parameter("k"), {{1, 1}}), Error);
}

TEST_CASE("jet_apply on small polynomials") {
  CHECK(jet_apply(QPoly::variable(VarId::r(1, 1, 1)), F, 1) == jv({{1, 1}}));
  const QJet det2 = jv({{1, 1}}) * jv({{2, 2}}) - jv({{1, 2}}).pow(2);
  CHECK(jet_det_partial(F, 2) == det2);
  CHECK(jet_apply(coeff_R(2, MultiIndex({1, 1})), F, 2) == det2.scaled(BigRational(2)));
  CHECK(jet_apply(coeff_R(2, MultiIndex({2, 0})), F, 2) == bare() * (jv({{1, 1}, {2, 2}}) - jv({{1, 2}, {1, 2}})));
  CHECK_THROWS_AS(jet_apply(QPoly::variable(VarId::r(3, 1, 1)), F, 2), Error);
  CHECK_THROWS_AS(jet_apply(QPoly::variable(VarId::t(1)), F, 2), Error);
}

TEST_CASE("full basis polynomial gives g! det(dF)") {
  for (int g = 2; g <= 4; ++g) {
    const MultiIndex ones(std::vector<int>(static_cast<std::size_t>(g), 1));
    CHECK(jet_apply(coeff_R(g, ones), F, g) == jet_det_partial(F, g).scaled(factorial(g)));
  }
}

TEST_CASE("every other basis polynomial is a multiple of F") {
  for (int g = 2; g <= 4; ++g) {
    for (const auto& n : compositions(g, g)) {
      if (n == MultiIndex(std::vector<int>(static_cast<std::size_t>(g), 1))) continue;
      const QJet p = jet_apply(coeff_R(g, n), F, g);
      CHECK(!p.is_zero());
      CHECK(p.min_bare_degree("F") >= 1);
      CHECK(jet_mod_symbol(p, F).is_zero());
    }
  }
}

TEST_CASE("diffresult expansion agrees with direct application") {
  CHECK(diffresult_expand(2, MultiIndex({1, 1}), F) == jet_det_partial(F, 2).scaled(BigRational(2)));
  CHECK(diffresult_expand(3, MultiIndex({3, 0, 0}), F) == bare().pow(2) * jet_det_operator(F, {1, 2, 3}, {1, 2, 3}));
  int checked = 0;
  for (int g = 1; g <= 4; ++g) {
    for (const auto& n : compositions(g, g)) {
      if (diffresult_shape(g, n) == 0) continue;
      CHECK(diffresult_expand(g, n, F) == jet_apply(coeff_R(g, n), F, g));
      ++checked;
    }
  }
  CHECK(checked == 1 + 3 + 10 + 29);
  CHECK_THROWS_AS(diffresult_expand(4, MultiIndex({2, 2, 0, 0}), F), Error);
}

TEST_CASE("mod symbol") {
  CHECK(jet_mod_symbol(bare() * jv({{1, 2}}), F).is_zero());
  const QJet p = jv({{1, 1}}) + bare();
  CHECK(jet_mod_symbol(p, F) == jv({{1, 1}}));
  CHECK(!jet_equal(p, p + jv({{1, 1}})));
}

TEST_CASE("formal derivative obeys the product rule") {
  const Symbol G = Symbol::function("G");
  const QJet f = bare() * jv({{1, 2}});
  const QJet g = QJet::symbol(G).pow(2) + QJet::symbol(Symbol::parameter("k"));
  CHECK((f * g).diff(1, 1) == f.diff(1, 1) * g + f * g.diff(1, 1));
  CHECK(QJet::symbol(Symbol::parameter("k")).diff(1, 2).is_zero());
}

TEST_CASE("JET1 round trip") {
  const Symbol G = Symbol::function("G");
  QJet p = jet_apply(coeff_R(3, MultiIndex({2, 1, 0})), F, 3) * QJet::symbol(G).pow(2);
  p += QJet::symbol(Symbol::parameter("k")).scaled(BigRational(-3, 7));
  const std::string text = to_jet1(p);
  CHECK(parse_jet1<BigRational>(text) == p);
  CHECK(to_jet1(parse_jet1<BigRational>(text)) == text);
  const RJet s = to_symbolic(p).scaled(RatFunc::a());
  CHECK(parse_jet1<RatFunc>(to_jet1(s)) == s);
  CHECK(to_jet1(jv({{1, 1}, {2, 2}}) * bare()) == "JET1 rational\n1 | F{} F{(1,1)(2,2)}\n");
}
