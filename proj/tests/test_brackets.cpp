#include "doctest.h"
#include "siegel/brackets.hpp"
#include "siegel/jetops.hpp"
#include "siegel/theta.hpp"

using namespace siegel;

namespace {

const Symbol F = Symbol::function("F"), G = Symbol::function("G"), H = Symbol::function("H");
const QJet kF = QJet::symbol(Symbol::parameter("k")), kG = QJet::symbol(Symbol::parameter("h")),
           kH = QJet::symbol(Symbol::parameter("m"));

QJet sym(const Symbol& s) { return QJet::symbol(s); }

bool all_zero(const SymMatrix<QJet>& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("vector bracket: antisymmetry, diagonal, bilinearity") {
  for (int g = 1; g <= 3; ++g) {
    CHECK(all_zero(vector_bracket(sym(F), kF, sym(F), kF, g)));
    const auto fg = vector_bracket(sym(F), kF, sym(G), kG, g), gf = vector_bracket(sym(G), kG, sym(F), kF, g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        CHECK((fg[i][j] + gf[i][j]).is_zero());
        CHECK(fg[i][j] == fg[j][i]);
      }
  }
  // Additivity in the first slot at a common weight.
  const auto sum = vector_bracket(sym(F) + sym(H), kF, sym(G), kG, 2);
  const auto a = vector_bracket(sym(F), kF, sym(G), kG, 2), b = vector_bracket(sym(H), kF, sym(G), kG, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(sum[i][j] == a[i][j] + b[i][j]);
  // Homogeneity in the second slot.
  const QJet three = QJet::constant(BigRational(3));
  const auto s3 = vector_bracket(sym(F), kF, three * sym(G), kG, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(s3[i][j] == a[i][j].scaled(BigRational(3)));
}

TEST_CASE("scalar bracket identities at genus 2") {
  for (unsigned n = 2; n <= 3; ++n) {
    const QJet fn = sym(F).pow(n);
    CHECK(scalar_bracket(sym(F), kF, fn, kF.scaled(BigRational(static_cast<long>(n))), 2).is_zero());
  }
  // On {F = 0} only h^g G^g det(dF) survives.
  const QJet s = scalar_bracket(sym(F), kF, sym(G), kG, 2);
  CHECK(jet_mod_symbol(s, F) == kG.pow(2) * sym(G).pow(2) * jet_det_partial(F, 2));
  // [H^2 F, G] is divisible by H^g.
  const QJet hhf = sym(H).pow(2) * sym(F);
  const QJet w = kH.scaled(BigRational(2)) + kF;
  const QJet t = scalar_bracket(hhf, w, sym(G), kG, 2);
  CHECK(!t.is_zero());
  for (const auto& [m, c] : t.terms()) CHECK(m.bare_degree("H") >= 2);
  CHECK(jet_matrix_det({{sym(F), sym(G)}, {sym(H), sym(F)}}) == sym(F).pow(2) - sym(G) * sym(H));
}

TEST_CASE("scalar bracket at genus 3 vanishes on powers") {
  CHECK(scalar_bracket(sym(F), kF, sym(F).pow(2), kF.scaled(BigRational(2)), 3).is_zero());
  const QJet s = scalar_bracket(sym(F), kF, sym(G), kG, 3);
  CHECK(jet_mod_symbol(s, F) == kG.pow(3) * sym(G).pow(3) * jet_det_partial(F, 3));
}

TEST_CASE("Eisenstein series") {
  const QExp1 e4 = eis1_qexp(4, 20), e6 = eis1_qexp(6, 20);
  CHECK(e4.coeff(1) == BigRational(240));
  CHECK(e4.coeff(2) == BigRational(240 * 9));
  CHECK(e6.coeff(2) == BigRational(-16632));
  const QExp1 d = e4.pow(3) - e6.pow(2);
  CHECK(d.coeff(0) == BigRational(0));
  CHECK(d.coeff(1) == BigRational(1728));
  CHECK_THROWS_AS(eis1_qexp(8, 10), Error);
}

TEST_CASE("genus-1 bracket of E4 and E6 is a multiple of Delta") {
  const QExp1 e4 = eis1_qexp(4, 20), e6 = eis1_qexp(6, 20);
  const QExp1 b = vector_bracket(e4, e6);
  CHECK(b.weight() == BigRational(12));
  CHECK(b.coeff(0) == BigRational(0));
  CHECK(b.coeff(1) == BigRational(3456));
  const QExp1 delta = (e4.pow(3) - e6.pow(2)).scaled(BigRational(1, 1728));
  for (int n = 1; n <= 20; ++n) CHECK(b.coeff(n) == BigRational(3456) * delta.coeff(n));
  // The 1 x 1 determinant is the entry itself.
  CHECK(scalar_bracket(e4, e6) == b);
  CHECK((vector_bracket(e6, e4) + b).is_zero());
}

TEST_CASE("genus-2 brackets on expansions") {
  const int n = 40;
  const QExp2 f = theta8_sum_qexp2(n);
  const QExp2 g = tnull_qexp(n).pow(2);
  CHECK(fj_order(f) == BigRational(0));
  CHECK(fj_order(g) == BigRational(1));
  const QExp2 s = scalar_bracket(f, g);
  CHECK(s.weight() == BigRational(30));
  CHECK(s.tau_factor() == 2);
  CHECK(fj_order(s) > BigRational(0));
  CHECK(fj_order(s) >= BigRational(2) * (fj_order(f) + fj_order(g)));

  const auto m = vector_bracket(f, g);
  CHECK(m[0][1] == m[1][0]);
  CHECK(m[0][0].weight() == BigRational(15));
  CHECK(scalar_bracket(f, f.pow(2)).is_zero());

  // Agrees with the jet bracket evaluated on the same expansions.
  const QJet jet = scalar_bracket(sym(F), QJet::constant(BigRational(4)), sym(G), QJet::constant(BigRational(10)), 2);
  const QExp2 via_jet = eval_jetpoly(jet, {{"F", f}, {"G", g}});
  CHECK(via_jet.terms() == s.terms());
}
