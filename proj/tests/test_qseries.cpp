#include <random>

#include "doctest.h"
#include "siegel/opgen.hpp"
#include "siegel/theta.hpp"

using namespace siegel;

namespace {

QExp2 mono(Exp3 e, BigRational c = BigRational(1), int trunc = 48) {
  QExp2 f(BigRational(0), trunc);
  f.add_term(e, c);
  return f;
}

// Schoolbook product as an independent oracle for the dense kernel.
std::map<Exp3, BigRational> naive_product(const QExp2& x, const QExp2& y, int n) {
  std::map<Exp3, BigRational> out;
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) {
      const Exp3 e{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      if (e[0] + e[2] > n) continue;
      out[e] += c * d;
    }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

QExp2 theta00(int n) { return theta_qexp2(ThetaChar({0, 0}, {0, 0}), n); }

}  // namespace

TEST_CASE("exponent addition and zero") {
  CHECK(mono({0, 0, 1}) * mono({0, 0, 3}) == mono({0, 0, 4}));
  CHECK((mono({0, 0, 1}) * QExp2(BigRational(0), 48)).is_zero());
  CHECK_THROWS_AS(mono({1, 3, 1}), Error);
  CHECK(mono({40, 0, 40}).is_zero());
  QExp2 w5(BigRational(5), 48);
  CHECK_THROWS_AS(w5 += mono({0, 0, 0}), Error);
}

TEST_CASE("dense products agree with a schoolbook oracle") {
  const QExp2 t = tnull_qexp(48);
  const QExp2 d = q_diff(t, 1, 2);
  const QExp2 p = t * d;
  CHECK(t.size() * d.size() >= 4096);
  CHECK(p.terms() == naive_product(t, d, 48));
  for (const auto& [e, c] : p.terms()) {
    CHECK(static_cast<long long>(e[1]) * e[1] <= 4LL * e[0] * e[2]);
    CHECK(e[0] + e[2] <= 48);
  }
}

TEST_CASE("product association orders agree") {
  std::vector<QExp2> th;
  for (const auto& c : even_chars(2)) th.push_back(theta_qexp2(c, 48));
  QExp2 left = th[0];
  for (std::size_t i = 1; i < th.size(); ++i) left = left * th[i];
  CHECK(left.size() > 0);
  CHECK(left.terms() == product_tree(th).terms());
  std::mt19937_64 rng(5);
  std::shuffle(th.begin(), th.end(), rng);
  CHECK(product_tree(th).terms() == left.terms());
}

TEST_CASE("truncation is a ring congruence") {
  const QExp2 a = theta00(48).pow(3), b = tnull_qexp(48);
  CHECK((a * b).truncated(30) == a.truncated(30) * b.truncated(30));
  CHECK(a * b == b * a);
  const QExp2 c = theta_qexp2(ThetaChar({1, 0}, {0, 1}), 48);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("normalized derivatives") {
  CHECK(q_diff(mono({0, 0, 4}), 2, 2).terms() == mono({0, 0, 4}, BigRational(1, 2)).terms());
  CHECK(q_diff(mono({1, 2, 1}), 1, 2).terms() == mono({1, 2, 1}, BigRational(1, 8)).terms());
  CHECK(q_diff(mono({0, 0, 0}), 1, 1).is_zero());
  CHECK(q_diff(mono({3, 0, 0}), 2, 1).is_zero());
  CHECK(q_diff(theta00(48), 1, 1).tau_factor() == 1);
}

TEST_CASE("Fourier-Jacobi order and slices") {
  const QExp2 t2 = tnull_qexp(48);
  CHECK(fj_order(t2) == BigRational(1, 2));
  CHECK(fj_order(theta00(48)) == BigRational(0));
  CHECK(fj_slice(t2, BigRational(0)).empty());
  CHECK(fj_slice(mono({0, 0, 0}), BigRational(0)) == std::map<std::pair<int, int>, BigRational>{{{0, 0}, BigRational(1)}});
  CHECK_THROWS_AS(fj_order(QExp2(BigRational(0), 48)), Error);
  // The slices partition the terms.
  std::size_t total = 0;
  for (int gam = 0; gam <= 48; ++gam) total += fj_slice(t2, BigRational(gam, 8)).size();
  CHECK(total == t2.size());
}

TEST_CASE("jet polynomials on expansions") {
  const Symbol F = Symbol::function("F"), G = Symbol::function("G");
  const QExp2 th = theta00(48);
  const QExp2 sq = eval_jetpoly(QJet::symbol(F) * QJet::symbol(G), {{"F", th}, {"G", th}});
  CHECK(sq.terms() == (th * th).terms());
  CHECK(sq.weight() == BigRational(1));

  const QExp2 t2 = tnull_qexp(48);
  const QExp2 det2 = eval_jetpoly(jet_det_partial(F, 2).scaled(BigRational(2)), {{"F", t2}});
  CHECK(!det2.is_zero());
  int lowest = 1000;
  for (const auto& [e, c] : det2.terms()) lowest = std::min(lowest, e[2]);
  CHECK(lowest == 8);
  CHECK(det2.tau_factor() == 2);

  const QExp2 d = eval_jetpoly(operator_jet(build_Q(2, BigRational(5)), F), {{"F", t2}});
  CHECK(d.weight() == BigRational(12));
  CHECK(fj_order(d) == BigRational(1));
  CHECK(fj_order(d) >= BigRational(2) * fj_order(t2));

  CHECK_THROWS_AS(eval_jetpoly(QJet::symbol(G), {{"F", t2}}), Error);
  // Weight-inhomogeneous input is rejected.
  CHECK_THROWS_AS(eval_jetpoly(QJet::symbol(F) + QJet::symbol(F).pow(2), {{"F", t2}}), Error);
  // Parameters multiply.
  const QExp2 k5 = eval_jetpoly(QJet::symbol(Symbol::parameter("k")) * QJet::symbol(F), {{"F", th}}, {{"k", BigRational(5)}});
  CHECK(k5.terms() == th.scaled(BigRational(5)).terms());
}

TEST_CASE("operator output is stable under deeper truncation") {
  const Symbol F = Symbol::function("F");
  const QJet jet = operator_jet(build_Q(2, BigRational(5)), F);
  const QExp2 d48 = eval_jetpoly(jet, {{"F", tnull_qexp(48)}});
  const QExp2 d80 = eval_jetpoly(jet, {{"F", tnull_qexp(80)}});
  CHECK(d80.truncated(48) == d48);
}

TEST_CASE("SMF1 round trip") {
  const QExp2 d = q_diff(tnull_qexp(40), 1, 2).scaled(BigRational(-3, 7));
  const std::string text = to_smf1(d);
  CHECK(smf1_genus(text) == 2);
  CHECK(parse_smf1_genus2(text) == d);
  CHECK(to_smf1(parse_smf1_genus2(text)) == text);
  QExp1 e(BigRational(4), 10);
  e.add_term(0, BigRational(1));
  e.add_term(3, BigRational(-5, 2));
  CHECK(parse_smf1_genus1(to_smf1(e)) == e);
  CHECK_THROWS_AS(parse_smf1_genus2(to_smf1(e)), ParseError);
  CHECK_THROWS_AS(parse_smf1_genus2("SMF1\ngenus 2\n"), ParseError);
}

TEST_CASE("genus-1 series") {
  const QExp1 th = theta_qexp1(ThetaChar({0}, {0}), 40);
  CHECK(th.coeff(0) == BigRational(1));
  CHECK(th.coeff(4) == BigRational(2));
  CHECK(th.coeff(16) == BigRational(2));
  CHECK(th.coeff(36) == BigRational(2));
  CHECK(th.terms().size() == 4);
  CHECK(th.diff().coeff(16) == BigRational(4));
  CHECK(th.order() == BigRational(0));
}
