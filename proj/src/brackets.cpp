#include "siegel/brackets.hpp"

#include "siegel/errors.hpp"

namespace siegel {

SymMatrix<QJet> vector_bracket(const QJet& f, const QJet& k, const QJet& g, const QJet& h, int genus) {
  if (genus < 1) throw Error("vector_bracket: genus must be positive");
  SymMatrix<QJet> m(static_cast<std::size_t>(genus), std::vector<QJet>(static_cast<std::size_t>(genus)));
  const QJet hg = h * g, kf = k * f;
  for (int i = 1; i <= genus; ++i)
    for (int j = i; j <= genus; ++j) {
      QJet e = hg * f.diff(i, j) - kf * g.diff(i, j);
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = e;
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(e);
    }
  return m;
}

QJet jet_matrix_det(const SymMatrix<QJet>& m) {
  const std::size_t n = m.size();
  if (n == 0) return QJet::constant(BigRational(1));
  for (const auto& row : m)
    if (row.size() != n) throw Error("jet_matrix_det: matrix is not square");
  if (n == 1) return m[0][0];
  QJet out;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    SymMatrix<QJet> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QJet> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    const QJet t = m[0][c] * jet_matrix_det(minor);
    if (c % 2) out -= t;
    else out += t;
  }
  return out;
}

QJet scalar_bracket(const QJet& f, const QJet& k, const QJet& g, const QJet& h, int genus) {
  return jet_matrix_det(vector_bracket(f, k, g, h, genus));
}

SymMatrix<QExp2> vector_bracket(const QExp2& f, const QExp2& g) {
  if (f.trunc() != g.trunc()) throw Error("vector_bracket: truncations differ");
  const QExp2 hg = g.scaled(g.weight()), kf = f.scaled(f.weight());
  const BigRational w = f.weight() + g.weight() + BigRational(1);
  SymMatrix<QExp2> m(2, std::vector<QExp2>(2));
  for (int i = 1; i <= 2; ++i)
    for (int j = i; j <= 2; ++j) {
      QExp2 e = hg * q_diff(f, i, j) - kf * q_diff(g, i, j);
      e.set_weight(w);
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = e;
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(e);
    }
  return m;
}

QExp2 scalar_bracket(const QExp2& f, const QExp2& g) {
  const auto m = vector_bracket(f, g);
  QExp2 d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  d.set_weight(BigRational(2) * (f.weight() + g.weight()) + BigRational(2));
  return d;
}

QExp1 vector_bracket(const QExp1& f, const QExp1& g) {
  if (f.trunc() != g.trunc() || f.scale() != g.scale()) throw Error("vector_bracket: incompatible expansions");
  QExp1 e = g.scaled(g.weight()) * f.diff() - f.scaled(f.weight()) * g.diff();
  e.set_weight(f.weight() + g.weight() + BigRational(2));
  return e;
}

QExp1 scalar_bracket(const QExp1& f, const QExp1& g) { return vector_bracket(f, g); }

QExp1 eis1_qexp(int weight, int trunc) {
  if (weight != 4 && weight != 6) throw Error("eis1_qexp: weight must be 4 or 6");
  const long c = weight == 4 ? 240 : -504;
  QExp1 e(BigRational(weight), trunc);
  e.add_term(0, BigRational(1));
  for (int n = 1; n <= trunc; ++n) {
    mpz_class sigma = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(weight - 1));
        sigma += p;
      }
    e.add_term(n, BigRational(mpz_class(c * sigma)));
  }
  return e;
}

}  // namespace siegel
