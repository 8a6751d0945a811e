#pragma once

#include <vector>

#include "siegel/determinant.hpp"
#include "siegel/jet.hpp"
#include "siegel/multipoly.hpp"

namespace siegel {

/// The constant-coefficient operator attached to a polynomial in the r-variables:
/// each monomial prod_h prod_s r[h; i_s, j_s] becomes prod_h F_{sigma(h)}{(i_1,j_1)...}.
/// Slot h receives assignment[h-1]; a slot without r-factors contributes the bare symbol.
template <ExactField K>
JetPoly<K> jet_apply(const MultiPoly<K>& q, const std::vector<Symbol>& assignment) {
  const int g = static_cast<int>(assignment.size());
  JetPoly<K> out(q.tag());
  for (const auto& [m, c] : q.terms()) {
    std::vector<std::vector<IndexPair>> slots(static_cast<std::size_t>(g));
    for (const auto& [v, e] : m.factors()) {
      if (v.kind() != VarId::Kind::R) throw Error("jet_apply: polynomial mentions " + v.name());
      if (v.first() < 1 || v.first() > g) throw Error("jet_apply: matrix index " + std::to_string(v.first()) + " is unassigned");
      for (std::uint32_t k = 0; k < e; ++k) {
        slots[static_cast<std::size_t>(v.first() - 1)].emplace_back(static_cast<std::uint8_t>(v.row()),
                                                                     static_cast<std::uint8_t>(v.col()));
      }
    }
    std::vector<JetMonomial::Factor> f;
    for (int h = 0; h < g; ++h) f.emplace_back(JetVar(assignment[static_cast<std::size_t>(h)], std::move(slots[static_cast<std::size_t>(h)])), 1);
    out.add_term(JetMonomial::from_factors(std::move(f)), c);
  }
  return out;
}

/// Same symbol in every slot.
template <ExactField K>
JetPoly<K> jet_apply(const MultiPoly<K>& q, const Symbol& f, int g) {
  return jet_apply(q, std::vector<Symbol>(static_cast<std::size_t>(g), f));
}

/// All m-element subsets of {1..g}, each ascending, in lexicographic order.
std::vector<std::vector<int>> subsets(int g, int m);
/// Complement of an ascending subset of {1..g}.
std::vector<int> complement(int g, const std::vector<int>& s);

/// det_{rows, cols}(dF): minor of the matrix of first derivatives F{(i,j)}.
QJet jet_minor_first(const Symbol& f, const std::vector<int>& rows, const std::vector<int>& cols);
/// det(dF) for the full g x g matrix.
QJet jet_det_partial(const Symbol& f, int g);
/// (det_{rows, cols} d)F: the minor of the operator matrix applied once to F.
QJet jet_det_operator(const Symbol& f, const std::vector<int>& rows, const std::vector<int>& cols);

/// Minor-sum expansion of the operator attached to R(n) on a single symbol, for n a
/// permutation of (m, 1, ..., 1, 0, ..., 0).
QJet diffresult_expand(int g, const MultiIndex& n, const Symbol& f);

/// m if n is a permutation of (m, 1, ..., 1, 0, ..., 0) summing to g, else 0.
int diffresult_shape(int g, const MultiIndex& n);

template <ExactField K>
JetPoly<K> jet_mod_symbol(const JetPoly<K>& p, const Symbol& f) {
  return p.mod_symbol(f.name);
}

template <ExactField K>
bool jet_equal(const JetPoly<K>& p, const JetPoly<K>& q) {
  return p == q;
}

/// Lifts a rational jet polynomial into Q(a).
RJet to_symbolic(const QJet& p);

}  // namespace siegel
