#pragma once

#include <vector>

#include "siegel/jet.hpp"
#include "siegel/qexp.hpp"

namespace siegel {

template <class T>
using SymMatrix = std::vector<std::vector<T>>;

/// Weights enter as jet polynomials so they can stay symbolic (parameter symbols)
/// or be plain constants.
/// Entry (i,j) is h G d^_ij F - k F d^_ij G.
SymMatrix<QJet> vector_bracket(const QJet& f, const QJet& k, const QJet& g, const QJet& h, int genus);
/// det of the vector bracket.
QJet scalar_bracket(const QJet& f, const QJet& k, const QJet& g, const QJet& h, int genus);

/// Laplace expansion along the first row.
QJet jet_matrix_det(const SymMatrix<QJet>& m);

/// On expansions the weights are read from the operands, the derivative is the
/// normalized one and each entry carries weight k + h + 2/genus.
SymMatrix<QExp2> vector_bracket(const QExp2& f, const QExp2& g);
/// Weight 2(k + h) + 2.
QExp2 scalar_bracket(const QExp2& f, const QExp2& g);
/// Genus 1: the bracket is a 1 x 1 matrix; weight k + h + 2.
QExp1 vector_bracket(const QExp1& f, const QExp1& g);
QExp1 scalar_bracket(const QExp1& f, const QExp1& g);

/// 1 + 240 sum sigma_3(n) q^n or 1 - 504 sum sigma_5(n) q^n up to q^trunc.
QExp1 eis1_qexp(int weight, int trunc);

}  // namespace siegel
