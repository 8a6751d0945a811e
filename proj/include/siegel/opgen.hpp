#pragma once

#include <map>
#include <string>
#include <string_view>

#include "siegel/determinant.hpp"
#include "siegel/jetops.hpp"
#include "siegel/multipoly.hpp"

namespace siegel {

/// Q_{g,a} together with its coefficient table. `a` is either the formal symbol
/// (K = RatFunc) or a fixed rational weight (K = BigRational).
///
/// `second_order_factor` records the operator D_{h;ij} = k d^ + s sum r d^ d^ the
/// polynomial was built to annihilate; s = 2 is the pullback of the X-space
/// Laplacian. Any other s yields the polynomial harmonic for that operator, which
/// coincides with Q built at weight 2a/s.
template <ExactField K>
struct OperatorSpec {
  int g = 0;
  K a;
  int second_order_factor = 2;
  std::map<MultiIndex, K> coefficients;  // c(n)/C(1), nonzero entries only
  MultiPoly<K> Q;

  K k() const { return K(2) * a; }
};

using QSpec = OperatorSpec<BigRational>;
using RSpec = OperatorSpec<RatFunc>;

/// C(1) = (g-1) prod_{i=1}^{g-1} (2a - i); for m >= 2,
/// C(m) = (-1)^{m-1} (m-1)! (2a)^{m-1} prod_{i=m}^{g-1} (2a - i).
template <ExactField K>
K constant_C(int g, const K& a, int m);

/// c(n): C(m) when n is a permutation of (m, 1, ..., 1, 0, ..., 0), zero otherwise.
template <ExactField K>
K coefficient_c(int g, const K& a, const MultiIndex& n);

template <ExactField K>
OperatorSpec<K> build_Q(int g, const K& a, int second_order_factor = 2);

/// D_{h;11} P = k d^_{h;11} P + s sum_{u,w} r[h;u,w] d^_{h;1u} d^_{h;1w} P.
template <ExactField K>
MultiPoly<K> apply_D11(int g, int h, const MultiPoly<K>& p, const K& k, int second_order_factor = 2);

/// sum_h D_{h;11} Q with the operator's own factor unless overridden.
template <ExactField K>
MultiPoly<K> pluriharmonic_residual(const OperatorSpec<K>& spec, int second_order_factor);

template <ExactField K>
bool verify_pluriharmonic(const OperatorSpec<K>& spec, int second_order_factor = 2) {
  return pluriharmonic_residual(spec, second_order_factor).is_zero();
}

/// sum_h (k - n'_h) c(n' + e_h) = 0 for all n' with sum g - 1.
template <ExactField K>
bool verify_harmonic_condition(int g, const K& a);

/// D_{h;11} R(n) = (k - n_h + 1) R^_{1;1}(n - e_h); for n_h = 0 checks the left side vanishes.
template <ExactField K>
bool verify_deriv_lemma(int g, const MultiIndex& n, int h, const K& k);

/// Substitutes r[h;u,w] = sum_{nu in block h} x[u,nu] x[w,nu] (blocks of k columns)
/// and applies sum_{nu=1}^{gk} d^2/dx[1,nu]^2.
QPoly xspace_oracle(int g, int k, const QPoly& p);

/// The operator polynomial's action on one symbol, divided by g!.
template <ExactField K>
JetPoly<K> operator_jet(const OperatorSpec<K>& spec, const Symbol& f);

/// Closed forms of the jet expansions of Q_{2,a} and Q_{3,a} in Q(a).
RJet printed_jet_Q2(const Symbol& f);
/// With `cofactor_sign` false the inner sum over (i,j) omits (-1)^{i+j}.
RJet printed_jet_Q3(const Symbol& f, bool cofactor_sign = true);

/// OPSPEC1 text: header, coefficient table, then Q in POLY1.
template <ExactField K>
std::string to_opspec1(const OperatorSpec<K>& spec);
template <ExactField K>
OperatorSpec<K> parse_opspec1(std::string_view text);

}  // namespace siegel
