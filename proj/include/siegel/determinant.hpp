#pragma once

#include <string>
#include <vector>

#include "siegel/multipoly.hpp"

namespace siegel {

/// Tuple (n_1, ..., n_g) of nonnegative integers.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);

  int size() const noexcept { return static_cast<int>(n_.size()); }
  int operator[](int h) const { return n_.at(static_cast<std::size_t>(h)); }  // 0-based
  int total() const noexcept;
  const std::vector<int>& entries() const noexcept { return n_; }

  /// n + e_h (h is 1-based, as in the matrix index).
  MultiIndex plus_unit(int h) const;
  MultiIndex minus_unit(int h) const;

  /// The t-power product t_1^{n_1} ... t_g^{n_g}.
  Monomial t_monomial() const;

  /// Entries sorted in non-increasing order.
  MultiIndex sorted_descending() const;

  std::string to_string() const;
  static MultiIndex parse(std::string_view text);

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> n_;
};

/// All n in N^parts with sum total, in lexicographically decreasing order.
std::vector<MultiIndex> compositions(int total, int parts);

/// The matrix M = t_1 R_1 + ... + t_g R_g, entries as polynomials.
std::vector<std::vector<QPoly>> pencil_matrix(int g);

/// Determinant of a square matrix of polynomials, expanded row by row with
/// terms sharing the same set of used columns merged as soon as they appear.
QPoly determinant(const std::vector<std::vector<QPoly>>& m);

/// det(t_1 R_1 + ... + t_g R_g). Cached per genus; safe to call concurrently.
const QPoly& det_expand(int g);

/// The basis polynomial R(n): coefficient of t^n in det_expand(g).
QPoly coeff_R(int g, const MultiIndex& n);

/// Coefficient of t^{n'} in the determinant of M with row k and column l deleted.
QPoly minor_coeff_R(int g, int k, int l, const MultiIndex& n_prime);

}  // namespace siegel
