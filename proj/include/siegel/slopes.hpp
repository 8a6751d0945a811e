#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siegel/ratfunc.hpp"
#include "siegel/rational.hpp"
#include "siegel/scalar.hpp"

namespace siegel {

/// lam * lambda - del * delta. On the Torelli side the basis reads lambda_1, delta'.
struct DivClass {
  enum class Basis { Siegel, Curves };

  BigRational lam;
  BigRational del;
  std::string label;
  /// The delta-coefficient is only known to be at least `del`.
  bool del_lower_bound = false;
  Basis basis = Basis::Siegel;

  /// "12 lambda - delta", "5 lambda - 1/2 delta", "34 lambda1 - 4 delta'".
  std::string to_string() const;

  friend bool operator==(const DivClass& x, const DivClass& y) {
    return x.lam == y.lam && x.del == y.del && x.basis == y.basis;
  }
};

/// lam/del; empty for del = 0 (infinite slope).
std::optional<BigRational> slope(const DivClass& c);
/// The slope as text, "inf" when infinite.
std::string slope_string(const DivClass& c);

/// 2^{g-2}(2^g+1) lambda - 2^{2g-5} delta, g >= 2.
DivClass class_tnull(int g);
/// (g!(g+3)/4 - 2^{g-3}(2^g+1)) lambda - ((g+1)!/24 - 2^{2g-6}) delta, g >= 4.
DivClass class_N0prime(int g);
/// Operator output (ga + 2) lambda - (gb) delta; the delta-coefficient is a lower bound.
DivClass class_operator_output(int g, const DivClass& in);
/// a/b + 2/(bg).
BigRational moving_bound(int g, const DivClass& in);
/// 8 + 4/g, g >= 3.
BigRational hyperelliptic_bound(int g);
/// Same coefficients in the curve basis.
DivClass torelli_pullback(const DivClass& c);

/// (ga + 2)/(gb) and a/b + 2/(bg); equal as elements of K.
template <ExactField K>
K operator_slope(int g, const K& a, const K& b);
template <ExactField K>
K moving_bound_value(int g, const K& a, const K& b);

struct SlopeEntry {
  enum class Kind { Empty, Exact, UpperBound, Interval };
  Kind kind = Kind::Empty;
  BigRational lo, hi;
  bool conjectural = false;
  /// How the value is obtained: a class formula or a cited constant.
  std::string source;

  /// "10", "<= 271/35", "[53/10, 7]", "(?) <= 43/6" or "".
  std::string to_string() const;
};

struct SlopeRow {
  int genus = 0;
  SlopeEntry effective;
  SlopeEntry moving;
};

/// Known effective and moving slopes of the perfect-cone compactification, g = 1..6.
std::vector<SlopeRow> known_slopes_table();
/// The table as printed text, one row per line: "g | eff | mov".
std::string format_slopes_table(const std::vector<SlopeRow>& rows);

}  // namespace siegel
