#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <string_view>

#include "siegel/jet.hpp"
#include "siegel/rational.hpp"

namespace siegel {

/// Truncated genus-1 expansion sum c_n q^{n/scale}, 0 <= n <= trunc.
/// Derivatives are the normalized (1/2 pi i) d/dtau; tau_factor counts them.
class QExp1 {
 public:
  QExp1() = default;
  QExp1(BigRational weight, int trunc, int scale = 1);

  const BigRational& weight() const noexcept { return weight_; }
  int trunc() const noexcept { return trunc_; }
  int scale() const noexcept { return scale_; }
  int tau_factor() const noexcept { return tau_factor_; }
  bool character() const noexcept { return character_; }
  void set_weight(BigRational w) { weight_ = std::move(w); }
  void set_tau_factor(int t) { tau_factor_ = t; }
  void set_character(bool c) { character_ = c; }

  const std::map<int, BigRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigRational coeff(int n) const;
  /// Accumulates; exponents beyond the truncation are dropped.
  void add_term(int n, const BigRational& c);

  QExp1& operator+=(const QExp1& o);
  QExp1& operator-=(const QExp1& o);
  friend QExp1 operator+(QExp1 x, const QExp1& y) { return x += y; }
  friend QExp1 operator-(QExp1 x, const QExp1& y) { return x -= y; }
  friend QExp1 operator*(const QExp1& x, const QExp1& y);
  QExp1 scaled(const BigRational& s) const;
  QExp1 pow(unsigned e) const;
  QExp1 truncated(int n) const;

  /// (1/2 pi i) d/dtau: c_n -> (n/scale) c_n.
  QExp1 diff() const;
  /// Smallest n/scale with a nonzero coefficient.
  BigRational order() const;

  std::complex<double> evaluate(std::complex<double> tau) const;

  friend bool operator==(const QExp1&, const QExp1&) = default;

 private:
  void check_compatible(const QExp1& o) const;
  BigRational weight_;
  int trunc_ = 0;
  int scale_ = 1;
  int tau_factor_ = 0;
  bool character_ = false;
  std::map<int, BigRational> terms_;
};

/// Scaled exponent (alpha, beta, gamma) for q1^{alpha/8} zeta^{beta/8} q2^{gamma/8}.
using Exp3 = std::array<int, 3>;

/// Truncated genus-2 expansion on the exponent lattice scaled by 8.
/// Every stored term has alpha, gamma >= 0, beta^2 <= 4 alpha gamma, alpha + gamma <= trunc.
class QExp2 {
 public:
  static constexpr int kScale = 8;

  QExp2() = default;
  QExp2(BigRational weight, int trunc);

  const BigRational& weight() const noexcept { return weight_; }
  int trunc() const noexcept { return trunc_; }
  int tau_factor() const noexcept { return tau_factor_; }
  bool character() const noexcept { return character_; }
  void set_weight(BigRational w) { weight_ = std::move(w); }
  void set_tau_factor(int t) { tau_factor_ = t; }
  void set_character(bool c) { character_ = c; }

  const std::map<Exp3, BigRational>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigRational coeff(const Exp3& e) const;
  /// Accumulates; throws on a non-semidefinite exponent, drops terms past trunc.
  void add_term(const Exp3& e, const BigRational& c);

  QExp2& operator+=(const QExp2& o);
  QExp2& operator-=(const QExp2& o);
  friend QExp2 operator+(QExp2 x, const QExp2& y) { return x += y; }
  friend QExp2 operator-(QExp2 x, const QExp2& y) { return x -= y; }
  friend QExp2 operator*(const QExp2& x, const QExp2& y);
  QExp2 scaled(const BigRational& s) const;
  QExp2 pow(unsigned e) const;
  QExp2 truncated(int n) const;

  /// Normalized derivative (1/2 pi i) d^_{ij}: multiplies by alpha/8, beta/16 or gamma/8.
  QExp2 diff(int i, int j) const;

  friend bool operator==(const QExp2&, const QExp2&) = default;

  /// Value of the truncated series at tau = [[t11, t12], [t12, t22]].
  std::complex<double> evaluate(std::complex<double> t11, std::complex<double> t12, std::complex<double> t22) const;

 private:
  void check_compatible(const QExp2& o) const;
  BigRational weight_;
  int trunc_ = 0;
  int tau_factor_ = 0;
  bool character_ = false;
  std::map<Exp3, BigRational> terms_;
};

QExp2 q_diff(const QExp2& f, int i, int j);

/// Product of many factors by balanced pairing (same result as a left fold).
QExp2 product_tree(std::vector<QExp2> factors);

/// Fourier-Jacobi order min gamma/8; throws when f vanishes to the truncation.
BigRational fj_order(const QExp2& f);
/// Terms with gamma/8 = r, keyed by (alpha, beta).
std::map<std::pair<int, int>, BigRational> fj_slice(const QExp2& f, const BigRational& r);

/// Evaluates a jet polynomial on expansions. Function symbols come from `bind`,
/// parameters from `params`. Every monomial must have the same weight
/// (sum of symbol weights + 2 * #derivatives / genus) and derivative count.
QExp2 eval_jetpoly(const QJet& p, const std::map<std::string, QExp2>& bind,
                   const std::map<std::string, BigRational>& params = {});
QExp1 eval_jetpoly(const QJet& p, const std::map<std::string, QExp1>& bind,
                   const std::map<std::string, BigRational>& params = {});

/// SMF1 text. Genus-2 lines are "alpha beta gamma coeff", genus-1 lines "n coeff".
std::string to_smf1(const QExp2& f);
std::string to_smf1(const QExp1& f);
QExp2 parse_smf1_genus2(std::string_view text);
QExp1 parse_smf1_genus1(std::string_view text);
/// Genus recorded in an SMF1 header.
int smf1_genus(std::string_view text);

}  // namespace siegel
