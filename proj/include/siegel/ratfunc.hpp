#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "siegel/rational.hpp"

namespace siegel {

/// Dense univariate polynomial in the weight symbol `a` over the rationals.
/// Coefficients are stored low degree first; trailing zeros are never kept.
class UPoly {
 public:
  UPoly() = default;
  UPoly(BigRational c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<BigRational> coeffs);

  /// The monomial a.
  static UPoly a();

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const noexcept { return c_; }
  BigRational coeff(int e) const;
  const BigRational& leading() const;
  bool is_constant() const noexcept { return c_.size() <= 1; }

  BigRational eval(const BigRational& a0) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly x, const UPoly& y) { return x += y; }
  friend UPoly operator-(UPoly x, const UPoly& y) { return x -= y; }
  friend UPoly operator*(const UPoly& x, const UPoly& y);
  UPoly operator-() const;
  UPoly scaled(const BigRational& s) const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den);
  /// Monic gcd (zero only when both inputs are zero).
  static UPoly gcd(UPoly x, UPoly y);
  UPoly monic() const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Sparse text form "c*a^e + c*a^e + c"; "0" for the zero polynomial.
  std::string to_string() const;
  static UPoly parse(std::string_view text);

  std::size_t hash() const noexcept;

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Element of Q(a): reduced quotient with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(BigRational(1)) {}
  RatFunc(long c) : RatFunc(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(BigRational c);                        // NOLINT(google-explicit-constructor)
  RatFunc(UPoly p);                              // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  static RatFunc a() { return RatFunc(UPoly::a()); }

  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return den_.is_constant() && num_ == UPoly(BigRational(1)); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  /// Exact value at a = a0; throws PoleError when a0 is a root of the denominator.
  BigRational eval_at(const BigRational& a0) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
  friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
  friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
  friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// "num ; den" with both sides in UPoly text form.
  std::string to_string() const;
  static RatFunc parse(std::string_view text);

  std::size_t hash() const noexcept { return num_.hash() * 31 + den_.hash(); }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

}  // namespace siegel
