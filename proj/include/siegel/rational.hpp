#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace siegel {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(long n, long d);
  explicit BigRational(mpz_class n, mpz_class d = 1);
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional sign.
  static BigRational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  bool is_integer() const noexcept { return v_.get_den() == 1; }
  int sign() const noexcept { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  BigRational pow(int e) const;
  BigRational inverse() const;
  BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-v_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const noexcept;

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x) {
    return os << x.to_string();
  }

 private:
  mpq_class v_;
};

BigRational factorial(int n);
BigRational binomial(int n, int k);

}  // namespace siegel

template <>
struct std::hash<siegel::BigRational> {
  std::size_t operator()(const siegel::BigRational& x) const noexcept { return x.hash(); }
};
