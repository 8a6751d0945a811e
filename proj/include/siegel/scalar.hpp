#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "siegel/errors.hpp"
#include "siegel/ratfunc.hpp"
#include "siegel/rational.hpp"

namespace siegel {

/// Exact coefficient fields usable by the polynomial containers.
template <class K>
concept ExactField = requires(K x, const K& y) {
  { x += y } -> std::same_as<K&>;
  { x -= y } -> std::same_as<K&>;
  { x *= y } -> std::same_as<K&>;
  { x / y } -> std::convertible_to<K>;
  { -y } -> std::convertible_to<K>;
  { y.is_zero() } -> std::convertible_to<bool>;
  { y == y } -> std::convertible_to<bool>;
  { y.to_string() } -> std::convertible_to<std::string>;
  { K::parse(std::string_view{}) } -> std::convertible_to<K>;
  { y.hash() } -> std::convertible_to<std::size_t>;
};

static_assert(ExactField<BigRational>);
static_assert(ExactField<RatFunc>);

/// Which field the coefficients of a polynomial live in.
///   Rational  - plain Q, no weight dependence.
///   Numeric   - Q with the weight fixed to a0.
///   Symbolic  - Q(a), the weight kept as a formal symbol.
/// Rational joins with anything; two different numeric weights do not mix.
struct FieldTag {
  enum class Kind { Rational, Numeric, Symbolic };
  Kind kind = Kind::Rational;
  BigRational a0;

  static FieldTag rational() { return {}; }
  static FieldTag numeric(BigRational a) { return {Kind::Numeric, std::move(a)}; }
  static FieldTag symbolic() { return {Kind::Symbolic, BigRational(0)}; }

  static FieldTag join(const FieldTag& x, const FieldTag& y) {
    if (x.kind == Kind::Rational) return y;
    if (y.kind == Kind::Rational) return x;
    if (x.kind != y.kind || (x.kind == Kind::Numeric && x.a0 != y.a0)) {
      throw FieldMismatch("coefficient fields differ: " + x.to_string() + " vs " + y.to_string());
    }
    return x;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Rational: return "rational";
      case Kind::Numeric: return "numeric a=" + a0.to_string();
      case Kind::Symbolic: return "symbolic";
    }
    return "?";
  }

  static FieldTag parse(std::string_view text) {
    if (text == "rational") return rational();
    if (text == "symbolic") return symbolic();
    if (text.starts_with("numeric a=")) return numeric(BigRational::parse(text.substr(10)));
    throw ParseError("unknown field tag '" + std::string(text) + "'");
  }

  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

}  // namespace siegel
