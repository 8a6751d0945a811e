#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/scalar.hpp"

namespace siegel {

/// Polynomial variable. The packed code fixes the global order:
/// t-variables first, then matrix entries r[h;i,j] by (h,i,j), then x-entries.
class VarId {
 public:
  enum class Kind : std::uint8_t { T = 0, R = 1, X = 2 };

  constexpr VarId() = default;

  static constexpr VarId t(int h) { return VarId(pack(Kind::T, h, 0, 0)); }
  /// Matrix entry r[h;i,j]; stored with i <= j.
  static constexpr VarId r(int h, int i, int j) {
    return i <= j ? VarId(pack(Kind::R, h, i, j)) : VarId(pack(Kind::R, h, j, i));
  }
  /// Entry of the concatenated g x (g k) matrix X at (row i, column nu).
  static constexpr VarId x(int i, int nu) { return VarId(pack(Kind::X, i, nu >> 8, nu & 0xFF)); }

  constexpr Kind kind() const { return static_cast<Kind>(code_ >> 24); }
  /// Matrix index h for t and r variables, row index i for x-entries.
  constexpr int first() const { return static_cast<int>((code_ >> 16) & 0xFF); }
  constexpr int row() const { return static_cast<int>((code_ >> 8) & 0xFF); }
  constexpr int col() const { return static_cast<int>(code_ & 0xFF); }
  constexpr int x_column() const { return static_cast<int>(code_ & 0xFFFF); }
  constexpr std::uint32_t code() const { return code_; }

  std::string name() const;
  static VarId parse(std::string_view text);

  friend constexpr auto operator<=>(VarId, VarId) = default;

 private:
  explicit constexpr VarId(std::uint32_t c) : code_(c) {}
  static constexpr std::uint32_t pack(Kind k, int a, int b, int c) {
    return (static_cast<std::uint32_t>(k) << 24) | (static_cast<std::uint32_t>(a & 0xFF) << 16) |
           (static_cast<std::uint32_t>(b & 0xFF) << 8) | static_cast<std::uint32_t>(c & 0xFF);
  }
  std::uint32_t code_ = 0;
};

/// Power product of variables, sparse and sorted by VarId.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t e = 1) {
    if (e > 0) f_.emplace_back(v, e), deg_ = e;
  }
  /// Builds from arbitrary (var, exponent) pairs, merging repeats.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return f_; }
  std::uint32_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return f_.empty(); }
  std::uint32_t exponent(VarId v) const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  /// Removes one power of v; precondition exponent(v) > 0.
  Monomial divided_by(VarId v) const;
  /// Monomial with every factor of the given kind removed.
  Monomial without_kind(VarId::Kind k) const;
  /// Only the factors of the given kind.
  Monomial only_kind(VarId::Kind k) const;

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.f_ == y.f_; }
  /// Graded lexicographic: higher total degree first, ties broken lexicographically
  /// over the global variable order.
  static bool grlex_greater(const Monomial& x, const Monomial& y);

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& [v, e] : f_) h = (h ^ (v.code() * 31u + e)) * 1099511628211ULL;
    return h;
  }

  std::string to_string() const;

 private:
  std::vector<Factor> f_;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Sparse multivariate polynomial with exact coefficients.
template <ExactField K>
class MultiPoly {
 public:
  using Terms = std::unordered_map<Monomial, K, MonomialHash>;

  MultiPoly() = default;
  explicit MultiPoly(FieldTag tag) : tag_(std::move(tag)) {}

  static MultiPoly constant(const K& c, FieldTag tag = {}) {
    MultiPoly p(std::move(tag));
    p.add_term(Monomial(), c);
    return p;
  }
  static MultiPoly variable(VarId v, FieldTag tag = {}) {
    MultiPoly p(std::move(tag));
    p.add_term(Monomial(v), K(1));
    return p;
  }

  const FieldTag& tag() const noexcept { return tag_; }
  void set_tag(FieldTag t) { tag_ = std::move(t); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  /// Accumulates c * m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_term(Monomial&& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    tag_ = FieldTag::join(tag_, o.tag_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    tag_ = FieldTag::join(tag_, o.tag_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  MultiPoly operator-() const { return scaled(K(-1)); }

  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly out(FieldTag::join(x.tag_, y.tag_));
    out.terms_.reserve(x.size() * y.size());
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        K c = cx;
        c *= cy;
        out.add_term(mx * my, c);
      }
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const K& s) const {
    MultiPoly out(tag_);
    if (s.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      K v = c;
      v *= s;
      out.terms_.emplace(m, std::move(v));
    }
    return out;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly acc = constant(K(1), tag_);
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
  }

  /// Plain partial derivative with respect to v.
  MultiPoly diff(VarId v) const {
    MultiPoly out(tag_);
    for (const auto& [m, c] : terms_) {
      const auto e = m.exponent(v);
      if (e == 0) continue;
      K v2 = c;
      v2 *= K(static_cast<long>(e));
      out.add_term(m.divided_by(v), v2);
    }
    return out;
  }

  /// Symmetric-matrix derivative ((1 + delta_ij) / 2) d/dr[h;i,j].
  MultiPoly sym_diff(int h, int i, int j) const {
    MultiPoly d = diff(VarId::r(h, i, j));
    if (i != j) d = d.scaled(K(BigRational(1, 2)));
    return d;
  }

  /// Replaces every occurrence of each mapped variable by the given polynomial.
  MultiPoly substitute(const std::map<VarId, MultiPoly>& subs) const {
    MultiPoly out(tag_);
    std::map<std::pair<VarId, std::uint32_t>, MultiPoly> power_cache;
    for (const auto& [m, c] : terms_) {
      MultiPoly term = constant(c, tag_);
      std::vector<Monomial::Factor> kept;
      for (const auto& [v, e] : m.factors()) {
        auto it = subs.find(v);
        if (it == subs.end()) {
          kept.emplace_back(v, e);
          continue;
        }
        auto key = std::make_pair(v, e);
        auto pc = power_cache.find(key);
        if (pc == power_cache.end()) pc = power_cache.emplace(key, it->second.pow(e)).first;
        term *= pc->second;
      }
      if (!kept.empty()) term *= monomial_poly(Monomial::from_factors(std::move(kept)));
      out += term;
    }
    return out;
  }

  /// Value at a point; every variable of the polynomial must be assigned.
  K evaluate(const std::map<VarId, K>& point) const {
    K acc(0);
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (const auto& [v, e] : m.factors()) {
        auto it = point.find(v);
        if (it == point.end()) throw Error("evaluate: variable " + v.name() + " not assigned");
        for (std::uint32_t k = 0; k < e; ++k) t *= it->second;
      }
      acc += t;
    }
    return acc;
  }

  /// Coefficient of the t-power product `t_part`: the sub-sum of terms whose
  /// t-factors equal t_part exactly, with those factors removed.
  MultiPoly t_coefficient(const Monomial& t_part) const {
    MultiPoly out(tag_);
    for (const auto& [m, c] : terms_) {
      if (m.only_kind(VarId::Kind::T) == t_part) out.add_term(m.without_kind(VarId::Kind::T), c);
    }
    return out;
  }

  /// Terms sorted in descending graded lexicographic order.
  std::vector<std::pair<Monomial, K>> sorted_terms() const {
    std::vector<std::pair<Monomial, K>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return Monomial::grlex_greater(x.first, y.first); });
    return v;
  }

  template <ExactField K2, class F>
  MultiPoly<K2> map_coefficients(F&& f, FieldTag tag) const {
    MultiPoly<K2> out(std::move(tag));
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  bool mentions_kind(VarId::Kind k) const {
    for (const auto& [m, c] : terms_) {
      for (const auto& [v, e] : m.factors()) {
        if (v.kind() == k) return true;
      }
    }
    return false;
  }

  /// Equality of the polynomials; field tags are not compared.
  friend bool operator==(const MultiPoly& x, const MultiPoly& y) { return x.terms_ == y.terms_; }

  static MultiPoly monomial_poly(Monomial m, const K& c = K(1), FieldTag tag = {}) {
    MultiPoly p(std::move(tag));
    p.add_term(std::move(m), c);
    return p;
  }

 private:
  FieldTag tag_;
  Terms terms_;
};

using QPoly = MultiPoly<BigRational>;
using RPoly = MultiPoly<RatFunc>;

/// Lifts a rational polynomial into Q(a).
RPoly to_symbolic(const QPoly& p);
/// Specializes a Q(a) polynomial at a = a0 (PoleError if a0 is a pole of a coefficient).
QPoly specialize(const RPoly& p, const BigRational& a0);

}  // namespace siegel
