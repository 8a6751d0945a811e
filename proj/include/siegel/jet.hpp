#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/scalar.hpp"

namespace siegel {

/// A named function symbol, or a named constant (weight parameter) that
/// derivatives annihilate.
struct Symbol {
  enum class Kind : std::uint8_t { Function, Parameter };
  std::string name;
  Kind kind = Kind::Function;

  static Symbol function(std::string n) { return {std::move(n), Kind::Function}; }
  static Symbol parameter(std::string n) { return {std::move(n), Kind::Parameter}; }
  bool is_parameter() const noexcept { return kind == Kind::Parameter; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using IndexPair = std::pair<std::uint8_t, std::uint8_t>;

/// A symbol with a multiset of normalized derivatives d^_{ij}, i <= j.
/// F{(1,2)} stands for ((1 + delta_ij)/2) dF/dtau_ij; the empty multiset is F.
class JetVar {
 public:
  JetVar() = default;
  explicit JetVar(Symbol s, std::vector<IndexPair> pairs = {});

  const Symbol& symbol() const noexcept { return sym_; }
  const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }
  bool is_bare() const noexcept { return pairs_.empty(); }
  int order() const noexcept { return static_cast<int>(pairs_.size()); }

  JetVar differentiated(int i, int j) const;

  std::string to_string() const;

  friend auto operator<=>(const JetVar&, const JetVar&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::string>{}(sym_.name) ^ (static_cast<std::size_t>(sym_.kind) << 7);
    for (const auto& [i, j] : pairs_) h = h * 1315423911u + i * 17u + j;
    return h;
  }

 private:
  Symbol sym_;
  std::vector<IndexPair> pairs_;
};

/// Power product of jet variables, sorted.
class JetMonomial {
 public:
  using Factor = std::pair<JetVar, std::uint32_t>;

  JetMonomial() = default;
  explicit JetMonomial(JetVar v, std::uint32_t e = 1);
  static JetMonomial from_factors(std::vector<Factor> f);

  const std::vector<Factor>& factors() const noexcept { return f_; }
  bool is_one() const noexcept { return f_.empty(); }
  std::uint32_t degree() const noexcept;

  friend JetMonomial operator*(const JetMonomial& x, const JetMonomial& y);
  /// Exponent of the undifferentiated symbol.
  std::uint32_t bare_degree(const std::string& symbol) const;
  /// Monomial with one power of the i-th factor removed.
  JetMonomial without_one(std::size_t i) const;

  friend bool operator==(const JetMonomial&, const JetMonomial&) = default;
  friend bool operator<(const JetMonomial& x, const JetMonomial& y) { return x.f_ < y.f_; }

  std::size_t hash() const noexcept {
    std::size_t h = 14695981039346656037ULL;
    for (const auto& [v, e] : f_) h = (h ^ (v.hash() + e)) * 1099511628211ULL;
    return h;
  }

  std::string to_string() const;
  static JetMonomial parse(std::string_view text);

 private:
  std::vector<Factor> f_;
};

struct JetMonomialHash {
  std::size_t operator()(const JetMonomial& m) const noexcept { return m.hash(); }
};

/// Polynomial in jet variables with exact coefficients.
template <ExactField K>
class JetPoly {
 public:
  using Terms = std::unordered_map<JetMonomial, K, JetMonomialHash>;

  JetPoly() = default;
  explicit JetPoly(FieldTag tag) : tag_(std::move(tag)) {}

  static JetPoly constant(const K& c, FieldTag tag = {}) {
    JetPoly p(std::move(tag));
    p.add_term(JetMonomial(), c);
    return p;
  }
  static JetPoly var(JetVar v, FieldTag tag = {}) {
    JetPoly p(std::move(tag));
    p.add_term(JetMonomial(std::move(v)), K(1));
    return p;
  }
  static JetPoly symbol(const Symbol& s, FieldTag tag = {}) { return var(JetVar(s), std::move(tag)); }

  const FieldTag& tag() const noexcept { return tag_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  K coefficient(const JetMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const JetMonomial& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  JetPoly& operator+=(const JetPoly& o) {
    tag_ = FieldTag::join(tag_, o.tag_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  JetPoly& operator-=(const JetPoly& o) {
    tag_ = FieldTag::join(tag_, o.tag_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend JetPoly operator+(JetPoly x, const JetPoly& y) { return x += y; }
  friend JetPoly operator-(JetPoly x, const JetPoly& y) { return x -= y; }
  JetPoly operator-() const { return scaled(K(-1)); }

  friend JetPoly operator*(const JetPoly& x, const JetPoly& y) {
    JetPoly out(FieldTag::join(x.tag_, y.tag_));
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        K c = cx;
        c *= cy;
        out.add_term(mx * my, c);
      }
    }
    return out;
  }
  JetPoly& operator*=(const JetPoly& o) { return *this = *this * o; }

  JetPoly scaled(const K& s) const {
    JetPoly out(tag_);
    for (const auto& [m, c] : terms_) {
      K v = c;
      v *= s;
      out.add_term(m, v);
    }
    return out;
  }

  JetPoly pow(unsigned e) const {
    JetPoly acc = constant(K(1), tag_);
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
  }

  /// Formal normalized derivative d^_{ij} (Leibniz rule; parameters are constants).
  JetPoly diff(int i, int j) const {
    JetPoly out(tag_);
    for (const auto& [m, c] : terms_) {
      const auto& f = m.factors();
      for (std::size_t s = 0; s < f.size(); ++s) {
        if (f[s].first.symbol().is_parameter()) continue;
        K v = c;
        v *= K(static_cast<long>(f[s].second));
        out.add_term(m.without_one(s) * JetMonomial(f[s].first.differentiated(i, j)), v);
      }
    }
    return out;
  }

  /// Sub-sum of monomials free of the bare symbol: the value on {symbol = 0}.
  JetPoly mod_symbol(const std::string& symbol) const {
    JetPoly out(tag_);
    for (const auto& [m, c] : terms_) {
      if (m.bare_degree(symbol) == 0) out.add_term(m, c);
    }
    return out;
  }

  /// Smallest exponent of the bare symbol over all monomials (0 for the zero poly).
  std::uint32_t min_bare_degree(const std::string& symbol) const {
    std::uint32_t best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const auto e = m.bare_degree(symbol);
      best = first ? e : std::min(best, e);
      first = false;
    }
    return best;
  }

  /// Terms in a deterministic order.
  std::vector<std::pair<JetMonomial, K>> sorted_terms() const {
    std::vector<std::pair<JetMonomial, K>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  template <ExactField K2, class F>
  JetPoly<K2> map_coefficients(F&& f, FieldTag tag) const {
    JetPoly<K2> out(std::move(tag));
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  friend bool operator==(const JetPoly& x, const JetPoly& y) { return x.terms_ == y.terms_; }

 private:
  FieldTag tag_;
  Terms terms_;
};

using QJet = JetPoly<BigRational>;
using RJet = JetPoly<RatFunc>;

/// JET1: header "JET1 <field tag>", then "coeff | F{(1,1)(2,2)} G{}^2 k" per term.
template <ExactField K>
std::string to_jet1(const JetPoly<K>& p) {
  std::string out = "JET1 " + p.tag().to_string() + "\n";
  for (const auto& [m, c] : p.sorted_terms()) {
    out += c.to_string() + " |";
    if (!m.is_one()) out += " " + m.to_string();
    out += '\n';
  }
  return out;
}

template <ExactField K>
JetPoly<K> parse_jet1(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("JET1 ")) throw ParseError("JET1: missing header");
  JetPoly<K> p(FieldTag::parse(line.substr(5)));
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw ParseError("JET1: missing '|' in '" + line + "'");
    std::string lhs = line.substr(0, bar);
    while (!lhs.empty() && lhs.back() == ' ') lhs.pop_back();
    p.add_term(JetMonomial::parse(line.substr(bar + 1)), K::parse(lhs));
  }
  return p;
}

}  // namespace siegel
