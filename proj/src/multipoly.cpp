#include "siegel/multipoly.hpp"

#include <cctype>
#include <charconv>

namespace siegel {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string VarId::name() const {
  switch (kind()) {
    case Kind::T: return "t[" + std::to_string(first()) + "]";
    case Kind::R:
      return "r[" + std::to_string(first()) + ";" + std::to_string(row()) + "," + std::to_string(col()) + "]";
    case Kind::X: return "x[" + std::to_string(first()) + "," + std::to_string(x_column()) + "]";
  }
  return "?";
}

VarId VarId::parse(std::string_view text) {
  if (text.size() < 4 || text[1] != '[' || text.back() != ']') {
    throw ParseError("bad variable '" + std::string(text) + "'");
  }
  const auto body = text.substr(2, text.size() - 3);
  switch (text[0]) {
    case 't': return t(parse_int(body));
    case 'r': {
      const auto semi = body.find(';');
      const auto comma = body.find(',');
      if (semi == body.npos || comma == body.npos || comma < semi) {
        throw ParseError("bad variable '" + std::string(text) + "'");
      }
      return r(parse_int(body.substr(0, semi)), parse_int(body.substr(semi + 1, comma - semi - 1)),
               parse_int(body.substr(comma + 1)));
    }
    case 'x': {
      const auto comma = body.find(',');
      if (comma == body.npos) throw ParseError("bad variable '" + std::string(text) + "'");
      return x(parse_int(body.substr(0, comma)), parse_int(body.substr(comma + 1)));
    }
    default: throw ParseError("bad variable '" + std::string(text) + "'");
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v) {
      m.f_.back().second += e;
    } else {
      m.f_.emplace_back(v, e);
    }
    m.deg_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), v, [](const Factor& f, VarId x) { return f.first < x; });
  return (it != f_.end() && it->first == v) ? it->second : 0;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.f_.reserve(x.f_.size() + y.f_.size());
  auto i = x.f_.begin();
  auto j = y.f_.begin();
  while (i != x.f_.end() && j != y.f_.end()) {
    if (i->first < j->first) {
      out.f_.push_back(*i++);
    } else if (j->first < i->first) {
      out.f_.push_back(*j++);
    } else {
      out.f_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.f_.insert(out.f_.end(), i, x.f_.end());
  out.f_.insert(out.f_.end(), j, y.f_.end());
  out.deg_ = x.deg_ + y.deg_;
  return out;
}

Monomial Monomial::divided_by(VarId v) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.f_.begin(), out.f_.end(), v, [](const Factor& f, VarId x) { return f.first < x; });
  if (it == out.f_.end() || it->first != v) throw Error("divided_by: variable absent");
  if (--it->second == 0) out.f_.erase(it);
  --out.deg_;
  return out;
}

Monomial Monomial::without_kind(VarId::Kind k) const {
  Monomial out;
  for (const auto& f : f_) {
    if (f.first.kind() != k) {
      out.f_.push_back(f);
      out.deg_ += f.second;
    }
  }
  return out;
}

Monomial Monomial::only_kind(VarId::Kind k) const {
  Monomial out;
  for (const auto& f : f_) {
    if (f.first.kind() == k) {
      out.f_.push_back(f);
      out.deg_ += f.second;
    }
  }
  return out;
}

bool Monomial::grlex_greater(const Monomial& x, const Monomial& y) {
  if (x.deg_ != y.deg_) return x.deg_ > y.deg_;
  // Lex over the global order: the first variable (smallest VarId) whose
  // exponents differ decides.
  auto i = x.f_.begin();
  auto j = y.f_.begin();
  while (i != x.f_.end() && j != y.f_.end()) {
    if (i->first != j->first) return i->first < j->first;
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  return i != x.f_.end() && j == y.f_.end();
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : f_) {
    if (!out.empty()) out += ' ';
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

RPoly to_symbolic(const QPoly& p) {
  FieldTag tag = p.tag().kind == FieldTag::Kind::Numeric ? p.tag() : FieldTag::symbolic();
  if (tag.kind == FieldTag::Kind::Numeric) throw FieldMismatch("cannot lift a numeric-weight polynomial to Q(a)");
  return p.map_coefficients<RatFunc>([](const BigRational& c) { return RatFunc(c); }, tag);
}

QPoly specialize(const RPoly& p, const BigRational& a0) {
  return p.map_coefficients<BigRational>([&](const RatFunc& c) { return c.eval_at(a0); },
                                         FieldTag::numeric(a0));
}

}  // namespace siegel
