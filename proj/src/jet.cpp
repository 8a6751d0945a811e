#include "siegel/jet.hpp"

#include <cctype>
#include <charconv>

namespace siegel {

JetVar::JetVar(Symbol s, std::vector<IndexPair> pairs) : sym_(std::move(s)), pairs_(std::move(pairs)) {
  if (sym_.is_parameter() && !pairs_.empty()) throw Error("parameter '" + sym_.name + "' cannot carry derivatives");
  for (auto& [i, j] : pairs_) {
    if (i == 0 || j == 0) throw Error("jet derivative indices are 1-based");
    if (i > j) std::swap(i, j);
  }
  std::sort(pairs_.begin(), pairs_.end());
}

JetVar JetVar::differentiated(int i, int j) const {
  auto p = pairs_;
  p.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
  return JetVar(sym_, std::move(p));
}

std::string JetVar::to_string() const {
  if (sym_.is_parameter()) return sym_.name;
  std::string out = sym_.name + "{";
  for (const auto& [i, j] : pairs_) out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out + "}";
}

JetMonomial::JetMonomial(JetVar v, std::uint32_t e) {
  if (e > 0) f_.emplace_back(std::move(v), e);
}

JetMonomial JetMonomial::from_factors(std::vector<Factor> f) {
  std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  JetMonomial m;
  for (auto& [v, e] : f) {
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v) {
      m.f_.back().second += e;
    } else {
      m.f_.emplace_back(std::move(v), e);
    }
  }
  return m;
}

std::uint32_t JetMonomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

JetMonomial operator*(const JetMonomial& x, const JetMonomial& y) {
  JetMonomial out;
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
  return out;
}

std::uint32_t JetMonomial::bare_degree(const std::string& symbol) const {
  for (const auto& [v, e] : f_) {
    if (v.is_bare() && !v.symbol().is_parameter() && v.symbol().name == symbol) return e;
  }
  return 0;
}

JetMonomial JetMonomial::without_one(std::size_t i) const {
  JetMonomial out = *this;
  if (--out.f_.at(i).second == 0) out.f_.erase(out.f_.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::string JetMonomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : f_) {
    if (!out.empty()) out += ' ';
    out += v.to_string();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

int parse_small(std::string_view s, const std::string& ctx) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("JET1: bad number in '" + ctx + "'");
  return v;
}

}  // namespace

JetMonomial JetMonomial::parse(std::string_view text) {
  std::vector<Factor> f;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::uint32_t e = 1;
    std::string_view body = tok;
    const auto caret = body.rfind('^');
    const auto close = body.rfind('}');
    if (caret != body.npos && (close == body.npos || caret > close)) {
      e = static_cast<std::uint32_t>(parse_small(body.substr(caret + 1), tok));
      body = body.substr(0, caret);
    }
    const auto brace = body.find('{');
    if (brace == body.npos) {
      if (body.empty() || !std::isalpha(static_cast<unsigned char>(body[0]))) throw ParseError("JET1: bad token '" + tok + "'");
      f.emplace_back(JetVar(Symbol::parameter(std::string(body))), e);
      continue;
    }
    if (body.back() != '}') throw ParseError("JET1: bad token '" + tok + "'");
    std::vector<IndexPair> pairs;
    std::string_view inner = body.substr(brace + 1, body.size() - brace - 2);
    while (!inner.empty()) {
      if (inner.front() != '(') throw ParseError("JET1: bad derivative list in '" + tok + "'");
      const auto close = inner.find(')');
      const auto comma = inner.find(',');
      if (close == inner.npos || comma == inner.npos || comma > close) throw ParseError("JET1: bad pair in '" + tok + "'");
      const int i = parse_small(inner.substr(1, comma - 1), tok);
      const int j = parse_small(inner.substr(comma + 1, close - comma - 1), tok);
      pairs.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
      inner.remove_prefix(close + 1);
    }
    f.emplace_back(JetVar(Symbol::function(std::string(body.substr(0, brace))), std::move(pairs)), e);
  }
  return from_factors(std::move(f));
}

}  // namespace siegel
