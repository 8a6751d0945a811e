#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "siegel/multipoly.hpp"

namespace siegel {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// POLY1: a header line "POLY1 <field tag>", then one term per line in
/// descending grlex order, "coeff | var^e var ..." (empty right side for a constant).
template <ExactField K>
std::string to_poly1(const MultiPoly<K>& p) {
  std::string out = "POLY1 " + p.tag().to_string() + "\n";
  for (const auto& [m, c] : p.sorted_terms()) {
    out += c.to_string();
    out += " |";
    if (!m.is_one()) out += " " + m.to_string();
    out += '\n';
  }
  return out;
}

template <ExactField K>
MultiPoly<K> parse_poly1(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("POLY1: empty input");
  const auto header = detail::trim(line);
  if (!header.starts_with("POLY1 ")) throw ParseError("POLY1: missing header");
  MultiPoly<K> p(FieldTag::parse(detail::trim(header.substr(6))));
  while (std::getline(in, line)) {
    const auto body = detail::trim(line);
    if (body.empty()) continue;
    const auto bar = body.find('|');
    if (bar == body.npos) throw ParseError("POLY1: missing '|' in '" + std::string(body) + "'");
    const K c = K::parse(detail::trim(body.substr(0, bar)));
    std::vector<Monomial::Factor> f;
    std::istringstream vars{std::string(body.substr(bar + 1))};
    std::string tok;
    while (vars >> tok) {
      std::uint32_t e = 1;
      std::string_view name = tok;
      if (const auto caret = name.find('^'); caret != name.npos) {
        e = static_cast<std::uint32_t>(std::stoul(std::string(name.substr(caret + 1))));
        name = name.substr(0, caret);
      }
      f.emplace_back(VarId::parse(name), e);
    }
    p.add_term(Monomial::from_factors(std::move(f)), c);
  }
  return p;
}

}  // namespace siegel
