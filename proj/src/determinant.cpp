#include "siegel/determinant.hpp"

#include <bit>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace siegel {

MultiIndex::MultiIndex(std::vector<int> entries) : n_(std::move(entries)) {
  for (int v : n_) {
    if (v < 0) throw Error("multi-index entries must be nonnegative");
  }
}

int MultiIndex::total() const noexcept { return std::accumulate(n_.begin(), n_.end(), 0); }

MultiIndex MultiIndex::plus_unit(int h) const {
  auto v = n_;
  v.at(static_cast<std::size_t>(h - 1)) += 1;
  return MultiIndex(std::move(v));
}

MultiIndex MultiIndex::minus_unit(int h) const {
  auto v = n_;
  auto& e = v.at(static_cast<std::size_t>(h - 1));
  if (e == 0) throw Error("minus_unit: entry already zero");
  e -= 1;
  return MultiIndex(std::move(v));
}

Monomial MultiIndex::t_monomial() const {
  std::vector<Monomial::Factor> f;
  for (std::size_t h = 0; h < n_.size(); ++h) {
    if (n_[h] > 0) f.emplace_back(VarId::t(static_cast<int>(h) + 1), static_cast<std::uint32_t>(n_[h]));
  }
  return Monomial::from_factors(std::move(f));
}

MultiIndex MultiIndex::sorted_descending() const {
  auto v = n_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return MultiIndex(std::move(v));
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(n_[i]);
  }
  return out + ")";
}

MultiIndex MultiIndex::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("bad multi-index '" + std::string(text) + "'");
  }
  std::vector<int> v;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto piece = body.substr(0, comma);
    int x = 0;
    auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), x);
    if (ec != std::errc() || p != piece.data() + piece.size()) {
      throw ParseError("bad multi-index '" + std::string(text) + "'");
    }
    v.push_back(x);
    if (comma == body.npos) break;
    body.remove_prefix(comma + 1);
  }
  return MultiIndex(std::move(v));
}

std::vector<MultiIndex> compositions(int total, int parts) {
  std::vector<MultiIndex> out;
  if (parts <= 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::vector<std::vector<QPoly>> pencil_matrix(int g) {
  std::vector<std::vector<QPoly>> m(static_cast<std::size_t>(g), std::vector<QPoly>(static_cast<std::size_t>(g)));
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      QPoly e;
      for (int h = 1; h <= g; ++h) {
        e.add_term(Monomial::from_factors({{VarId::t(h), 1}, {VarId::r(h, i, j), 1}}), BigRational(1));
      }
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(e);
    }
  }
  return m;
}

QPoly determinant(const std::vector<std::vector<QPoly>>& m) {
  const auto n = m.size();
  if (n == 0) return QPoly::constant(BigRational(1));
  for (const auto& row : m) {
    if (row.size() != n) throw Error("determinant: matrix is not square");
  }
  if (n > 20) throw Error("determinant: matrix too large");
  // partial[S] = signed sum over injections of the first |S| rows onto the columns S.
  std::map<unsigned, QPoly> partial;
  partial.emplace(0u, QPoly::constant(BigRational(1)));
  for (std::size_t row = 0; row < n; ++row) {
    std::map<unsigned, QPoly> next;
    for (const auto& [used, poly] : partial) {
      for (std::size_t col = 0; col < n; ++col) {
        const unsigned bit = 1u << col;
        if (used & bit) continue;
        if (m[row][col].is_zero()) continue;
        // Inversions added by placing `col` after the columns already used.
        const int inversions = std::popcount(used >> (col + 1));
        QPoly prod = poly * m[row][col];
        if (inversions % 2) prod = -prod;
        auto [it, inserted] = next.try_emplace(used | bit, std::move(prod));
        if (!inserted) it->second += prod;
      }
    }
    partial = std::move(next);
  }
  const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
  auto it = partial.find(full);
  return it == partial.end() ? QPoly() : it->second;
}

const QPoly& det_expand(int g) {
  if (g < 1) throw Error("det_expand: genus must be at least 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QPoly>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(g);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<QPoly>(determinant(pencil_matrix(g)));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(g, std::move(value));
  return *it->second;
}

QPoly coeff_R(int g, const MultiIndex& n) {
  if (n.size() != g || n.total() != g) {
    throw Error("coeff_R: multi-index " + n.to_string() + " is not in N_" + std::to_string(g));
  }
  return det_expand(g).t_coefficient(n.t_monomial());
}

QPoly minor_coeff_R(int g, int k, int l, const MultiIndex& n_prime) {
  if (k < 1 || k > g || l < 1 || l > g) throw Error("minor_coeff_R: row/column index out of range");
  if (n_prime.size() != g || n_prime.total() != g - 1) {
    throw Error("minor_coeff_R: multi-index " + n_prime.to_string() + " does not sum to g-1");
  }
  const auto full = pencil_matrix(g);
  std::vector<std::vector<QPoly>> minor;
  for (int i = 1; i <= g; ++i) {
    if (i == k) continue;
    std::vector<QPoly> row;
    for (int j = 1; j <= g; ++j) {
      if (j == l) continue;
      row.push_back(full[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    }
    minor.push_back(std::move(row));
  }
  return determinant(minor).t_coefficient(n_prime.t_monomial());
}

}  // namespace siegel
