#include "siegel/jetops.hpp"

#include <algorithm>
#include <numeric>

namespace siegel {

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

// Calls fn(sign, sigma) for every bijection positions -> positions.
template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    fn(permutation_sign(p), p);
  } while (std::next_permutation(p.begin(), p.end()));
}

IndexPair pair_of(int i, int j) { return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}; }

}  // namespace

std::vector<std::vector<int>> subsets(int g, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= g; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<int> complement(int g, const std::vector<int>& s) {
  std::vector<int> out;
  for (int v = 1; v <= g; ++v) {
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  }
  return out;
}

QJet jet_minor_first(const Symbol& f, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error("jet_minor_first: non-square minor");
  QJet out;
  for_each_permutation(rows.size(), [&](int sign, const std::vector<int>& p) {
    std::vector<JetMonomial::Factor> fac;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      fac.emplace_back(JetVar(f, {pair_of(rows[k], cols[static_cast<std::size_t>(p[k])])}), 1);
    }
    out.add_term(JetMonomial::from_factors(std::move(fac)), BigRational(sign));
  });
  return out;
}

QJet jet_det_partial(const Symbol& f, int g) {
  if (g < 1) throw Error("jet_det_partial: genus must be at least 1");
  std::vector<int> all(static_cast<std::size_t>(g));
  std::iota(all.begin(), all.end(), 1);
  return jet_minor_first(f, all, all);
}

QJet jet_det_operator(const Symbol& f, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error("jet_det_operator: non-square minor");
  QJet out;
  for_each_permutation(rows.size(), [&](int sign, const std::vector<int>& p) {
    std::vector<IndexPair> pairs;
    for (std::size_t k = 0; k < rows.size(); ++k) pairs.push_back(pair_of(rows[k], cols[static_cast<std::size_t>(p[k])]));
    out.add_term(JetMonomial(JetVar(f, std::move(pairs))), BigRational(sign));
  });
  return out;
}

int diffresult_shape(int g, const MultiIndex& n) {
  if (n.size() != g || n.total() != g) return 0;
  const auto s = n.sorted_descending();
  const int m = s[0];
  if (m < 1) return 0;
  for (int k = 1; k < g; ++k) {
    const int want = k <= g - m ? 1 : 0;
    if (s[k] != want) return 0;
  }
  return m;
}

QJet diffresult_expand(int g, const MultiIndex& n, const Symbol& f) {
  const int m = diffresult_shape(g, n);
  if (m == 0) throw Error("diffresult_expand: " + n.to_string() + " is not of shape (m,1,...,1,0,...,0)");
  QJet sum;
  const BigRational weight = factorial(g - m);
  for (const auto& rows : subsets(g, m)) {
    const int si = std::accumulate(rows.begin(), rows.end(), 0);
    for (const auto& cols : subsets(g, m)) {
      const int sj = std::accumulate(cols.begin(), cols.end(), 0);
      const BigRational eps((si + sj) % 2 ? -1 : 1);
      QJet term = jet_det_operator(f, rows, cols) * jet_minor_first(f, complement(g, rows), complement(g, cols));
      sum += term.scaled(eps * weight);
    }
  }
  return QJet::symbol(f).pow(static_cast<unsigned>(m - 1)) * sum;
}

RJet to_symbolic(const QJet& p) {
  return p.map_coefficients<RatFunc>([](const BigRational& c) { return RatFunc(c); }, FieldTag::symbolic());
}

}  // namespace siegel
