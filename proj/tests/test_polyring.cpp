#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "siegel/determinant.hpp"
#include "siegel/poly_io.hpp"

using namespace siegel;

namespace {

using Mat = std::vector<std::vector<BigRational>>;

// Independent oracle: Leibniz expansion over all permutations.
BigRational leibniz_det(const Mat& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  BigRational total(0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    BigRational prod(inv % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) prod *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Mat random_symmetric(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  Mat m(static_cast<std::size_t>(g), std::vector<BigRational>(static_cast<std::size_t>(g)));
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) m[i][j] = m[j][i] = BigRational(d(rng));
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  const auto n = a.size();
  Mat c(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat transpose(const Mat& a) {
  Mat t = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
  return t;
}

void assign(std::map<VarId, BigRational>& pt, int h, const Mat& r) {
  const int g = static_cast<int>(r.size());
  for (int i = 1; i <= g; ++i)
    for (int j = i; j <= g; ++j) pt[VarId::r(h, i, j)] = r[i - 1][j - 1];
}

QPoly var(VarId v) { return QPoly::variable(v); }
QPoly r(int h, int i, int j) { return var(VarId::r(h, i, j)); }

}  // namespace

TEST_CASE("poly arithmetic basics") {
  const QPoly p = r(1, 1, 1) * r(2, 2, 2);
  CHECK(p.size() == 1);
  CHECK((p + p.scaled(BigRational(-1))).is_zero());
  const QPoly q = var(VarId::t(1)) + r(1, 1, 2);
  CHECK(q * p == p * q);
  CHECK((q * p) * q == q * (p * q));
  QPoly n1(FieldTag::numeric(BigRational(3)));
  QPoly n2(FieldTag::numeric(BigRational(5)));
  CHECK_THROWS_AS(n1 += n2, FieldMismatch);
}

TEST_CASE("sym_diff factors") {
  CHECK(r(1, 1, 1).pow(2).sym_diff(1, 1, 1) == r(1, 1, 1).scaled(BigRational(2)));
  CHECK(r(1, 1, 2).pow(2).sym_diff(1, 1, 2) == r(1, 1, 2));
  CHECK(r(2, 1, 2).sym_diff(1, 1, 2).is_zero());
  CHECK(VarId::r(1, 2, 1) == VarId::r(1, 1, 2));
}

TEST_CASE("det_expand small genera") {
  CHECK(det_expand(1) == var(VarId::t(1)) * r(1, 1, 1));
  const QPoly det1 = r(1, 1, 1) * r(1, 2, 2) - r(1, 1, 2).pow(2);
  const QPoly det2 = r(2, 1, 1) * r(2, 2, 2) - r(2, 1, 2).pow(2);
  const QPoly mixed = r(1, 1, 1) * r(2, 2, 2) + r(2, 1, 1) * r(1, 2, 2) - (r(1, 1, 2) * r(2, 1, 2)).scaled(BigRational(2));
  const QPoly t1 = var(VarId::t(1)), t2 = var(VarId::t(2));
  CHECK(det_expand(2) == t1.pow(2) * det1 + t1 * t2 * mixed + t2.pow(2) * det2);
  CHECK(coeff_R(2, MultiIndex({2, 0})) == det1);
  CHECK(coeff_R(2, MultiIndex({1, 1})) == mixed);
  // Six Leibniz terms; the two cyclic ones coincide for a symmetric matrix.
  const QPoly det3 = r(1, 1, 1) * r(1, 2, 2) * r(1, 3, 3) + (r(1, 1, 2) * r(1, 2, 3) * r(1, 1, 3)).scaled(BigRational(2)) -
                     r(1, 1, 1) * r(1, 2, 3).pow(2) - r(1, 2, 2) * r(1, 1, 3).pow(2) - r(1, 3, 3) * r(1, 1, 2).pow(2);
  CHECK(coeff_R(3, MultiIndex({3, 0, 0})) == det3);
  CHECK(compositions(3, 3).size() == 10);
  CHECK(compositions(4, 4).size() == 35);
  CHECK_THROWS_AS(coeff_R(2, MultiIndex({1, 0})), Error);
}

TEST_CASE("det_expand matches a Leibniz oracle") {
  std::mt19937_64 rng(101);
  for (int g = 1; g <= 4; ++g) {
    for (int trial = 0; trial < 3; ++trial) {
      std::map<VarId, BigRational> pt;
      Mat sum(static_cast<std::size_t>(g), std::vector<BigRational>(static_cast<std::size_t>(g)));
      for (int h = 1; h <= g; ++h) {
        const Mat rh = random_symmetric(g, rng);
        assign(pt, h, rh);
        pt[VarId::t(h)] = BigRational(1);
        for (int i = 0; i < g; ++i)
          for (int j = 0; j < g; ++j) sum[i][j] += rh[i][j];
      }
      CHECK(det_expand(g).evaluate(pt) == leibniz_det(sum));
    }
  }
}

TEST_CASE("sum of basis polynomials at equal arguments gives det(gR)") {
  std::mt19937_64 rng(202);
  for (int g = 1; g <= 4; ++g) {
    const Mat rr = random_symmetric(g, rng);
    std::map<VarId, BigRational> pt;
    for (int h = 1; h <= g; ++h) assign(pt, h, rr);
    BigRational total(0);
    for (const auto& n : compositions(g, g)) total += coeff_R(g, n).evaluate(pt);
    CHECK(total == BigRational(g).pow(g) * leibniz_det(rr));
  }
}

TEST_CASE("basis polynomials scale by det(A)^2 under congruence") {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int g = 2; g <= 3; ++g) {
    Mat a(static_cast<std::size_t>(g), std::vector<BigRational>(static_cast<std::size_t>(g)));
    for (auto& row : a)
      for (auto& x : row) x = BigRational(d(rng));
    const BigRational da = leibniz_det(a);
    std::map<VarId, BigRational> pt, pt2;
    for (int h = 1; h <= g; ++h) {
      const Mat rh = random_symmetric(g, rng);
      assign(pt, h, rh);
      assign(pt2, h, matmul(matmul(a, rh), transpose(a)));
    }
    for (const auto& n : compositions(g, g)) {
      const QPoly p = coeff_R(g, n);
      CHECK(p.evaluate(pt2) == da * da * p.evaluate(pt));
    }
  }
}

TEST_CASE("minor coefficients") {
  CHECK(minor_coeff_R(2, 1, 1, MultiIndex({0, 1})) == r(2, 2, 2));
  CHECK(minor_coeff_R(2, 1, 1, MultiIndex({1, 0})) == r(1, 2, 2));
  CHECK(minor_coeff_R(2, 1, 2, MultiIndex({1, 0})) == r(1, 1, 2));
  CHECK_THROWS_AS(minor_coeff_R(2, 3, 1, MultiIndex({1, 0})), Error);
  CHECK_THROWS_AS(minor_coeff_R(2, 1, 1, MultiIndex({1, 1})), Error);
}

TEST_CASE("random re-association of determinant products") {
  std::mt19937_64 rng(404);
  const auto m = pencil_matrix(3);
  std::vector<QPoly> factors = {m[0][0], m[1][1], m[2][2], m[0][1]};
  const QPoly ref = ((factors[0] * factors[1]) * factors[2]) * factors[3];
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(factors.begin(), factors.end(), rng);
    CHECK(factors[0] * (factors[1] * (factors[2] * factors[3])) == ref);
  }
}

TEST_CASE("POLY1 round trip") {
  const QPoly p = det_expand(3);
  const std::string text = to_poly1(p);
  CHECK(parse_poly1<BigRational>(text) == p);
  CHECK(to_poly1(parse_poly1<BigRational>(text)) == text);
  const RPoly s = to_symbolic(coeff_R(2, MultiIndex({1, 1}))).scaled(RatFunc::a() / RatFunc(3));
  CHECK(parse_poly1<RatFunc>(to_poly1(s)) == s);
  CHECK(to_poly1(QPoly::constant(BigRational(3, 2))) == "POLY1 rational\n3/2 |\n");
  const QPoly x = QPoly::variable(VarId::x(2, 300)).pow(2);
  CHECK(parse_poly1<BigRational>(to_poly1(x)) == x);
}
