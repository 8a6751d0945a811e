#include <random>

#include "doctest.h"
#include "siegel/slopes.hpp"

using namespace siegel;

namespace {

DivClass cls(long a, BigRational b) { return {BigRational(a), std::move(b), ""}; }

}  // namespace

TEST_CASE("slope of a class") {
  CHECK(*slope(cls(8, 1)) == BigRational(8));
  CHECK(*slope(cls(108, 14)) == BigRational(54, 7));
  CHECK(*slope(cls(7, 1)) == BigRational(7));
  CHECK(!slope(cls(5, 0)).has_value());
  CHECK(slope_string(cls(5, 0)) == "inf");
  CHECK(cls(12, 1).to_string() == "12 lambda - delta");
  CHECK(cls(5, BigRational(1, 2)).to_string() == "5 lambda - 1/2 delta");
}

TEST_CASE("theta-null classes") {
  CHECK(class_tnull(2) == cls(5, BigRational(1, 2)));
  CHECK(class_tnull(3) == cls(18, 2));
  CHECK(class_tnull(4) == cls(68, 8));
  CHECK(*slope(class_tnull(2)) == BigRational(10));
  CHECK(*slope(class_tnull(3)) == BigRational(9));
  CHECK(*slope(class_tnull(4)) == BigRational(17, 2));
  // s(T_g) = 8 + 2^{3-g}, from integer arithmetic.
  for (int g = 3; g <= 10; ++g) {
    const long lam = (1L << (g - 2)) * ((1L << g) + 1), del = 1L << (2 * g - 5);
    CHECK(class_tnull(g) == cls(lam, BigRational(del)));
    CHECK(*slope(class_tnull(g)) == BigRational(8) + BigRational(8, 1L << g));
  }
  CHECK_THROWS_AS(class_tnull(1), Error);
}

TEST_CASE("Andreotti-Mayer classes") {
  CHECK(class_N0prime(4) == cls(8, 1));
  CHECK(class_N0prime(5) == cls(108, 14));
  long fact = 24;
  for (int g = 4; g <= 12; ++g) {
    if (g > 4) fact *= g;
    // Integer oracle: lam = g!(g+3)/4 - 2^{g-3}(2^g+1), del = (g+1)!/24 - 2^{2g-6}.
    const BigRational lam = BigRational(fact * (g + 3), 4) - BigRational((1L << (g - 3)) * ((1L << g) + 1));
    const BigRational del = BigRational(fact * (g + 1), 24) - BigRational(1L << (2 * g - 6));
    CHECK(class_N0prime(g).lam == lam);
    CHECK(class_N0prime(g).del == del);
    CHECK(*slope(class_N0prime(g)) > BigRational(6));
  }
  CHECK_THROWS_AS(class_N0prime(3), Error);
}

TEST_CASE("operator output and moving bound") {
  const DivClass d2 = class_operator_output(2, class_tnull(2));
  CHECK(d2 == cls(12, 1));
  CHECK(d2.del_lower_bound);
  CHECK(*slope(d2) == BigRational(12));
  CHECK(class_operator_output(4, cls(8, 1)) == cls(34, 4));
  CHECK(*slope(class_operator_output(4, cls(8, 1))) == BigRational(17, 2));
  const DivClass d5 = class_operator_output(5, cls(108, 14));
  CHECK(d5 == cls(542, 70));
  CHECK(*slope(d5) == BigRational(271, 35));
  CHECK_THROWS_AS(class_operator_output(2, DivClass{BigRational(5, 2), BigRational(1), ""}), Error);

  CHECK(moving_bound(5, cls(108, 14)) == BigRational(271, 35));
  CHECK(moving_bound(6, cls(14, 2)) == BigRational(43, 6));
  CHECK(moving_bound(2, class_tnull(2)) == BigRational(12));
  CHECK_THROWS_AS(moving_bound(2, cls(1, 0)), Error);

  CHECK(hyperelliptic_bound(3) == BigRational(28, 3));
  CHECK(hyperelliptic_bound(4) == BigRational(9));
  CHECK(hyperelliptic_bound(6) == BigRational(26, 3));
  CHECK_THROWS_AS(hyperelliptic_bound(2), Error);
}

TEST_CASE("operator slope equals the moving bound") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> num(1, 500), den(1, 40);
  for (int g = 1; g <= 6; ++g) {
    // Symbolic in a.
    for (long b = 1; b <= 5; ++b) {
      const RatFunc bb(BigRational(b, 3));
      CHECK(operator_slope(g, RatFunc::a(), bb) == moving_bound_value(g, RatFunc::a(), bb));
    }
    for (int k = 0; k < 20; ++k) {
      const BigRational a(num(rng), den(rng)), b(num(rng), den(rng));
      CHECK(operator_slope(g, a, b) == moving_bound_value(g, a, b));
      if (a.is_integer()) CHECK(*slope(class_operator_output(g, DivClass{a, b, ""})) == moving_bound(g, DivClass{a, b, ""}));
    }
  }
}

TEST_CASE("Torelli pullback") {
  const DivClass t = torelli_pullback(cls(34, 4));
  CHECK(t.to_string() == "34 lambda1 - 4 delta'");
  CHECK(*slope(t) == BigRational(17, 2));
  CHECK(torelli_pullback(cls(68, 8)).to_string() == "68 lambda1 - 8 delta'");
  CHECK(slope_string(torelli_pullback(DivClass{BigRational(0), BigRational(0), ""})) == "inf");
}

TEST_CASE("known slopes table") {
  const auto rows = known_slopes_table();
  REQUIRE(rows.size() == 6);
  const char* expected[6][2] = {{"12", ""},       {"10", "12"},       {"9", "28/3"},
                                {"8", "17/2"},    {"54/7", "<= 271/35"}, {"[53/10, 7]", "(?) <= 43/6"}};
  for (int i = 0; i < 6; ++i) {
    CHECK(rows[i].genus == i + 1);
    CHECK(rows[i].effective.to_string() == expected[i][0]);
    CHECK(rows[i].moving.to_string() == expected[i][1]);
    CHECK(!rows[i].effective.source.empty());
  }
  CHECK(rows[5].moving.conjectural);
  CHECK(format_slopes_table(rows).find("g=5 | 54/7 | <= 271/35\n") != std::string::npos);
}
