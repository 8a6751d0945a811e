#include "siegel/slopes.hpp"

#include "siegel/errors.hpp"

namespace siegel {

namespace {

BigRational pow2(int e) { return BigRational(2).pow(e); }

BigRational fact(int n) {
  BigRational f(1);
  for (int i = 2; i <= n; ++i) f *= BigRational(i);
  return f;
}

// Coefficient text with a unit coefficient left implicit.
std::string term(const BigRational& c, const std::string& name) {
  return c.is_one() ? name : c.to_string() + " " + name;
}

SlopeEntry exact(BigRational v, std::string source) {
  return {SlopeEntry::Kind::Exact, v, v, false, std::move(source)};
}

}  // namespace

std::string DivClass::to_string() const {
  const bool curves = basis == Basis::Curves;
  const std::string l = curves ? "lambda1" : "lambda", d = curves ? "delta'" : "delta";
  std::string out;
  if (!lam.is_zero()) out = term(lam, l);
  if (!del.is_zero()) {
    if (out.empty()) out = del.sign() > 0 ? "-" + term(del, d) : term(-del, d);
    else out += (del.sign() > 0 ? " - " : " + ") + term(del.abs(), d);
  }
  if (out.empty()) out = "0";
  if (del_lower_bound) out += " (delta-coefficient >= " + del.to_string() + ")";
  return out;
}

std::optional<BigRational> slope(const DivClass& c) {
  if (c.del.is_zero()) return std::nullopt;
  return c.lam / c.del;
}

std::string slope_string(const DivClass& c) {
  const auto s = slope(c);
  return s ? s->to_string() : "inf";
}

DivClass class_tnull(int g) {
  if (g < 2) throw Error("class_tnull: genus must be at least 2");
  return {pow2(g - 2) * (pow2(g) + BigRational(1)), pow2(2 * g - 5), "T_" + std::to_string(g)};
}

DivClass class_N0prime(int g) {
  if (g < 4) throw Error("class_N0prime: genus must be at least 4");
  const BigRational lam = fact(g) * BigRational(g + 3, 4) - pow2(g - 3) * (pow2(g) + BigRational(1));
  const BigRational del = fact(g + 1) / BigRational(24) - pow2(2 * g - 6);
  return {lam, del, "N0'_" + std::to_string(g)};
}

DivClass class_operator_output(int g, const DivClass& in) {
  if (g < 1) throw Error("class_operator_output: genus must be positive");
  if (!in.lam.is_integer()) throw Error("class_operator_output: weight must be an integer");
  DivClass out{BigRational(g) * in.lam + BigRational(2), BigRational(g) * in.del, "D(" + in.label + ")"};
  out.del_lower_bound = true;
  return out;
}

BigRational moving_bound(int g, const DivClass& in) {
  if (in.del.sign() <= 0) throw Error("moving_bound: delta-coefficient must be positive");
  return moving_bound_value(g, in.lam, in.del);
}

BigRational hyperelliptic_bound(int g) {
  if (g < 3) throw Error("hyperelliptic_bound: genus must be at least 3");
  return BigRational(8) + BigRational(4, g);
}

DivClass torelli_pullback(const DivClass& c) {
  DivClass out = c;
  out.basis = DivClass::Basis::Curves;
  return out;
}

template <ExactField K>
K operator_slope(int g, const K& a, const K& b) {
  const K gk(static_cast<long>(g));
  return (gk * a + K(2L)) / (gk * b);
}

template <ExactField K>
K moving_bound_value(int g, const K& a, const K& b) {
  return a / b + K(2L) / (b * K(static_cast<long>(g)));
}

template BigRational operator_slope(int, const BigRational&, const BigRational&);
template RatFunc operator_slope(int, const RatFunc&, const RatFunc&);
template BigRational moving_bound_value(int, const BigRational&, const BigRational&);
template RatFunc moving_bound_value(int, const RatFunc&, const RatFunc&);

std::string SlopeEntry::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::Empty:
      return "";
    case Kind::Exact:
      out = lo.to_string();
      break;
    case Kind::UpperBound:
      out = "<= " + hi.to_string();
      break;
    case Kind::Interval:
      out = "[" + lo.to_string() + ", " + hi.to_string() + "]";
      break;
  }
  return conjectural ? "(?) " + out : out;
}

std::vector<SlopeRow> known_slopes_table() {
  std::vector<SlopeRow> rows;
  // Genus 1: the discriminant, of class 12 lambda - delta; no moving entry.
  rows.push_back({1, exact(*slope(DivClass{BigRational(12), BigRational(1), "Delta"}), "class of the discriminant"), {}});

  const DivClass t2 = class_tnull(2);
  rows.push_back({2, exact(*slope(t2), "slope(class_tnull(2))"),
                  exact(*slope(class_operator_output(2, t2)), "slope(class_operator_output(2, class_tnull(2)))")});

  const DivClass t3 = class_tnull(3);
  SlopeEntry m3 = exact(hyperelliptic_bound(3), "hyperelliptic_bound(3)");
  if (moving_bound(3, t3) != m3.lo) throw Error("known_slopes_table: genus-3 moving entries disagree");
  rows.push_back({3, exact(*slope(t3), "slope(class_tnull(3))"), m3});

  const DivClass n4 = class_N0prime(4);
  rows.push_back({4, exact(*slope(n4), "slope(class_N0prime(4))"),
                  exact(*slope(class_operator_output(4, n4)), "slope(class_operator_output(4, class_N0prime(4)))")});

  const DivClass n5 = class_N0prime(5);
  SlopeEntry m5{SlopeEntry::Kind::UpperBound, {}, moving_bound(5, n5), false, "moving_bound(5, class_N0prime(5))"};
  rows.push_back({5, exact(*slope(n5), "slope(class_N0prime(5))"), m5});

  // Cited constants: the lower bound 53/10 and a form of class 14 lambda - 2 delta.
  const DivClass l6{BigRational(14), BigRational(2), "theta_{L,h,2}"};
  SlopeEntry e6{SlopeEntry::Kind::Interval, BigRational(53, 10), *slope(l6), false,
                "cited lower bound 53/10; upper end slope of the cited class 14 lambda - 2 delta"};
  SlopeEntry m6{SlopeEntry::Kind::UpperBound, {}, moving_bound(6, l6), true,
                "moving_bound(6, cited class 14 lambda - 2 delta), conditional"};
  rows.push_back({6, e6, m6});
  return rows;
}

std::string format_slopes_table(const std::vector<SlopeRow>& rows) {
  std::string out;
  for (const auto& r : rows)
    out += "g=" + std::to_string(r.genus) + " | " + r.effective.to_string() + " | " + r.moving.to_string() + "\n";
  return out;
}

}  // namespace siegel
