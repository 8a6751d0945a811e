#include "siegel/opgen.hpp"

#include <numeric>
#include <sstream>

#include "siegel/poly_io.hpp"

namespace siegel {

namespace {

template <ExactField K>
FieldTag tag_for(const K& a) {
  if constexpr (std::is_same_v<K, RatFunc>) {
    return a.is_constant() ? FieldTag::numeric(a.num().coeff(0) / a.den().coeff(0)) : FieldTag::symbolic();
  } else {
    return FieldTag::numeric(a);
  }
}

template <ExactField K>
MultiPoly<K> lift(const QPoly& p, const FieldTag& tag) {
  return p.map_coefficients<K>([](const BigRational& c) { return K(c); }, tag);
}

}  // namespace

template <ExactField K>
K constant_C(int g, const K& a, int m) {
  if (m < 1 || m > g) throw Error("constant_C: m = " + std::to_string(m) + " outside 1.." + std::to_string(g));
  const K two_a = K(2) * a;
  K prod(1);
  if (m == 1) {
    for (int i = 1; i <= g - 1; ++i) prod *= two_a - K(i);
    return K(g - 1) * prod;
  }
  for (int i = m; i <= g - 1; ++i) prod *= two_a - K(i);
  K lead = K(factorial(m - 1));
  for (int i = 0; i < m - 1; ++i) lead *= two_a;
  if ((m - 1) % 2) lead = -lead;
  return lead * prod;
}

template <ExactField K>
K coefficient_c(int g, const K& a, const MultiIndex& n) {
  const int m = diffresult_shape(g, n);
  return m == 0 ? K(0) : constant_C(g, a, m);
}

template <ExactField K>
OperatorSpec<K> build_Q(int g, const K& a, int second_order_factor) {
  if (g < 2) throw Error("build_Q: genus must be at least 2");
  if (second_order_factor <= 0) throw Error("build_Q: second-order factor must be positive");
  if constexpr (std::is_same_v<K, BigRational>) {
    if (a * BigRational(2) < BigRational(g)) throw Error("build_Q: weight a = " + a.to_string() + " is below g/2");
  }
  OperatorSpec<K> spec;
  spec.g = g;
  spec.a = a;
  spec.second_order_factor = second_order_factor;
  // Harmonic for k d^ + s sum r d^ d^ is harmonic for (2k/s) d^ + 2 sum r d^ d^.
  const K a_eff = K(2) * a / K(second_order_factor);
  const K c1 = constant_C(g, a_eff, 1);
  if (c1.is_zero()) throw Error("build_Q: C(1) vanishes at this weight");
  const FieldTag tag = tag_for(a);
  spec.Q = MultiPoly<K>(tag);
  for (const auto& n : compositions(g, g)) {
    const K c = coefficient_c(g, a_eff, n);
    if (c.is_zero()) continue;
    const K normalized = c / c1;
    spec.coefficients.emplace(n, normalized);
    spec.Q += lift<K>(coeff_R(g, n), tag).scaled(normalized);
  }
  return spec;
}

template <ExactField K>
MultiPoly<K> apply_D11(int g, int h, const MultiPoly<K>& p, const K& k, int second_order_factor) {
  MultiPoly<K> out = p.sym_diff(h, 1, 1).scaled(k);
  std::vector<MultiPoly<K>> first;
  for (int u = 1; u <= g; ++u) first.push_back(p.sym_diff(h, 1, u));
  MultiPoly<K> second(p.tag());
  for (int u = 1; u <= g; ++u) {
    if (first[static_cast<std::size_t>(u - 1)].is_zero()) continue;
    for (int w = 1; w <= g; ++w) {
      MultiPoly<K> d = first[static_cast<std::size_t>(u - 1)].sym_diff(h, 1, w);
      if (d.is_zero()) continue;
      second += d * MultiPoly<K>::variable(VarId::r(h, u, w), p.tag());
    }
  }
  out += second.scaled(K(second_order_factor));
  return out;
}

template <ExactField K>
MultiPoly<K> pluriharmonic_residual(const OperatorSpec<K>& spec, int second_order_factor) {
  MultiPoly<K> sum(spec.Q.tag());
  for (int h = 1; h <= spec.g; ++h) sum += apply_D11(spec.g, h, spec.Q, spec.k(), second_order_factor);
  return sum;
}

template <ExactField K>
bool verify_harmonic_condition(int g, const K& a) {
  const K k = K(2) * a;
  for (const auto& np : compositions(g - 1, g)) {
    K sum(0);
    for (int h = 1; h <= g; ++h) sum += (k - K(np[h - 1])) * coefficient_c(g, a, np.plus_unit(h));
    if (!sum.is_zero()) return false;
  }
  return true;
}

template <ExactField K>
bool verify_deriv_lemma(int g, const MultiIndex& n, int h, const K& k) {
  const auto tag = FieldTag::rational();
  const MultiPoly<K> lhs = apply_D11(g, h, lift<K>(coeff_R(g, n), tag), k);
  if (n[h - 1] == 0) return lhs.is_zero();
  const MultiPoly<K> rhs = lift<K>(minor_coeff_R(g, 1, 1, n.minus_unit(h)), tag).scaled(k - K(n[h - 1] - 1));
  return lhs == rhs;
}

QPoly xspace_oracle(int g, int k, const QPoly& p) {
  if (g < 1 || k < 1) throw Error("xspace_oracle: genus and k must be positive");
  if (g * g * k > 40) {
    throw Error("xspace_oracle: " + std::to_string(g * g * k) +
                " x-variables exceed the brute-force limit of 40; use a numeric weight with the symbolic verifier");
  }
  std::map<VarId, QPoly> subs;
  for (int h = 1; h <= g; ++h) {
    for (int u = 1; u <= g; ++u) {
      for (int w = u; w <= g; ++w) {
        QPoly e;
        for (int nu = (h - 1) * k + 1; nu <= h * k; ++nu) {
          e.add_term(Monomial::from_factors({{VarId::x(u, nu), 1}, {VarId::x(w, nu), 1}}), BigRational(1));
        }
        subs.emplace(VarId::r(h, u, w), std::move(e));
      }
    }
  }
  const QPoly pulled = p.substitute(subs);
  QPoly lap(p.tag());
  for (int nu = 1; nu <= g * k; ++nu) lap += pulled.diff(VarId::x(1, nu)).diff(VarId::x(1, nu));
  return lap;
}

template <ExactField K>
JetPoly<K> operator_jet(const OperatorSpec<K>& spec, const Symbol& f) {
  return jet_apply(spec.Q, f, spec.g).scaled(K(factorial(spec.g).inverse()));
}

RJet printed_jet_Q2(const Symbol& f) {
  const RatFunc two_a = RatFunc(2) * RatFunc::a();
  const QJet fj = QJet::symbol(f);
  RJet out = to_symbolic(jet_det_partial(f, 2).scaled(BigRational(2)));
  out += to_symbolic(fj * jet_det_operator(f, {1, 2}, {1, 2})).scaled(RatFunc(2) * two_a / (RatFunc(1) - two_a));
  return out;
}

RJet printed_jet_Q3(const Symbol& f, bool cofactor_sign) {
  const RatFunc two_a = RatFunc(2) * RatFunc::a();
  const QJet fj = QJet::symbol(f);
  const std::vector<int> all = {1, 2, 3};
  RJet out = to_symbolic(jet_det_partial(f, 3).scaled(BigRational(6)));
  out += to_symbolic(fj.pow(2) * jet_det_operator(f, all, all))
             .scaled(RatFunc(3) * two_a * two_a / ((two_a - RatFunc(1)) * (two_a - RatFunc(2))));
  QJet inner;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const QJet dij = QJet::var(JetVar(f, {{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}}));
      const QJet term = dij * jet_det_operator(f, complement(3, {i}), complement(3, {j}));
      inner += cofactor_sign && (i + j) % 2 ? -term : term;
    }
  }
  out -= to_symbolic(fj * inner).scaled(RatFunc(3) * two_a / (two_a - RatFunc(1)));
  return out;
}

template <ExactField K>
std::string to_opspec1(const OperatorSpec<K>& spec) {
  std::ostringstream os;
  os << "OPSPEC1\n";
  os << "genus " << spec.g << "\n";
  if constexpr (std::is_same_v<K, RatFunc>) {
    os << "weight " << (spec.Q.tag().kind == FieldTag::Kind::Symbolic ? std::string("symbolic") : spec.a.to_string()) << "\n";
  } else {
    os << "weight " << spec.a.to_string() << "\n";
  }
  os << "second-order-factor " << spec.second_order_factor << "\n";
  os << "normalization Q = (1/C(1)) sum_n c(n) R(n); D = k d^ + " << spec.second_order_factor
     << " sum r d^ d^; operator = Q(d)/g!\n";
  os << "coefficients " << spec.coefficients.size() << "\n";
  for (const auto& [n, c] : spec.coefficients) os << n.to_string() << " " << c.to_string() << "\n";
  os << to_poly1(spec.Q);
  return os.str();
}

template <ExactField K>
OperatorSpec<K> parse_opspec1(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto expect = [&](std::string_view key) {
    if (!std::getline(in, line) || !line.starts_with(key)) throw ParseError("OPSPEC1: expected '" + std::string(key) + "'");
    return line.substr(key.size());
  };
  if (!std::getline(in, line) || line != "OPSPEC1") throw ParseError("OPSPEC1: missing header");
  OperatorSpec<K> spec;
  spec.g = std::stoi(expect("genus "));
  const std::string w = expect("weight ");
  if constexpr (std::is_same_v<K, RatFunc>) {
    spec.a = w == "symbolic" ? RatFunc::a() : RatFunc(BigRational::parse(w));
  } else {
    if (w == "symbolic") throw FieldMismatch("OPSPEC1: symbolic operator read into a numeric field");
    spec.a = BigRational::parse(w);
  }
  spec.second_order_factor = std::stoi(expect("second-order-factor "));
  expect("normalization ");
  const int count = std::stoi(expect("coefficients "));
  for (int i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw ParseError("OPSPEC1: truncated coefficient table");
    const auto space = line.find(' ');
    if (space == std::string::npos) throw ParseError("OPSPEC1: bad coefficient line '" + line + "'");
    spec.coefficients.emplace(MultiIndex::parse(line.substr(0, space)), K::parse(line.substr(space + 1)));
  }
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  spec.Q = parse_poly1<K>(rest);
  return spec;
}

template BigRational constant_C(int, const BigRational&, int);
template RatFunc constant_C(int, const RatFunc&, int);
template BigRational coefficient_c(int, const BigRational&, const MultiIndex&);
template RatFunc coefficient_c(int, const RatFunc&, const MultiIndex&);
template QSpec build_Q(int, const BigRational&, int);
template RSpec build_Q(int, const RatFunc&, int);
template QPoly apply_D11(int, int, const QPoly&, const BigRational&, int);
template RPoly apply_D11(int, int, const RPoly&, const RatFunc&, int);
template QPoly pluriharmonic_residual(const QSpec&, int);
template RPoly pluriharmonic_residual(const RSpec&, int);
template bool verify_harmonic_condition(int, const BigRational&);
template bool verify_harmonic_condition(int, const RatFunc&);
template bool verify_deriv_lemma(int, const MultiIndex&, int, const BigRational&);
template bool verify_deriv_lemma(int, const MultiIndex&, int, const RatFunc&);
template QJet operator_jet(const QSpec&, const Symbol&);
template RJet operator_jet(const RSpec&, const Symbol&);
template std::string to_opspec1(const QSpec&);
template std::string to_opspec1(const RSpec&);
template QSpec parse_opspec1(std::string_view);
template RSpec parse_opspec1(std::string_view);

}  // namespace siegel
