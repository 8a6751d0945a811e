#include "siegel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "siegel/brackets.hpp"
#include "siegel/jetops.hpp"
#include "siegel/opgen.hpp"
#include "siegel/poly_io.hpp"
#include "siegel/slopes.hpp"
#include "siegel/theta.hpp"

namespace siegel {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string sci(double v) { return fmt("%.3e", v); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Check lines and the failure count of one command.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void check(bool ok, const std::string& name, const std::string& detail = "") {
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out_ << "  " << detail;
    out_ << "\n";
    if (!ok) ++failures_;
  }
  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  out << "wrote " << path << "\n";
}

bool symbolic_weight(const RunConfig& cfg) { return cfg.weight.empty() || cfg.weight == "symbolic"; }

BigRational numeric_weight(const RunConfig& cfg) {
  if (symbolic_weight(cfg)) throw Error("a numeric --weight is required");
  return BigRational::parse(cfg.weight);
}

DivClass class_of(const QExp2& f, const std::string& label) {
  return {f.weight(), fj_order(f), label};
}

std::string order_string(const QExp2& f) {
  return f.is_zero() ? "undetermined (zero to truncation " + std::to_string(f.trunc()) + ")"
                     : fj_order(f).to_string();
}

// ---- opgen --------------------------------------------------------------------------

template <ExactField K>
void opgen_checks(const OperatorSpec<K>& spec, const K& a, Report& rep, std::ostream& out) {
  rep.check(verify_harmonic_condition(spec.g, a), "harmonic-condition");
  rep.check(verify_pluriharmonic(spec), "pluriharmonic", std::to_string(spec.Q.size()) + " terms");
  out << "Q terms: " << spec.Q.size() << "\n";
  if (spec.Q.size() <= 64) out << to_poly1(spec.Q);
}

int cmd_opgen(const RunConfig& cfg, bool oracle_x, std::ostream& out) {
  out << cfg.header("opgen");
  Report rep(out);
  const Symbol f = Symbol::function("F");
  if (symbolic_weight(cfg)) {
    const RSpec spec = build_Q(cfg.genus, RatFunc::a());
    opgen_checks(spec, RatFunc::a(), rep, out);
    const RJet d = jet_apply(spec.Q, f, cfg.genus);
    if (cfg.genus == 2) rep.check(d == printed_jet_Q2(f), "printed-formula");
    if (cfg.genus == 3) rep.check(d == printed_jet_Q3(f), "printed-formula", "with cofactor signs");
    rep.check(jet_mod_symbol(d, f) == to_symbolic(jet_det_partial(f, cfg.genus).scaled(factorial(cfg.genus))),
              "reduction-mod-F");
    if (oracle_x) rep.check(false, "oracle-x", "needs a numeric --weight");
    if (!cfg.out.empty()) emit(to_opspec1(spec), cfg.out, out);
  } else {
    const BigRational a = numeric_weight(cfg);
    const QSpec spec = build_Q(cfg.genus, a);
    opgen_checks(spec, a, rep, out);
    if (oracle_x) {
      const BigRational k = BigRational(2) * a;
      if (!k.is_integer()) {
        rep.check(false, "oracle-x", "2a must be an integer");
      } else {
        const long kk = std::stol(k.to_string());
        rep.check(xspace_oracle(cfg.genus, static_cast<int>(kk), spec.Q).is_zero(), "oracle-x",
                  "X-space Laplacian of Q(X1 X1^t, ...)");
      }
    }
    if (!cfg.out.empty()) emit(to_opspec1(spec), cfg.out, out);
  }
  return rep.failures();
}

// ---- apply --------------------------------------------------------------------------

int cmd_apply(const RunConfig& cfg, const std::string& op_path, const std::string& input_path, std::ostream& out) {
  out << cfg.header("apply");
  const QSpec spec = op_path.empty() ? build_Q(cfg.genus, numeric_weight(cfg)) : parse_opspec1<BigRational>(read_file(op_path));
  const QExp2 f = parse_smf1_genus2(read_file(input_path));
  if (spec.g != 2) throw Error("apply: expansions are available in genus 2 only");
  if (f.weight() != spec.a)
    throw Error("apply: input weight " + f.weight().to_string() + " differs from operator weight " + spec.a.to_string());
  const QExp2 d = eval_jetpoly(operator_jet(spec, Symbol::function("F")), {{"F", f}});
  Report rep(out);
  out << "input weight " << f.weight().to_string() << ", fj_order " << order_string(f) << "\n";
  out << "output weight " << d.weight().to_string() << ", tau-factor " << d.tau_factor() << ", fj_order "
      << order_string(d) << "\n";
  if (d.is_zero()) {
    out << "output is zero to truncation " << d.trunc() << "\n";
  } else if (!f.is_zero()) {
    const DivClass in = class_of(f, "F"), got = class_of(d, "D(F)");
    const DivClass predicted = class_operator_output(spec.g, in);
    out << "class " << got.to_string() << ", slope " << slope_string(got) << "\n";
    out << "predicted " << predicted.to_string() << "\n";
    rep.check(got.lam == predicted.lam, "weight", got.lam.to_string());
    rep.check(got.del >= predicted.del, "order-bound", got.del.to_string() + " >= " + predicted.del.to_string());
  }
  if (!cfg.out.empty()) emit(to_smf1(d), cfg.out, out);
  return rep.failures();
}

// ---- theta / form ------------------------------------------------------------------

std::string complex_string(Complex z) { return fmt("%.17g", z.real()) + " " + fmt("%.17g", z.imag()); }

int cmd_theta_qexp(const RunConfig& cfg, const std::string& ch, std::ostream& out) {
  const ThetaChar c = ThetaChar::parse(ch);
  if (c.genus() != cfg.genus) throw Error("theta: characteristic does not match --genus");
  if (cfg.genus == 1) emit(to_smf1(theta_qexp1(c, cfg.trunc)), cfg.out, out);
  else if (cfg.genus == 2) emit(to_smf1(theta_qexp2(c, cfg.trunc)), cfg.out, out);
  else throw Error("theta qexp: genus 1 or 2 only");
  return 0;
}

int cmd_theta_eval(const RunConfig& cfg, const std::string& ch, const std::string& tau_spec, std::ostream& out) {
  out << cfg.header("theta eval");
  const CMatrix tau = parse_tau(tau_spec);
  const ThetaChar c = ThetaChar::parse(ch);
  const Complex v = theta_numeric(c, tau, CVector::Zero(tau.rows()));
  out << "theta[" << c.to_string() << "] = " << complex_string(v) << "\n";
  out << "radius " << lattice_radius(tau, CVector::Zero(tau.rows()), LatticeOptions{}.tol) << "\n";
  return 0;
}

int cmd_form(const RunConfig& cfg, const std::string& name, std::ostream& out) {
  std::string text;
  if (name == "tnull") text = to_smf1(tnull_qexp(cfg.trunc));
  else if (name == "chi10") text = to_smf1(tnull_qexp(cfg.trunc).pow(2));
  else if (name == "theta8") text = to_smf1(theta8_sum_qexp2(cfg.trunc));
  else if (name == "schottky") text = to_smf1(schottky_qexp2(cfg.trunc));
  else if (name == "eis4") text = to_smf1(eis1_qexp(4, cfg.trunc));
  else if (name == "eis6") text = to_smf1(eis1_qexp(6, cfg.trunc));
  else throw Error("form: unknown name '" + name + "' (tnull, chi10, theta8, schottky, eis4, eis6)");
  emit(text, cfg.out, out);
  return 0;
}

// ---- bracket ------------------------------------------------------------------------

int cmd_bracket(const RunConfig& cfg, const std::vector<std::string>& files, bool scalar,
                const std::vector<std::string>& weights, const std::string& entry, std::ostream& out) {
  if (files.size() != 2) throw Error("bracket: two input files are required");
  const std::string a = read_file(files[0]), b = read_file(files[1]);
  if (smf1_genus(a) != smf1_genus(b)) throw Error("bracket: inputs of different genus");
  std::optional<std::pair<BigRational, BigRational>> w;
  if (!weights.empty()) {
    if (weights.size() != 2) throw Error("bracket: --weights takes two values");
    w.emplace(BigRational::parse(weights[0]), BigRational::parse(weights[1]));
  }
  if (smf1_genus(a) == 1) {
    QExp1 f = parse_smf1_genus1(a), g = parse_smf1_genus1(b);
    if (w) f.set_weight(w->first), g.set_weight(w->second);
    emit(to_smf1(scalar ? scalar_bracket(f, g) : vector_bracket(f, g)), cfg.out, out);
    return 0;
  }
  QExp2 f = parse_smf1_genus2(a), g = parse_smf1_genus2(b);
  if (w) f.set_weight(w->first), g.set_weight(w->second);
  if (scalar) {
    emit(to_smf1(scalar_bracket(f, g)), cfg.out, out);
    return 0;
  }
  if (entry.size() != 2 || entry[0] < '1' || entry[0] > '2' || entry[1] < '1' || entry[1] > '2')
    throw Error("bracket: --entry must be 11, 12 or 22");
  const auto m = vector_bracket(f, g);
  emit(to_smf1(m[static_cast<std::size_t>(entry[0] - '1')][static_cast<std::size_t>(entry[1] - '1')]), cfg.out, out);
  return 0;
}

// ---- slope --------------------------------------------------------------------------

void print_table(std::ostream& out) {
  const auto rows = known_slopes_table();
  std::size_t we = 5, wm = 5;
  for (const auto& r : rows) {
    we = std::max(we, r.effective.to_string().size());
    wm = std::max(wm, r.moving.to_string().size());
  }
  auto pad = [](std::string s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("g", 3) << " | " << pad("s_eff", we) << " | " << pad("s_mov", wm) << "\n";
  for (const auto& r : rows)
    out << pad(std::to_string(r.genus), 3) << " | " << pad(r.effective.to_string(), we) << " | "
        << pad(r.moving.to_string(), wm) << "\n";
  for (const auto& r : rows)
    out << "ROW\t" << r.genus << "\t" << r.effective.to_string() << "\t" << r.moving.to_string() << "\t"
        << r.effective.source << "\t" << r.moving.source << "\n";
}

int cmd_slope(const RunConfig& cfg, const std::string& what, const std::string& name, const std::string& bound,
              const std::string& lam, const std::string& del, std::ostream& out) {
  out << cfg.header("slope " + what);
  if (what == "table") {
    print_table(out);
    return 0;
  }
  if (what == "class") {
    DivClass c;
    if (name == "tnull") c = class_tnull(cfg.genus);
    else if (name == "n0prime") c = class_N0prime(cfg.genus);
    else throw Error("slope class: --name must be tnull or n0prime");
    out << c.to_string() << "\nslope " << slope_string(c) << "\n";
    if (bound == "op") {
      const DivClass o = class_operator_output(cfg.genus, c);
      out << "operator output " << o.to_string() << "\nslope " << slope_string(o) << "\n";
    } else if (bound == "moving") {
      out << "moving bound " << moving_bound(cfg.genus, c).to_string() << "\n";
    } else if (bound == "hyperelliptic") {
      out << "hyperelliptic bound " << hyperelliptic_bound(cfg.genus).to_string() << "\n";
    }
    return 0;
  }
  if (what == "bound") {
    if (bound == "hyperelliptic") {
      out << "hyperelliptic bound " << hyperelliptic_bound(cfg.genus).to_string() << "\n";
      return 0;
    }
    if (lam.empty() || del.empty()) throw Error("slope bound: --lam and --del are required");
    const DivClass in{BigRational::parse(lam), BigRational::parse(del), "F"};
    if (bound == "op") {
      const DivClass o = class_operator_output(cfg.genus, in);
      out << o.to_string() << "\nslope " << slope_string(o) << "\n";
    } else if (bound == "moving") {
      out << "moving bound " << moving_bound(cfg.genus, in).to_string() << "\n";
    } else {
      throw Error("slope bound: choose --op, --moving or --hyperelliptic");
    }
    return 0;
  }
  throw Error("slope: expected table, class or bound");
}

// ---- verify -------------------------------------------------------------------------

int verify_pluriharmonic(const RunConfig& cfg, std::ostream& out) {
  Report rep(out);
  if (symbolic_weight(cfg)) {
    const RSpec spec = build_Q(cfg.genus, RatFunc::a());
    rep.check(verify_harmonic_condition(cfg.genus, RatFunc::a()), "harmonic-condition", "symbolic a");
    rep.check(verify_pluriharmonic(spec), "pluriharmonic", "symbolic a");
    rep.check(!verify_pluriharmonic(spec, 1), "control-misnormalized", "factor 1 leaves a residual");
  } else {
    const BigRational a = numeric_weight(cfg);
    const QSpec spec = build_Q(cfg.genus, a);
    rep.check(verify_harmonic_condition(cfg.genus, a), "harmonic-condition", "a = " + a.to_string());
    rep.check(verify_pluriharmonic(spec), "pluriharmonic", "a = " + a.to_string());
    rep.check(!verify_pluriharmonic(spec, 1), "control-misnormalized", "factor 1 leaves a residual");
  }
  return rep.failures();
}

int verify_heat(const RunConfig& cfg, std::ostream& out) {
  Report rep(out);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int g = 1; g <= 2; ++g) {
    const auto chars = all_chars(g);
    for (int k = 0; k < 5; ++k) {
      const CMatrix tau = sample_tau(g, rng);
      CVector z(g);
      for (int i = 0; i < g; ++i) z(i) = Complex(u(rng), u(rng));
      const ThetaChar& c = chars[static_cast<std::size_t>(k) % chars.size()];
      const double r = check_heat(c, tau, z);
      const double ctrl = check_heat(c, tau, z, HeatConstant::TwoPiI);
      const std::string id = "g=" + std::to_string(g) + " point " + std::to_string(k + 1) + " char " + c.to_string();
      rep.check(r < cfg.tol_heat, "heat " + id, "residual " + sci(r));
      rep.check(ctrl > 1e-2, "heat-control " + id, "residual with 2 pi i " + sci(ctrl));
    }
  }
  return rep.failures();
}

NumericForm named_form(const std::string& name) {
  const NumericForm t2 = NumericForm::tnull(2);
  if (name == "T2") return t2;
  if (name == "T2sq") return t2.pow(2);
  if (name == "D25T2")
    return NumericForm::jet_op(operator_jet(build_Q(2, BigRational(5)), Symbol::function("F")), {{"F", t2}});
  throw Error("unknown form '" + name + "' (T2, T2sq, D25T2)");
}

int verify_modularity(const RunConfig& cfg, const std::string& form, std::ostream& out) {
  Report rep(out);
  std::vector<std::string> names = form.empty() ? std::vector<std::string>{"T2sq", "D25T2"} : std::vector<std::string>{form};
  Eigen::MatrixXi b(2, 2), u(2, 2);
  b << 1, 0, 0, 0;
  u << 1, 1, 0, 1;
  const std::vector<SymplecticGenerator> gens = {SymplecticGenerator::inversion(2), SymplecticGenerator::translation(b),
                                                 SymplecticGenerator::unimodular(u)};
  std::mt19937_64 rng(cfg.seed);
  std::vector<CMatrix> points;
  for (int k = 0; k < 3; ++k) points.push_back(sample_tau(2, rng, 0.9));
  for (const auto& n : names) {
    const NumericForm f = named_form(n);
    for (const auto& gm : gens)
      for (std::size_t k = 0; k < points.size(); ++k) {
        const ModularityReport r = check_modularity(f, gm, points[k], cfg.tol_modularity);
        std::string detail = r.inconclusive ? "inconclusive: value below floor" : "rel err " + sci(r.rel_err);
        if (!r.inconclusive && f.character()) detail += ", with sign flipped " + sci(r.rel_err_flipped);
        rep.check(r.pass, "modularity " + n + " weight " + f.weight().to_string() + " " + gm.name() + " point " +
                              std::to_string(k + 1), detail);
      }
  }
  return rep.failures();
}

int verify_cond(const RunConfig& cfg, const std::string& tau_spec, std::ostream& out) {
  Report rep(out);
  const CMatrix tau = parse_tau(tau_spec.empty() ? "diag:1.1,1.7" : tau_spec);
  const ConditionStarReport r = check_condition_star(2, tau, cfg.tol_zero);
  const double a = std::abs(r.det);
  rep.check(a > 1e-6, "condition-star", "vanishing theta[" + r.vanishing.to_string() + "], |det| " + sci(a));
  return rep.failures();
}

int verify_schottky(const RunConfig& cfg, std::ostream& out) {
  Report rep(out);
  const int deep = cfg.trunc + 32;
  rep.check(schottky_qexp2(cfg.trunc).is_zero(), "schottky g=2", "truncation " + std::to_string(cfg.trunc));
  rep.check(schottky_qexp2(deep).is_zero(), "schottky g=2", "truncation " + std::to_string(deep));
  rep.check(schottky_qexp1(cfg.trunc).is_zero(), "schottky g=1", "truncation " + std::to_string(cfg.trunc));
  rep.check(!schottky_qexp2(cfg.trunc, true).is_zero(), "schottky-control", "dropped factor gives a nonzero form");
  bool odd = true;
  for (const auto& c : odd_chars(2)) odd = odd && theta_qexp2(c, cfg.trunc).is_zero();
  rep.check(odd, "odd-thetas-vanish");
  return rep.failures();
}

int verify_table(std::ostream& out) {
  Report rep(out);
  // Reference values of the known-slopes table.
  const char* expected[6][2] = {{"12", ""}, {"10", "12"}, {"9", "28/3"}, {"8", "17/2"}, {"54/7", "<= 271/35"},
                                {"[53/10, 7]", "(?) <= 43/6"}};
  const auto rows = known_slopes_table();
  rep.check(rows.size() == 6, "table-rows");
  for (std::size_t i = 0; i < rows.size() && i < 6; ++i) {
    const std::string e = rows[i].effective.to_string(), m = rows[i].moving.to_string();
    rep.check(e == expected[i][0] && m == expected[i][1], "table g=" + std::to_string(rows[i].genus), e + " | " + m);
  }
  return rep.failures();
}

}  // namespace

std::string RunConfig::header(const std::string& command) const {
  std::ostringstream s;
  s << "# siegel " << command << " | genus=" << genus << " weight=" << (weight.empty() ? "symbolic" : weight)
    << " trunc=" << trunc << " tol-modularity=" << fmt("%g", tol_modularity) << " tol-heat=" << fmt("%g", tol_heat)
    << " tol-zero=" << fmt("%g", tol_zero) << " seed=" << seed << "\n";
  return s.str();
}

CMatrix parse_tau(const std::string& spec) {
  if (spec.rfind("diag:", 0) == 0) {
    std::vector<double> v;
    std::stringstream s(spec.substr(5));
    std::string item;
    while (std::getline(s, item, ',')) {
      try {
        v.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ParseError("tau: bad diagonal entry '" + item + "'");
      }
    }
    if (v.empty()) throw ParseError("tau: empty diagonal");
    CMatrix t = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = Complex(0, v[i]);
    check_siegel_point(t);
    return t;
  }
  std::istringstream lines(read_file(spec));
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    std::vector<Complex> row;
    std::string tok;
    while (ls >> tok) {
      const auto comma = tok.find(',');
      if (comma == std::string::npos) throw ParseError("tau: entry '" + tok + "' is not re,im");
      try {
        row.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
      } catch (const std::exception&) {
        throw ParseError("tau: entry '" + tok + "' is not re,im");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw ParseError("tau: empty matrix");
  CMatrix t(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) throw ParseError("tau: matrix is not square");
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  check_siegel_point(t);
  return t;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pluriharmonic operators, theta constants and slopes of Siegel modular forms", "siegel"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&cfg](CLI::App* c) {
    c->add_option("--genus", cfg.genus, "genus")->capture_default_str();
    c->add_option("--trunc", cfg.trunc, "truncation N of the scaled exponents")->capture_default_str();
    c->add_option("--seed", cfg.seed, "seed for sampled points")->capture_default_str();
    c->add_option("--tol-modularity", cfg.tol_modularity)->capture_default_str();
    c->add_option("--tol-heat", cfg.tol_heat)->capture_default_str();
    c->add_option("--tol-zero", cfg.tol_zero)->capture_default_str();
    c->add_option("--out", cfg.out, "output file");
  };
  bool symbolic = false, oracle_x = false, scalar = false;
  std::string op, input, ch = "00,00", tau, name, what, form, entry = "11", bound, lam, del;
  std::vector<std::string> files, weights;

  auto* opgen = app.add_subcommand("opgen", "build Q_{g,a} and verify it");
  common(opgen);
  opgen->add_option("--weight", cfg.weight, "numeric weight a");
  opgen->add_flag("--symbolic", symbolic, "keep a symbolic");
  opgen->add_flag("--oracle-x", oracle_x, "also run the X-space Laplacian oracle");

  auto* apply = app.add_subcommand("apply", "apply an operator to a genus-2 expansion");
  common(apply);
  apply->add_option("--weight", cfg.weight, "operator weight when --op is absent");
  apply->add_option("--op", op, "OPSPEC1 file");
  apply->add_option("--input", input, "SMF1 file")->required();

  auto* theta = app.add_subcommand("theta", "theta constants");
  common(theta);
  theta->add_option("mode", what, "qexp or eval")->required()->check(CLI::IsMember({"qexp", "eval"}));
  theta->add_option("--char", ch, "characteristic e1e2,d1d2")->capture_default_str();
  theta->add_option("--tau", tau, "diag:y1,y2 or a matrix file");

  auto* formc = app.add_subcommand("form", "named exact expansions");
  common(formc);
  formc->add_option("--name", name, "tnull, chi10, theta8, schottky, eis4, eis6")->required();

  auto* bracket = app.add_subcommand("bracket", "brackets of two expansions");
  common(bracket);
  bracket->add_option("files", files, "two SMF1 files")->expected(2);
  bracket->add_flag("--scalar", scalar, "determinant of the vector bracket");
  bracket->add_option("--weights", weights, "override the weights k h")->expected(2);
  bracket->add_option("--entry", entry, "vector bracket entry 11, 12 or 22")->capture_default_str();

  auto* slopec = app.add_subcommand("slope", "divisor classes and slopes");
  common(slopec);
  slopec->add_option("what", what, "table, class or bound")->required();
  slopec->add_option("--name", name, "tnull or n0prime");
  bool b_op = false, b_moving = false, b_hyp = false;
  slopec->add_flag("--op", b_op, "class of the operator output");
  slopec->add_flag("--moving", b_moving, "moving-slope bound");
  slopec->add_flag("--hyperelliptic", b_hyp, "hyperelliptic threshold 8 + 4/g");
  slopec->add_option("--lam", lam, "lambda-coefficient");
  slopec->add_option("--del", del, "delta-coefficient");

  auto* verify = app.add_subcommand("verify", "run a group of checks");
  common(verify);
  verify->add_option("what", what, "pluriharmonic, heat, modularity, cond, schottky-vanishing, table")
      ->required()
      ->check(CLI::IsMember({"pluriharmonic", "heat", "modularity", "cond", "schottky-vanishing", "table"}));
  verify->add_option("--weight", cfg.weight, "numeric weight a");
  verify->add_flag("--symbolic", symbolic, "keep a symbolic");
  verify->add_option("--form", form, "T2, T2sq or D25T2");
  verify->add_option("--tau", tau, "diag:y1,y2 or a matrix file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (symbolic) cfg.weight = "symbolic";
    if (*opgen) return cmd_opgen(cfg, oracle_x, out);
    if (*apply) return cmd_apply(cfg, op, input, out);
    if (*theta) {
      if (what == "qexp") return cmd_theta_qexp(cfg, ch, out);
      if (tau.empty()) throw Error("theta eval: --tau is required");
      return cmd_theta_eval(cfg, ch, tau, out);
    }
    if (*formc) return cmd_form(cfg, name, out);
    if (*bracket) return cmd_bracket(cfg, files, scalar, weights, entry, out);
    if (*slopec) {
      if (b_op + b_moving + b_hyp > 1) throw Error("slope bound: choose one of --op, --moving, --hyperelliptic");
      bound = b_op ? "op" : b_moving ? "moving" : b_hyp ? "hyperelliptic" : "";
      return cmd_slope(cfg, what, name, bound, lam, del, out);
    }
    if (*verify) {
      out << cfg.header("verify " + what);
      int failures = 0;
      if (what == "pluriharmonic") failures = verify_pluriharmonic(cfg, out);
      else if (what == "heat") failures = verify_heat(cfg, out);
      else if (what == "modularity") failures = verify_modularity(cfg, form, out);
      else if (what == "cond") failures = verify_cond(cfg, tau, out);
      else if (what == "schottky-vanishing") failures = verify_schottky(cfg, out);
      else failures = verify_table(out);
      out << "failures " << failures << "\n";
      return failures;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace siegel
