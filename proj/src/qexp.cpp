#include "siegel/qexp.hpp"

#include <algorithm>
#include <numbers>
#include <optional>
#include <sstream>

#include "siegel/errors.hpp"

namespace siegel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> expi2pi(std::complex<double> x) {
  return std::exp(std::complex<double>(0.0, kTwoPi) * x);
}

// Coefficients scaled to integers over a common denominator.
struct IntTerms {
  std::vector<Exp3> exps;
  std::vector<mpz_class> nums;
  mpz_class den = 1;
};

IntTerms to_int_terms(const std::map<Exp3, BigRational>& terms) {
  IntTerms out;
  for (const auto& [e, c] : terms) {
    mpz_class d = c.denominator();
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<std::pair<Exp3, BigRational>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return x.first[0] + x.first[2] < y.first[0] + y.first[2];
  });
  for (const auto& [e, c] : v) {
    out.exps.push_back(e);
    out.nums.push_back(c.numerator() * (out.den / c.denominator()));
  }
  return out;
}

}  // namespace

// ---- genus 1 ----

QExp1::QExp1(BigRational weight, int trunc, int scale) : weight_(std::move(weight)), trunc_(trunc), scale_(scale) {
  if (trunc < 0 || scale < 1) throw Error("QExp1: bad truncation or scale");
}

BigRational QExp1::coeff(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void QExp1::add_term(int n, const BigRational& c) {
  if (n < 0) throw Error("QExp1: negative exponent");
  if (n > trunc_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QExp1::check_compatible(const QExp1& o) const {
  if (scale_ != o.scale_) throw Error("QExp1: scale mismatch");
  if (weight_ != o.weight_) throw Error("QExp1: adding weight " + weight_.to_string() + " to " + o.weight_.to_string());
  if (tau_factor_ != o.tau_factor_) throw Error("QExp1: tau-factor mismatch");
}

QExp1& QExp1::operator+=(const QExp1& o) {
  check_compatible(o);
  trunc_ = std::min(trunc_, o.trunc_);
  *this = truncated(trunc_);
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

QExp1& QExp1::operator-=(const QExp1& o) { return *this += o.scaled(BigRational(-1)); }

QExp1 operator*(const QExp1& x, const QExp1& y) {
  if (x.scale_ != y.scale_) throw Error("QExp1: scale mismatch");
  QExp1 out(x.weight_ + y.weight_, std::min(x.trunc_, y.trunc_), x.scale_);
  out.tau_factor_ = x.tau_factor_ + y.tau_factor_;
  out.character_ = x.character_ != y.character_;
  for (const auto& [n, c] : x.terms_) {
    for (const auto& [m, d] : y.terms_) {
      if (n + m > out.trunc_) break;
      out.add_term(n + m, c * d);
    }
  }
  return out;
}

QExp1 QExp1::scaled(const BigRational& s) const {
  QExp1 out = *this;
  out.terms_.clear();
  for (const auto& [n, c] : terms_) out.add_term(n, c * s);
  return out;
}

QExp1 QExp1::pow(unsigned e) const {
  QExp1 acc(BigRational(0), trunc_, scale_);
  acc.add_term(0, BigRational(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

QExp1 QExp1::truncated(int n) const {
  QExp1 out = *this;
  out.trunc_ = std::min(trunc_, n);
  std::erase_if(out.terms_, [&](const auto& t) { return t.first > out.trunc_; });
  return out;
}

QExp1 QExp1::diff() const {
  QExp1 out = *this;
  out.terms_.clear();
  out.tau_factor_ = tau_factor_ + 1;
  for (const auto& [n, c] : terms_) out.add_term(n, c * BigRational(n, scale_));
  return out;
}

BigRational QExp1::order() const {
  if (terms_.empty()) throw Error("order undetermined at this truncation");
  return BigRational(terms_.begin()->first, scale_);
}

std::complex<double> QExp1::evaluate(std::complex<double> tau) const {
  std::complex<double> sum = 0;
  for (const auto& [n, c] : terms_) sum += c.to_double() * expi2pi(tau * (double(n) / scale_));
  return sum;
}

// ---- genus 2 ----

QExp2::QExp2(BigRational weight, int trunc) : weight_(std::move(weight)), trunc_(trunc) {
  if (trunc < 0) throw Error("QExp2: negative truncation");
}

BigRational QExp2::coeff(const Exp3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void QExp2::add_term(const Exp3& e, const BigRational& c) {
  const auto [a, b, g] = e;
  if (a < 0 || g < 0 || static_cast<long long>(b) * b > 4LL * a * g) {
    throw Error("QExp2: exponent (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(g) +
                ") is not positive semidefinite");
  }
  if (a + g > trunc_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QExp2::check_compatible(const QExp2& o) const {
  if (weight_ != o.weight_) throw Error("QExp2: adding weight " + weight_.to_string() + " to " + o.weight_.to_string());
  if (tau_factor_ != o.tau_factor_) throw Error("QExp2: tau-factor mismatch");
}

QExp2& QExp2::operator+=(const QExp2& o) {
  check_compatible(o);
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QExp2& QExp2::operator-=(const QExp2& o) { return *this += o.scaled(BigRational(-1)); }

QExp2 operator*(const QExp2& x, const QExp2& y) {
  const int n = std::min(x.trunc_, y.trunc_);
  QExp2 out(x.weight_ + y.weight_, n);
  out.tau_factor_ = x.tau_factor_ + y.tau_factor_;
  out.character_ = x.character_ != y.character_;
  if (x.is_zero() || y.is_zero()) return out;
  if (x.size() * y.size() < 4096) {
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        const Exp3 e{ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]};
        if (e[0] + e[2] <= n) out.add_term(e, cx * cy);
      }
    }
    return out;
  }
  const IntTerms a = to_int_terms(x.terms_);
  const IntTerms b = to_int_terms(y.terms_);
  // Dense accumulator over alpha, beta + n, gamma; |beta| <= alpha + gamma <= n.
  const std::size_t w = static_cast<std::size_t>(n) + 1, wb = 2 * static_cast<std::size_t>(n) + 1;
  std::vector<mpz_class> buf(w * wb * w);
  std::vector<char> used(buf.size(), 0);
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    const Exp3& ea = a.exps[i];
    const int room = n - ea[0] - ea[2];
    if (room < 0) break;
    for (std::size_t j = 0; j < b.exps.size(); ++j) {
      const Exp3& eb = b.exps[j];
      if (eb[0] + eb[2] > room) break;
      const std::size_t idx = (static_cast<std::size_t>(ea[0] + eb[0]) * wb + static_cast<std::size_t>(ea[1] + eb[1] + n)) * w +
                              static_cast<std::size_t>(ea[2] + eb[2]);
      mpz_addmul(buf[idx].get_mpz_t(), a.nums[i].get_mpz_t(), b.nums[j].get_mpz_t());
      used[idx] = 1;
    }
  }
  const mpz_class den = a.den * b.den;
  for (std::size_t idx = 0; idx < buf.size(); ++idx) {
    if (!used[idx] || sgn(buf[idx]) == 0) continue;
    const int g = static_cast<int>(idx % w);
    const int beta = static_cast<int>((idx / w) % wb) - n;
    const int al = static_cast<int>(idx / (w * wb));
    out.terms_.emplace(Exp3{al, beta, g}, BigRational(buf[idx], den));
  }
  return out;
}

QExp2 QExp2::scaled(const BigRational& s) const {
  QExp2 out = *this;
  out.terms_.clear();
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

QExp2 QExp2::pow(unsigned e) const {
  QExp2 acc(BigRational(0), trunc_);
  acc.add_term({0, 0, 0}, BigRational(1));
  QExp2 base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

QExp2 QExp2::truncated(int n) const {
  QExp2 out = *this;
  out.trunc_ = std::min(trunc_, n);
  std::erase_if(out.terms_, [&](const auto& t) { return t.first[0] + t.first[2] > out.trunc_; });
  return out;
}

QExp2 QExp2::diff(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 2) throw Error("QExp2::diff: index out of range");
  QExp2 out = *this;
  out.terms_.clear();
  out.tau_factor_ = tau_factor_ + 1;
  for (const auto& [e, c] : terms_) {
    BigRational m = (i == 1 && j == 1) ? BigRational(e[0], 8) : (i == 2 ? BigRational(e[2], 8) : BigRational(e[1], 16));
    out.add_term(e, c * m);
  }
  return out;
}

std::complex<double> QExp2::evaluate(std::complex<double> t11, std::complex<double> t12, std::complex<double> t22) const {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c.to_double() * expi2pi((double(e[0]) * t11 + double(e[1]) * t12 + double(e[2]) * t22) / 8.0);
  }
  return sum;
}

QExp2 q_diff(const QExp2& f, int i, int j) { return f.diff(i, j); }

QExp2 product_tree(std::vector<QExp2> factors) {
  if (factors.empty()) throw Error("product_tree: no factors");
  while (factors.size() > 1) {
    std::vector<QExp2> next;
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
    if (factors.size() % 2) next.push_back(factors.back());
    factors = std::move(next);
  }
  return factors.front();
}

BigRational fj_order(const QExp2& f) {
  if (f.is_zero()) throw Error("order undetermined at this truncation");
  int best = f.terms().begin()->first[2];
  for (const auto& [e, c] : f.terms()) best = std::min(best, e[2]);
  return BigRational(best, QExp2::kScale);
}

std::map<std::pair<int, int>, BigRational> fj_slice(const QExp2& f, const BigRational& r) {
  std::map<std::pair<int, int>, BigRational> out;
  const BigRational scaled = r * BigRational(QExp2::kScale);
  if (!scaled.is_integer()) return out;
  const long gamma = scaled.numerator().get_si();
  for (const auto& [e, c] : f.terms()) {
    if (e[2] == gamma) out.emplace(std::make_pair(e[0], e[1]), c);
  }
  return out;
}

namespace {

template <class Series, class DiffFn>
Series eval_jet_generic(const QJet& p, const std::map<std::string, Series>& bind,
                        const std::map<std::string, BigRational>& params, int genus, DiffFn&& diff) {
  std::map<JetVar, Series> cache;
  auto series_of = [&](const JetVar& v) -> const Series& {
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    auto b = bind.find(v.symbol().name);
    if (b == bind.end()) throw Error("eval_jetpoly: symbol '" + v.symbol().name + "' is unbound");
    Series s = b->second;
    for (const auto& [i, j] : v.pairs()) s = diff(s, i, j);
    return cache.emplace(v, std::move(s)).first->second;
  };
  std::optional<Series> total;
  std::optional<BigRational> weight;
  std::optional<int> tau;
  for (const auto& [m, c] : p.sorted_terms()) {
    BigRational coeff = c;
    std::optional<Series> prod;
    BigRational w(0);
    int derivs = 0;
    for (const auto& [v, e] : m.factors()) {
      if (v.symbol().is_parameter()) {
        auto it = params.find(v.symbol().name);
        if (it == params.end()) throw Error("eval_jetpoly: parameter '" + v.symbol().name + "' is unbound");
        coeff *= it->second.pow(static_cast<int>(e));
        continue;
      }
      const Series& s = series_of(JetVar(v.symbol()));
      w += s.weight() * BigRational(e);
      derivs += v.order() * static_cast<int>(e);
      const Series& sd = series_of(v);
      for (std::uint32_t k = 0; k < e; ++k) prod = prod ? *prod * sd : sd;
    }
    w += BigRational(2 * derivs, genus);
    if (!prod) throw Error("eval_jetpoly: constant monomial has no series to attach to");
    if (weight && (*weight != w || *tau != derivs)) throw Error("eval_jetpoly: jet polynomial is not homogeneous in weight");
    weight = w;
    tau = derivs;
    Series term = prod->scaled(coeff);
    term.set_weight(w);
    if (!total) {
      total = term;
    } else {
      *total += term;
    }
  }
  if (!total) throw Error("eval_jetpoly: zero jet polynomial");
  return *total;
}

}  // namespace

QExp2 eval_jetpoly(const QJet& p, const std::map<std::string, QExp2>& bind, const std::map<std::string, BigRational>& params) {
  return eval_jet_generic<QExp2>(p, bind, params, 2, [](const QExp2& s, int i, int j) { return s.diff(i, j); });
}

QExp1 eval_jetpoly(const QJet& p, const std::map<std::string, QExp1>& bind, const std::map<std::string, BigRational>& params) {
  return eval_jet_generic<QExp1>(p, bind, params, 1, [](const QExp1& s, int i, int j) {
    if (i != 1 || j != 1) throw Error("eval_jetpoly: genus-1 expansions only have d(1,1)");
    return s.diff();
  });
}

// ---- SMF1 ----

namespace {

void write_header(std::ostringstream& os, int genus, const BigRational& weight, int scale, int trunc, int tau, bool chr) {
  os << "SMF1\n";
  os << "genus " << genus << "\n";
  os << "weight " << weight.to_string() << "\n";
  os << "scale " << scale << "\n";
  os << "trunc " << trunc << "\n";
  os << "tau-factor " << tau << "\n";
  os << "character " << (chr ? 1 : 0) << "\n";
}

struct Header {
  int genus = 0;
  BigRational weight;
  int scale = 0;
  int trunc = 0;
  int tau = 0;
  bool chr = false;
};

Header read_header(std::istringstream& in) {
  std::string line;
  auto field = [&](const std::string& key) {
    if (!std::getline(in, line) || !line.starts_with(key + " ")) throw ParseError("SMF1: expected '" + key + "'");
    return line.substr(key.size() + 1);
  };
  if (!std::getline(in, line) || line != "SMF1") throw ParseError("SMF1: missing header");
  Header h;
  h.genus = std::stoi(field("genus"));
  h.weight = BigRational::parse(field("weight"));
  h.scale = std::stoi(field("scale"));
  h.trunc = std::stoi(field("trunc"));
  h.tau = std::stoi(field("tau-factor"));
  h.chr = field("character") == "1";
  return h;
}

}  // namespace

std::string to_smf1(const QExp2& f) {
  std::ostringstream os;
  write_header(os, 2, f.weight(), QExp2::kScale, f.trunc(), f.tau_factor(), f.character());
  for (const auto& [e, c] : f.terms()) os << e[0] << " " << e[1] << " " << e[2] << " " << c.to_string() << "\n";
  return os.str();
}

std::string to_smf1(const QExp1& f) {
  std::ostringstream os;
  write_header(os, 1, f.weight(), f.scale(), f.trunc(), f.tau_factor(), f.character());
  for (const auto& [n, c] : f.terms()) os << n << " " << c.to_string() << "\n";
  return os.str();
}

int smf1_genus(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_header(in).genus;
}

QExp2 parse_smf1_genus2(std::string_view text) {
  std::istringstream in{std::string(text)};
  const Header h = read_header(in);
  if (h.genus != 2 || h.scale != QExp2::kScale) throw ParseError("SMF1: not a genus-2 expansion with scale 8");
  QExp2 f(h.weight, h.trunc);
  f.set_tau_factor(h.tau);
  f.set_character(h.chr);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Exp3 e{};
    std::string c;
    if (!(ls >> e[0] >> e[1] >> e[2] >> c)) throw ParseError("SMF1: bad term line '" + line + "'");
    f.add_term(e, BigRational::parse(c));
  }
  return f;
}

QExp1 parse_smf1_genus1(std::string_view text) {
  std::istringstream in{std::string(text)};
  const Header h = read_header(in);
  if (h.genus != 1) throw ParseError("SMF1: not a genus-1 expansion");
  QExp1 f(h.weight, h.trunc, h.scale);
  f.set_tau_factor(h.tau);
  f.set_character(h.chr);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int n = 0;
    std::string c;
    if (!(ls >> n >> c)) throw ParseError("SMF1: bad term line '" + line + "'");
    f.add_term(n, BigRational::parse(c));
  }
  return f;
}

}  // namespace siegel
