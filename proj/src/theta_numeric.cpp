#include "siegel/theta_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "siegel/errors.hpp"

namespace siegel {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0, 1);

int genus_of(const CMatrix& tau) { return static_cast<int>(tau.rows()); }

long long box_points(int radius, int g) {
  long long n = 1;
  for (int i = 0; i < g; ++i) n *= 2LL * radius + 1;
  return n;
}

int checked_radius(const ThetaChar& c, const CMatrix& tau, const CVector& z, const LatticeOptions& opts) {
  check_siegel_point(tau);
  const int g = genus_of(tau);
  if (c.genus() != g) throw Error("theta: characteristic genus does not match tau");
  if (z.size() != g) throw Error("theta: z has the wrong length");
  const int needed = lattice_radius(tau, z, opts.tol);
  const int r = opts.radius.value_or(needed);
  if (r < needed)
    throw Error("theta: radius " + std::to_string(r) + " misses the tail bound; suggested radius " +
                std::to_string(needed));
  if (box_points(r, g) > opts.max_points)
    throw Error("theta: lattice box of radius " + std::to_string(r) + " exceeds the point budget");
  return r;
}

// Visits every n with |n|_inf <= radius; m = n + eps/2, term = exp(pi i (m.tau.m + 2 m.(z + delta/2))).
template <class Visit>
void for_each_point(const ThetaChar& c, const CMatrix& tau, const CVector& z, int radius, Visit&& visit) {
  const int g = genus_of(tau);
  CVector shift(g);
  for (int i = 0; i < g; ++i) shift(i) = z(i) + 0.5 * c.delta()[static_cast<std::size_t>(i)];
  std::vector<int> n(static_cast<std::size_t>(g), -radius);
  Eigen::VectorXd m(g);
  while (true) {
    int shell = 0;
    for (int i = 0; i < g; ++i) {
      m(i) = n[static_cast<std::size_t>(i)] + 0.5 * c.eps()[static_cast<std::size_t>(i)];
      shell = std::max(shell, std::abs(n[static_cast<std::size_t>(i)]));
    }
    const CVector mc = m.cast<Complex>();
    const Complex quad = mc.dot(tau * mc);  // dot conjugates its first argument, m is real
    const Complex lin = mc.dot(shift);
    visit(shell, m, std::exp(kI * kPi * (quad + 2.0 * lin)));
    int k = g - 1;
    while (k >= 0 && n[static_cast<std::size_t>(k)] == radius) n[static_cast<std::size_t>(k--)] = -radius;
    if (k < 0) break;
    ++n[static_cast<std::size_t>(k)];
  }
}

// Shells are reduced from the outside in, so the order never depends on threads or hashing.
template <class T>
T reduce_shells(std::vector<T>& shells) {
  T acc = shells.back();
  for (std::size_t s = shells.size() - 1; s-- > 0;) acc += shells[s];
  return acc;
}

}  // namespace

void check_siegel_point(const CMatrix& tau) {
  if (tau.rows() != tau.cols() || tau.rows() < 1) throw Error("tau must be a nonempty square matrix");
  if ((tau - tau.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1 + tau.cwiseAbs().maxCoeff()))
    throw Error("tau must be symmetric");
  const Eigen::MatrixXd y = tau.imag();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y);
  if (es.eigenvalues().minCoeff() <= 0) throw Error("Im tau is not positive definite");
}

int lattice_radius(const CMatrix& tau, const CVector& z, double tol) {
  check_siegel_point(tau);
  if (!(tol > 0 && tol < 1)) throw Error("lattice_radius: tolerance must lie in (0, 1)");
  const Eigen::MatrixXd y = tau.imag();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y);
  const double lmin = es.eigenvalues().minCoeff();
  const Eigen::VectorXd center = -y.ldlt().solve(Eigen::VectorXd(z.imag()));
  const double c = center.size() ? center.cwiseAbs().maxCoeff() : 0.0;
  // Margin of 10 in the exponent absorbs polynomial derivative factors and the point count.
  const double r = c + 0.5 + std::sqrt((-std::log(tol) + 10.0) / (kPi * lmin));
  return static_cast<int>(std::ceil(r));
}

Complex theta_numeric(const ThetaChar& c, const CMatrix& tau, const CVector& z, const std::vector<IndexPair>& d_tau,
                      const std::vector<int>& d_z, const LatticeOptions& opts) {
  const int radius = checked_radius(c, tau, z, opts);
  const int g = genus_of(tau);
  if (d_tau.size() > 2 || d_z.size() > 2) throw Error("theta_numeric: at most two derivatives of each kind");
  for (const auto& [i, j] : d_tau)
    if (i < 1 || i > j || j > g) throw Error("theta_numeric: tau index out of range");
  for (int i : d_z)
    if (i < 1 || i > g) throw Error("theta_numeric: z index out of range");
  std::vector<Complex> shells(static_cast<std::size_t>(radius) + 1, Complex(0));
  for_each_point(c, tau, z, radius, [&](int shell, const Eigen::VectorXd& m, Complex term) {
    for (const auto& [i, j] : d_tau) term *= kI * kPi * (i == j ? 1.0 : 2.0) * m(i - 1) * m(j - 1);
    for (int i : d_z) term *= 2.0 * kPi * kI * m(i - 1);
    shells[static_cast<std::size_t>(shell)] += term;
  });
  return reduce_shells(shells);
}

int pair_index(int g, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > g) throw Error("pair_index: index out of range");
  return (i - 1) * g - (i - 1) * (i - 2) / 2 + (j - i);
}

Jet2 Jet2::constant(Complex v, int dim) {
  return {v, CVector::Zero(dim), CMatrix::Zero(dim, dim)};
}

Jet2& Jet2::operator+=(const Jet2& o) {
  value += o.value;
  grad += o.grad;
  hess += o.hess;
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  value -= o.value;
  grad -= o.grad;
  hess -= o.hess;
  return *this;
}

Jet2 operator*(const Jet2& x, const Jet2& y) {
  if (x.dim() != y.dim()) throw Error("Jet2: dimension mismatch");
  Jet2 out;
  out.value = x.value * y.value;
  out.grad = x.value * y.grad + y.value * x.grad;
  out.hess = x.value * y.hess + y.value * x.hess + x.grad * y.grad.transpose() + y.grad * x.grad.transpose();
  return out;
}

Jet2 Jet2::scaled(Complex s) const { return {value * s, grad * s, hess * s}; }

Jet2 Jet2::pow(unsigned e) const {
  Jet2 acc = constant(1.0, dim()), base = *this;
  for (; e; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

Jet2 theta_jet2(const ThetaChar& c, const CMatrix& tau, const LatticeOptions& opts) {
  const int g = genus_of(tau);
  const CVector z = CVector::Zero(g);
  const int radius = checked_radius(c, tau, z, opts);
  const int dim = g * (g + 1) / 2;
  std::vector<Jet2> shells(static_cast<std::size_t>(radius) + 1, Jet2::constant(0.0, dim));
  CVector f(dim);
  for_each_point(c, tau, z, radius, [&](int shell, const Eigen::VectorXd& m, Complex term) {
    // d^_ij of the summand is pi i m_i m_j times it, uniformly in i, j.
    for (int i = 1; i <= g; ++i)
      for (int j = i; j <= g; ++j) f(pair_index(g, i, j)) = kI * kPi * m(i - 1) * m(j - 1);
    Jet2& s = shells[static_cast<std::size_t>(shell)];
    s.value += term;
    s.grad += term * f;
    s.hess += term * (f * f.transpose());
  });
  return reduce_shells(shells);
}

TnullJet tnull_jet2_logderiv(int g, const CMatrix& tau, const LatticeOptions& opts) {
  const auto chars = even_chars(g);
  std::vector<Jet2> jets;
  for (const auto& c : chars) jets.push_back(theta_jet2(c, tau, opts));
  std::size_t k0 = 0;
  double largest = 0;
  for (std::size_t k = 0; k < jets.size(); ++k) {
    if (std::abs(jets[k].value) < std::abs(jets[k0].value)) k0 = k;
    largest = std::max(largest, std::abs(jets[k].value));
  }
  const int dim = g * (g + 1) / 2;
  Complex prod = 1.0;
  CVector l1 = CVector::Zero(dim);
  CMatrix l2 = CMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < jets.size(); ++k) {
    if (k == k0) continue;
    const Jet2& t = jets[k];
    const CVector d = t.grad / t.value;
    prod *= t.value;
    l1 += d;
    l2 += t.hess / t.value - d * d.transpose();
  }
  const Jet2 rest{prod, prod * l1, prod * (l1 * l1.transpose() + l2)};
  return {jets[k0] * rest, chars[k0], std::abs(jets[k0].value), largest};
}

Jet2 tnull_jet2_direct(int g, const CMatrix& tau, const LatticeOptions& opts) {
  Jet2 acc = Jet2::constant(1.0, g * (g + 1) / 2);
  for (const auto& c : even_chars(g)) acc = acc * theta_jet2(c, tau, opts);
  return acc;
}

struct NumericForm::Node {
  enum class Kind { Theta, Const, Sum, Product, Power, JetOp } kind;
  ThetaChar ch;
  Complex c;
  std::vector<NumericForm> kids;
  unsigned e = 1;
  QJet jet;
  std::map<std::string, NumericForm> bind;
  std::map<std::string, double> params;
};

NumericForm NumericForm::theta(const ThetaChar& c) {
  NumericForm f;
  f.node_ = std::make_shared<Node>(Node{Node::Kind::Theta, c, {}, {}, 1, {}, {}, {}});
  f.genus_ = c.genus();
  f.weight_ = BigRational(1, 2);
  return f;
}

NumericForm NumericForm::constant(Complex v, int genus) {
  NumericForm f;
  f.node_ = std::make_shared<Node>(Node{Node::Kind::Const, {}, v, {}, 1, {}, {}, {}});
  f.genus_ = genus;
  f.weight_ = BigRational(0);
  return f;
}

NumericForm NumericForm::tnull(int genus) {
  NumericForm f;
  std::vector<NumericForm> kids;
  for (const auto& c : even_chars(genus)) kids.push_back(theta(c));
  f.genus_ = genus;
  f.weight_ = BigRational(static_cast<long>(kids.size()), 2);
  f.node_ = std::make_shared<Node>(Node{Node::Kind::Product, {}, {}, std::move(kids), 1, {}, {}, {}});
  f.character_ = true;
  return f;
}

NumericForm operator+(const NumericForm& x, const NumericForm& y) {
  if (x.genus_ != y.genus_ || x.weight_ != y.weight_ || x.character_ != y.character_)
    throw Error("NumericForm: sum of forms of different type");
  NumericForm f = x;
  f.node_ = std::make_shared<NumericForm::Node>(
      NumericForm::Node{NumericForm::Node::Kind::Sum, {}, {}, {x, y}, 1, {}, {}, {}});
  return f;
}

NumericForm operator*(const NumericForm& x, const NumericForm& y) {
  if (x.genus_ != y.genus_) throw Error("NumericForm: product of forms of different genus");
  NumericForm f;
  f.genus_ = x.genus_;
  f.weight_ = x.weight_ + y.weight_;
  f.character_ = x.character_ != y.character_;
  f.node_ = std::make_shared<NumericForm::Node>(
      NumericForm::Node{NumericForm::Node::Kind::Product, {}, {}, {x, y}, 1, {}, {}, {}});
  return f;
}

NumericForm NumericForm::pow(unsigned e) const {
  NumericForm f;
  f.genus_ = genus_;
  f.weight_ = weight_ * BigRational(static_cast<long>(e));
  f.character_ = character_ && (e % 2 == 1);
  f.node_ = std::make_shared<Node>(Node{Node::Kind::Power, {}, {}, {*this}, e, {}, {}, {}});
  return f;
}

NumericForm NumericForm::jet_op(const QJet& p, std::map<std::string, NumericForm> bind,
                                std::map<std::string, BigRational> params) {
  NumericForm f;
  if (bind.empty()) throw Error("jet_op: no bound forms");
  f.genus_ = bind.begin()->second.genus();
  std::optional<BigRational> weight;
  std::optional<bool> character;
  for (const auto& [m, c] : p.terms()) {
    BigRational w(0);
    bool ch = false;
    long derivs = 0;
    for (const auto& [v, e] : m.factors()) {
      if (v.symbol().is_parameter()) {
        if (!params.contains(v.symbol().name)) throw Error("jet_op: unbound parameter " + v.symbol().name);
        continue;
      }
      auto it = bind.find(v.symbol().name);
      if (it == bind.end()) throw Error("jet_op: unbound symbol " + v.symbol().name);
      if (it->second.genus() != f.genus_) throw Error("jet_op: bound forms of different genus");
      if (v.order() > 2) throw Error("jet_op: jet variable of order above two");
      w += it->second.weight() * BigRational(static_cast<long>(e));
      if (it->second.character() && e % 2 == 1) ch = !ch;
      derivs += static_cast<long>(e) * v.order();
    }
    w += BigRational(2 * derivs, f.genus_);
    if (weight && (*weight != w || *character != ch)) throw Error("jet_op: inhomogeneous jet polynomial");
    weight = w;
    character = ch;
  }
  f.weight_ = weight.value_or(BigRational(0));
  f.character_ = character.value_or(false);
  std::map<std::string, double> numeric;
  for (const auto& [k, v] : params) numeric[k] = v.to_double();
  f.node_ = std::make_shared<Node>(Node{Node::Kind::JetOp, {}, {}, {}, 1, p, std::move(bind), std::move(numeric)});
  return f;
}

Complex NumericForm::value(const CMatrix& tau, const LatticeOptions& opts) const {
  if (genus_of(tau) != genus_) throw Error("NumericForm: tau of the wrong genus");
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Theta:
      return theta_numeric(n.ch, tau, CVector::Zero(genus_), {}, {}, opts);
    case Node::Kind::Const:
      return n.c;
    case Node::Kind::Sum: {
      Complex s = 0;
      for (const auto& k : n.kids) s += k.value(tau, opts);
      return s;
    }
    case Node::Kind::Product: {
      Complex s = 1;
      for (const auto& k : n.kids) s *= k.value(tau, opts);
      return s;
    }
    case Node::Kind::Power:
      return std::pow(n.kids.front().value(tau, opts), static_cast<int>(n.e));
    case Node::Kind::JetOp: {
      std::map<std::string, Jet2> jets;
      for (const auto& [name, form] : n.bind) jets.emplace(name, form.jet(tau, opts));
      const Complex unit = 2.0 * kPi * kI;
      Complex total = 0;
      // Sorted terms keep the floating-point summation order fixed.
      std::vector<std::pair<JetMonomial, BigRational>> terms(n.jet.terms().begin(), n.jet.terms().end());
      std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [m, c] : terms) {
        Complex t = c.to_double();
        for (const auto& [v, e] : m.factors()) {
          Complex x;
          if (v.symbol().is_parameter()) {
            x = n.params.at(v.symbol().name);
          } else {
            const Jet2& j = jets.at(v.symbol().name);
            const auto& pr = v.pairs();
            if (pr.empty()) x = j.value;
            else if (pr.size() == 1) x = j.grad(pair_index(genus_, pr[0].first, pr[0].second)) / unit;
            else
              x = j.hess(pair_index(genus_, pr[0].first, pr[0].second), pair_index(genus_, pr[1].first, pr[1].second)) /
                  (unit * unit);
          }
          t *= std::pow(x, static_cast<int>(e));
        }
        total += t;
      }
      return total;
    }
  }
  throw Error("NumericForm: corrupt node");
}

Jet2 NumericForm::jet(const CMatrix& tau, const LatticeOptions& opts) const {
  if (genus_of(tau) != genus_) throw Error("NumericForm: tau of the wrong genus");
  const int dim = genus_ * (genus_ + 1) / 2;
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Theta:
      return theta_jet2(n.ch, tau, opts);
    case Node::Kind::Const:
      return Jet2::constant(n.c, dim);
    case Node::Kind::Sum: {
      Jet2 s = Jet2::constant(0.0, dim);
      for (const auto& k : n.kids) s += k.jet(tau, opts);
      return s;
    }
    case Node::Kind::Product: {
      Jet2 s = Jet2::constant(1.0, dim);
      for (const auto& k : n.kids) s = s * k.jet(tau, opts);
      return s;
    }
    case Node::Kind::Power:
      return n.kids.front().jet(tau, opts).pow(n.e);
    case Node::Kind::JetOp:
      throw Error("NumericForm: operator values are not differentiated");
  }
  throw Error("NumericForm: corrupt node");
}

SymplecticGenerator SymplecticGenerator::inversion(int g) {
  SymplecticGenerator s;
  s.a_ = Eigen::MatrixXd::Zero(g, g);
  s.b_ = -Eigen::MatrixXd::Identity(g, g);
  s.c_ = Eigen::MatrixXd::Identity(g, g);
  s.d_ = Eigen::MatrixXd::Zero(g, g);
  s.name_ = "J";
  return s;
}

SymplecticGenerator SymplecticGenerator::translation(const Eigen::MatrixXi& b) {
  if (b.rows() != b.cols() || b != b.transpose()) throw Error("translation: B must be square symmetric");
  const auto g = b.rows();
  SymplecticGenerator s;
  s.a_ = Eigen::MatrixXd::Identity(g, g);
  s.b_ = b.cast<double>();
  s.c_ = Eigen::MatrixXd::Zero(g, g);
  s.d_ = Eigen::MatrixXd::Identity(g, g);
  s.name_ = "T_B";
  return s;
}

SymplecticGenerator SymplecticGenerator::unimodular(const Eigen::MatrixXi& u) {
  if (u.rows() != u.cols()) throw Error("unimodular: U must be square");
  const Eigen::MatrixXd ud = u.cast<double>();
  if (std::abs(std::abs(ud.determinant()) - 1) > 1e-9) throw Error("unimodular: det U must be +-1");
  const auto g = u.rows();
  SymplecticGenerator s;
  s.a_ = ud;
  s.b_ = Eigen::MatrixXd::Zero(g, g);
  s.c_ = Eigen::MatrixXd::Zero(g, g);
  s.d_ = ud.inverse().transpose().array().round().matrix();
  s.name_ = "U";
  return s;
}

CMatrix SymplecticGenerator::act(const CMatrix& tau) const {
  const CMatrix num = a_.cast<Complex>() * tau + b_.cast<Complex>();
  const CMatrix den = c_.cast<Complex>() * tau + d_.cast<Complex>();
  const CMatrix out = den.transpose().partialPivLu().solve(num.transpose()).transpose();
  return 0.5 * (out + out.transpose());
}

Complex SymplecticGenerator::automorphy(const CMatrix& tau) const {
  return (c_.cast<Complex>() * tau + d_.cast<Complex>()).determinant();
}

ModularityReport check_modularity(const NumericForm& f, const SymplecticGenerator& gamma, const CMatrix& tau,
                                  double tol, double zero_floor, const LatticeOptions& opts) {
  if (!f.weight().is_integer()) throw Error("check_modularity: half-integral weight needs a multiplier system");
  const Complex at = f.value(tau, opts);
  ModularityReport r;
  if (!(std::abs(at) >= zero_floor)) {
    r.inconclusive = true;
    return r;
  }
  const Complex image = f.value(gamma.act(tau), opts);
  const Complex rhs = std::pow(gamma.automorphy(tau), static_cast<int>(f.weight().to_double())) * at;
  r.rel_err = std::abs(image - rhs) / std::abs(rhs);
  r.rel_err_flipped = std::abs(image + rhs) / std::abs(rhs);
  r.pass = r.rel_err < tol || (f.character() && r.rel_err_flipped < tol);
  return r;
}

double check_heat(const ThetaChar& c, const CMatrix& tau, const CVector& z, HeatConstant constant,
                  const LatticeOptions& opts) {
  const int g = genus_of(tau);
  double worst = 0;
  for (int i = 1; i <= g; ++i) {
    for (int j = i; j <= g; ++j) {
      const auto pair = IndexPair(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
      const Complex lhs = theta_numeric(c, tau, z, {pair}, {}, opts);
      const Complex hz = theta_numeric(c, tau, z, {}, {i, j}, opts);
      const Complex k = constant == HeatConstant::OneOverFourPiI ? (i == j ? 1.0 : 2.0) / (4.0 * kPi * kI)
                                                                 : 2.0 * kPi * kI / (i == j ? 2.0 : 1.0);
      worst = std::max(worst, std::abs(lhs - k * hz) / std::max(1.0, std::abs(lhs)));
    }
  }
  return worst;
}

ConditionStarReport check_condition_star(int g, const CMatrix& tau0, double zero_tol, const LatticeOptions& opts) {
  const TnullJet t = tnull_jet2_logderiv(g, tau0, opts);
  if (t.smallest_abs > zero_tol * t.largest_abs)
    throw Error("check_condition_star: tau0 is not on the theta-null locus");
  CMatrix d(g, g);
  const Complex unit = 2.0 * kPi * kI;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) d(i - 1, j - 1) = t.jet.grad(pair_index(g, i, j)) / unit;
  return {d.determinant(), t.smallest, t.smallest_abs};
}

CMatrix sample_tau(int g, std::mt19937_64& rng, double min_im) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  Eigen::MatrixXd a(g, g), x(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) a(i, j) = u(rng);
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) x(i, j) = x(j, i) = u(rng);
  const Eigen::MatrixXd y = a * a.transpose() + min_im * Eigen::MatrixXd::Identity(g, g);
  CMatrix tau(g, g);
  tau.real() = x;
  tau.imag() = y;
  return tau;
}

}  // namespace siegel
