#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "siegel/jet.hpp"
#include "siegel/theta.hpp"

namespace siegel {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct LatticeOptions {
  /// Relative tail bound for the lattice sum.
  double tol = 1e-16;
  /// Fixed radius; when absent it is derived from tol.
  std::optional<int> radius;
  /// Largest admissible number of lattice points.
  long long max_points = 50'000'000;
};

/// Throws unless tau is symmetric with positive-definite imaginary part.
void check_siegel_point(const CMatrix& tau);

/// Smallest radius whose Gaussian tail beyond the box is below `tol`.
int lattice_radius(const CMatrix& tau, const CVector& z, double tol);

/// theta[c](tau, z) differentiated term by term: every (i,j) in d_tau is a
/// plain d/dtau_ij (i <= j, entries 1-based), every i in d_z a d/dz_i.
Complex theta_numeric(const ThetaChar& c, const CMatrix& tau, const CVector& z,
                      const std::vector<IndexPair>& d_tau = {}, const std::vector<int>& d_z = {},
                      const LatticeOptions& opts = {});

/// Value, gradient and Hessian with respect to the normalized derivatives
/// d^_ij = ((1 + delta_ij)/2) d/dtau_ij, coordinates ordered (1,1),(1,2),...,(g,g).
struct Jet2 {
  Complex value;
  CVector grad;
  CMatrix hess;

  static Jet2 constant(Complex v, int dim);
  int dim() const noexcept { return static_cast<int>(grad.size()); }

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  friend Jet2 operator+(Jet2 x, const Jet2& y) { return x += y; }
  friend Jet2 operator-(Jet2 x, const Jet2& y) { return x -= y; }
  friend Jet2 operator*(const Jet2& x, const Jet2& y);
  Jet2 scaled(Complex s) const;
  Jet2 pow(unsigned e) const;
};

/// Index of the normalized coordinate (i,j), 1-based, i <= j.
int pair_index(int g, int i, int j);

/// Theta constant (z = 0) with its first and second normalized tau-derivatives.
Jet2 theta_jet2(const ThetaChar& c, const CMatrix& tau, const LatticeOptions& opts = {});

/// Theta-null product T_g through log-derivatives. The factor of smallest modulus
/// is kept out of the quotients, so the result stays finite on {T_g = 0}.
struct TnullJet {
  Jet2 jet;
  ThetaChar smallest;
  double smallest_abs = 0;
  double largest_abs = 0;
};
TnullJet tnull_jet2_logderiv(int g, const CMatrix& tau, const LatticeOptions& opts = {});
/// Same product by plain forward-mode multiplication.
Jet2 tnull_jet2_direct(int g, const CMatrix& tau, const LatticeOptions& opts = {});

/// Expression tree over theta-constant leaves.
class NumericForm {
 public:
  static NumericForm theta(const ThetaChar& c);
  static NumericForm constant(Complex v, int genus);
  /// Product of all even theta constants; character flag set.
  static NumericForm tnull(int genus);
  /// Operator value: the jet polynomial evaluated with d^_ij / (2 pi i) in place of
  /// each derivative. Jet variables may carry at most two derivatives.
  static NumericForm jet_op(const QJet& p, std::map<std::string, NumericForm> bind,
                            std::map<std::string, BigRational> params = {});

  friend NumericForm operator+(const NumericForm& x, const NumericForm& y);
  friend NumericForm operator*(const NumericForm& x, const NumericForm& y);
  NumericForm pow(unsigned e) const;

  int genus() const noexcept { return genus_; }
  const BigRational& weight() const noexcept { return weight_; }
  bool character() const noexcept { return character_; }
  void set_character(bool c) { character_ = c; }

  Complex value(const CMatrix& tau, const LatticeOptions& opts = {}) const;
  /// Throws for operator nodes, which are not differentiated further.
  Jet2 jet(const CMatrix& tau, const LatticeOptions& opts = {}) const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  int genus_ = 0;
  BigRational weight_;
  bool character_ = false;
};

/// Generators of Sp(2g, Z) used by the modularity harness.
class SymplecticGenerator {
 public:
  /// J = ((0, -I), (I, 0)).
  static SymplecticGenerator inversion(int g);
  /// ((I, B), (0, I)) with B symmetric integral.
  static SymplecticGenerator translation(const Eigen::MatrixXi& b);
  /// diag(U, U^{-t}) with U unimodular.
  static SymplecticGenerator unimodular(const Eigen::MatrixXi& u);

  CMatrix act(const CMatrix& tau) const;
  /// det(C tau + D).
  Complex automorphy(const CMatrix& tau) const;
  std::string name() const { return name_; }

 private:
  Eigen::MatrixXd a_, b_, c_, d_;
  std::string name_;
};

struct ModularityReport {
  /// |f(g tau) - det^w f(tau)| / |det^w f(tau)|.
  double rel_err = 0;
  /// Same with the sign of the right side flipped.
  double rel_err_flipped = 0;
  bool inconclusive = false;
  bool pass = false;
};

/// Flipped sign counts as a pass only for forms carrying the character flag.
/// Inconclusive when |f(tau)| < zero_floor.
ModularityReport check_modularity(const NumericForm& f, const SymplecticGenerator& gamma, const CMatrix& tau,
                                  double tol = 1e-8, double zero_floor = 1e-14, const LatticeOptions& opts = {});

enum class HeatConstant { OneOverFourPiI, TwoPiI };

/// max over i <= j of |d theta/dtau_ij - k_ij d^2 theta/dz_i dz_j| / max(1, |d theta/dtau_ij|)
/// with k_ij = (2 - delta_ij)/(4 pi i), or 2 pi i/(1 + delta_ij) for the control.
double check_heat(const ThetaChar& c, const CMatrix& tau, const CVector& z,
                  HeatConstant constant = HeatConstant::OneOverFourPiI, const LatticeOptions& opts = {});

struct ConditionStarReport {
  Complex det;
  ThetaChar vanishing;
  double vanishing_abs = 0;
};

/// det(D_ij T_g)(tau0) with D = d^/(2 pi i). Throws unless some even theta
/// constant is below zero_tol relative to the largest one.
ConditionStarReport check_condition_star(int g, const CMatrix& tau0, double zero_tol = 1e-10,
                                         const LatticeOptions& opts = {});

/// Random point of the Siegel upper half-space with Im tau >= min_im * I.
CMatrix sample_tau(int g, std::mt19937_64& rng, double min_im = 0.8);

}  // namespace siegel
