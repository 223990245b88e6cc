#pragma once

#include <map>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "heisenkep/exactalg/ratfunc.hpp"
#include "heisenkep/exactalg/serialize.hpp"

namespace heisenkep {

/// Sparse polynomial in (z, rho); the key (i, j) multiplies z^i rho^j.
class BiPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Scalar>;

  BiPoly() = default;
  BiPoly(Scalar c);
  explicit BiPoly(Terms terms);

  static BiPoly monomial(Scalar c, int i, int j);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool depends_on_rho() const;

  BiPoly d_z() const;
  BiPoly d_rho() const;

  double operator()(double z, double r) const;
  Scalar operator()(const Scalar& z, const Scalar& r) const;
  /// Substitutes rho = k z, giving a polynomial in z.
  Poly restrict(const Scalar& k) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

 private:
  void trim();
  Terms t_;
};

/// Rational potential W(z, rho) = num/den with exact real coefficients.
/// Derivatives are symbolic quotients and are not reduced.
class PotentialSpec {
 public:
  struct Quotient {
    BiPoly num, den;
    double operator()(double z, double r) const;
    Scalar operator()(const Scalar& z, const Scalar& r) const;
    Quotient d_z() const;
    Quotient d_rho() const;
  };

  PotentialSpec() = default;
  /// Throws std::invalid_argument for a zero denominator or non-real coefficients.
  PotentialSpec(BiPoly num, BiPoly den);

  /// W = -kappa / rho
  static PotentialSpec kepler(const Scalar& kappa);
  /// Parses "kepler" or {"num": [[i, j, "c"], ...], "den": [...]}.
  static PotentialSpec from_json(const Json& j, const Scalar& kappa);
  Json to_json() const;

  const Quotient& w() const { return w_; }
  const Quotient& w_z() const { return wz_; }
  const Quotient& w_rho() const { return wr_; }
  const Quotient& w_zz() const { return wzz_; }
  const Quotient& w_zrho() const { return wzr_; }
  const Quotient& w_rhorho() const { return wrr_; }
  bool depends_on_rho() const { return w_.num.depends_on_rho() || w_.den.depends_on_rho(); }

  /// W(z, 4 sigma z) as a rational function of z, sigma = +-1.
  RatFunc on_axis(int sigma) const;

 private:
  Quotient w_, wz_, wr_, wzz_, wzr_, wrr_;
};

/// V(x, y, z) = W(z, rho) with its gradient and Hessian in (x, y, z).
struct PotentialDerivatives {
  double value;
  Eigen::Vector3d grad;
  Eigen::Matrix3d hess;
};

/// Throws SingularEvaluationError at a pole of W or at rho = 0 when W depends on rho.
PotentialDerivatives potential_derivatives(const PotentialSpec& w, double x, double y, double z);
double potential_value(const PotentialSpec& w, double x, double y, double z);

}  // namespace heisenkep
