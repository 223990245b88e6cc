#pragma once

#include <functional>
#include <optional>
#include <type_traits>

#include <Eigen/Core>

#include "heisenkep/model/heisenberg.hpp"
#include "heisenkep/model/potential.hpp"

namespace heisenkep {

/// One body: (x, y, z, px, py, pz).
/// Two bodies: (x1, y1, z1, x2, y2, z2, px1, py1, pz1, px2, py2, pz2).
using PhaseState = Eigen::VectorXd;

enum class SystemKind { OneBody, TwoBody };

struct SystemSpec {
  SystemKind kind = SystemKind::OneBody;
  Scalar kappa{1};
  Scalar m1{1};
  Scalar m2{1};
  PotentialSpec potential = PotentialSpec::kepler(Scalar(1));

  static SystemSpec one_body(const Scalar& kappa);
  static SystemSpec one_body(const PotentialSpec& w);
  /// Pair potential m1 m2 W(rho(g1^-1 g2)) with W = -kappa/rho.
  static SystemSpec two_body(const Scalar& kappa, const Scalar& m1, const Scalar& m2);

  /// {kind: "one-body"|"two-body", kappa, m1, m2, potential}.
  static SystemSpec from_json(const Json& j);
  Json to_json() const;

  int dof() const { return kind == SystemKind::OneBody ? 3 : 6; }
  int dim() const { return 2 * dof(); }
};

template <class T>
T rational_constant(long num, long den) {
  if constexpr (std::is_arithmetic_v<T>)
    return static_cast<T>(num) / static_cast<T>(den);
  else
    return T(Scalar::rational(num, den));
}

/// Hessian of 1/2 (px - y pz / 2)^2 + 1/2 (py + x pz / 2)^2 in (x, y, z, px, py, pz).
template <class T>
Eigen::Matrix<T, 6, 6> kinetic_hessian(const Eigen::Matrix<T, 6, 1>& s) {
  const T half = rational_constant<T>(1, 2);
  const T zero = rational_constant<T>(0, 1), one = rational_constant<T>(1, 1);
  Eigen::Matrix<T, 6, 1> ga, gb;
  ga << zero, -half * s(5), zero, one, zero, -half * s(1);
  gb << half * s(5), zero, zero, zero, one, half * s(0);
  const T a = s(3) - half * s(1) * s(5);
  const T b = s(4) + half * s(0) * s(5);
  Eigen::Matrix<T, 6, 6> h = ga * ga.transpose() + gb * gb.transpose();
  h(1, 5) = h(1, 5) - half * a;
  h(5, 1) = h(5, 1) - half * a;
  h(0, 5) = h(0, 5) + half * b;
  h(5, 0) = h(5, 0) + half * b;
  return h;
}

/// Canonical symplectic matrix [[0, I], [-I, 0]] of size 2n.
template <class T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> symplectic_matrix(int n) {
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> om(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) om(i, j) = rational_constant<T>(0, 1);
  for (int i = 0; i < n; ++i) {
    om(i, n + i) = rational_constant<T>(1, 1);
    om(n + i, i) = rational_constant<T>(-1, 1);
  }
  return om;
}

double kinetic_energy(const SystemSpec& spec, const PhaseState& s);
double potential_energy(const SystemSpec& spec, const PhaseState& s);
/// Throws SingularEvaluationError at a collision.
double hamiltonian(const SystemSpec& spec, const PhaseState& s);
/// (dH/dq, dH/dp)
PhaseState hamiltonian_gradient(const SystemSpec& spec, const PhaseState& s);
Eigen::MatrixXd hamiltonian_hessian(const SystemSpec& spec, const PhaseState& s);

/// Relative position g1^-1 g2 of a two-body state.
GroupElement<double> relative_position(const PhaseState& s);
/// d(X, Y, Z)/d(x1, y1, z1, x2, y2, z2) of the relative position.
Eigen::Matrix<double, 3, 6> relative_jacobian(const PhaseState& s);
/// rho of the position (one body) or of the relative position (two bodies).
double configuration_rho(const SystemSpec& spec, const PhaseState& s);

struct FirstIntegrals {
  double H;
  double J;
  std::optional<double> p_theta;
  std::optional<Eigen::Vector4d> I;
};

FirstIntegrals first_integrals(const SystemSpec& spec, const PhaseState& s);
double dilation_integral(const PhaseState& s);
double integral_I(int k, const PhaseState& s);

using Observable = std::function<double(const PhaseState&)>;

/// Central-difference gradient with step cbrt(eps) * max(1, |s_i|).
PhaseState numeric_gradient(const Observable& f, const PhaseState& s);
/// {f, g} = f_q . g_p - f_p . g_q
double poisson_bracket(const Observable& f, const Observable& g, const PhaseState& s);

/// a = 1/2 [W_z + 4 sgn(c) W_rho] at (c, 4|c|); throws std::invalid_argument for c = 0.
double condition_coefficient_a(const PotentialSpec& w, double c);
Scalar condition_coefficient_a_exact(const PotentialSpec& w, const Scalar& c);

struct ParticularParams {
  double c = 1;        // one body: z(0); two bodies: w2(0) = z1 - z2
  double w1 = 0;       // two bodies: z1 + z2
  double p_w1 = 0;     // two bodies: (pz1 + pz2)/2
};

/// Coefficient a of the special solution (p_z or p_w2 equal to -2 a t).
double particular_a(const SystemSpec& spec, const ParticularParams& prm);
/// Special solution at time t in the original canonical coordinates; rejects c = 0.
PhaseState particular_solution(const SystemSpec& spec, const ParticularParams& prm, double t);

}  // namespace heisenkep
