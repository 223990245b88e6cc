#pragma once

#include <complex>

#include "heisenkep/dynamics/flow.hpp"
#include "heisenkep/variational/linear_system.hpp"

namespace heisenkep {

class NotASolutionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Variational system along the one-body axis solution (0, 0, c, 0, 0, -2at), exact in t,
/// with variables ordered (x, px, y, py, z, pz).  Throws std::invalid_argument for c = 0,
/// non-real c or a two-body spec.
LinearSystem ve_particular(const SystemSpec& spec, const Scalar& c);

/// Reorders (x, y, z, px, py, pz) to (x, px, y, py, z, pz) by conjugation.
Eigen::MatrixXd to_pair_order(const Eigen::MatrixXd& a);

/// Jacobian of hamilton_rhs along a computed trajectory, read from its dense output.
class NumericVE {
 public:
  NumericVE(SystemSpec spec, Trajectory traj) : spec_(std::move(spec)), traj_(std::move(traj)) {}
  Eigen::MatrixXd operator()(double t) const { return hamilton_jacobian(spec_, traj_.value_at(t)); }
  const Trajectory& trajectory() const { return traj_; }

 private:
  SystemSpec spec_;
  Trajectory traj_;
};

/// Checks the dense output against hamilton_rhs at every segment midpoint (relative
/// tolerance `tol`) and throws NotASolutionError on failure.
NumericVE ve_along(const SystemSpec& spec, Trajectory traj, double tol = 1e-6);

using ComplexState = Eigen::Matrix<std::complex<double>, 6, 1>;

/// (q1, h1, q2, h2, q3, h3) with q1 = x + iy, h1 = px + i py + (i/2) pz q1,
/// q2 = x - iy, h2 = px - i py - (i/2) pz q2, q3 = z, h3 = pz.
ComplexState transform_vars_q1h1(const PhaseState& s);
/// Inverse of transform_vars_q1h1 (complex in general).
ComplexState transform_vars_q1h1_inverse(const ComplexState& v);

/// diag(A1, A2, A3) in the variables (q1, h1, q2, h2, q3, h3) with
/// A1 = [[0, 1], [-ia, -2iat]], A2 = [[0, 1], [ia, 2iat]], A3 = [[0, 0], [C, 0]].
LinearSystem ve_blocks_transformed(const Scalar& a, const RatFunc& C);
/// Same with a and C taken from the potential at height c.
LinearSystem ve_blocks_transformed(const SystemSpec& spec, const Scalar& c);

/// Two-body variational system in the rescaled time tau, variables
/// (u1, pv1, u2, pv2, v1, pu1, v2, pu2, w1, w2, pw1, pw2).
LinearSystem ve_twobody_blocks(const Scalar& mu, const Scalar& tau0, const Scalar& w2);

/// Gauge for the A1 block at tau0 = 0.
ExactMatrix twobody_gauge_tau0_zero(const Scalar& mu);
/// Gauge for the A1 block at mu = -1, tau0 = 1.
ExactMatrix twobody_gauge_mu_minus_one();
/// Constant gauge splitting the 4x4 one-body block into two 2x2 blocks.
ExactMatrix splitting_gauge();

/// Fundamental matrix Phi(t1) of y' = A(t) y with Phi(t0) = 1, by DOPRI5 on real and
/// imaginary parts.
Eigen::MatrixXcd fundamental_matrix(const std::function<Eigen::MatrixXcd(double)>& a, Eigen::Index n, double t0,
                                    double t1, double tol = 1e-12);

}  // namespace heisenkep
