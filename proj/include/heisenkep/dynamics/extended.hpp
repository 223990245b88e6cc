#pragma once

#include "heisenkep/dynamics/integrator.hpp"
#include "heisenkep/model/system.hpp"

namespace heisenkep {

/// Lift of H(q, p) = K(q, p, u) with u = rho algebraic over C(q): P(u) = u^2 - s(q),
/// s = (X^2 + Y^2)^2 + 16 Z^2 for the (relative) position.  The extended state is
/// x = (q, p, u) and evolves by x' = J(x) grad K(x), with
///   J = [[0, 1, 0], [-1, 0, grad_q P / P_u], [0, -grad_q P^T / P_u, 0]].
class ExtendedSystem {
 public:
  /// Throws std::invalid_argument when the potential does not involve rho.
  explicit ExtendedSystem(SystemSpec spec);

  const SystemSpec& spec() const { return spec_; }
  int n() const { return spec_.dof(); }
  int dim() const { return 2 * n() + 1; }

  /// Appends u = rho(q).
  Eigen::VectorXd lift(const PhaseState& s) const;
  PhaseState project(const Eigen::VectorXd& x) const { return x.head(2 * n()); }

  double P(const Eigen::VectorXd& x) const;
  Eigen::VectorXd grad_P(const Eigen::VectorXd& x) const;
  double K(const Eigen::VectorXd& x) const;
  Eigen::VectorXd grad_K(const Eigen::VectorXd& x) const;
  /// Throws SingularEvaluationError where dP/du = 0.
  Eigen::MatrixXd poisson_matrix(const Eigen::VectorXd& x) const;
  Eigen::VectorXd rhs(const Eigen::VectorXd& x) const;
  /// grad f^T J grad g
  double bracket(const Eigen::VectorXd& grad_f, const Eigen::VectorXd& grad_g, const Eigen::VectorXd& x) const;

 private:
  double s_of(const Eigen::VectorXd& x) const;
  Eigen::VectorXd grad_s(const Eigen::VectorXd& x) const;

  SystemSpec spec_;
  SystemSpec kinetic_;
};

struct ExtendedRunOptions {
  /// Replace u by the positive root of P after every accepted step.
  bool renormalize = false;
  /// |P(u)| above this (relative to s) ends the run with LeafDeparture.
  double leaf_tol = 1e-6;
};

/// Requires |P(u(0))| <= 1e-12 max(1, s); throws std::invalid_argument otherwise.
Trajectory integrate_extended(const ExtendedSystem& sys, const Eigen::VectorXd& x0, const IntegratorConfig& cfg,
                              const ExtendedRunOptions& opt = {});

}  // namespace heisenkep
