#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "heisenkep/dynamics/integrator.hpp"
#include "heisenkep/model/system.hpp"

namespace heisenkep {

/// (dH/dp, -dH/dq)
PhaseState hamilton_rhs(const SystemSpec& spec, const PhaseState& s);
/// Jacobian of hamilton_rhs, i.e. Omega * Hess(H).
Eigen::MatrixXd hamilton_jacobian(const SystemSpec& spec, const PhaseState& s);

/// Adaptive integration of Hamilton's equations; stops with a Collision event when rho
/// drops below cfg.rho_min.
Trajectory integrate(const SystemSpec& spec, const PhaseState& s0, const IntegratorConfig& cfg);

struct MonitorReport {
  double H0 = 0;
  double max_drift_H = 0;
  std::optional<double> max_drift_p_theta;
  std::optional<Eigen::Vector4d> max_drift_I;
  double max_drift_J = 0;
  /// max |dJ/dt - 2H| with dJ/dt taken from the dense-output derivative.
  double max_dJ_residual = 0;
  /// Set when |H0| <= zero_energy_tol; then J must be conserved.
  bool zero_energy = false;
  std::size_t samples = 0;

  Json to_json() const;
};

MonitorReport monitor_conserved(const SystemSpec& spec, const Trajectory& traj, double zero_energy_tol = 1e-12);

/// Maximum distance of (x(t), y(t)) from the straight line through the first sample with
/// the initial velocity, for one-body trajectories.
double straight_line_deviation(const SystemSpec& spec, const Trajectory& traj);

/// CSV: a "# ... seed=N" line, a header row, then t, state, H, p_theta or I1..I4, J.
void write_trajectory_csv(std::ostream& os, const SystemSpec& spec, const Trajectory& traj, std::uint64_t seed);

}  // namespace heisenkep
