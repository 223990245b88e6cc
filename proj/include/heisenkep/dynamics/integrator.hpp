#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace heisenkep {

struct IntegratorConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double max_step = 0.1;
  double t0 = 0;
  double t_end = 10;
  /// Keep the per-step interpolants (needed for derivative-based monitoring).
  bool dense = true;
  /// Uniform output spacing; 0 records every accepted step.
  double output_dt = 0;
  double initial_step = 0;
  long max_steps = 10'000'000;
  double rho_min = 1e-8;
};

enum class IntegrationEvent { None, Collision, StepUnderflow, LeafDeparture, MaxSteps };

const char* to_string(IntegrationEvent e);

/// Continuous extension of one accepted Dormand-Prince step on [t, t + h].
struct DenseSegment {
  double t;
  double h;
  Eigen::MatrixXd r;  // columns r1..r5 of Hairer's interpolant

  Eigen::VectorXd value(double s_time) const;
  Eigen::VectorXd derivative(double s_time) const;
};

struct IntegratorStats {
  long accepted = 0;
  long rejected = 0;
  long rhs_evals = 0;
  double max_error_estimate = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  std::vector<DenseSegment> segments;
  IntegratorStats stats;
  IntegrationEvent event = IntegrationEvent::None;
  std::string message;

  bool ok() const { return event == IntegrationEvent::None; }
  /// Dense-output value and time derivative; t must lie in a recorded segment.
  Eigen::VectorXd value_at(double t) const;
  Eigen::VectorXd derivative_at(double t) const;
  const DenseSegment& segment_at(double t) const;
};

using OdeRhs = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;
/// Returns an event to stop the run at an accepted state, or nullopt to continue.
using OdeGuard = std::function<std::optional<std::pair<IntegrationEvent, std::string>>(double, const Eigen::VectorXd&)>;
/// Optional map applied to every accepted state (e.g. projection to a leaf).
using OdeProjection = std::function<void(Eigen::VectorXd&)>;

/// Dormand-Prince 5(4) with PI step control and dense output.  Exceptions thrown by the
/// right-hand side shrink the step; persistent failure ends the run with StepUnderflow.
Trajectory integrate_ode(const OdeRhs& f, const Eigen::VectorXd& y0, const IntegratorConfig& cfg,
                         const OdeGuard& guard = {}, const OdeProjection& project = {});

}  // namespace heisenkep
