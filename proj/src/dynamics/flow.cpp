#include "heisenkep/dynamics/flow.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

PhaseState hamilton_rhs(const SystemSpec& spec, const PhaseState& s) {
  const int n = spec.dof();
  PhaseState g = hamiltonian_gradient(spec, s);
  PhaseState out(2 * n);
  out.head(n) = g.tail(n);
  out.tail(n) = -g.head(n);
  return out;
}

Eigen::MatrixXd hamilton_jacobian(const SystemSpec& spec, const PhaseState& s) {
  return symplectic_matrix<double>(spec.dof()) * hamiltonian_hessian(spec, s);
}

Trajectory integrate(const SystemSpec& spec, const PhaseState& s0, const IntegratorConfig& cfg) {
  if (s0.size() != spec.dim()) throw DimensionError("initial state has the wrong dimension");
  OdeRhs f = [&spec](double, const Eigen::VectorXd& y) { return hamilton_rhs(spec, y); };
  const bool singular_at_zero = spec.potential.depends_on_rho();
  OdeGuard guard = [&spec, &cfg, singular_at_zero](double t, const Eigen::VectorXd& y)
      -> std::optional<std::pair<IntegrationEvent, std::string>> {
    if (singular_at_zero && configuration_rho(spec, y) < cfg.rho_min)
      return std::make_pair(IntegrationEvent::Collision, "rho below rho_min at t = " + std::to_string(t));
    return std::nullopt;
  };
  return integrate_ode(f, s0, cfg, guard);
}

Json MonitorReport::to_json() const {
  Json j{{"H0", H0}, {"max_drift_H", max_drift_H}};
  if (max_drift_p_theta) j["max_drift_p_theta"] = *max_drift_p_theta;
  if (max_drift_I) j["max_drift_I"] = {(*max_drift_I)(0), (*max_drift_I)(1), (*max_drift_I)(2), (*max_drift_I)(3)};
  j["max_drift_J"] = max_drift_J;
  j["max_dJ_residual"] = max_dJ_residual;
  j["zero_energy"] = zero_energy;
  j["samples"] = samples;
  return j;
}

MonitorReport monitor_conserved(const SystemSpec& spec, const Trajectory& traj, double zero_energy_tol) {
  MonitorReport r;
  if (traj.states.empty()) return r;
  const FirstIntegrals f0 = first_integrals(spec, traj.states.front());
  r.H0 = f0.H;
  r.zero_energy = std::abs(f0.H) <= zero_energy_tol;
  if (f0.p_theta) r.max_drift_p_theta = 0.0;
  if (f0.I) r.max_drift_I = Eigen::Vector4d::Zero();
  for (const auto& s : traj.states) {
    FirstIntegrals f = first_integrals(spec, s);
    r.max_drift_H = std::max(r.max_drift_H, std::abs(f.H - f0.H));
    r.max_drift_J = std::max(r.max_drift_J, std::abs(f.J - f0.J));
    if (f.p_theta) *r.max_drift_p_theta = std::max(*r.max_drift_p_theta, std::abs(*f.p_theta - *f0.p_theta));
    if (f.I) *r.max_drift_I = r.max_drift_I->cwiseMax((*f.I - *f0.I).cwiseAbs());
  }
  r.samples = traj.states.size();
  // dJ/dt = p.dq/dt + q.dp/dt with weight 2 on the z components.
  const int n = spec.dof();
  for (const auto& seg : traj.segments) {
    const double tm = seg.t + 0.5 * seg.h;
    Eigen::VectorXd y = seg.value(tm), dy = seg.derivative(tm);
    double dj = 0;
    for (int k = 0; k < n; ++k) {
      double w = k % 3 == 2 ? 2.0 : 1.0;
      dj += w * (dy(k) * y(n + k) + y(k) * dy(n + k));
    }
    r.max_dJ_residual = std::max(r.max_dJ_residual, std::abs(dj - 2 * hamiltonian(spec, y)));
  }
  return r;
}

double straight_line_deviation(const SystemSpec& spec, const Trajectory& traj) {
  if (spec.kind != SystemKind::OneBody) throw std::invalid_argument("straight_line_deviation: one-body only");
  if (traj.states.empty()) return 0;
  const PhaseState& s0 = traj.states.front();
  Eigen::Vector2d q0(s0(0), s0(1));
  Eigen::Vector2d d(s0(3), s0(4));
  if (d.norm() == 0) d = q0;
  if (d.norm() == 0) return 0;
  d.normalize();
  double dev = 0;
  for (const auto& s : traj.states) {
    Eigen::Vector2d q(s(0), s(1));
    Eigen::Vector2d e = q - q0;
    dev = std::max({dev, std::abs(e(0) * d(1) - e(1) * d(0)), std::abs(s(2))});
  }
  return dev;
}

namespace {

void put_double(std::ostream& os, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  os.write(buf, res.ptr - buf);
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const SystemSpec& spec, const Trajectory& traj, std::uint64_t seed) {
  os << "# heisenkep trajectory event=" << to_string(traj.event) << " seed=" << seed << '\n';
  os << "t";
  if (spec.kind == SystemKind::OneBody) {
    os << ",x,y,z,px,py,pz,H,p_theta,J\n";
  } else {
    os << ",x1,y1,z1,x2,y2,z2,px1,py1,pz1,px2,py2,pz2,H,I1,I2,I3,I4,J\n";
  }
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const auto& s = traj.states[k];
    put_double(os, traj.times[k]);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      os << ',';
      put_double(os, s(i));
    }
    FirstIntegrals f = first_integrals(spec, s);
    os << ',';
    put_double(os, f.H);
    if (f.p_theta) {
      os << ',';
      put_double(os, *f.p_theta);
    }
    if (f.I)
      for (int i = 0; i < 4; ++i) {
        os << ',';
        put_double(os, (*f.I)(i));
      }
    os << ',';
    put_double(os, f.J);
    os << '\n' << std::flush;
  }
}

}  // namespace heisenkep
