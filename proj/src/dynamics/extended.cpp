#include "heisenkep/dynamics/extended.hpp"

#include <cmath>
#include <stdexcept>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

namespace {

double pair_factor(const SystemSpec& spec) {
  return spec.kind == SystemKind::OneBody ? 1.0 : (spec.m1 * spec.m2).re().get_d();
}

// (X, Y, Z) and d(X, Y, Z)/dq for the position entering the potential.
GroupElement<double> potential_position(const SystemSpec& spec, const Eigen::VectorXd& x) {
  if (spec.kind == SystemKind::OneBody) return {x(0), x(1), x(2)};
  return relative_position(x);
}

Eigen::MatrixXd position_jacobian(const SystemSpec& spec, const Eigen::VectorXd& x) {
  if (spec.kind == SystemKind::OneBody) return Eigen::Matrix3d::Identity();
  return relative_jacobian(x);
}

}  // namespace

ExtendedSystem::ExtendedSystem(SystemSpec spec) : spec_(std::move(spec)), kinetic_(spec_) {
  if (!spec_.potential.depends_on_rho()) throw std::invalid_argument("extended system needs a potential in rho");
  kinetic_.potential = PotentialSpec(BiPoly(Scalar(0)), BiPoly(Scalar(1)));
}

double ExtendedSystem::s_of(const Eigen::VectorXd& x) const {
  GroupElement<double> g = potential_position(spec_, x);
  double r2 = g.x * g.x + g.y * g.y;
  return r2 * r2 + 16 * g.z * g.z;
}

Eigen::VectorXd ExtendedSystem::grad_s(const Eigen::VectorXd& x) const {
  GroupElement<double> g = potential_position(spec_, x);
  double r2 = g.x * g.x + g.y * g.y;
  Eigen::Vector3d ds(4 * r2 * g.x, 4 * r2 * g.y, 32 * g.z);
  return position_jacobian(spec_, x).transpose() * ds;
}

Eigen::VectorXd ExtendedSystem::lift(const PhaseState& s) const {
  Eigen::VectorXd x(dim());
  x.head(2 * n()) = s;
  x(2 * n()) = std::sqrt(s_of(x));
  return x;
}

double ExtendedSystem::P(const Eigen::VectorXd& x) const {
  const double u = x(2 * n());
  return u * u - s_of(x);
}

Eigen::VectorXd ExtendedSystem::grad_P(const Eigen::VectorXd& x) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(dim());
  g.head(n()) = -grad_s(x);
  g(2 * n()) = 2 * x(2 * n());
  return g;
}

double ExtendedSystem::K(const Eigen::VectorXd& x) const {
  GroupElement<double> g = potential_position(spec_, x);
  return kinetic_energy(kinetic_, project(x)) + pair_factor(spec_) * spec_.potential.w()(g.z, x(2 * n()));
}

Eigen::VectorXd ExtendedSystem::grad_K(const Eigen::VectorXd& x) const {
  GroupElement<double> g = potential_position(spec_, x);
  const double u = x(2 * n()), m = pair_factor(spec_);
  Eigen::VectorXd out(dim());
  out.head(2 * n()) = hamiltonian_gradient(kinetic_, project(x));
  Eigen::Vector3d dz(0, 0, m * spec_.potential.w_z()(g.z, u));
  out.head(n()) += position_jacobian(spec_, x).transpose() * dz;
  out(2 * n()) = m * spec_.potential.w_rho()(g.z, u);
  return out;
}

Eigen::MatrixXd ExtendedSystem::poisson_matrix(const Eigen::VectorXd& x) const {
  const int nn = n();
  const double pu = 2 * x(2 * nn);
  if (pu == 0) throw SingularEvaluationError("dP/du = 0: branch point of the lift");
  Eigen::VectorXd v = -grad_s(x) / pu;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dim(), dim());
  j.block(0, nn, nn, nn).setIdentity();
  j.block(nn, 0, nn, nn) = -Eigen::MatrixXd::Identity(nn, nn);
  j.block(nn, 2 * nn, nn, 1) = v;
  j.block(2 * nn, nn, 1, nn) = -v.transpose();
  return j;
}

Eigen::VectorXd ExtendedSystem::rhs(const Eigen::VectorXd& x) const {
  // J grad K without forming J.
  const int nn = n();
  const double pu = 2 * x(2 * nn);
  if (pu == 0) throw SingularEvaluationError("dP/du = 0: branch point of the lift");
  Eigen::VectorXd gk = grad_K(x);
  Eigen::VectorXd v = -grad_s(x) / pu;
  Eigen::VectorXd out(dim());
  out.head(nn) = gk.segment(nn, nn);
  out.segment(nn, nn) = -gk.head(nn) + v * gk(2 * nn);
  out(2 * nn) = -v.dot(gk.segment(nn, nn));
  return out;
}

double ExtendedSystem::bracket(const Eigen::VectorXd& grad_f, const Eigen::VectorXd& grad_g,
                               const Eigen::VectorXd& x) const {
  return grad_f.dot(poisson_matrix(x) * grad_g);
}

Trajectory integrate_extended(const ExtendedSystem& sys, const Eigen::VectorXd& x0, const IntegratorConfig& cfg,
                              const ExtendedRunOptions& opt) {
  if (x0.size() != sys.dim()) throw DimensionError("extended state has the wrong dimension");
  auto scale = [&sys](const Eigen::VectorXd& x) {
    double u = x(2 * sys.n());
    return std::max(1.0, u * u);
  };
  if (std::abs(sys.P(x0)) > 1e-12 * scale(x0)) throw std::invalid_argument("initial state is off the leaf P(u) = 0");
  OdeRhs f = [&sys](double, const Eigen::VectorXd& x) { return sys.rhs(x); };
  OdeGuard guard = [&sys, &cfg, &opt, scale](double t, const Eigen::VectorXd& x)
      -> std::optional<std::pair<IntegrationEvent, std::string>> {
    if (std::abs(x(2 * sys.n())) < cfg.rho_min)
      return std::make_pair(IntegrationEvent::Collision, "u below rho_min at t = " + std::to_string(t));
    if (std::abs(sys.P(x)) > opt.leaf_tol * scale(x))
      return std::make_pair(IntegrationEvent::LeafDeparture, "|P(u)| above threshold at t = " + std::to_string(t));
    return std::nullopt;
  };
  OdeProjection proj;
  if (opt.renormalize) {
    proj = [&sys](Eigen::VectorXd& x) {
      Eigen::VectorXd lifted = sys.lift(sys.project(x));
      x(2 * sys.n()) = lifted(2 * sys.n());
    };
  }
  return integrate_ode(f, x0, cfg, guard, proj);
}

}  // namespace heisenkep
