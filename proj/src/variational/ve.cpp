#include "heisenkep/variational/ve.hpp"

#include <cmath>
#include <stdexcept>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

namespace {

const std::complex<double> kI(0, 1);

ExactMatrix zeros(Eigen::Index n) { return ExactMatrix::Constant(n, n, RatFunc(0)); }

// (x, px, y, py, z, pz)[k] = (x, y, z, px, py, pz)[kPairOrder[k]]
constexpr int kPairOrder[6] = {0, 3, 1, 4, 2, 5};

}  // namespace

LinearSystem ve_particular(const SystemSpec& spec, const Scalar& c) {
  if (spec.kind != SystemKind::OneBody) throw std::invalid_argument("ve_particular: one-body systems only");
  const Scalar a = condition_coefficient_a_exact(spec.potential, c);
  const RatFunc t = RatFunc::t();
  Eigen::Matrix<RatFunc, 6, 1> s;
  s << RatFunc(0), RatFunc(0), RatFunc(c), RatFunc(0), RatFunc(0), RatFunc(Scalar(-2) * a) * t;
  Eigen::Matrix<RatFunc, 6, 6> hess = kinetic_hessian<RatFunc>(s);
  // On the axis only V_zz survives; it is f''(c) for f(z) = W(z, 4 sgn(c) z).
  const RatFunc f = spec.potential.on_axis(sgn(c.re()));
  hess(2, 2) += RatFunc(f.derivative().derivative()(c));
  ExactMatrix om = symplectic_matrix<RatFunc>(3);
  ExactMatrix full = om * ExactMatrix(hess);
  ExactMatrix out = zeros(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out(i, j) = full(kPairOrder[i], kPairOrder[j]);
  return LinearSystem(out, "t");
}

Eigen::MatrixXd to_pair_order(const Eigen::MatrixXd& a) {
  if (a.rows() != 6 || a.cols() != 6) throw DimensionError("to_pair_order: 6x6 expected");
  Eigen::MatrixXd out(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out(i, j) = a(kPairOrder[i], kPairOrder[j]);
  return out;
}

NumericVE ve_along(const SystemSpec& spec, Trajectory traj, double tol) {
  if (traj.segments.empty()) throw NotASolutionError("ve_along: trajectory has no dense output");
  for (const auto& seg : traj.segments) {
    const double tm = seg.t + 0.5 * seg.h;
    Eigen::VectorXd f = hamilton_rhs(spec, seg.value(tm));
    if ((seg.derivative(tm) - f).norm() > tol * std::max(1.0, f.norm()))
      throw NotASolutionError("ve_along: trajectory does not solve Hamilton's equations near t = " +
                              std::to_string(tm));
  }
  return NumericVE(spec, std::move(traj));
}

ComplexState transform_vars_q1h1(const PhaseState& s) {
  if (s.size() != 6) throw DimensionError("transform_vars_q1h1: one-body state expected");
  const std::complex<double> q1(s(0), s(1)), q2(s(0), -s(1));
  const double pz = s(5);
  ComplexState v;
  v << q1, std::complex<double>(s(3), s(4)) + 0.5 * kI * pz * q1, q2,
      std::complex<double>(s(3), -s(4)) - 0.5 * kI * pz * q2, s(2), pz;
  return v;
}

ComplexState transform_vars_q1h1_inverse(const ComplexState& v) {
  const std::complex<double> q1 = v(0), h1 = v(1), q2 = v(2), h2 = v(3), pz = v(5);
  const std::complex<double> plus = h1 - 0.5 * kI * pz * q1;   // px + i py
  const std::complex<double> minus = h2 + 0.5 * kI * pz * q2;  // px - i py
  ComplexState s;
  s << 0.5 * (q1 + q2), (q1 - q2) / (2.0 * kI), v(4), 0.5 * (plus + minus), (plus - minus) / (2.0 * kI), pz;
  return s;
}

LinearSystem ve_blocks_transformed(const Scalar& a, const RatFunc& C) {
  if (a.is_zero()) throw std::invalid_argument("ve_blocks_transformed: a must be nonzero");
  const RatFunc t = RatFunc::t();
  const Scalar ia = Scalar::i() * a;
  ExactMatrix m = zeros(6);
  m(0, 1) = RatFunc(1);
  m(1, 0) = RatFunc(-ia);
  m(1, 1) = RatFunc(Scalar(-2) * ia) * t;
  m(2, 3) = RatFunc(1);
  m(3, 2) = RatFunc(ia);
  m(3, 3) = RatFunc(Scalar(2) * ia) * t;
  m(5, 4) = C;
  return LinearSystem(m, "t");
}

LinearSystem ve_blocks_transformed(const SystemSpec& spec, const Scalar& c) {
  if (spec.kind != SystemKind::OneBody) throw std::invalid_argument("ve_blocks_transformed: one-body systems only");
  const Scalar a = condition_coefficient_a_exact(spec.potential, c);
  const RatFunc f = spec.potential.on_axis(sgn(c.re()));
  return ve_blocks_transformed(a, RatFunc(-f.derivative().derivative()(c)));
}

LinearSystem ve_twobody_blocks(const Scalar& mu, const Scalar& tau0, const Scalar& w2) {
  if (mu.is_zero()) throw std::invalid_argument("ve_twobody_blocks: mu must be nonzero");
  if (w2.is_zero()) throw std::invalid_argument("ve_twobody_blocks: w2 must be nonzero");
  const RatFunc tau = RatFunc::t();
  const RatFunc m(mu);
  const RatFunc s = tau - RatFunc(tau0), p = tau + RatFunc(tau0);
  ExactMatrix a = zeros(12);
  // A1
  a(0, 0) = s;
  a(0, 1) = RatFunc(1);
  a(1, 0) = s * s;
  a(1, 1) = s;
  a(1, 2) = RatFunc(-1);
  a(2, 2) = -m * p;
  a(2, 3) = m;
  a(3, 0) = RatFunc(1);
  a(3, 2) = m * p * p;
  a(3, 3) = -m * p;
  // A2
  a(4, 4) = -s;
  a(4, 5) = RatFunc(1);
  a(5, 4) = s * s;
  a(5, 5) = -s;
  a(5, 6) = RatFunc(1);
  a(6, 6) = m * p;
  a(6, 7) = m;
  a(7, 4) = RatFunc(-1);
  a(7, 6) = m * p * p;
  a(7, 7) = m * p;
  // A3
  a(11, 9) = RatFunc(Scalar(4) * Scalar::i() / w2);
  return LinearSystem(a, "tau");
}

ExactMatrix twobody_gauge_tau0_zero(const Scalar& mu) {
  if (mu.is_zero()) throw std::invalid_argument("twobody_gauge_tau0_zero: mu must be nonzero");
  const RatFunc tau = RatFunc::t();
  ExactMatrix q = zeros(4);
  q(0, 0) = RatFunc(1);
  q(1, 0) = -tau;
  q(1, 1) = RatFunc(1);
  q(2, 0) = RatFunc(1);
  q(2, 1) = RatFunc(2) * tau;
  q(2, 2) = RatFunc(-1);
  q(3, 0) = tau;
  q(3, 1) = RatFunc(-1) - RatFunc(2) * tau * tau;
  q(3, 2) = tau;
  q(3, 3) = RatFunc(-mu.inverse());
  return q;
}

ExactMatrix twobody_gauge_mu_minus_one() {
  const RatFunc tau = RatFunc::t();
  ExactMatrix q = zeros(4);
  q(0, 0) = RatFunc(1);
  q(1, 0) = tau - RatFunc(1);
  q(1, 1) = RatFunc(1);
  q(2, 0) = RatFunc(-1);
  q(2, 2) = RatFunc(-1);
  q(3, 0) = tau + RatFunc(1);
  q(3, 1) = RatFunc(-1);
  q(3, 2) = tau + RatFunc(1);
  q(3, 3) = RatFunc(1);
  return q;
}

ExactMatrix splitting_gauge() {
  const RatFunc i(Scalar::i());
  ExactMatrix q = zeros(4);
  q(0, 1) = -i;
  q(0, 3) = i;
  q(1, 0) = -i;
  q(1, 2) = i;
  q(2, 1) = RatFunc(1);
  q(2, 3) = RatFunc(1);
  q(3, 0) = RatFunc(1);
  q(3, 2) = RatFunc(1);
  return q;
}

Eigen::MatrixXcd fundamental_matrix(const std::function<Eigen::MatrixXcd(double)>& a, Eigen::Index n, double t0,
                                    double t1, double tol) {
  // State: real parts of Phi column-major, then imaginary parts.
  const Eigen::Index m = n * n;
  OdeRhs f = [&a, n, m](double t, const Eigen::VectorXd& y) {
    Eigen::MatrixXcd phi(n, n);
    for (Eigen::Index k = 0; k < m; ++k) phi(k % n, k / n) = {y(k), y(m + k)};
    Eigen::MatrixXcd d = a(t) * phi;
    Eigen::VectorXd out(2 * m);
    for (Eigen::Index k = 0; k < m; ++k) {
      out(k) = d(k % n, k / n).real();
      out(m + k) = d(k % n, k / n).imag();
    }
    return out;
  };
  Eigen::VectorXd y0 = Eigen::VectorXd::Zero(2 * m);
  for (Eigen::Index k = 0; k < n; ++k) y0(k * n + k) = 1;
  IntegratorConfig cfg;
  cfg.abs_tol = cfg.rel_tol = tol;
  cfg.t0 = t0;
  cfg.t_end = t1;
  cfg.max_step = std::abs(t1 - t0);
  cfg.dense = false;
  Trajectory tr = integrate_ode(f, y0, cfg);
  if (!tr.ok()) throw std::runtime_error("fundamental_matrix: " + tr.message);
  const Eigen::VectorXd& y = tr.states.back();
  Eigen::MatrixXcd phi(n, n);
  for (Eigen::Index k = 0; k < m; ++k) phi(k % n, k / n) = {y(k), y(m + k)};
  return phi;
}

}  // namespace heisenkep
