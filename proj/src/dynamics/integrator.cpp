#include "heisenkep/dynamics/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heisenkep {

const char* to_string(IntegrationEvent e) {
  switch (e) {
    case IntegrationEvent::None: return "none";
    case IntegrationEvent::Collision: return "collision";
    case IntegrationEvent::StepUnderflow: return "step-underflow";
    case IntegrationEvent::LeafDeparture: return "leaf-departure";
    case IntegrationEvent::MaxSteps: return "max-steps";
  }
  return "unknown";
}

Eigen::VectorXd DenseSegment::value(double time) const {
  const double s = (time - t) / h, s1 = 1 - s;
  return r.col(0) + s * (r.col(1) + s1 * (r.col(2) + s * (r.col(3) + s1 * r.col(4))));
}

Eigen::VectorXd DenseSegment::derivative(double time) const {
  const double s = (time - t) / h, s1 = 1 - s;
  Eigen::VectorXd S = r.col(3) + s1 * r.col(4);
  Eigen::VectorXd dS = -r.col(4);
  Eigen::VectorXd R = r.col(2) + s * S;
  Eigen::VectorXd dR = S + s * dS;
  Eigen::VectorXd Q = r.col(1) + s1 * R;
  Eigen::VectorXd dQ = -R + s1 * dR;
  return (Q + s * dQ) / h;
}

const DenseSegment& Trajectory::segment_at(double time) const {
  if (segments.empty()) throw std::out_of_range("trajectory has no dense output");
  if (segments.front().h < 0) {
    auto it = std::upper_bound(segments.begin(), segments.end(), time,
                               [](double v, const DenseSegment& s) { return v > s.t; });
    return it == segments.begin() ? segments.front() : *std::prev(it);
  }
  auto it = std::upper_bound(segments.begin(), segments.end(), time,
                             [](double v, const DenseSegment& s) { return v < s.t; });
  return it == segments.begin() ? segments.front() : *std::prev(it);
}

Eigen::VectorXd Trajectory::value_at(double time) const { return segment_at(time).value(time); }
Eigen::VectorXd Trajectory::derivative_at(double time) const { return segment_at(time).derivative(time); }

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                 e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

constexpr double kSafety = 0.9, kBeta = 0.04, kExpo = 0.2 - kBeta * 0.75;
constexpr double kFacMin = 0.2, kFacMax = 10.0;

double error_norm(const Eigen::VectorXd& e, const Eigen::VectorXd& y0, const Eigen::VectorXd& y1,
                  const IntegratorConfig& cfg) {
  double acc = 0;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    acc += (e(i) / sc) * (e(i) / sc);
  }
  return std::sqrt(acc / static_cast<double>(e.size()));
}

double initial_step(const OdeRhs& f, double t, const Eigen::VectorXd& y, const Eigen::VectorXd& f0,
                    const IntegratorConfig& cfg, double dir) {
  Eigen::VectorXd sc = (cfg.abs_tol + cfg.rel_tol * y.array().abs()).matrix();
  double d0 = (y.array() / sc.array()).matrix().norm() / std::sqrt(double(y.size()));
  double d1n = (f0.array() / sc.array()).matrix().norm() / std::sqrt(double(y.size()));
  double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * d0 / d1n;
  h0 = std::min(h0, cfg.max_step);
  Eigen::VectorXd f1 = f(t + dir * h0, y + dir * h0 * f0);
  double d2 = ((f1 - f0).array() / sc.array()).matrix().norm() / std::sqrt(double(y.size())) / h0;
  double m = std::max(d1n, d2);
  double h1 = m <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / m, 0.2);
  return std::min({100 * h0, h1, cfg.max_step});
}

}  // namespace

Trajectory integrate_ode(const OdeRhs& f, const Eigen::VectorXd& y0, const IntegratorConfig& cfg,
                         const OdeGuard& guard, const OdeProjection& project) {
  if (!(cfg.abs_tol > 0) || !(cfg.rel_tol > 0)) throw std::invalid_argument("tolerances must be positive");
  if (!(cfg.max_step > 0)) throw std::invalid_argument("max_step must be positive");
  Trajectory tr;
  const double dir = cfg.t_end >= cfg.t0 ? 1.0 : -1.0;
  double t = cfg.t0;
  Eigen::VectorXd y = y0;
  if (project) project(y);
  tr.times.push_back(t);
  tr.states.push_back(y);
  if (guard) {
    if (auto ev = guard(t, y)) {
      tr.event = ev->first;
      tr.message = ev->second;
      return tr;
    }
  }
  if (t == cfg.t_end) return tr;

  Eigen::VectorXd k1 = f(t, y);
  ++tr.stats.rhs_evals;
  double h = cfg.initial_step > 0 ? cfg.initial_step : initial_step(f, t, y, k1, cfg, dir);
  double facold = 1e-4;
  bool last_rejected = false;
  double next_out = cfg.output_dt > 0 ? t + dir * cfg.output_dt : 0;
  const Eigen::Index n = y.size();
  Eigen::VectorXd k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), y1(n), ys(n);

  while (dir * (cfg.t_end - t) > 0) {
    if (tr.stats.accepted + tr.stats.rejected >= cfg.max_steps) {
      tr.event = IntegrationEvent::MaxSteps;
      tr.message = "step budget exhausted";
      break;
    }
    h = std::min(h, cfg.max_step);
    bool final_step = false;
    if (dir * (t + dir * h - cfg.t_end) >= 0) {
      h = dir * (cfg.t_end - t);
      final_step = true;
    }
    if (h <= 1e-14 * std::max(1.0, std::abs(t))) {
      tr.event = IntegrationEvent::StepUnderflow;
      tr.message = "step size underflow at t = " + std::to_string(t);
      break;
    }
    const double hs = dir * h;
    double err;
    try {
      ys = y + hs * a21 * k1;
      k2 = f(t + c2 * hs, ys);
      ys = y + hs * (a31 * k1 + a32 * k2);
      k3 = f(t + c3 * hs, ys);
      ys = y + hs * (a41 * k1 + a42 * k2 + a43 * k3);
      k4 = f(t + c4 * hs, ys);
      ys = y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
      k5 = f(t + c5 * hs, ys);
      ys = y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      k6 = f(t + hs, ys);
      y1 = y + hs * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
      k7 = f(t + hs, y1);
      tr.stats.rhs_evals += 6;
      Eigen::VectorXd e = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      err = error_norm(e, y, y1, cfg);
      if (!std::isfinite(err)) err = 1e10;
    } catch (const std::exception&) {
      err = 1e10;
    }

    const double fac11 = std::pow(err, kExpo);
    if (err <= 1.0) {
      double fac = fac11 / std::pow(facold, kBeta);
      fac = std::clamp(fac / kSafety, 1.0 / kFacMax, 1.0 / kFacMin);
      double hnew = h / fac;
      facold = std::max(err, 1e-4);
      tr.stats.max_error_estimate = std::max(tr.stats.max_error_estimate, err);
      ++tr.stats.accepted;

      DenseSegment seg{t, hs, Eigen::MatrixXd(n, 5)};
      Eigen::VectorXd ydiff = y1 - y;
      Eigen::VectorXd bspl = hs * k1 - ydiff;
      seg.r.col(0) = y;
      seg.r.col(1) = ydiff;
      seg.r.col(2) = bspl;
      seg.r.col(3) = ydiff - hs * k7 - bspl;
      seg.r.col(4) = hs * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);

      const double t_new = final_step ? cfg.t_end : t + hs;
      if (cfg.output_dt > 0) {
        while (dir * (t_new - next_out) > 0) {
          tr.times.push_back(next_out);
          tr.states.push_back(seg.value(next_out));
          next_out += dir * cfg.output_dt;
        }
      }
      if (project) {
        project(y1);
        k7 = f(t_new, y1);
        ++tr.stats.rhs_evals;
      }
      if (cfg.dense) tr.segments.push_back(std::move(seg));
      t = t_new;
      y = y1;
      k1 = k7;
      std::optional<std::pair<IntegrationEvent, std::string>> ev;
      if (guard) ev = guard(t, y);
      const bool record = cfg.output_dt <= 0 || final_step || ev.has_value();
      if (record && dir * (t - tr.times.back()) > 0) {
        tr.times.push_back(t);
        tr.states.push_back(y);
      }
      if (ev) {
        tr.event = ev->first;
        tr.message = ev->second;
        break;
      }
      if (last_rejected) hnew = std::min(hnew, h);
      last_rejected = false;
      h = hnew;
    } else {
      h = h / std::min(1.0 / kFacMin, fac11 / kSafety);
      if (err >= 1e10) h = h / 4;
      last_rejected = true;
      ++tr.stats.rejected;
    }
  }
  return tr;
}

}  // namespace heisenkep
