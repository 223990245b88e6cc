#include "heisenkep/model/system.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

namespace {

// Positions of (x, y, z, px, py, pz) of body b inside the full state.
std::array<int, 6> body_index(const SystemSpec& spec, int b) {
  if (spec.kind == SystemKind::OneBody) return {0, 1, 2, 3, 4, 5};
  if (b == 0) return {0, 1, 2, 6, 7, 8};
  return {3, 4, 5, 9, 10, 11};
}

Eigen::Matrix<double, 6, 1> body_state(const PhaseState& s, const std::array<int, 6>& idx) {
  Eigen::Matrix<double, 6, 1> b;
  for (int k = 0; k < 6; ++k) b(k) = s(idx[static_cast<std::size_t>(k)]);
  return b;
}

double body_kinetic(const Eigen::Matrix<double, 6, 1>& b) {
  double a = b(3) - 0.5 * b(1) * b(5);
  double c = b(4) + 0.5 * b(0) * b(5);
  return 0.5 * (a * a + c * c);
}

Eigen::Matrix<double, 6, 1> body_kinetic_grad(const Eigen::Matrix<double, 6, 1>& b) {
  double a = b(3) - 0.5 * b(1) * b(5);
  double c = b(4) + 0.5 * b(0) * b(5);
  Eigen::Matrix<double, 6, 1> g;
  g << 0.5 * b(5) * c, -0.5 * b(5) * a, 0, a, c, -0.5 * b(1) * a + 0.5 * b(0) * c;
  return g;
}

double inv_mass(const SystemSpec& spec, int b) {
  if (spec.kind == SystemKind::OneBody) return 1.0;
  return 1.0 / (b == 0 ? spec.m1 : spec.m2).re().get_d();
}

double pair_factor(const SystemSpec& spec) {
  if (spec.kind == SystemKind::OneBody) return 1.0;
  return (spec.m1 * spec.m2).re().get_d();
}

}  // namespace

SystemSpec SystemSpec::one_body(const Scalar& kappa) {
  SystemSpec s;
  s.kappa = kappa;
  s.potential = PotentialSpec::kepler(kappa);
  return s;
}

SystemSpec SystemSpec::one_body(const PotentialSpec& w) {
  SystemSpec s;
  s.potential = w;
  return s;
}

SystemSpec SystemSpec::two_body(const Scalar& kappa, const Scalar& m1, const Scalar& m2) {
  SystemSpec s;
  s.kind = SystemKind::TwoBody;
  s.kappa = kappa;
  s.m1 = m1;
  s.m2 = m2;
  s.potential = PotentialSpec::kepler(kappa);
  return s;
}

SystemSpec SystemSpec::from_json(const Json& j) {
  SystemSpec s;
  std::string kind = j.value("kind", std::string("one-body"));
  if (kind == "one-body")
    s.kind = SystemKind::OneBody;
  else if (kind == "two-body")
    s.kind = SystemKind::TwoBody;
  else
    throw ParseError("kind must be one-body or two-body");
  if (j.contains("kappa")) s.kappa = scalar_from_json(j.at("kappa"));
  if (j.contains("m1")) s.m1 = scalar_from_json(j.at("m1"));
  if (j.contains("m2")) s.m2 = scalar_from_json(j.at("m2"));
  if (s.kappa.is_zero() || !s.kappa.is_real()) throw ParseError("kappa must be real and nonzero");
  if (s.kind == SystemKind::TwoBody && (!s.m1.is_real() || !s.m2.is_real() || s.m1.re() <= 0 || s.m2.re() <= 0))
    throw ParseError("masses must be positive");
  s.potential = PotentialSpec::from_json(j.contains("potential") ? j.at("potential") : Json("kepler"), s.kappa);
  return s;
}

Json SystemSpec::to_json() const {
  Json j{{"kind", kind == SystemKind::OneBody ? "one-body" : "two-body"}, {"kappa", kappa.str()}};
  if (kind == SystemKind::TwoBody) {
    j["m1"] = m1.str();
    j["m2"] = m2.str();
  }
  j["potential"] = potential.to_json();
  return j;
}

Eigen::Matrix<double, 3, 6> relative_jacobian(const PhaseState& s) {
  Eigen::Matrix<double, 3, 6> g = Eigen::Matrix<double, 3, 6>::Zero();
  g(0, 0) = -1;
  g(0, 3) = 1;
  g(1, 1) = -1;
  g(1, 4) = 1;
  g(2, 0) = -0.5 * s(4);
  g(2, 1) = 0.5 * s(3);
  g(2, 2) = -1;
  g(2, 3) = 0.5 * s(1);
  g(2, 4) = -0.5 * s(0);
  g(2, 5) = 1;
  return g;
}

GroupElement<double> relative_position(const PhaseState& s) {
  GroupElement<double> g1{s(0), s(1), s(2)}, g2{s(3), s(4), s(5)};
  return group_mul(group_inv(g1), g2);
}

double configuration_rho(const SystemSpec& spec, const PhaseState& s) {
  if (spec.kind == SystemKind::OneBody) return rho(GroupElement<double>{s(0), s(1), s(2)});
  return rho(relative_position(s));
}

double kinetic_energy(const SystemSpec& spec, const PhaseState& s) {
  double k = 0;
  const int bodies = spec.kind == SystemKind::OneBody ? 1 : 2;
  for (int b = 0; b < bodies; ++b) k += inv_mass(spec, b) * body_kinetic(body_state(s, body_index(spec, b)));
  return k;
}

double potential_energy(const SystemSpec& spec, const PhaseState& s) {
  if (spec.kind == SystemKind::OneBody) return potential_value(spec.potential, s(0), s(1), s(2));
  GroupElement<double> g = relative_position(s);
  return pair_factor(spec) * potential_value(spec.potential, g.x, g.y, g.z);
}

double hamiltonian(const SystemSpec& spec, const PhaseState& s) {
  return kinetic_energy(spec, s) + potential_energy(spec, s);
}

PhaseState hamiltonian_gradient(const SystemSpec& spec, const PhaseState& s) {
  PhaseState g = PhaseState::Zero(spec.dim());
  const int bodies = spec.kind == SystemKind::OneBody ? 1 : 2;
  for (int b = 0; b < bodies; ++b) {
    auto idx = body_index(spec, b);
    auto kg = body_kinetic_grad(body_state(s, idx));
    for (int k = 0; k < 6; ++k) g(idx[static_cast<std::size_t>(k)]) += inv_mass(spec, b) * kg(k);
  }
  if (spec.kind == SystemKind::OneBody) {
    g.head<3>() += potential_derivatives(spec.potential, s(0), s(1), s(2)).grad;
  } else {
    GroupElement<double> r = relative_position(s);
    auto pd = potential_derivatives(spec.potential, r.x, r.y, r.z);
    g.head<6>() += pair_factor(spec) * relative_jacobian(s).transpose() * pd.grad;
  }
  return g;
}

Eigen::MatrixXd hamiltonian_hessian(const SystemSpec& spec, const PhaseState& s) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(spec.dim(), spec.dim());
  const int bodies = spec.kind == SystemKind::OneBody ? 1 : 2;
  for (int b = 0; b < bodies; ++b) {
    auto idx = body_index(spec, b);
    Eigen::Matrix<double, 6, 6> kh = kinetic_hessian<double>(body_state(s, idx));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        h(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]) += inv_mass(spec, b) * kh(i, j);
  }
  if (spec.kind == SystemKind::OneBody) {
    h.topLeftCorner<3, 3>() += potential_derivatives(spec.potential, s(0), s(1), s(2)).hess;
  } else {
    GroupElement<double> r = relative_position(s);
    auto pd = potential_derivatives(spec.potential, r.x, r.y, r.z);
    Eigen::Matrix<double, 3, 6> gj = relative_jacobian(s);
    Eigen::Matrix<double, 6, 6> vh = gj.transpose() * pd.hess * gj;
    // Second derivatives of Z = z2 - z1 + (x2 y1 - x1 y2)/2.
    vh(0, 4) -= 0.5 * pd.grad(2);
    vh(4, 0) -= 0.5 * pd.grad(2);
    vh(1, 3) += 0.5 * pd.grad(2);
    vh(3, 1) += 0.5 * pd.grad(2);
    h.topLeftCorner<6, 6>() += pair_factor(spec) * vh;
  }
  return h;
}

double dilation_integral(const PhaseState& s) {
  const int n = static_cast<int>(s.size()) / 2;
  double j = 0;
  for (int k = 0; k < n; ++k) j += (k % 3 == 2 ? 2.0 : 1.0) * s(k) * s(n + k);
  return j;
}

double integral_I(int k, const PhaseState& s) {
  double acc = 0;
  for (int b = 0; b < 2; ++b) {
    double x = s(3 * b), y = s(3 * b + 1);
    double px = s(6 + 3 * b), py = s(7 + 3 * b), pz = s(8 + 3 * b);
    switch (k) {
      case 1: acc += px + 0.5 * y * pz; break;
      case 2: acc += py - 0.5 * x * pz; break;
      case 3: acc += pz; break;
      case 4: acc += y * px - x * py; break;
      default: throw std::invalid_argument("integral index must be 1..4");
    }
  }
  return acc;
}

FirstIntegrals first_integrals(const SystemSpec& spec, const PhaseState& s) {
  FirstIntegrals f{hamiltonian(spec, s), dilation_integral(s), std::nullopt, std::nullopt};
  if (spec.kind == SystemKind::OneBody) {
    f.p_theta = s(0) * s(4) - s(1) * s(3);
  } else {
    f.I = Eigen::Vector4d(integral_I(1, s), integral_I(2, s), integral_I(3, s), integral_I(4, s));
  }
  return f;
}

PhaseState numeric_gradient(const Observable& f, const PhaseState& s) {
  const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  PhaseState g(s.size());
  PhaseState x = s;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    double h = h0 * std::max(1.0, std::abs(s(i)));
    x(i) = s(i) + h;
    double fp = f(x);
    x(i) = s(i) - h;
    double fm = f(x);
    x(i) = s(i);
    g(i) = (fp - fm) / (2 * h);
  }
  return g;
}

double poisson_bracket(const Observable& f, const Observable& g, const PhaseState& s) {
  const Eigen::Index n = s.size() / 2;
  PhaseState df = numeric_gradient(f, s), dg = numeric_gradient(g, s);
  return df.head(n).dot(dg.tail(n)) - df.tail(n).dot(dg.head(n));
}

double condition_coefficient_a(const PotentialSpec& w, double c) {
  if (c == 0) throw std::invalid_argument("condition_coefficient_a: c must be nonzero");
  const double r = 4 * std::abs(c);
  const double sg = c > 0 ? 1.0 : -1.0;
  double wr = w.depends_on_rho() ? w.w_rho()(c, r) : 0.0;
  return 0.5 * (w.w_z()(c, r) + 4 * sg * wr);
}

Scalar condition_coefficient_a_exact(const PotentialSpec& w, const Scalar& c) {
  if (c.is_zero() || !c.is_real()) throw std::invalid_argument("condition_coefficient_a: c must be real and nonzero");
  const int sg = sgn(c.re());
  Scalar r = Scalar(4 * sg) * c;
  return Scalar::rational(1, 2) * (w.w_z()(c, r) + Scalar(4 * sg) * w.w_rho()(c, r));
}

double particular_a(const SystemSpec& spec, const ParticularParams& prm) {
  if (prm.c == 0) throw std::invalid_argument("particular solution requires c != 0 (the solution must not be constant)");
  if (spec.kind == SystemKind::OneBody) return condition_coefficient_a(spec.potential, prm.c);
  // The relative height is z2 - z1 = -w2.
  return -pair_factor(spec) * condition_coefficient_a(spec.potential, -prm.c);
}

PhaseState particular_solution(const SystemSpec& spec, const ParticularParams& prm, double t) {
  const double a = particular_a(spec, prm);
  PhaseState s = PhaseState::Zero(spec.dim());
  if (spec.kind == SystemKind::OneBody) {
    s(2) = prm.c;
    s(5) = -2 * a * t;
  } else {
    const double pw2 = -2 * a * t;
    s(2) = 0.5 * (prm.w1 + prm.c);
    s(5) = 0.5 * (prm.w1 - prm.c);
    s(8) = prm.p_w1 + pw2;
    s(11) = prm.p_w1 - pw2;
  }
  return s;
}

}  // namespace heisenkep
