#include <doctest.h>

#include <cmath>
#include <random>

#include "heisenkep/exactalg/errors.hpp"
#include "heisenkep/model/system.hpp"

using namespace heisenkep;

namespace {

const Poly Z = Poly::x();

PhaseState random_state(std::mt19937_64& rng, int dim, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  PhaseState s(dim);
  for (int i = 0; i < dim; ++i) s(i) = u(rng);
  return s;
}

// W = z^2 (rho^2 - 16 z^2), i.e. V = z^2 (x^2 + y^2)^2
PotentialSpec quartic_axis_free() {
  BiPoly num = BiPoly::monomial(Scalar(1), 2, 2) - BiPoly::monomial(Scalar(16), 4, 0);
  return PotentialSpec(num, BiPoly(Scalar(1)));
}

}  // namespace

TEST_CASE("group law examples") {
  using G = GroupElement<double>;
  G e{0, 0, 0}, g{1.5, -2, 0.25};
  G p = group_mul(e, g);
  CHECK(p.x == g.x);
  CHECK(p.z == g.z);
  G q = group_mul(G{1, 0, 0}, G{0, 1, 0});
  CHECK(q.x == 1);
  CHECK(q.y == 1);
  CHECK(q.z == 0.5);
  G r = group_mul(g, group_inv(g));
  CHECK(r.x == 0);
  CHECK(r.y == 0);
  CHECK(r.z == 0);
  G inv = group_inv(G{1, 2, 3});
  CHECK(inv.x == -1);
  CHECK(inv.z == -3);
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 100; ++k) {
    GroupElement<double> a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)}, c{u(rng), u(rng), u(rng)};
    auto l = group_mul(group_mul(a, b), c), r = group_mul(a, group_mul(b, c));
    CHECK(std::abs(l.x - r.x) < 1e-12);
    CHECK(std::abs(l.y - r.y) < 1e-12);
    CHECK(std::abs(l.z - r.z) < 1e-12);
    auto ii = group_inv(group_inv(a));
    CHECK(ii.z == a.z);
  }
}

TEST_CASE("rho examples and rotation invariance") {
  CHECK(rho(GroupElement<double>{0, 0, -2.5}) == doctest::Approx(10.0));
  CHECK(rho(GroupElement<double>{1, 0, 0}) == 1.0);
  CHECK(rho(GroupElement<double>{1, 1, 1}) == doctest::Approx(std::sqrt(20.0)));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 50; ++k) {
    double x = u(rng), y = u(rng), z = u(rng), th = u(rng);
    double xr = x * std::cos(th) - y * std::sin(th), yr = x * std::sin(th) + y * std::cos(th);
    CHECK(std::abs(rho(GroupElement<double>{x, y, z}) - rho(GroupElement<double>{xr, yr, z})) < 1e-12);
  }
}

TEST_CASE("hamiltonian examples") {
  const double kappa = 1.3, c = -0.7;
  SystemSpec one = SystemSpec::one_body(Scalar::from_decimal(kappa));
  PhaseState s = PhaseState::Zero(6);
  s(2) = c;
  s(5) = 2.0;
  CHECK(hamiltonian(one, s) == doctest::Approx(-kappa / (4 * std::abs(c))).epsilon(1e-14));

  SystemSpec free = SystemSpec::one_body(PotentialSpec(BiPoly(Scalar(0)), BiPoly(Scalar(1))));
  PhaseState f = PhaseState::Zero(6);
  f(3) = 1;
  CHECK(hamiltonian(free, f) == 0.5);

  PhaseState origin = PhaseState::Zero(6);
  CHECK_THROWS_AS(hamiltonian(one, origin), SingularEvaluationError);

  SystemSpec two = SystemSpec::two_body(Scalar(1), Scalar(2), Scalar(3));
  ParticularParams prm;
  prm.c = 0.4;
  prm.w1 = 0.3;
  prm.p_w1 = 0.2;
  PhaseState p = particular_solution(two, prm, 0.0);
  // Kinetic terms vanish at x = y = 0; rho12 = 4|w2|.
  CHECK(hamiltonian(two, p) == doctest::Approx(-1.0 * 2 * 3 / (4 * 0.4)).epsilon(1e-14));
}

TEST_CASE("gradient and hessian agree with finite differences") {
  std::mt19937_64 rng(5);
  for (auto spec : {SystemSpec::one_body(Scalar(1)), SystemSpec::two_body(Scalar(1), Scalar(1), Scalar(2)),
                    SystemSpec::one_body(quartic_axis_free())}) {
    for (int k = 0; k < 20; ++k) {
      PhaseState s = random_state(rng, spec.dim());
      PhaseState g = hamiltonian_gradient(spec, s);
      PhaseState gn = numeric_gradient([&](const PhaseState& x) { return hamiltonian(spec, x); }, s);
      CHECK((g - gn).lpNorm<Eigen::Infinity>() <= 1e-6 * std::max(1.0, g.lpNorm<Eigen::Infinity>()));
      Eigen::MatrixXd h = hamiltonian_hessian(spec, s);
      for (int i = 0; i < spec.dim(); ++i) {
        PhaseState col = numeric_gradient(
            [&](const PhaseState& x) { return hamiltonian_gradient(spec, x)(i); }, s);
        CHECK((h.row(i).transpose() - col).lpNorm<Eigen::Infinity>() <= 1e-5 * std::max(1.0, h.lpNorm<Eigen::Infinity>()));
      }
    }
  }
}

TEST_CASE("first integrals at the one-body axis state") {
  SystemSpec one = SystemSpec::one_body(Scalar(1));
  PhaseState s = PhaseState::Zero(6);
  s(2) = 0.5;
  s(5) = -3;
  auto fi = first_integrals(one, s);
  CHECK(fi.J == 2 * 0.5 * -3);
  CHECK(*fi.p_theta == 0);
  SystemSpec two = SystemSpec::two_body(Scalar(1), Scalar(1), Scalar(1));
  std::mt19937_64 rng(8);
  PhaseState t = random_state(rng, 12);
  CHECK((*first_integrals(two, t).I)(2) == t(8) + t(11));
}

TEST_CASE("poisson bracket relations") {
  std::mt19937_64 rng(20);
  SystemSpec two = SystemSpec::two_body(Scalar(1), Scalar(1), Scalar(2));
  SystemSpec one = SystemSpec::one_body(Scalar(1));
  auto I = [](int k) { return [k](const PhaseState& s) { return integral_I(k, s); }; };
  for (int k = 0; k < 100; ++k) {
    PhaseState s = random_state(rng, 12);
    CHECK(std::abs(poisson_bracket(I(1), I(2), s) - integral_I(3, s)) < 1e-6);
    CHECK(std::abs(poisson_bracket(I(1), I(4), s) - integral_I(2, s)) < 1e-6);
    CHECK(std::abs(poisson_bracket(I(2), I(4), s) + integral_I(1, s)) < 1e-6);
    CHECK(poisson_bracket(I(4), I(4), s) == 0);
    Observable H2 = [&](const PhaseState& x) { return hamiltonian(two, x); };
    for (int j = 1; j <= 4; ++j) CHECK(std::abs(poisson_bracket(I(j), H2, s)) < 1e-6);
  }
  for (int k = 0; k < 100; ++k) {
    PhaseState s = random_state(rng, 6);
    Observable H = [&](const PhaseState& x) { return hamiltonian(one, x); };
    double h = hamiltonian(one, s);
    CHECK(std::abs(poisson_bracket(H, dilation_integral, s) + 2 * h) < 1e-6 * std::max(1.0, std::abs(h)));
  }
}

TEST_CASE("condition coefficient against an independent axis restriction") {
  // Oracle: on the z-axis rho = 4 sgn(c) z, so V(0,0,z) = f(z) and a = f'(c)/2.
  for (int num : {1, 3, -2}) {
    Scalar kappa = Scalar::rational(num, 5);
    PotentialSpec kep = PotentialSpec::kepler(kappa);
    for (int cn : {1, 7, -3}) {
      Scalar c = Scalar::rational(cn, 4);
      int sg = cn > 0 ? 1 : -1;
      RatFunc f(Poly(-kappa), Poly(4 * sg) * Z);
      Scalar oracle = Scalar::rational(1, 2) * f.derivative()(c);
      CHECK(condition_coefficient_a_exact(kep, c) == oracle);
      if (cn > 0) CHECK(oracle == kappa / (Scalar(8) * c * c));
      CHECK(condition_coefficient_a(kep, c.re().get_d()) == doctest::Approx(oracle.re().get_d()).epsilon(1e-14));
    }
  }
  PotentialSpec q = quartic_axis_free();
  CHECK(condition_coefficient_a_exact(q, Scalar(2)).is_zero());
  CHECK(condition_coefficient_a(q, -1.5) == 0.0);
  PotentialSpec lin(BiPoly::monomial(Scalar(1), 0, 1), BiPoly(Scalar(1)));
  CHECK(condition_coefficient_a(lin, 3.0) == 2.0);
  CHECK(condition_coefficient_a(lin, -3.0) == -2.0);
  CHECK_THROWS_AS(condition_coefficient_a(lin, 0.0), std::invalid_argument);
}

TEST_CASE("particular solutions") {
  SystemSpec one = SystemSpec::one_body(Scalar(2));
  ParticularParams prm;
  prm.c = 0.5;
  PhaseState s0 = particular_solution(one, prm, 0);
  CHECK(s0(2) == 0.5);
  CHECK(s0(5) == 0);
  double a = condition_coefficient_a(one.potential, 0.5);
  CHECK(particular_solution(one, prm, 1.5)(5) == doctest::Approx(-3 * a));
  prm.c = 0;
  CHECK_THROWS_AS(particular_solution(one, prm, 1.0), std::invalid_argument);

  SystemSpec two = SystemSpec::two_body(Scalar(1), Scalar(2), Scalar(3));
  for (double w2 : {0.4, -0.6}) {
    prm.c = w2;
    CHECK(particular_a(two, prm) == doctest::Approx(2.0 * 3.0 / (8 * w2 * std::abs(w2))).epsilon(1e-14));
  }
}

TEST_CASE("system spec json") {
  Json j = Json::parse(R"({"kind":"two-body","kappa":"3/2","m1":1,"m2":"2","potential":"kepler"})");
  SystemSpec s = SystemSpec::from_json(j);
  CHECK(s.kind == SystemKind::TwoBody);
  CHECK(s.kappa == Scalar::rational(3, 2));
  CHECK(s.m2 == Scalar(2));
  Json w = Json::parse(R"({"kind":"one-body","kappa":1,"potential":{"num":[[2,2,"1"],[4,0,"-16"]]}})");
  SystemSpec q = SystemSpec::from_json(w);
  CHECK(q.potential.w().num == quartic_axis_free().w().num);
  CHECK_THROWS_AS(SystemSpec::from_json(Json::parse(R"({"kind":"three-body"})")), ParseError);
  CHECK_THROWS_AS(SystemSpec::from_json(Json::parse(R"({"kind":"one-body","kappa":0})")), ParseError);
}
