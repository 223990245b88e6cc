#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "heisenkep/exactalg/errors.hpp"
#include "heisenkep/galois/expsol.hpp"
#include "heisenkep/galois/factorization.hpp"
#include "heisenkep/galois/liouvillian.hpp"
#include "heisenkep/galois/rehm.hpp"
#include "heisenkep/galois/scenarios.hpp"
#include "heisenkep/galois/sympower.hpp"
#include "heisenkep/variational/ve.hpp"

using namespace heisenkep;

namespace {

const Scalar I = Scalar::i();
const Poly T = Poly::x();
const RatFunc t = RatFunc::t();
const RatFunc O(0), L1(1);

RatFunc rs(const Scalar& s) { return RatFunc(s); }

ExactMatrix exact(std::initializer_list<std::initializer_list<RatFunc>> rows) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const auto& e : r) m(i, j++) = e;
    ++i;
  }
  return m;
}

ExactVector vec(std::initializer_list<Scalar> v) {
  ExactVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (const auto& s : v) out(i++) = RatFunc(s);
  return out;
}

Poly random_poly(std::mt19937_64& rng, int deg, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> c(lo, hi);
  std::vector<Scalar> v(static_cast<std::size_t>(deg) + 1);
  for (auto& s : v) s = Scalar(mpq_class(c(rng)), mpq_class(c(rng)));
  if (v.back().is_zero()) v.back() = Scalar(1);
  return Poly(std::move(v));
}

// prod (D - lambda_i) for constants.
DiffOperator constant_operator(const std::vector<Scalar>& roots) {
  Poly chi(1);
  for (const auto& r : roots) chi *= Poly{-r, Scalar(1)};
  std::vector<RatFunc> c;
  for (int k = 0; k <= chi.degree(); ++k) c.push_back(rs(chi[k]));
  return DiffOperator(c);
}

// A from the one-body block at a = 2, pair order (x, px, y, py).
LinearSystem a2_block_system() {
  return ve_particular(SystemSpec::one_body(Scalar(1)), Scalar::rational(1, 4)).block(0, 4);
}

const Poly S_ref = T * Poly{Scalar(-229734225), Scalar(0), Scalar(71751150), Scalar(0), Scalar(-2391850656L),
                                Scalar(0), Scalar(854800080), Scalar(0), Scalar(-119918560), Scalar(0),
                                Scalar(8200960), Scalar(0), Scalar(-271680), Scalar(0), Scalar(3456)};

}  // namespace

TEST_CASE("rehm criterion") {
  const Scalar a = Scalar::rational(3, 2);
  ParabolicParams kepler{-a * a, Scalar(0), Scalar(0)};
  GaloisVerdict v = rehm_classify(kepler);
  CHECK(v.is_not_solvable());
  CHECK(v.evidence["ratio"] == "0");
  CHECK(v.evidence["group"] == "SL(2,C)");

  for (const Scalar& mu : {Scalar(-2), Scalar::rational(-1, 2), Scalar::rational(1, 2), Scalar(1), Scalar(3)}) {
    const Scalar m1 = Scalar(1) + mu;
    GaloisVerdict w = rehm_classify({m1 * m1, Scalar(0), Scalar(2) * m1});
    CHECK(w.is_not_solvable());
    CHECK(w.evidence["ratio_squared"] == "4");
  }

  CHECK(rehm_classify(ParabolicParams::from_alpha(Scalar(2), Scalar(0), Scalar(-2))).tag == VerdictTag::Inconclusive);
  // (beta^2 - gamma)/alpha = (1 - (-5))/2 = 3.
  CHECK(rehm_classify(ParabolicParams::from_alpha(Scalar(2), Scalar(1), Scalar(-5))).tag == VerdictTag::Inconclusive);
  CHECK_THROWS_AS(rehm_classify({Scalar(0), Scalar(0), Scalar(1)}), std::invalid_argument);

  // Sign of alpha.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int k = 0; k < 200; ++k) {
    Scalar al(mpq_class(c(rng), 1 + std::abs(c(rng))), mpq_class(c(rng), 3));
    if (al.is_zero()) continue;
    Scalar be(mpq_class(c(rng), 2)), ga(mpq_class(c(rng)));
    auto p = ParabolicParams::from_alpha(al, be, ga), q = ParabolicParams::from_alpha(-al, -be, ga);
    CHECK(p.alpha_sq == q.alpha_sq);
    CHECK(rehm_classify(p).tag == rehm_classify(q).tag);
    // Direct oracle on the ratio itself.
    const Scalar ratio = (be * be - ga) / al;
    const bool odd = ratio.is_integer() && mpz_class(ratio.re().get_num()) % 2 != 0;
    CHECK(rehm_classify(p).is_not_solvable() == !odd);
  }
}

TEST_CASE("parabolic parameters from reduced equations") {
  const Scalar a = Scalar(5);
  ParabolicParams p = parabolic_from_ode(DiffOperator({rs(a * a) * t * t, O, L1}));
  CHECK(p.alpha_sq == -a * a);
  CHECK(p.alpha_beta == Scalar(0));
  CHECK(p.gamma == Scalar(0));
  CHECK(*p.alpha() == Scalar(0, 5));

  const Scalar mu = Scalar::rational(1, 2), m1 = Scalar(1) + mu;
  ParabolicParams q = parabolic_from_ode(DiffOperator({-(rs(m1) * (rs(Scalar(2)) + rs(m1) * t * t)), O, L1}));
  CHECK(q.alpha_sq == m1 * m1);
  CHECK(*q.beta() == Scalar(0));
  CHECK(q.gamma == Scalar(2) * m1);

  CHECK_THROWS_AS(parabolic_from_ode(DiffOperator({O, O, L1})), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_from_ode(DiffOperator({t * t, t, L1})), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_from_ode(DiffOperator({t * t * t, O, L1})), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_from_ode(DiffOperator({t, L1})), std::invalid_argument);
  CHECK_THROWS_AS(GaloisVerdict::not_solvable("x", Json::object()), std::invalid_argument);
}

TEST_CASE("orchestrated verdicts") {
  GaloisVerdict one = one_body_verdict(SystemSpec::one_body(Scalar(1)), Scalar::rational(1, 4));
  CHECK(one.is_not_solvable());
  CHECK(one.criterion == "rehm");
  CHECK(one.evidence["params"]["alpha_sq"] == "-4");
  CHECK(one.evidence["params"]["gamma"] == "0");
  GaloisVerdict neg = one_body_verdict(SystemSpec::one_body(Scalar(3)), Scalar(-2));
  CHECK(neg.is_not_solvable());

  for (const Scalar& mu : {Scalar(-2), Scalar::rational(-1, 2), Scalar::rational(1, 2), Scalar(1), Scalar(3)}) {
    GaloisVerdict v = two_body_verdict(mu);
    const Scalar m1 = Scalar(1) + mu;
    CHECK(v.is_not_solvable());
    CHECK(v.evidence["params"]["alpha_sq"] == to_json(m1 * m1));
    CHECK(v.evidence["params"]["gamma"] == to_json(Scalar(2) * m1));
  }
  GaloisVerdict m = two_body_verdict(Scalar(-1));
  CHECK(m.is_not_solvable());
  CHECK(m.criterion == "liouvillian");
}

TEST_CASE("exponential solutions") {
  ExpSearch e1 = exp_solutions(DiffOperator::first_order(RatFunc(1)));
  REQUIRE(e1.solutions.size() == 1);
  CHECK(e1.solutions[0].r == L1);
  CHECK(e1.solutions[0].exponent == T);
  CHECK(e1.complete);

  ExpSearch none = exp_solutions(o3r_operator());
  CHECK(none.solutions.empty());
  CHECK(none.complete);

  // w = exp(-t^2/2): w' = -t w, w'' = (t^2 - 1) w.
  DiffOperator g({-(t * t - L1), O, L1});
  CHECK(g.apply(O) == O);
  ExpSearch eg = exp_solutions(g);
  REQUIRE(eg.solutions.size() == 1);
  CHECK(eg.solutions[0].r == -t);
  CHECK(eg.solutions[0].exponent == Poly{Scalar(0), Scalar(0), Scalar::rational(-1, 2)});
  CHECK(right_remainder(g, eg.solutions[0].r).is_zero());

  // Both exp(t^2/2) and exp(-t^2/2) solve D^2 - 2t D... use D^2 - t^2 - 1 and its conjugate shift.
  DiffOperator both = compose(DiffOperator::first_order(t), DiffOperator::first_order(-t));
  ExpSearch eb = exp_solutions(both);
  CHECK(std::any_of(eb.solutions.begin(), eb.solutions.end(), [](const ExpSolution& s) { return s.r == -t; }));

  // Cauchy-Euler t^2 y'' + t y' - y: t and 1/t.
  DiffOperator euler({-(t * t).inverse(), t.inverse(), L1});
  ExpSearch ee = exp_solutions(euler);
  std::set<std::string> rs_found;
  for (const auto& s : ee.solutions) rs_found.insert(s.r.str());
  CHECK(ee.solutions.size() == 2);
  CHECK(rs_found.count(t.inverse().str()) == 1);
  CHECK(rs_found.count((-t.inverse()).str()) == 1);

  // Airy has no exponential solutions, and its slope 3/2 is outside the integer search.
  ExpSearch airy = exp_solutions(DiffOperator({-t, O, L1}));
  CHECK(airy.solutions.empty());

  CHECK(polynomial_solutions(DiffOperator({O, O, L1})).size() == 2);
  CHECK(polynomial_solutions(DiffOperator({O, L1})) == std::vector<Poly>{Poly(1)});
}

TEST_CASE("exponential solutions recover exp(p) q") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int trial = 0; trial < 12; ++trial) {
    const Poly p = random_poly(rng, deg(rng) + 1) - random_poly(rng, 0) * Poly(1);
    const Poly q = random_poly(rng, deg(rng));
    const RatFunc r = RatFunc(p.derivative()) + RatFunc(q.derivative(), q);
    DiffOperator op = compose(DiffOperator::first_order(RatFunc(Scalar(trial % 3))), DiffOperator::first_order(r));
    ExpSearch es = exp_solutions(op);
    CAPTURE(p.str());
    CAPTURE(q.str());
    CHECK(std::any_of(es.solutions.begin(), es.solutions.end(), [&](const ExpSolution& s) { return s.r == r; }));
    for (const auto& s : es.solutions) CHECK(right_remainder(op, s.r).is_zero());
  }
}

TEST_CASE("symmetric powers") {
  CHECK(sym_power(DiffOperator({O, O, L1}), 2) == DiffOperator({O, O, O, L1}));
  DiffOperator o3r = o3r_operator();
  CHECK(sym_power(o3r, 1) == o3r);
  DiffOperator airy({-t, O, L1});
  CHECK(sym_power(airy, 1) == airy);
  CHECK_THROWS_AS(sym_power(airy, 0), std::invalid_argument);
  // Sym^2 of Airy: y''' - 4t y' - 2y.
  CHECK(sym_power(airy, 2) == DiffOperator({rs(Scalar(-2)), rs(Scalar(-4)) * t, O, L1}));
  CHECK(sym_power(o3r, 3).order() == 10);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2, k = 2 + (trial / 2) % 2;
    std::vector<Scalar> lam;
    while (static_cast<int>(lam.size()) < n) {
      Scalar s(mpq_class(c(rng)), mpq_class(c(rng)));
      if (std::find(lam.begin(), lam.end(), s) == lam.end()) lam.push_back(s);
    }
    DiffOperator s = sym_power(constant_operator(lam), k);
    std::vector<Scalar> chi;
    for (const auto& a : s.coeffs()) {
      REQUIRE(a.is_constant());
      chi.push_back(a.constant());
    }
    const Poly cp(chi);
    // All k-fold sums.
    std::set<std::string> sums;
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    std::function<void(int, int, Scalar)> rec = [&](int pos, int start, Scalar acc) {
      if (pos == k) {
        CHECK(cp(acc).is_zero());
        sums.insert(acc.str());
        return;
      }
      for (int i = start; i < n; ++i) rec(pos + 1, i, acc + lam[static_cast<std::size_t>(i)]);
    };
    rec(0, 0, Scalar(0));
    CHECK(s.order() == static_cast<int>(sums.size()));
  }
}

TEST_CASE("singularities of the third symmetric power") {
  DiffOperator s3 = sym_power(o3r_operator(), 3);
  SingularityData d = singularity_analysis(s3);
  CHECK(d.order == 10);
  // Equal up to a constant, and square-free.
  CHECK(d.singular_polynomial == S_ref.monic());
  CHECK(d.leading.monic() == S_ref.monic());
  CHECK(gcd(S_ref, S_ref.derivative()).degree() == 0);
  CHECK(d.point_count() == 15);
  const std::set<std::string> allowed{"0", "1", "2", "3", "4", "5", "6", "7", "8", "10"};
  for (const auto& p : d.points) {
    CHECK(p.kind == PointKind::RegularSingular);
    REQUIRE(p.uniform);
    int count = 0;
    for (const auto& e : p.exponents) {
      CHECK(allowed.count(e.value.str()) == 1);
      count += e.multiplicity;
    }
    CHECK(count == 10);
    CHECK(p.other_exponents == 0);
    CHECK(static_cast<int>(p.points.size()) == p.factor.degree());
    for (const auto& z : p.points) CHECK(std::abs(S_ref(z)) < 1e-6 * S_ref.norm_inf());
  }
  CHECK(d.infinity.kind == PointKind::Irregular);
  REQUIRE(d.infinity.exponents.size() == 1);
  CHECK(d.infinity.exponents[0].value == Scalar(2));
  CHECK(d.infinity.other_exponents == 0);
  CHECK(d.to_json()["point_count"] == 15);
}

TEST_CASE("local analysis") {
  // Fuchs classification.
  FuchsReport o = fuchsian_check(o3r_operator());
  CHECK(o.finite.empty());
  CHECK(o.infinity == PointKind::Irregular);
  CHECK_FALSE(o.fuchsian);
  DiffOperator euler({-(t * t).inverse(), t.inverse(), L1});
  FuchsReport e = fuchsian_check(euler);
  CHECK(e.fuchsian);
  REQUIRE(e.finite.size() == 1);
  CHECK(e.finite[0].first == T);
  const Scalar a = Scalar(3);
  CHECK(fuchsian_check(DiffOperator({rs(a * a) * t * t, O, L1})).infinity == PointKind::Irregular);
  // Irregular finite point: t^2 y' - y.
  FuchsReport irr = fuchsian_check(DiffOperator({-(t * t).inverse(), L1}));
  REQUIRE(irr.finite.size() == 1);
  CHECK(irr.finite[0].second == PointKind::Irregular);

  // Euler exponents +-1 at 0 and at infinity.
  SingularityData de = singularity_analysis(euler);
  REQUIRE(de.points.size() == 1);
  CHECK(de.points[0].exponents.size() == 2);
  CHECK(de.infinity.kind == PointKind::RegularSingular);
  CHECK(de.infinity.exponents.size() == 2);

  // Double root of the leading coefficient: (t-1)^2 y'' + (t-1) y' - y.
  const RatFunc s = t - L1;
  SingularityData dd = singularity_analysis(DiffOperator({-(s * s).inverse(), s.inverse(), L1}));
  REQUIRE(dd.points.size() == 1);
  CHECK(dd.points[0].multiplicity == 2);
  CHECK(dd.points[0].factor == T - Poly(1));

  // Irrational exponents: t^2 y'' - y, r^2 - r - 1.
  SingularityData di = singularity_analysis(DiffOperator({-(t * t).inverse(), O, L1}));
  CHECK(di.points[0].other_exponents == 2);
  CHECK(di.points[0].indicial_polynomial() == Poly{Scalar(-1), Scalar(-1), Scalar(1)});

  // Factor t^2 + 1 with the same local data at both roots, and a split factor.
  const RatFunc q = t * t + L1;
  DiffOperator split({rs(Scalar(2)) / q, rs(Scalar(3)) * t / q, L1});
  SingularityData ds = singularity_analysis(split);
  REQUIRE(ds.point_count() == 2);
  DiffOperator mixed({t / q, (rs(Scalar(3)) * t + rs(Scalar(1))) / q, L1});
  SingularityData dm = singularity_analysis(mixed);
  CHECK(dm.point_count() == 2);
  // The residues 3/2 -+ i/2 differ between the roots.
  REQUIRE(dm.points.size() == 1);
  CHECK_FALSE(dm.points[0].uniform);
  CHECK_FALSE(exp_solutions(mixed).complete);
}

TEST_CASE("indicial sum identity") {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + trial % 3;
    // Regular singular points at 0 and at the roots of t^2 + 1.
    const RatFunc f0 = t, f1 = (t * t + L1) / (rs(Scalar(2)) * t);
    std::vector<RatFunc> coeffs;
    std::vector<Scalar> lead;
    for (int k = 0; k < n; ++k) {
      Scalar ck(mpq_class(c(rng), 2), mpq_class(c(rng), 3));
      lead.push_back(ck);
      RatFunc a = rs(ck);
      RatFunc den0 = L1, den1 = L1;
      for (int j = k; j < n; ++j) {
        den0 *= f0;
        den1 *= f1;
      }
      coeffs.push_back(a / den0 + a / den1 + RatFunc(random_poly(rng, 1)));
    }
    coeffs.push_back(L1);
    DiffOperator op(coeffs);
    SingularityData d = singularity_analysis(op);
    CHECK(d.point_count() == 3);
    for (const auto& p : d.points) {
      REQUIRE(p.kind == PointKind::RegularSingular);
      REQUIRE(p.uniform);
      Poly ind = p.indicial_polynomial();
      CHECK(ind.degree() == n);
      // Residue of a_{n-1} at each root is lead[n-1]; sum of roots from the coefficients.
      const Scalar sum = -ind[n - 1] / ind[n];
      CHECK(sum == Scalar(n * (n - 1) / 2) - lead[static_cast<std::size_t>(n - 1)]);
    }
  }
}

TEST_CASE("case 2 bookkeeping") {
  DiffOperator o3r = o3r_operator();
  DiffOperator s3 = sym_power(o3r, 3);
  CaseReport r = case2_obstruction(o3r, s3, singularity_analysis(s3));
  CHECK(r.excluded);
  CHECK(r.evidence["alpha_infinity"] == Json::array({"2"}));
  CHECK(r.evidence["feasible_degrees"].empty());
  CHECK(r.evidence["exponent_sum_min"] == "0");

  // Hand-built data: integer exponents >= 0 at finite points.
  SingularityData d;
  d.order = 2;
  FiniteSingularity p;
  p.factor = T * T - Poly(2);
  p.multiplicity = 1;
  p.kind = PointKind::RegularSingular;
  p.uniform = true;
  p.exponents = {{Scalar(0), 1}, {Scalar(1), 1}};
  d.points.push_back(p);
  d.infinity.kind = PointKind::Irregular;
  d.infinity.exponents = {{Scalar(2), 1}};
  CHECK(case2_obstruction(o3r, s3, d).excluded);
  d.infinity.exponents = {{Scalar(-3), 1}};
  CaseReport open = case2_obstruction(o3r, s3, d);
  CHECK_FALSE(open.excluded);
  // Sums 0, 1, 2 give degrees 3, 2, 1.
  CHECK(open.evidence["feasible_degrees"].size() == 3);
  // Only non-half-integer exponents at a point.
  d.points[0].exponents = {{Scalar::rational(1, 3), 2}};
  CHECK(case2_obstruction(o3r, s3, d).excluded);
  // Half-integer exponents enter the sums.
  d.points[0].exponents = {{Scalar::rational(-1, 2), 1}};
  d.infinity.exponents = {{Scalar(-1), 1}};
  CHECK_FALSE(case2_obstruction(o3r, s3, d).excluded);
  d.points[0].uniform = false;
  CHECK_FALSE(case2_obstruction(o3r, s3, d).excluded);
}

TEST_CASE("three-case verdict") {
  GaloisVerdict v = liouvillian_verdict_o3r();
  REQUIRE(v.is_not_solvable());
  CHECK(v.evidence["case1"]["excluded"] == true);
  CHECK(v.evidence["case3"]["excluded"] == true);
  CHECK(v.evidence["case2"]["excluded"] == true);
  CHECK(v.evidence["case2"]["evidence"]["sym3_order"] == 10);
  CHECK(v.evidence["case2"]["evidence"]["alpha_infinity"] == Json::array({"2"}));
  CHECK(v.evidence["case2"]["evidence"]["singular_polynomial"] == S_ref.monic().str("tau"));
  CHECK(v.to_json()["tag"] == "NotSolvableIdentityComponent");

  // (D^2 + 1)(D - 2t) annihilates exp(t^2).
  DiffOperator tamper = compose(DiffOperator({L1, O, L1}), DiffOperator::first_order(rs(Scalar(2)) * t));
  GaloisVerdict w = liouvillian_verdict(tamper);
  CHECK(w.tag == VerdictTag::Inconclusive);
  CHECK(w.evidence["case1"]["excluded"] == false);
  CHECK_THROWS_AS(liouvillian_verdict(DiffOperator({t, O, L1})), std::invalid_argument);
}

TEST_CASE("exterior square") {
  LinearSystem a = a2_block_system();
  const RatFunc t2 = rs(Scalar(2)) * t, t4 = rs(Scalar(-4)) * t * t;
  CHECK(a.A == exact({{O, L1, t2, O}, {t4, O, O, t2}, {-t2, O, O, L1}, {O, -t2, t4, O}}));
  ExactMatrix e = exterior_square(a.A);
  ExactMatrix reference = exact({{O, O, t2, -t2, O, O},
                               {O, O, L1, L1, O, O},
                               {-t2, t4, O, O, L1, t2},
                               {t2, t4, O, O, L1, t2},
                               {O, O, t4, t4, O, O},
                               {O, O, -t2, t2, O, O}});
  // The reference (z12, z23) entry has the opposite sign.
  CHECK(e(3, 5) == -t2);
  ExactMatrix fixed = reference;
  fixed(3, 5) = -t2;
  CHECK(e == fixed);

  CHECK(is_zero(exterior_square(ExactMatrix::Constant(4, 4, O))));
  CHECK(exterior_square(identity_matrix(4)) == ExactMatrix(rs(Scalar(2)) * identity_matrix(6)));
  CHECK(exterior_square(identity_matrix(3)).rows() == 3);
  CHECK_THROWS_AS(exterior_square(ExactMatrix::Constant(2, 3, O)), DimensionError);

  // Derivation oracle: E (y ^ z) = (A y) ^ z + y ^ (A z) with exact random data.
  std::mt19937_64 rng(3);
  auto wedge = [](const ExactVector& y, const ExactVector& z) {
    ExactVector w(6);
    int c = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) w(c++) = y(i) * z(j) - y(j) * z(i);
    return w;
  };
  for (int trial = 0; trial < 5; ++trial) {
    ExactVector y(4), z(4);
    for (int i = 0; i < 4; ++i) {
      y(i) = RatFunc(random_poly(rng, 1));
      z(i) = RatFunc(random_poly(rng, 1));
    }
    CHECK(ExactVector(e * wedge(y, z)) == ExactVector(wedge(a.A * y, z) + wedge(y, a.A * z)));
  }

  // Spectrum: constant A = P diag(l) P^-1 gives eigenvalues l_i + l_j.
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Scalar> l{Scalar(1), Scalar(-2), Scalar(0, 1), Scalar(3 + trial)};
    ExactMatrix P(4, 4), D = ExactMatrix::Constant(4, 4, O);
    do {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) P(i, j) = RatFunc(random_poly(rng, 0));
    } while (determinant(P).is_zero());
    for (int i = 0; i < 4; ++i) D(i, i) = rs(l[i]);
    ExactMatrix E = exterior_square(ExactMatrix(P * D * matrix_inverse(P)));
    // Characteristic polynomial det(x - E) with x played by t.
    RatFunc cp = determinant(ExactMatrix(t * identity_matrix(6) - E));
    Poly expect(1);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) expect *= Poly{-(l[i] + l[j]), Scalar(1)};
    CHECK(cp == RatFunc(expect));
  }
}

TEST_CASE("exponential solutions of systems and factorization") {
  LinearSystem a = a2_block_system();
  LinearSystem e(exterior_square(a.A));
  std::vector<SystemExpSolution> sols = system_exp_solutions(e);
  const ExactVector y1 = vec({Scalar(-1), Scalar(0), -I, I, Scalar(0), Scalar(1)});
  const ExactVector y2 = vec({Scalar(-1), Scalar(0), I, -I, Scalar(0), Scalar(1)});
  const Poly s1{Scalar(0), Scalar(0), Scalar(2) * I}, s2{Scalar(0), Scalar(0), Scalar(-2) * I};
  auto has = [&](const Poly& s, const ExactVector& y) {
    return std::any_of(sols.begin(), sols.end(),
                       [&](const SystemExpSolution& x) { return x.exponent == s && x.direction == y; });
  };
  CHECK(has(s1, y1));
  CHECK(has(s2, y2));
  for (const auto& s : sols) CHECK(s.constant_direction);

  std::vector<SystemExpSolution> diag =
      system_exp_solutions(LinearSystem(exact({{L1, O}, {O, rs(Scalar(2))}})));
  REQUIRE(diag.size() == 2);
  CHECK(diag[0].exponent == T);
  CHECK(diag[0].direction == vec({Scalar(1), Scalar(0)}));
  CHECK(diag[1].exponent == Poly{Scalar(0), Scalar(2)});
  CHECK(diag[1].direction == vec({Scalar(0), Scalar(1)}));

  CHECK(plucker_check(y1));
  CHECK(plucker_check(y2));
  CHECK_FALSE(plucker_check(vec({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1)})));
  CHECK(plucker_check(ExactVector::Constant(6, O)));
  CHECK_THROWS_AS(plucker_check(ExactVector::Constant(4, O)), DimensionError);

  Factorization f = factorization_basis({y1, y2}, &a);
  CHECK(f.kernel_sizes == std::vector<int>{2, 2});
  CHECK(f.completion_columns == 0);
  CHECK(f.Q == exact({{O, rs(-I), O, rs(I)}, {rs(-I), O, rs(I), O}, {O, L1, O, L1}, {L1, O, L1, O}}));
  CHECK(determinant(f.Q) == rs(Scalar(-4)));
  CHECK(f.block_diagonal);
  CHECK_FALSE(f.partial());
  const RatFunc it2 = rs(Scalar(2) * I) * t, t4 = rs(Scalar(-4)) * t * t;
  CHECK(f.transformed->A == exact({{it2, t4, O, O}, {L1, it2, O, O}, {O, O, -it2, t4}, {O, O, L1, -it2}}));
  CHECK(f.Q == splitting_gauge());

  Factorization half = factorization_basis({y1}, &a);
  CHECK(half.kernel_sizes == std::vector<int>{2});
  CHECK(half.completion_columns == 2);
  CHECK(half.partial());
  CHECK(half.block_triangular);
  CHECK_FALSE(half.block_diagonal);
  CHECK(determinant(half.Q).is_zero() == false);

  CHECK_THROWS_AS(factorization_basis({vec({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1)})}),
                  std::invalid_argument);
}
