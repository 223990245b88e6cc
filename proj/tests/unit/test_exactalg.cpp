#include <doctest.h>

#include <algorithm>
#include <random>

#include "heisenkep/exactalg/diffop.hpp"
#include "heisenkep/exactalg/errors.hpp"
#include "heisenkep/exactalg/matrix.hpp"
#include "heisenkep/exactalg/roots.hpp"
#include "heisenkep/exactalg/serialize.hpp"

using namespace heisenkep;

namespace {

const Scalar I = Scalar::i();
const Poly T = Poly::x();

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Scalar> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& s : c) s = random_scalar(rng);
  return Poly(std::move(c));
}

ExactMatrix random_matrix(std::mt19937_64& rng, int n, int max_deg) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = RatFunc(random_poly(rng, max_deg));
  return m;
}

}  // namespace

TEST_CASE("scalar parse and print") {
  CHECK(Scalar::parse("1/2-3/4*i") == Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
  CHECK(Scalar::parse("-i") == -I);
  CHECK(Scalar::parse("3") == Scalar(3));
  CHECK(Scalar(mpq_class(1, 2), mpq_class(-3, 4)).str() == "1/2-3/4*i");
  CHECK(Scalar(0).str() == "0");
  CHECK((-I).str() == "-1*i");
  CHECK(Scalar::from_decimal(0.1) == Scalar::rational(1, 10));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ZeroDivisionError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
}

TEST_CASE("exact square roots in Q(i)") {
  CHECK(exact_sqrt(Scalar(-4)) == 2 * I);
  CHECK(exact_sqrt(2 * I) == Scalar(1) + I);
  CHECK(!exact_sqrt(Scalar(2)).has_value());
}

TEST_CASE("field axioms on random scalar triples") {
  std::mt19937_64 rng(20240101);
  for (int k = 0; k < 200; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("ratfunc normalization") {
  CHECK(RatFunc(Poly(2) * T + 2, Poly(2)) == RatFunc(T + 1));
  CHECK(RatFunc(T * T - 1, T - 1) == RatFunc(T + 1));
  // coefficient 4τ(4τ²−63)/27
  RatFunc v(Poly(4) * T * (Poly(4) * T * T - 63), Poly(27));
  CHECK(v.num().leading() == Scalar::rational(16, 27));
  CHECK(v.den() == Poly(1));
  CHECK_THROWS_AS(RatFunc(T, Poly()), ZeroDivisionError);
}

TEST_CASE("ratfunc multiplicative round trip") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    RatFunc f(random_poly(rng, 3), random_poly(rng, 3) + T * T * T * T);
    RatFunc g(random_poly(rng, 3) + T, random_poly(rng, 2) + T * T * T);
    if (g.is_zero()) continue;
    CHECK((f * g) * g.inverse() == f);
    CHECK((f / g + g).derivative() == f.derivative() / g - f * g.derivative() / (g * g) + g.derivative());
  }
}

TEST_CASE("poly gcd and squarefree decomposition") {
  Poly a = (T - 1) * (T - 1) * (T + I);
  auto sq = squarefree_decomposition(a * (T - 2));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].first == (T + I) * (T - 2));
  CHECK(sq[1].first == T - 1);
  CHECK(sq[1].second == 2);
  CHECK(gcd(a, (T - 1) * (T + 5)) == T - 1);
  CHECK(Poly{1, 2, 3}.shifted(1) == Poly{6, 8, 3});
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(identity_matrix(4)).empty());
  ExactMatrix m(2, 2);
  m << RatFunc(1), RatFunc(1), RatFunc(2), RatFunc(2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0](0) == RatFunc(-1));
  CHECK(ns[0](1) == RatFunc(1));
}

TEST_CASE("nullspace basis property on random rank-deficient matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    ExactMatrix a = random_matrix(rng, 4, 2);
    ExactMatrix b(4, 6);
    ExactMatrix l = random_matrix(rng, 4, 1);
    b << a, a.col(0) + a.col(1), l.col(2) * RatFunc(T);
    auto ns = nullspace(b);
    for (const auto& v : ns) CHECK(is_zero(b * v));
    CHECK(static_cast<Eigen::Index>(ns.size()) + rank(b) == b.cols());
  }
}

TEST_CASE("matrix inverse") {
  ExactMatrix d = ExactMatrix::Zero(2, 2);
  d(0, 0) = RatFunc(2);
  d(1, 1) = RatFunc(T);
  ExactMatrix di = matrix_inverse(d);
  CHECK(di(0, 0) == RatFunc(Scalar::rational(1, 2)));
  CHECK(di(1, 1) == RatFunc(Poly(1), T));
  CHECK(matrix_inverse(identity_matrix(3)) == identity_matrix(3));
  ExactMatrix s(2, 2);
  s << RatFunc(T), RatFunc(1), RatFunc(T * T), RatFunc(T);
  CHECK_THROWS_AS(matrix_inverse(s), SingularMatrixError);
  CHECK_THROWS_AS(matrix_inverse(ExactMatrix(2, 3)), DimensionError);

  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    ExactMatrix m = random_matrix(rng, n, n <= 4 ? 1 : 0);
    if (determinant(m).is_zero()) continue;
    ExactMatrix mi = matrix_inverse(m);
    CHECK(m * mi == identity_matrix(n));
    CHECK(mi * m == identity_matrix(n));
  }
}

TEST_CASE("trailing echelon basis") {
  ExactVector a(3), b(3);
  a << RatFunc(1), RatFunc(2), RatFunc(2);
  b << RatFunc(0), RatFunc(1), RatFunc(1);
  auto e = trailing_echelon_basis({a, b});
  REQUIRE(e.size() == 2);
  CHECK(e[0](2) == RatFunc(1));
  CHECK(e[0](1) == RatFunc(1));
  CHECK(e[1](2) == RatFunc(0));
  CHECK(e[1](0) == RatFunc(1));
}

TEST_CASE("numeric roots") {
  auto r = poly_roots_numeric(T * T + 1);
  REQUIRE(r.size() == 2);
  std::sort(r.begin(), r.end(), [](auto x, auto y) { return x.imag() < y.imag(); });
  CHECK(std::abs(r[0] + std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs(r[1] - std::complex<double>(0, 1)) < 1e-12);

  Poly cubic = T * (T - 1) * (T - 2);
  auto rc = poly_roots_numeric(cubic);
  std::sort(rc.begin(), rc.end(), [](auto x, auto y) { return x.real() < y.real(); });
  for (int k = 0; k < 3; ++k) CHECK(std::abs(rc[static_cast<std::size_t>(k)] - double(k)) < 1e-12);
  CHECK_THROWS_AS(poly_roots_numeric(Poly()), std::invalid_argument);
}

TEST_CASE("root sum matches Vieta for random polynomials up to degree 15") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (int deg = 1; deg <= 15; ++deg) {
    std::vector<Scalar> c(static_cast<std::size_t>(deg) + 1);
    for (auto& s : c) s = Scalar(coef(rng));
    c.back() = Scalar(coef(rng) == 0 ? 1 : 3);
    Poly p(c);
    auto roots = poly_roots_numeric(p);
    REQUIRE(static_cast<int>(roots.size()) == p.degree());
    std::complex<double> sum = 0;
    for (auto z : roots) sum += z;
    std::complex<double> expect = (-p[p.degree() - 1] / p.leading()).to_complex();
    CHECK(std::abs(sum - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("exact gaussian rational roots") {
  Poly p = (Poly(3) * T - 2) * (T - I) * (T - I) * (T * T - 2);
  auto roots = gaussian_rational_roots(p);
  REQUIRE(roots.size() == 2);
  bool saw_third = false, saw_i = false;
  for (const auto& r : roots) {
    if (r.value == Scalar::rational(2, 3)) saw_third = r.multiplicity == 1;
    if (r.value == I) saw_i = r.multiplicity == 2;
  }
  CHECK(saw_third);
  CHECK(saw_i);
}

TEST_CASE("differential operator algebra") {
  // exp(t) solves (D - 1) y = 0
  DiffOperator d1 = DiffOperator::first_order(RatFunc(1));
  CHECK(right_remainder(d1, RatFunc(1)).is_zero());
  // (D - t) ∘ (D + t) = D² - t² + 1
  DiffOperator l = compose(DiffOperator::first_order(RatFunc(T)), DiffOperator::first_order(RatFunc(-T)));
  CHECK(l == DiffOperator({RatFunc(1 - T * T), RatFunc(0), RatFunc(1)}));
  DiffOperator q = right_quotient(l, RatFunc(-T));
  CHECK(q == DiffOperator::first_order(RatFunc(T)));
  CHECK(l.apply(RatFunc(T * T)) == RatFunc(2 + (1 - T * T) * T * T));
  // y'' = 0 with y = w e^{t}: w'' + 2 w' + w = 0
  DiffOperator dd({RatFunc(0), RatFunc(0), RatFunc(1)});
  CHECK(dd.exp_substitution(RatFunc(1)) == DiffOperator({RatFunc(1), RatFunc(2), RatFunc(1)}));
}

TEST_CASE("json serialization round trip") {
  Poly p{Scalar::rational(1, 2), Scalar(0), -I};
  Json j = to_json(p);
  CHECK(j.dump() == R"(["1/2","0","-1*i"])");
  CHECK(poly_from_json(j) == p);
  RatFunc f(p, T + 1);
  CHECK(ratfunc_from_json(to_json(f)) == f);
  DiffOperator op({f, RatFunc(T), RatFunc(1)});
  CHECK(diffop_from_json(to_json(op)) == op);
}
