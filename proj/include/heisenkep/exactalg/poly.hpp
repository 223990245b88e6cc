#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "heisenkep/exactalg/scalar.hpp"

namespace heisenkep {

/// Dense univariate polynomial over Q(i), coefficients indexed by degree.
/// The zero polynomial has no coefficients and degree() == Poly::kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(int c) : Poly(Scalar(c)) {}
  Poly(Scalar c);
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(std::initializer_list<Scalar> coeffs) : Poly(std::vector<Scalar>(coeffs)) {}

  /// The polynomial c * x^k.
  static Poly monomial(Scalar c, int k);
  static Poly x() { return monomial(Scalar(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Coefficient of x^k (zero beyond the degree).
  const Scalar& operator[](int k) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& leading() const;

  Poly monic() const;
  Poly derivative() const;
  Poly conj() const;
  /// p(x + s)
  Poly shifted(const Scalar& s) const;
  /// Multiplies by x^k.
  Poly shift_up(int k) const;
  /// Largest k with x^k | p (0 for the zero polynomial).
  int low_order() const;

  Scalar operator()(const Scalar& x) const;
  std::complex<double> operator()(std::complex<double> x) const;
  std::complex<long double> eval_ld(std::complex<long double> x) const;

  /// Multiplies by the lcm of all coefficient denominators; the result lies in Z[i][x].
  Poly cleared() const;
  /// Max-norm of the coefficient magnitudes.
  double norm_inf() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;
  std::size_t hash() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // quotient
Poly operator%(const Poly& a, const Poly& b);  // remainder
/// a / b when b divides a; throws otherwise.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct Bezout {
  Poly g, s, t;
};
Bezout xgcd(const Poly& a, const Poly& b);
/// Inverse of a modulo m; throws ZeroDivisionError when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly pow(const Poly& p, unsigned k);
/// Square-free decomposition p = lc * prod f_i^{m_i} with f_i monic, square-free, coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);

}  // namespace heisenkep
