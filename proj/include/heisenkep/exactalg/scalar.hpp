#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace heisenkep {

/// Gaussian rational re + im*i with both parts in lowest terms (mpq keeps them canonical).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  Scalar(long long v) : re_(static_cast<long>(v)) {}
  Scalar(mpz_class v) : re_(std::move(v)) {}
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(0, 1); }
  static Scalar rational(long num, long den);
  /// Exact binary value of a double (no rounding).
  static Scalar from_double(double v);
  /// Exact value of the shortest decimal representation of v, e.g. 0.1 -> 1/10.
  static Scalar from_decimal(double v);
  /// Parses "a/b+c/d*i" and the usual shorthands ("3", "-i", "2*i", "1/2-i").
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;
  /// |z|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::complex<long double> to_complex_ld() const;
  std::string str() const;
  std::size_t hash() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact square root in Q(i) when one exists (the root with non-negative real part,
/// or positive imaginary part when the real part vanishes).
std::optional<Scalar> exact_sqrt(const Scalar& s);

/// Nearest element of Z[i] to a complex value.
Scalar round_gaussian(std::complex<long double> z);

Scalar pow(const Scalar& s, unsigned k);

/// Least common multiple of the real and imaginary denominators.
mpz_class denominator_lcm(const Scalar& s);

}  // namespace heisenkep

template <>
struct std::hash<heisenkep::Scalar> {
  std::size_t operator()(const heisenkep::Scalar& s) const noexcept { return s.hash(); }
};
