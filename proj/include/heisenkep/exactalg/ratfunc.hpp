#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "heisenkep/exactalg/poly.hpp"

namespace heisenkep {

/// Element of Q(i)(t) in canonical form: gcd(num, den) = 1 and den monic.
/// Canonical form is established on construction so equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(Scalar(c)), den_(1) {}
  RatFunc(Scalar c) : num_(std::move(c)), den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  /// Throws ZeroDivisionError for a zero denominator.
  RatFunc(Poly num, Poly den);

  static RatFunc t() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  /// Constant value; only meaningful when is_constant().
  Scalar constant() const { return num_[0]; }

  /// deg num - deg den (order of growth at infinity); Poly::kZeroDegree sentinel for zero.
  int degree() const;
  /// Leading coefficient of the expansion at infinity.
  Scalar leading() const;

  RatFunc derivative() const;
  RatFunc conj() const;
  RatFunc inverse() const;

  Scalar operator()(const Scalar& x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// Canonical form of num/den; identical inputs always give identical representations.
RatFunc ratfunc_normalize(const Poly& num, const Poly& den);

}  // namespace heisenkep

namespace Eigen {

template <>
struct NumTraits<heisenkep::Scalar> : GenericNumTraits<heisenkep::Scalar> {
  using Real = heisenkep::Scalar;
  using NonInteger = heisenkep::Scalar;
  using Nested = heisenkep::Scalar;
  using Literal = heisenkep::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<heisenkep::RatFunc> : GenericNumTraits<heisenkep::RatFunc> {
  using Real = heisenkep::RatFunc;
  using NonInteger = heisenkep::RatFunc;
  using Nested = heisenkep::RatFunc;
  using Literal = heisenkep::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 256,
    MulCost = 256
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
