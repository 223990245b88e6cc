#include "heisenkep/exactalg/ratfunc.hpp"

#include <ostream>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.leading().is_one()) {
    Scalar inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc ratfunc_normalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

int RatFunc::degree() const {
  if (is_zero()) return Poly::kZeroDegree;
  return num_.degree() - den_.degree();
}

Scalar RatFunc::leading() const { return num_.leading(); }

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative());
  // (n/d)' = (n' d - n d') / d^2; dividing by g = gcd(d, d') keeps sizes down.
  Poly dd = den_.derivative();
  Poly g = gcd(den_, dd);
  Poly d_over_g = exact_div(den_, g);
  Poly numer = num_.derivative() * d_over_g - num_ * exact_div(dd, g);
  return RatFunc(numer, d_over_g * den_);
}

RatFunc RatFunc::conj() const { return RatFunc(num_.conj(), den_.conj(), Canonical{}); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDivisionError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

Scalar RatFunc::operator()(const Scalar& x) const {
  Scalar d = den_(x);
  if (d.is_zero()) throw ZeroDivisionError("rational function evaluated at a pole");
  return num_(x) / d;
}

std::complex<double> RatFunc::operator()(std::complex<double> x) const { return num_(x) / den_(x); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly a = exact_div(den_, g), b = exact_div(o.den_, g);
  num_ = num_ * b + o.num_ * a;
  den_ = a * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  Scalar inv = d.leading().inverse();
  num_ = n * inv;
  den_ = d * inv;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace heisenkep
