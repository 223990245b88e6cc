#include "heisenkep/exactalg/scalar.hpp"

#include <charconv>
#include <cstdlib>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

namespace {

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses an unsigned decimal "123", "1.5", "2e-3" or fraction "7/4" into an exact rational.
mpq_class parse_unsigned_rational(std::string_view s) {
  if (s.empty()) throw ParseError("empty number");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    mpz_class num, den;
    if (num.set_str(std::string(s.substr(0, slash)), 10) != 0 ||
        den.set_str(std::string(s.substr(slash + 1)), 10) != 0)
      throw ParseError("bad fraction '" + std::string(s) + "'");
    if (den == 0) throw ZeroDivisionError("zero denominator in '" + std::string(s) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  std::string mant(s);
  long exp10 = 0;
  auto e = mant.find_first_of("eE");
  if (e != std::string::npos) {
    exp10 = std::stol(mant.substr(e + 1));
    mant.resize(e);
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty()) throw ParseError("bad number '" + std::string(s) + "'");
  mpz_class digits;
  if (digits.set_str(mant, 10) != 0) throw ParseError("bad number '" + std::string(s) + "'");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(digits * scale) : mpq_class(digits, scale);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ZeroDivisionError("Scalar::rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Scalar::from_double: non-finite value");
  return Scalar(mpq_class(v));
}

Scalar Scalar::from_decimal(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Scalar::from_decimal: non-finite value");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
  bool neg = !text.empty() && text.front() == '-';
  mpq_class q = parse_unsigned_rational(neg ? text.substr(1) : text);
  return Scalar(neg ? mpq_class(-q) : q);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty scalar");
  Scalar out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected sign in '" + s + "'");
    }
    // Term ends at the next sign that is not part of an exponent.
    std::size_t end = pos;
    while (end < s.size()) {
      char c = s[end];
      if ((c == '+' || c == '-') && end > pos && s[end - 1] != 'e' && s[end - 1] != 'E') break;
      ++end;
    }
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw ParseError("dangling sign in '" + s + "'");
    bool imaginary = term.back() == 'i';
    if (imaginary) {
      term.remove_suffix(1);
      if (!term.empty() && term.back() == '*') term.remove_suffix(1);
    }
    mpq_class value = term.empty() ? mpq_class(1) : parse_unsigned_rational(term);
    if (neg) value = -value;
    if (imaginary)
      out += Scalar(0, value);
    else
      out += Scalar(value);
    pos = end;
  }
  return out;
}

bool Scalar::is_integer() const { return is_real() && re_.get_den() == 1; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDivisionError("inverse of zero scalar");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

std::complex<long double> Scalar::to_complex_ld() const {
  auto to_ld = [](const mpq_class& q) -> long double {
    if (sgn(q) == 0) return 0.0L;
    mpf_class f(q, 128);
    mp_exp_t exp10 = 0;
    std::string digits = f.get_str(exp10, 10, 24);
    bool neg = digits.front() == '-';
    if (neg) digits.erase(0, 1);
    std::string text = (neg ? "-0." : "0.") + digits + "e" + std::to_string(exp10);
    return std::strtold(text.c_str(), nullptr);
  };
  return {to_ld(re_), to_ld(im_)};
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = rational_str(re_);
  if (sgn(im_) != 0) {
    std::string im = rational_str(im_);
    if (!out.empty() && sgn(im_) > 0) out += "+";
    out += im + "*i";
  }
  return out;
}

std::size_t Scalar::hash() const {
  std::hash<std::string> h;
  return h(str());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ZeroDivisionError("scalar division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return mpq_class(0);
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

}  // namespace

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  if (s.is_zero()) return Scalar(0);
  // (u + v i)^2 = x + y i  =>  u^2 = (x + |s|)/2, v^2 = (|s| - x)/2.
  auto modulus = rational_sqrt(s.norm());
  if (!modulus) return std::nullopt;
  auto u = rational_sqrt((s.re() + *modulus) / 2);
  auto v = rational_sqrt((*modulus - s.re()) / 2);
  if (!u || !v) return std::nullopt;
  mpq_class vv = sgn(s.im()) < 0 ? mpq_class(-*v) : *v;
  Scalar root(*u, vv);
  if (root * root != s) return std::nullopt;
  return root;
}

Scalar round_gaussian(std::complex<long double> z) {
  auto to_mpz = [](long double x) {
    long double r = std::floor(x + 0.5L);
    mpz_class out;
    mpz_set_d(out.get_mpz_t(), static_cast<double>(r));
    // correct the last units when r exceeds double precision
    long double rem = r - static_cast<long double>(out.get_d());
    if (rem != 0) out += static_cast<long>(rem);
    return out;
  };
  return Scalar(mpq_class(to_mpz(z.real())), mpq_class(to_mpz(z.imag())));
}

Scalar pow(const Scalar& s, unsigned k) {
  Scalar out(1), base = s;
  while (k) {
    if (k & 1u) out *= base;
    base *= base;
    k >>= 1u;
  }
  return out;
}

mpz_class denominator_lcm(const Scalar& s) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), s.re().get_den_mpz_t(), s.im().get_den_mpz_t());
  return l;
}

}  // namespace heisenkep
