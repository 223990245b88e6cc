#include "heisenkep/exactalg/poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

namespace {
const Scalar kZero{};
}

Poly::Poly(Scalar c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Scalar c, int k) {
  if (c.is_zero()) return {};
  Poly p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, Scalar());
  p.c_.back() = std::move(c);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Poly::operator[](int k) const {
  if (k < 0 || k > degree()) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

const Scalar& Poly::leading() const {
  if (is_zero()) return kZero;
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  Scalar inv = leading().inverse();
  return *this * inv;
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::conj() const {
  std::vector<Scalar> d;
  d.reserve(c_.size());
  for (const auto& c : c_) d.push_back(c.conj());
  return Poly(std::move(d));
}

Poly Poly::shifted(const Scalar& s) const {
  // Horner in the shifted variable.
  Poly out;
  Poly lin{s, Scalar(1)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out *= lin;
    out += Poly(*it);
  }
  return out;
}

Poly Poly::shift_up(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly p;
  p.c_.assign(static_cast<std::size_t>(k), Scalar());
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

int Poly::low_order() const {
  int k = 0;
  while (k <= degree() && c_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return is_zero() ? 0 : k;
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::complex<double> Poly::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

std::complex<long double> Poly::eval_ld(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex_ld();
  return acc;
}

Poly Poly::cleared() const {
  mpz_class l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator_lcm(c).get_mpz_t());
  return *this * Scalar(l);
}

double Poly::norm_inf() const {
  double m = 0;
  for (const auto& c : c_) m = std::max(m, std::abs(c.to_complex()));
  return m;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    if (!first) os << (cs.front() == '-' ? " - " : " + ");
    if (!first && cs.front() == '-') cs.erase(0, 1);
    if (k == 0)
      os << cs;
    else {
      if (cs == "1")
        ;
      else if (cs == "-1")
        os << "-";
      else
        os << cs << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::size_t Poly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : c_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroDivisionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> r = a.coeffs();
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Scalar inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Scalar& top = r[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Scalar f = top * inv;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k - db)] = std::move(f);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: divisor does not divide dividend");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Scalar inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  Bezout bz = xgcd(a % m, m);
  if (bz.g.degree() != 0) throw ZeroDivisionError("inverse_mod: not a unit modulo m");
  return bz.s % m;
}

Poly pow(const Poly& p, unsigned k) {
  Poly out(1), base = p;
  while (k) {
    if (k & 1u) out *= base;
    base *= base;
    k >>= 1u;
  }
  return out;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = exact_div(f, a);
  Poly c = exact_div(df, a);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() < 1) return Poly(1);
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

}  // namespace heisenkep
