#include "heisenkep/exactalg/diffop.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace heisenkep {

namespace {

using OpVec = std::vector<RatFunc>;

// D ∘ (sum p_j D^j)
OpVec left_d(const OpVec& p) {
  OpVec out(p.size() + 1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    out[j] += p[j].derivative();
    out[j + 1] += p[j];
  }
  return out;
}

void axpy(OpVec& acc, const RatFunc& a, const OpVec& p) {
  if (a.is_zero()) return;
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!p[j].is_zero()) acc[j] += a * p[j];
}

OpVec compose_vec(const OpVec& a, const OpVec& b) {
  OpVec out;
  OpVec power = b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    axpy(out, a[i], power);
    if (i + 1 < a.size()) power = left_d(power);
  }
  return out;
}

void trim(OpVec& v) {
  while (v.size() > 1 && v.back().is_zero()) v.pop_back();
}

}  // namespace

DiffOperator::DiffOperator(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty() || c_.back().is_zero()) throw std::invalid_argument("DiffOperator: zero leading coefficient");
  if (!(c_.back() == RatFunc(1))) {
    RatFunc inv = c_.back().inverse();
    for (auto& c : c_) c *= inv;
  }
}

DiffOperator DiffOperator::first_order(const RatFunc& r) { return DiffOperator({-r, RatFunc(1)}); }

RatFunc DiffOperator::apply(const RatFunc& f) const {
  RatFunc acc, d = f;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero() && !d.is_zero()) acc += c_[k] * d;
    if (k + 1 < c_.size()) d = d.derivative();
  }
  return acc;
}

DiffOperator DiffOperator::exp_substitution(const RatFunc& g) const {
  // D^k (w e^s) = e^s (D + g)^k w
  OpVec shift{g, RatFunc(1)};
  OpVec power{RatFunc(1)};
  OpVec out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    axpy(out, c_[k], power);
    if (k + 1 < c_.size()) power = compose_vec(shift, power);
  }
  trim(out);
  return DiffOperator(std::move(out));
}

std::vector<Poly> DiffOperator::cleared() const {
  Poly l(1);
  for (const auto& c : c_) {
    const Poly& d = c.den();
    if (d.degree() > 0) l = l * exact_div(d, gcd(l, d));
  }
  std::vector<Poly> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.num() * exact_div(l, c.den()));
  // Scale to Z[i] coefficients with a primitive content-free leading term.
  mpz_class m = 1;
  for (const auto& p : out)
    for (const auto& s : p.coeffs()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), denominator_lcm(s).get_mpz_t());
  if (m != 1)
    for (auto& p : out) p *= Scalar(m);
  return out;
}

std::string DiffOperator::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = order(); k >= 0; --k) {
    const RatFunc& c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string d = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
    if (c == RatFunc(1) && k > 0)
      os << d;
    else
      os << "(" << c.str(var) << ")" << (d.empty() ? "" : "*" + d);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffOperator& op) { return os << op.str(); }

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  OpVec v = compose_vec(a.coeffs(), b.coeffs());
  trim(v);
  return DiffOperator(std::move(v));
}

RatFunc right_remainder(const DiffOperator& L, const RatFunc& r) {
  // L(exp ∫r) = exp(∫r) * sum a_k r_k with r_0 = 1, r_{k+1} = r_k' + r r_k.
  RatFunc acc, rk(1);
  for (int k = 0; k <= L.order(); ++k) {
    if (!L.coeff(k).is_zero()) acc += L.coeff(k) * rk;
    if (k < L.order()) rk = rk.derivative() + r * rk;
  }
  return acc;
}

DiffOperator right_quotient(const DiffOperator& L, const RatFunc& r) {
  if (L.order() < 1) throw std::invalid_argument("right_quotient: operator of order zero");
  OpVec rem = L.coeffs();
  OpVec q(static_cast<std::size_t>(L.order()));
  const OpVec divisor{-r, RatFunc(1)};
  for (int k = L.order(); k >= 1; --k) {
    RatFunc b = rem[static_cast<std::size_t>(k)];
    if (b.is_zero()) continue;
    q[static_cast<std::size_t>(k - 1)] = b;
    OpVec mono(static_cast<std::size_t>(k), RatFunc());
    mono.back() = b;
    OpVec sub = compose_vec(mono, divisor);
    for (std::size_t j = 0; j < sub.size(); ++j) rem[j] -= sub[j];
  }
  return DiffOperator(std::move(q));
}

}  // namespace heisenkep
