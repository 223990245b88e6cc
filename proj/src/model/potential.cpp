#include "heisenkep/model/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

BiPoly::BiPoly(Scalar c) {
  if (!c.is_zero()) t_.emplace(std::make_pair(0, 0), std::move(c));
}

BiPoly::BiPoly(Terms terms) : t_(std::move(terms)) { trim(); }

BiPoly BiPoly::monomial(Scalar c, int i, int j) {
  BiPoly p;
  if (!c.is_zero()) p.t_.emplace(std::make_pair(i, j), std::move(c));
  return p;
}

void BiPoly::trim() {
  for (auto it = t_.begin(); it != t_.end();) it = it->second.is_zero() ? t_.erase(it) : std::next(it);
}

bool BiPoly::depends_on_rho() const {
  for (const auto& [k, c] : t_)
    if (k.second > 0) return true;
  return false;
}

BiPoly BiPoly::d_z() const {
  Terms out;
  for (const auto& [k, c] : t_)
    if (k.first > 0) out[{k.first - 1, k.second}] += c * Scalar(k.first);
  return BiPoly(std::move(out));
}

BiPoly BiPoly::d_rho() const {
  Terms out;
  for (const auto& [k, c] : t_)
    if (k.second > 0) out[{k.first, k.second - 1}] += c * Scalar(k.second);
  return BiPoly(std::move(out));
}

double BiPoly::operator()(double z, double r) const {
  double acc = 0;
  for (const auto& [k, c] : t_) acc += c.re().get_d() * std::pow(z, k.first) * std::pow(r, k.second);
  return acc;
}

Scalar BiPoly::operator()(const Scalar& z, const Scalar& r) const {
  Scalar acc;
  for (const auto& [k, c] : t_)
    acc += c * pow(z, static_cast<unsigned>(k.first)) * pow(r, static_cast<unsigned>(k.second));
  return acc;
}

Poly BiPoly::restrict(const Scalar& k) const {
  Poly out;
  for (const auto& [e, c] : t_) out += Poly::monomial(c * pow(k, static_cast<unsigned>(e.second)), e.first + e.second);
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly::Terms t = a.t_;
  for (const auto& [k, c] : b.t_) t[k] += c;
  return BiPoly(std::move(t));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly::Terms t = a.t_;
  for (const auto& [k, c] : b.t_) t[k] -= c;
  return BiPoly(std::move(t));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly::Terms t;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) t[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  return BiPoly(std::move(t));
}

double PotentialSpec::Quotient::operator()(double z, double r) const {
  double d = den(z, r);
  if (d == 0) throw SingularEvaluationError("potential evaluated at a pole");
  return num(z, r) / d;
}

Scalar PotentialSpec::Quotient::operator()(const Scalar& z, const Scalar& r) const {
  Scalar d = den(z, r);
  if (d.is_zero()) throw SingularEvaluationError("potential evaluated at a pole");
  return num(z, r) / d;
}

PotentialSpec::Quotient PotentialSpec::Quotient::d_z() const {
  if (den.d_z().is_zero()) return {num.d_z(), den};
  return {num.d_z() * den - num * den.d_z(), den * den};
}

PotentialSpec::Quotient PotentialSpec::Quotient::d_rho() const {
  if (den.d_rho().is_zero()) return {num.d_rho(), den};
  return {num.d_rho() * den - num * den.d_rho(), den * den};
}

PotentialSpec::PotentialSpec(BiPoly num, BiPoly den) {
  if (den.is_zero()) throw std::invalid_argument("potential with zero denominator");
  for (const BiPoly* p : {&num, &den})
    for (const auto& [k, c] : p->terms())
      if (!c.is_real()) throw std::invalid_argument("potential coefficients must be real");
  w_ = {std::move(num), std::move(den)};
  wz_ = w_.d_z();
  wr_ = w_.d_rho();
  wzz_ = wz_.d_z();
  wzr_ = wz_.d_rho();
  wrr_ = wr_.d_rho();
}

PotentialSpec PotentialSpec::kepler(const Scalar& kappa) {
  return PotentialSpec(BiPoly(-kappa), BiPoly::monomial(Scalar(1), 0, 1));
}

namespace {

BiPoly bipoly_from_json(const Json& j) {
  BiPoly::Terms t;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3) throw ParseError("potential term must be [i, j, coefficient]");
    t[{term[0].get<int>(), term[1].get<int>()}] += scalar_from_json(term[2]);
  }
  return BiPoly(std::move(t));
}

Json bipoly_to_json(const BiPoly& p) {
  Json a = Json::array();
  for (const auto& [k, c] : p.terms()) a.push_back(Json::array({k.first, k.second, c.str()}));
  return a;
}

}  // namespace

PotentialSpec PotentialSpec::from_json(const Json& j, const Scalar& kappa) {
  if (j.is_string()) {
    if (j.get<std::string>() == "kepler") return kepler(kappa);
    throw ParseError("unknown potential name: " + j.get<std::string>());
  }
  if (!j.is_object() || !j.contains("num")) throw ParseError("potential must be \"kepler\" or {num, den}");
  BiPoly den = j.contains("den") ? bipoly_from_json(j.at("den")) : BiPoly(Scalar(1));
  return PotentialSpec(bipoly_from_json(j.at("num")), den);
}

Json PotentialSpec::to_json() const { return Json{{"num", bipoly_to_json(w_.num)}, {"den", bipoly_to_json(w_.den)}}; }

RatFunc PotentialSpec::on_axis(int sigma) const {
  Scalar k(4 * sigma);
  return RatFunc(w_.num.restrict(k), w_.den.restrict(k));
}

PotentialDerivatives potential_derivatives(const PotentialSpec& w, double x, double y, double z) {
  const double r2 = x * x + y * y;
  const double s = r2 * r2 + 16 * z * z;
  const double r = std::sqrt(s);
  const bool uses_rho = w.depends_on_rho();
  if (uses_rho && r == 0) throw SingularEvaluationError("collision: rho = 0");

  PotentialDerivatives out;
  out.value = w.w()(z, r);
  const double wz = w.w_z()(z, r), wzz = w.w_zz()(z, r);
  out.grad = Eigen::Vector3d(0, 0, wz);
  out.hess = Eigen::Matrix3d::Zero();
  out.hess(2, 2) = wzz;
  if (!uses_rho) return out;

  const double wr = w.w_rho()(z, r), wzr = w.w_zrho()(z, r), wrr = w.w_rhorho()(z, r);
  Eigen::Vector3d ds(4 * r2 * x, 4 * r2 * y, 32 * z);
  Eigen::Matrix3d dds;
  dds << 4 * r2 + 8 * x * x, 8 * x * y, 0, 8 * x * y, 4 * r2 + 8 * y * y, 0, 0, 0, 32;
  Eigen::Vector3d dr = ds / (2 * r);
  Eigen::Matrix3d ddr = dds / (2 * r) - ds * ds.transpose() / (4 * r * s);
  Eigen::Vector3d ez(0, 0, 1);

  out.grad += wr * dr;
  out.hess += wzr * (ez * dr.transpose() + dr * ez.transpose()) + wrr * dr * dr.transpose() + wr * ddr;
  return out;
}

double potential_value(const PotentialSpec& w, double x, double y, double z) {
  const double r2 = x * x + y * y;
  const double r = std::sqrt(r2 * r2 + 16 * z * z);
  if (w.depends_on_rho() && r == 0) throw SingularEvaluationError("collision: rho = 0");
  return w.w()(z, r);
}

}  // namespace heisenkep
