#include "heisenkep/galois/rehm.hpp"

#include <stdexcept>

namespace heisenkep {

ParabolicParams ParabolicParams::from_alpha(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  return {alpha * alpha, alpha * beta, gamma};
}

std::optional<Scalar> ParabolicParams::alpha() const { return exact_sqrt(alpha_sq); }

std::optional<Scalar> ParabolicParams::beta() const {
  auto a = alpha();
  if (!a || a->is_zero()) return std::nullopt;
  return alpha_beta / *a;
}

Scalar ParabolicParams::ratio_squared() const {
  if (alpha_sq.is_zero()) throw std::invalid_argument("parabolic parameters need alpha != 0");
  const Scalar beta_sq = alpha_beta * alpha_beta / alpha_sq;
  const Scalar d = beta_sq - gamma;
  return d * d / alpha_sq;
}

Json ParabolicParams::to_json() const {
  Json j{{"alpha_sq", heisenkep::to_json(alpha_sq)},
         {"alpha_beta", heisenkep::to_json(alpha_beta)},
         {"gamma", heisenkep::to_json(gamma)}};
  if (auto a = alpha()) j["alpha"] = heisenkep::to_json(*a);
  if (auto b = beta()) j["beta"] = heisenkep::to_json(*b);
  return j;
}

GaloisVerdict rehm_classify(const ParabolicParams& p) {
  const Scalar r2 = p.ratio_squared();
  Json ev{{"params", p.to_json()}, {"ratio_squared", to_json(r2)}};
  bool odd = false;
  if (auto r = exact_sqrt(r2)) {
    ev["ratio"] = to_json(*r);
    odd = r->is_integer() && mpz_class(r->re().get_num()) % 2 != 0;
  }
  ev["ratio_odd_integer"] = odd;
  if (odd) return GaloisVerdict::inconclusive("rehm", ev);
  ev["group"] = "SL(2,C)";
  return GaloisVerdict::not_solvable("rehm", ev);
}

ParabolicParams parabolic_from_ode(const DiffOperator& ode) {
  if (ode.order() != 2) throw std::invalid_argument("parabolic form needs a second-order equation");
  if (!ode.coeff(1).is_zero()) throw std::invalid_argument("parabolic form needs a vanishing first-derivative term");
  const RatFunc& a0 = ode.coeff(0);
  if (!a0.is_polynomial() || a0.num().degree() > 2)
    throw std::invalid_argument("parabolic form needs a quadratic polynomial coefficient");
  const Poly q = -a0.num();
  if (q[2].is_zero()) throw std::invalid_argument("parabolic form needs alpha != 0");
  return {q[2], q[1] / Scalar(2), q[0]};
}

}  // namespace heisenkep
