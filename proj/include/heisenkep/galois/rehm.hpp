#pragma once

#include <optional>

#include "heisenkep/exactalg/diffop.hpp"
#include "heisenkep/galois/verdict.hpp"

namespace heisenkep {

/// w'' - (alpha^2 t^2 + 2 alpha beta t + gamma) w = 0, stored through alpha^2 and
/// alpha beta so that no square root is needed.
struct ParabolicParams {
  Scalar alpha_sq;
  Scalar alpha_beta;
  Scalar gamma;

  static ParabolicParams from_alpha(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);
  /// Square root of alpha_sq when it lies in Q(i).
  std::optional<Scalar> alpha() const;
  std::optional<Scalar> beta() const;
  /// ((beta^2 - gamma) / alpha)^2; throws std::invalid_argument for alpha = 0.
  Scalar ratio_squared() const;
  Json to_json() const;
};

/// NotSolvable unless (beta^2 - gamma)/alpha is an odd integer.  The test squares the
/// ratio, so it does not depend on the sign of alpha.  Throws std::invalid_argument for alpha = 0.
GaloisVerdict rehm_classify(const ParabolicParams& p);

/// Reads off alpha^2 = c2, 2 alpha beta = c1, gamma = c0 from w'' - (c2 t^2 + c1 t + c0) w = 0.
/// Throws std::invalid_argument for other shapes or c2 = 0.
ParabolicParams parabolic_from_ode(const DiffOperator& ode);

}  // namespace heisenkep
