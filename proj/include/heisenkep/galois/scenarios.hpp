#pragma once

#include "heisenkep/galois/verdict.hpp"
#include "heisenkep/model/system.hpp"

namespace heisenkep {

/// One body along the axis solution z(0) = c: the (q1, h1) block reduces to
/// w'' + a^2 t^2 w = 0 and Rehm's criterion applies.  Inconclusive when a = 0.
GaloisVerdict one_body_verdict(const SystemSpec& spec, const Scalar& c);

/// Two bodies with mass parameter mu: Rehm on the reduced parabolic equation for
/// mu != -1, the three-case test on the third-order equation for mu = -1.
GaloisVerdict two_body_verdict(const Scalar& mu);

}  // namespace heisenkep
