#pragma once

#include <complex>

namespace heisenkep {

/// J_nu and Y_nu on the principal branch for non-integer nu.  Positive and negative real
/// arguments go through the standard library; other complex arguments use the power
/// series, accurate for |z| up to about 20.
std::complex<double> bessel_j(double nu, std::complex<double> z);
std::complex<double> bessel_y(double nu, std::complex<double> z);

/// Bessel argument a t^2 / 2.
std::complex<double> bessel_argument(std::complex<double> a, double t);

/// General solution of y'' + 2iat y' + iay = 0:
///   sqrt(t) exp(-iat^2/2) [C1 J_{1/4}(a t^2/2) + C2 Y_{1/4}(a t^2/2)].
/// For a = 0 the equation is y'' = 0 and the result is C1 + C2 t.
/// Throws std::domain_error for t <= 0.
std::complex<double> bessel_closed_form(std::complex<double> a, std::complex<double> c1, std::complex<double> c2,
                                        double t);

}  // namespace heisenkep
