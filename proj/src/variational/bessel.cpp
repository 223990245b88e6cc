#include "heisenkep/variational/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heisenkep {

namespace {

using cld = std::complex<long double>;

cld series_j(long double nu, cld z) {
  const cld half = z / 2.0L;
  const cld q = -half * half;
  cld term = std::pow(half, cld(nu)) / std::tgamma(nu + 1);
  cld sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<long double>(k) * (nu + k));
    sum += term;
    if (std::abs(term) <= 1e-19L * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

std::complex<double> bessel_j(double nu, std::complex<double> z) {
  constexpr double pi = std::numbers::pi;
  if (z.imag() == 0 && z.real() > 0) return std::cyl_bessel_j(nu, z.real());
  if (z.imag() == 0 && z.real() < 0) return std::polar(1.0, pi * nu) * std::cyl_bessel_j(nu, -z.real());
  return std::complex<double>(series_j(nu, cld(z)));
}

std::complex<double> bessel_y(double nu, std::complex<double> z) {
  constexpr double pi = std::numbers::pi;
  if (z.imag() == 0 && z.real() > 0) return std::cyl_neumann(nu, z.real());
  if (z.imag() == 0 && z.real() < 0) {
    const double x = -z.real();
    return std::polar(1.0, -pi * nu) * std::cyl_neumann(nu, x) +
           std::complex<double>(0, 2 * std::cos(pi * nu)) * std::cyl_bessel_j(nu, x);
  }
  const long double lnu = nu;
  const cld jp = series_j(lnu, cld(z)), jm = series_j(-lnu, cld(z));
  const long double c = std::cos(std::numbers::pi_v<long double> * lnu);
  const long double s = std::sin(std::numbers::pi_v<long double> * lnu);
  return std::complex<double>((jp * c - jm) / s);
}

std::complex<double> bessel_argument(std::complex<double> a, double t) { return 0.5 * a * t * t; }

std::complex<double> bessel_closed_form(std::complex<double> a, std::complex<double> c1, std::complex<double> c2,
                                        double t) {
  if (!(t > 0)) throw std::domain_error("bessel_closed_form: t must be positive");
  if (a == 0.0) return c1 + c2 * t;
  const std::complex<double> sigma = bessel_argument(a, t);
  const std::complex<double> phase = std::exp(std::complex<double>(0, -0.5) * a * t * t);
  return std::sqrt(t) * phase * (c1 * bessel_j(0.25, sigma) + c2 * bessel_y(0.25, sigma));
}

}  // namespace heisenkep
