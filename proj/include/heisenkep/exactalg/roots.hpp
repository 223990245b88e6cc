#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "heisenkep/exactalg/poly.hpp"

namespace heisenkep {

/// All deg(p) complex roots, repeated by multiplicity.  Roots come from the companion
/// matrices of the square-free factors, polished by Newton's method in long double.
/// Throws std::invalid_argument for the zero polynomial and std::runtime_error when a
/// root fails |p(r)| <= tol * sum |a_k| |r|^k.
std::vector<std::complex<double>> poly_roots_numeric(const Poly& p, double tol = 1e-10);

/// Scaled residual |p(r)| / sum |a_k| |r|^k.
double scaled_residual(const Poly& p, std::complex<long double> r);

struct ExactRoot {
  Scalar value;
  int multiplicity;
};

/// Roots of p lying in Q(i), each verified by exact evaluation.
std::vector<ExactRoot> gaussian_rational_roots(const Poly& p);

}  // namespace heisenkep
