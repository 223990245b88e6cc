#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heisenkep/exactalg/diffop.hpp"
#include "heisenkep/exactalg/serialize.hpp"

namespace heisenkep {

/// Solution y = exp(s) prod f_i^{e_i} p with y'/y = r.
struct ExpSolution {
  RatFunc r;
  Poly exponent;                               // s, no constant term
  std::vector<std::pair<Poly, Scalar>> factors;  // (f_i, e_i)
  Poly polynomial;                             // p
  /// right_remainder(L, r); zero by construction, kept as the certificate.
  RatFunc remainder;
  Json to_json(const std::string& var = "t") const;
};

/// Search for right factors D - r, r in Q(i)(t).  Polynomial parts of r come from the
/// Newton polygon at infinity (integer slopes only), residues from the local exponents
/// at the finite singular points (one value per factor of the singular polynomial and
/// per class modulo Z).  complete is false whenever a branch fell outside that class:
/// characteristic roots or exponents outside Q(i), irregular finite points, or
/// exponents varying over the roots of one factor.
struct ExpSearch {
  std::vector<ExpSolution> solutions;
  std::vector<Poly> exponential_parts;  // candidate polynomial parts of r
  bool complete = true;
  std::vector<std::string> notes;
  Json to_json(const std::string& var = "t") const;
};

ExpSearch exp_solutions(const DiffOperator& L);

/// Basis of the polynomial solutions; degrees bounded by the non-negative integer roots
/// of the top row of the theta form.
std::vector<Poly> polynomial_solutions(const DiffOperator& L);

/// Antiderivative without constant term.
Poly integrate(const Poly& p);

}  // namespace heisenkep
