#pragma once

#include "heisenkep/exactalg/diffop.hpp"
#include "heisenkep/galois/local.hpp"
#include "heisenkep/galois/verdict.hpp"

namespace heisenkep {

/// Outcome of one of the three cases for a third-order operator.
struct CaseReport {
  std::string name;
  bool excluded = false;
  Json evidence = Json::object();
  Json to_json() const;
};

/// Solutions v = P(t) prod (t - t_i)^{alpha_i} of symL with each alpha_i a half-integer
/// exponent at t_i.  Such a v behaves like t^(deg P + sum alpha_i) at infinity, so some
/// exponent alpha_inf must satisfy -alpha_inf - sum alpha_i in Z_{>=0}.  Excluded when no
/// admissible choice of the alpha_i meets that condition.  Data that is irregular,
/// non-uniform over a factor, or irrational at infinity leaves the case open.
CaseReport case2_obstruction(const DiffOperator& L, const DiffOperator& symL, const SingularityData& sing);

/// Three-case test for an operator of order 3 with unimodular Galois group.
/// NotSolvable when no rational logarithmic-derivative solution exists (complete search),
/// the operator is not Fuchsian, and case 2 is excluded on its third symmetric power.
GaloisVerdict liouvillian_verdict(const DiffOperator& L, const std::string& var = "tau");

/// v''' - (4/3) tau^2 v' + (4/27) tau (4 tau^2 - 63) v, derived from the two-body
/// variational equations at mu = -1.
DiffOperator o3r_operator();
GaloisVerdict liouvillian_verdict_o3r();

}  // namespace heisenkep
