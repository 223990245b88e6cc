#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heisenkep/exactalg/ratfunc.hpp"

namespace heisenkep {

/// Linear differential operator L = D^n + a_{n-1} D^{n-1} + ... + a_0 over Q(i)(t),
/// stored in monic normal form.  Coefficients are indexed by the power of D.
class DiffOperator {
 public:
  DiffOperator() : c_{RatFunc(1)} {}
  /// Divides through by the top coefficient; throws std::invalid_argument when it is zero
  /// or the list is empty.
  explicit DiffOperator(std::vector<RatFunc> coeffs);

  /// D - r
  static DiffOperator first_order(const RatFunc& r);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const RatFunc& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<RatFunc>& coeffs() const { return c_; }

  /// L(f)
  RatFunc apply(const RatFunc& f) const;
  /// Operator satisfied by w when y = w * exp(s) and L y = 0, given g = s'.
  DiffOperator exp_substitution(const RatFunc& g) const;

  /// Coefficients multiplied by the lcm of their denominators; entry k multiplies D^k.
  std::vector<Poly> cleared() const;
  /// Leading coefficient of cleared(), i.e. the polynomial whose roots are the finite
  /// singular points.
  Poly leading_polynomial() const { return cleared().back(); }

  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;

 private:
  std::vector<RatFunc> c_;
};

/// Scalar ODE L y = 0 in monic form.
using ScalarODE = DiffOperator;

std::ostream& operator<<(std::ostream& os, const DiffOperator& op);

/// Composition a ∘ b in the Weyl algebra over Q(i)(t), monic since both factors are.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

/// Remainder of right division of L by D - r; zero iff exp(∫r) solves L y = 0.
RatFunc right_remainder(const DiffOperator& L, const RatFunc& r);

/// Quotient Q with L = Q ∘ (D - r) + right_remainder(L, r).
DiffOperator right_quotient(const DiffOperator& L, const RatFunc& r);

}  // namespace heisenkep
