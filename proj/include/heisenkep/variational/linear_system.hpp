#pragma once

#include <string>

#include "heisenkep/exactalg/diffop.hpp"
#include "heisenkep/exactalg/matrix.hpp"
#include "heisenkep/exactalg/serialize.hpp"

namespace heisenkep {

/// y' = A(t) y over Q(i)(t).
struct LinearSystem {
  ExactMatrix A;
  std::string var = "t";

  LinearSystem() = default;
  /// Throws DimensionError unless A is square and nonempty.
  explicit LinearSystem(ExactMatrix a, std::string v = "t");

  Eigen::Index dim() const { return A.rows(); }
  Eigen::MatrixXcd at(std::complex<double> t) const { return evaluate(A, t); }
  /// Diagonal block starting at (k, k).
  LinearSystem block(Eigen::Index k, Eigen::Index size) const;
  /// y' - A y for an exact candidate solution.
  ExactVector residual(const ExactVector& y) const;

  /// {dim, var, A}
  Json to_json() const;
  static LinearSystem from_json(const Json& j);

  friend bool operator==(const LinearSystem& a, const LinearSystem& b) {
    return a.A.rows() == b.A.rows() && a.A.cols() == b.A.cols() && a.A == b.A;
  }
};

LinearSystem block_diagonal(const std::vector<LinearSystem>& blocks);

/// Change of dependent variable y = Q(t) y~, with the inverse cached.
class GaugeMatrix {
 public:
  /// Throws SingularMatrixError when det Q vanishes identically.
  explicit GaugeMatrix(ExactMatrix q);

  const ExactMatrix& Q() const { return q_; }
  const ExactMatrix& inverse() const { return inv_; }
  RatFunc det() const { return det_; }

 private:
  ExactMatrix q_, inv_;
  RatFunc det_;
};

/// Q^-1 (A Q - Q')
LinearSystem gauge_transform(const LinearSystem& sys, const GaugeMatrix& q);

class NotCyclicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rows r_0 .. r_{n-1} with y_k^(j) = r_j y along solutions: r_0 = e_k, r_{j+1} = r_j' + r_j A.
ExactMatrix cyclic_basis(const LinearSystem& sys, Eigen::Index component);

/// Scalar equation satisfied by component k of every solution.  Throws NotCyclicError
/// when the derivatives of y_k do not span.
ScalarODE cyclic_to_scalar(const LinearSystem& sys, Eigen::Index component);

/// First-order system for (y, y', ..., y^(n-1)).
LinearSystem companion_system(const ScalarODE& op, const std::string& var = "t");

/// Equation for w when y = w exp(s), s a polynomial.
ScalarODE exp_substitution(const ScalarODE& op, const Poly& s);

}  // namespace heisenkep
