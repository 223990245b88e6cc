#pragma once

#include <optional>
#include <vector>

#include "heisenkep/variational/linear_system.hpp"

namespace heisenkep {

/// System for W = y ^ z when y' = A y and z' = A z, i.e. W' = A W + W A^T on the
/// components w_ij (i < j) in lexicographic order; for n = 4 this is
/// (z01, z02, z03, z12, z13, z23).  Throws DimensionError unless A is square.
ExactMatrix exterior_square(const ExactMatrix& A);

/// Y = exp(s) direction with s a polynomial without constant term.
struct SystemExpSolution {
  Poly exponent;
  /// Scaled so that the last nonzero entry has leading numerator coefficient 1.
  ExactVector direction;
  bool constant_direction = false;
  Json to_json(const std::string& var = "t") const;
};

/// Exponential solutions of y' = B y.  The system is split along the connected components
/// of its coupling graph; each component is reduced to scalar equations through cyclic
/// vectors (every cyclic coordinate, or one fixed combination when none is cyclic) and
/// the results of exp_solutions are lifted back.
std::vector<SystemExpSolution> system_exp_solutions(const LinearSystem& B);

/// z03 z12 - z02 z13 + z23 z01 == 0 for Y = (z01, z02, z03, z12, z13, z23).
bool plucker_check(const ExactVector& Y);
/// M_Psi whose kernel is the plane represented by a decomposable Y.
ExactMatrix plucker_operator(const ExactVector& Y);

struct Factorization {
  ExactMatrix Q;
  /// Number of columns contributed by each input, then by the completion.
  std::vector<int> kernel_sizes;
  int completion_columns = 0;
  /// Only meaningful when a system was supplied.
  bool block_diagonal = false;
  bool block_triangular = false;
  std::optional<LinearSystem> transformed;

  bool partial() const { return completion_columns > 0 || (transformed && !block_diagonal); }
  Json to_json(const std::string& var = "t") const;
};

/// Kernels of M_Psi for each Y (trailing echelon form) collected as columns of Q, completed
/// by standard basis vectors when they do not span.  With a system, Q^-1 (A Q - Q') is
/// formed and its block structure recorded.  Throws std::invalid_argument when some Y
/// fails the Plucker condition, SingularMatrixError if no invertible Q can be assembled.
Factorization factorization_basis(const std::vector<ExactVector>& Y, const LinearSystem* sys = nullptr);

}  // namespace heisenkep
