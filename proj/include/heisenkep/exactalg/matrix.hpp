#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "heisenkep/exactalg/ratfunc.hpp"

namespace heisenkep {

template <class T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using DenseVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// Matrix over Q(i)(t).
using ExactMatrix = DenseMatrix<RatFunc>;
using ExactVector = DenseVector<RatFunc>;
/// Matrix over Q(i).
using ScalarMatrix = DenseMatrix<Scalar>;
using ScalarVector = DenseVector<Scalar>;

ExactMatrix identity_matrix(Eigen::Index n);
ExactMatrix to_exact(const ScalarMatrix& m);

bool is_zero(const ExactMatrix& m);
/// Entry-wise d/dt.
ExactMatrix derivative(const ExactMatrix& m);
/// Entry-wise complex conjugation of the coefficients (t treated as real).
ExactMatrix conj(const ExactMatrix& m);
Eigen::MatrixXcd evaluate(const ExactMatrix& m, std::complex<double> t);

/// Basis of the right kernel over Q(i)(t).  One vector per non-pivot column j,
/// with entry j equal to 1 and the other non-pivot entries zero; empty iff injective.
std::vector<ExactVector> nullspace(const ExactMatrix& m);
std::vector<ScalarVector> nullspace(const ScalarMatrix& m);
Eigen::Index rank(const ExactMatrix& m);

RatFunc determinant(const ExactMatrix& m);
/// Exact inverse; throws SingularMatrixError when det = 0 and DimensionError when not square.
ExactMatrix matrix_inverse(const ExactMatrix& m);

/// Reduced basis of span(vectors): pivots taken on the trailing coordinates, each
/// vector scaled so its last nonzero entry is 1, ordered by that pivot descending.
std::vector<ExactVector> trailing_echelon_basis(const std::vector<ExactVector>& vectors);

}  // namespace heisenkep
