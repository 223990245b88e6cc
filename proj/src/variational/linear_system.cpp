#include "heisenkep/variational/linear_system.hpp"

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

LinearSystem::LinearSystem(ExactMatrix a, std::string v) : A(std::move(a)), var(std::move(v)) {
  if (A.rows() == 0 || A.rows() != A.cols()) throw DimensionError("linear system matrix must be square and nonempty");
}

LinearSystem LinearSystem::block(Eigen::Index k, Eigen::Index size) const {
  if (k < 0 || size < 1 || k + size > dim()) throw DimensionError("block outside the system");
  return LinearSystem(A.block(k, k, size, size), var);
}

ExactVector LinearSystem::residual(const ExactVector& y) const {
  if (y.size() != dim()) throw DimensionError("residual: vector has the wrong size");
  ExactMatrix ym = y;
  return derivative(ym) - A * y;
}

Json LinearSystem::to_json() const {
  return Json{{"dim", dim()}, {"var", var}, {"A", heisenkep::to_json(A)}};
}

LinearSystem LinearSystem::from_json(const Json& j) {
  LinearSystem s(matrix_from_json(j.at("A")), j.value("var", std::string("t")));
  if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != s.dim()) throw DimensionError("dim does not match A");
  return s;
}

LinearSystem block_diagonal(const std::vector<LinearSystem>& blocks) {
  if (blocks.empty()) throw DimensionError("block_diagonal: no blocks");
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.dim();
  ExactMatrix a = ExactMatrix::Constant(n, n, RatFunc(0));
  Eigen::Index k = 0;
  for (const auto& b : blocks) {
    a.block(k, k, b.dim(), b.dim()) = b.A;
    k += b.dim();
  }
  return LinearSystem(a, blocks.front().var);
}

GaugeMatrix::GaugeMatrix(ExactMatrix q) : q_(std::move(q)) {
  if (q_.rows() == 0 || q_.rows() != q_.cols()) throw DimensionError("gauge matrix must be square and nonempty");
  det_ = determinant(q_);
  if (det_.is_zero()) throw SingularMatrixError("gauge matrix is identically singular");
  inv_ = matrix_inverse(q_);
}

LinearSystem gauge_transform(const LinearSystem& sys, const GaugeMatrix& q) {
  if (q.Q().rows() != sys.dim()) throw DimensionError("gauge matrix size does not match the system");
  ExactMatrix aq = sys.A * q.Q() - derivative(q.Q());
  return LinearSystem(q.inverse() * aq, sys.var);
}

ExactMatrix cyclic_basis(const LinearSystem& sys, Eigen::Index component) {
  const Eigen::Index n = sys.dim();
  if (component < 0 || component >= n) throw DimensionError("component index out of range");
  ExactMatrix r = ExactMatrix::Constant(n, n, RatFunc(0));
  r(0, component) = RatFunc(1);
  for (Eigen::Index j = 1; j < n; ++j) {
    ExactMatrix prev = r.row(j - 1);
    r.row(j) = derivative(prev) + prev * sys.A;
  }
  return r;
}

ScalarODE cyclic_to_scalar(const LinearSystem& sys, Eigen::Index component) {
  const Eigen::Index n = sys.dim();
  ExactMatrix r = cyclic_basis(sys, component);
  if (determinant(r).is_zero()) throw NotCyclicError("component " + std::to_string(component) + " is not cyclic");
  ExactMatrix last = r.row(n - 1);
  ExactMatrix next = derivative(last) + last * sys.A;
  // y^(n) = next y = c R y = sum c_j y^(j)
  ExactMatrix c = next * matrix_inverse(r);
  std::vector<RatFunc> coeffs(static_cast<std::size_t>(n + 1));
  for (Eigen::Index j = 0; j < n; ++j) coeffs[static_cast<std::size_t>(j)] = -c(0, j);
  coeffs.back() = RatFunc(1);
  return ScalarODE(std::move(coeffs));
}

LinearSystem companion_system(const ScalarODE& op, const std::string& var) {
  const int n = op.order();
  if (n < 1) throw DimensionError("companion_system: order must be at least 1");
  ExactMatrix a = ExactMatrix::Constant(n, n, RatFunc(0));
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = RatFunc(1);
  for (int j = 0; j < n; ++j) a(n - 1, j) = -op.coeff(j);
  return LinearSystem(a, var);
}

ScalarODE exp_substitution(const ScalarODE& op, const Poly& s) { return op.exp_substitution(RatFunc(s.derivative())); }

}  // namespace heisenkep
