#include "heisenkep/exactalg/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

ExactMatrix identity_matrix(Eigen::Index n) {
  ExactMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = RatFunc(i == j ? 1 : 0);
  return m;
}

ExactMatrix to_exact(const ScalarMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = RatFunc(m(i, j));
  return out;
}

bool is_zero(const ExactMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

ExactMatrix derivative(const ExactMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).derivative();
  return out;
}

ExactMatrix conj(const ExactMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conj();
  return out;
}

Eigen::MatrixXcd evaluate(const ExactMatrix& m, std::complex<double> t) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j)(t);
  return out;
}

namespace {

using PolyRows = std::vector<std::vector<Poly>>;

// Clears each row's denominators; row scaling leaves the kernel unchanged.
PolyRows to_poly_rows(const ExactMatrix& m) {
  PolyRows rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Poly l(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).den();
      if (d.degree() > 0) l = l * exact_div(d, gcd(l, d));
    }
    auto& row = rows[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const RatFunc& e = m(i, j);
      row.push_back(e.num() * exact_div(l, e.den()));
    }
  }
  return rows;
}

struct Echelon {
  PolyRows rows;
  std::vector<std::size_t> pivots;  // pivot column of row k
};

// Fraction-free (Bareiss) row echelon form; every division is exact.
Echelon bareiss_echelon(PolyRows rows, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  Poly prev(1);
  const std::size_t nrows = rows.size();
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t best = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (rows[i][c].is_zero()) continue;
      if (best == nrows || rows[i][c].degree() < rows[best][c].degree()) best = i;
    }
    if (best == nrows) continue;
    std::swap(rows[r], rows[best]);
    const Poly pivot = rows[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Poly lead = rows[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Poly v = pivot * rows[i][j];
        if (!lead.is_zero()) v -= lead * rows[r][j];
        rows[i][j] = prev.degree() == 0 && prev.leading().is_one() ? std::move(v) : exact_div(v, prev);
      }
      rows[i][c] = Poly();
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  const auto cols = static_cast<std::size_t>(m.cols());
  Echelon e = bareiss_echelon(to_poly_rows(m), cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ExactVector x(m.cols());
    for (std::size_t j = 0; j < cols; ++j) x(static_cast<Eigen::Index>(j)) = RatFunc(j == f ? 1 : 0);
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      std::size_t pc = e.pivots[k];
      RatFunc acc;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        const RatFunc& xj = x(static_cast<Eigen::Index>(j));
        if (row[j].is_zero() || xj.is_zero()) continue;
        acc += RatFunc(row[j]) * xj;
      }
      x(static_cast<Eigen::Index>(pc)) = -acc / RatFunc(row[pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<ScalarVector> nullspace(const ScalarMatrix& m) {
  std::vector<ScalarVector> out;
  for (const auto& v : nullspace(to_exact(m))) {
    ScalarVector s(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) s(i) = v(i).constant();
    out.push_back(std::move(s));
  }
  return out;
}

Eigen::Index rank(const ExactMatrix& m) {
  Echelon e = bareiss_echelon(to_poly_rows(m), static_cast<std::size_t>(m.cols()));
  return static_cast<Eigen::Index>(e.pivots.size());
}

RatFunc determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  ExactMatrix a = m;
  const Eigen::Index n = a.rows();
  RatFunc det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return RatFunc();
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    RatFunc inv = a(c, c).inverse();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      RatFunc f = a(i, c) * inv;
      for (Eigen::Index j = c + 1; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
      a(i, c) = RatFunc();
    }
  }
  return det;
}

ExactMatrix matrix_inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = identity_matrix(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw SingularMatrixError("matrix_inverse: matrix is singular");
    if (p != c) {
      a.row(p).swap(a.row(c));
      inv.row(p).swap(inv.row(c));
    }
    RatFunc piv_inv = a(c, c).inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) *= piv_inv;
      if (!inv(c, j).is_zero()) inv(c, j) *= piv_inv;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      RatFunc f = a(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<ExactVector> trailing_echelon_basis(const std::vector<ExactVector>& vectors) {
  if (vectors.empty()) return {};
  const Eigen::Index n = vectors.front().size();
  // Reverse the coordinates so ordinary echelon pivots land on trailing entries.
  ExactMatrix rows(static_cast<Eigen::Index>(vectors.size()), n);
  for (std::size_t k = 0; k < vectors.size(); ++k)
    for (Eigen::Index j = 0; j < n; ++j) rows(static_cast<Eigen::Index>(k), j) = vectors[k](n - 1 - j);

  std::vector<ExactVector> out;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < rows.rows(); ++c) {
    Eigen::Index p = r;
    while (p < rows.rows() && rows(p, c).is_zero()) ++p;
    if (p == rows.rows()) continue;
    rows.row(p).swap(rows.row(r));
    RatFunc inv = rows(r, c).inverse();
    for (Eigen::Index j = 0; j < n; ++j) rows(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      if (i == r || rows(i, c).is_zero()) continue;
      RatFunc f = rows(i, c);
      for (Eigen::Index j = 0; j < n; ++j) rows(i, j) -= f * rows(r, j);
    }
    ++r;
  }
  for (Eigen::Index k = 0; k < r; ++k) {
    ExactVector v(n);
    for (Eigen::Index j = 0; j < n; ++j) v(n - 1 - j) = rows(k, j);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace heisenkep
