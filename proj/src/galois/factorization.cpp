#include "heisenkep/galois/factorization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "heisenkep/exactalg/errors.hpp"
#include "heisenkep/galois/expsol.hpp"

namespace heisenkep {

namespace {

struct PairIndex {
  int n;
  std::map<std::pair<int, int>, int> idx;
  explicit PairIndex(int n_) : n(n_) {
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) idx[{i, j}] = c++;
  }
  int size() const { return static_cast<int>(idx.size()); }
};

}  // namespace

ExactMatrix exterior_square(const ExactMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionError("exterior_square needs a square matrix");
  const int n = static_cast<int>(A.rows());
  PairIndex p(n);
  ExactMatrix out = ExactMatrix::Constant(p.size(), p.size(), RatFunc(0));
  // w_ab = -w_ba, w_aa = 0.
  auto add = [&](int row, int a, int b, const RatFunc& c) {
    if (a == b || c.is_zero()) return;
    if (a < b)
      out(row, p.idx.at({a, b})) += c;
    else
      out(row, p.idx.at({b, a})) -= c;
  };
  for (const auto& [ij, row] : p.idx) {
    const auto [i, j] = ij;
    for (int k = 0; k < n; ++k) {
      add(row, k, j, A(i, k));
      add(row, i, k, A(j, k));
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> coupling_components(const ExactMatrix& A) {
  const int n = static_cast<int>(A.rows());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && (!A(i, j).is_zero() || !A(j, i).is_zero())) {
          comp[j] = comp[s];
          members.push_back(j);
          stack.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

// Rows r_0 = c, r_{j+1} = r_j' + r_j A.
ExactMatrix cyclic_rows(const ExactMatrix& A, const ExactMatrix& c, int count) {
  const Eigen::Index n = A.rows();
  ExactMatrix R(count, n);
  ExactMatrix r = c;
  for (int j = 0; j < count; ++j) {
    R.row(j) = r;
    r = derivative(r) + r * A;
  }
  return R;
}

void normalize(ExactVector& w) {
  for (Eigen::Index i = w.size(); i-- > 0;)
    if (!w(i).is_zero()) {
      const RatFunc s(w(i).num().leading().inverse());
      for (Eigen::Index k = 0; k < w.size(); ++k) w(k) *= s;
      return;
    }
}

void lift_component(const ExactMatrix& A, const std::vector<int>& members, const ExactMatrix& c,
                    std::vector<SystemExpSolution>& out, Eigen::Index full_dim) {
  const int n = static_cast<int>(A.rows());
  ExactMatrix R = cyclic_rows(A, c, n + 1);
  ExactMatrix Rn = R.topRows(n);
  if (determinant(Rn).is_zero()) return;
  ExactMatrix Rinv = matrix_inverse(Rn);
  ExactMatrix coef = R.row(n) * Rinv;
  std::vector<RatFunc> ops;
  for (int j = 0; j < n; ++j) ops.push_back(-coef(0, j));
  ops.push_back(RatFunc(1));
  const DiffOperator L(ops);
  for (const auto& sol : exp_solutions(L).solutions) {
    RatFunc phi(sol.polynomial);
    bool rational = true;
    for (const auto& [f, e] : sol.factors) {
      if (!e.is_integer()) rational = false;
      else {
        const long k = e.re().get_num().get_si();
        phi *= k >= 0 ? RatFunc(pow(f, static_cast<unsigned>(k))) : RatFunc(Poly(1), pow(f, static_cast<unsigned>(-k)));
      }
    }
    if (!rational) continue;
    ExactVector rho(n);
    rho(0) = RatFunc(1);
    for (int j = 1; j < n; ++j) rho(j) = rho(j - 1).derivative() + sol.r * rho(j - 1);
    ExactVector local = Rinv * rho;
    ExactVector w = ExactVector::Constant(full_dim, RatFunc(0));
    for (int i = 0; i < n; ++i) w(members[i]) = local(i) * phi;
    normalize(w);
    SystemExpSolution s{sol.exponent, w, true};
    for (Eigen::Index i = 0; i < w.size(); ++i)
      if (!w(i).is_constant()) s.constant_direction = false;
    bool dup = false;
    for (const auto& o : out)
      if (o.exponent == s.exponent && o.direction == s.direction) dup = true;
    if (!dup) out.push_back(std::move(s));
  }
}

}  // namespace

std::vector<SystemExpSolution> system_exp_solutions(const LinearSystem& B) {
  std::vector<SystemExpSolution> out;
  for (const auto& members : coupling_components(B.A)) {
    const int n = static_cast<int>(members.size());
    ExactMatrix A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = B.A(members[i], members[j]);
    const std::size_t before = out.size();
    bool cyclic_found = false;
    for (int k = 0; k < n; ++k) {
      ExactMatrix c = ExactMatrix::Constant(1, n, RatFunc(0));
      c(0, k) = RatFunc(1);
      if (determinant(ExactMatrix(cyclic_rows(A, c, n))).is_zero()) continue;
      cyclic_found = true;
      lift_component(A, members, c, out, B.dim());
    }
    if (!cyclic_found) {
      ExactMatrix c(1, n);
      for (int k = 0; k < n; ++k) c(0, k) = RatFunc(k + 1);
      lift_component(A, members, c, out, B.dim());
    }
    for (std::size_t i = before; i < out.size(); ++i) {
      // Y' = B Y with Y = exp(s) W.
      ExactVector res = B.residual(out[i].direction);
      const RatFunc ds(out[i].exponent.derivative());
      for (Eigen::Index k = 0; k < res.size(); ++k)
        if (!(res(k) + ds * out[i].direction(k)).is_zero())
          throw std::logic_error("system_exp_solutions: lifted vector is not a solution");
    }
  }
  return out;
}

Json SystemExpSolution::to_json(const std::string& var) const {
  Json d = Json::array();
  for (Eigen::Index i = 0; i < direction.size(); ++i) d.push_back(direction(i).str(var));
  return Json{{"exponent", heisenkep::to_json(exponent)},
              {"exponent_str", exponent.str(var)},
              {"direction", d},
              {"constant_direction", constant_direction}};
}

bool plucker_check(const ExactVector& Y) {
  if (Y.size() != 6) throw DimensionError("plucker_check needs 6 components");
  return (Y(2) * Y(3) - Y(1) * Y(4) + Y(5) * Y(0)).is_zero();
}

ExactMatrix plucker_operator(const ExactVector& Y) {
  if (Y.size() != 6) throw DimensionError("plucker_operator needs 6 components");
  const RatFunc O(0);
  ExactMatrix m(4, 4);
  m << Y(3), -Y(1), Y(0), O,  //
      Y(4), -Y(2), O, Y(0),   //
      Y(5), O, -Y(2), Y(1),   //
      O, Y(5), -Y(4), Y(3);
  return m;
}

Factorization factorization_basis(const std::vector<ExactVector>& Y, const LinearSystem* sys) {
  Factorization f;
  std::vector<ExactVector> cols;
  auto independent = [&cols](const ExactVector& v) {
    ExactMatrix m(v.size(), static_cast<Eigen::Index>(cols.size()) + 1);
    for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
    m.col(m.cols() - 1) = v;
    return rank(m) == m.cols();
  };
  for (const auto& y : Y) {
    if (!plucker_check(y)) throw std::invalid_argument("factorization_basis: Y fails the Plucker condition");
    int used = 0;
    for (const auto& v : trailing_echelon_basis(nullspace(plucker_operator(y))))
      if (cols.size() < 4 && independent(v)) {
        cols.push_back(v);
        ++used;
      }
    f.kernel_sizes.push_back(used);
  }
  for (int k = 0; k < 4 && cols.size() < 4; ++k) {
    ExactVector e = ExactVector::Constant(4, RatFunc(0));
    e(k) = RatFunc(1);
    if (independent(e)) {
      cols.push_back(e);
      ++f.completion_columns;
    }
  }
  f.Q.resize(4, 4);
  for (int j = 0; j < 4; ++j) f.Q.col(j) = cols[static_cast<std::size_t>(j)];
  if (sys) {
    LinearSystem t = gauge_transform(*sys, GaugeMatrix(f.Q));
    // Column groups: one per input, then the completion.
    std::vector<int> group;
    for (std::size_t g = 0; g < f.kernel_sizes.size(); ++g) group.insert(group.end(), f.kernel_sizes[g], static_cast<int>(g));
    group.insert(group.end(), f.completion_columns, static_cast<int>(f.kernel_sizes.size()));
    f.block_diagonal = true;
    f.block_triangular = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (group[i] == group[j] || t.A(i, j).is_zero()) continue;
        f.block_diagonal = false;
        if (group[i] > group[j]) f.block_triangular = false;
      }
    f.transformed = std::move(t);
  }
  return f;
}

Json Factorization::to_json(const std::string& var) const {
  auto mat = [&var](const ExactMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json r = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str(var));
      rows.push_back(r);
    }
    return rows;
  };
  Json j{{"Q", mat(Q)},
         {"det", determinant(Q).str(var)},
         {"kernel_sizes", kernel_sizes},
         {"completion_columns", completion_columns},
         {"partial", partial()}};
  if (transformed) {
    j["block_diagonal"] = block_diagonal;
    j["block_triangular"] = block_triangular;
    j["blocks"] = mat(transformed->A);
  }
  return j;
}

}  // namespace heisenkep
