#include "heisenkep/galois/sympower.hpp"

#include <map>
#include <stdexcept>

#include "heisenkep/exactalg/matrix.hpp"

namespace heisenkep {

namespace {

using Monomial = std::vector<int>;

void enumerate(int n, int k, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == n - 1) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[pos] = e;
    enumerate(n, k - e, cur, pos + 1, out);
  }
}

}  // namespace

DiffOperator sym_power(const DiffOperator& L, int k) {
  if (k < 1) throw std::invalid_argument("sym_power needs k >= 1");
  const int n = L.order();
  std::vector<Monomial> basis;
  Monomial cur(static_cast<std::size_t>(n), 0);
  enumerate(n, k, cur, 0, basis);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const int N = static_cast<int>(basis.size());

  // y_j stands for the j-th derivative of a solution; y_n = -sum a_i y_i.
  auto delta = [&](const std::vector<RatFunc>& v) {
    std::vector<RatFunc> out(v.size());
    for (int m = 0; m < N; ++m) {
      if (v[m].is_zero()) continue;
      out[m] += v[m].derivative();
      for (int j = 0; j < n; ++j) {
        const int e = basis[m][j];
        if (e == 0) continue;
        Monomial b = basis[m];
        --b[j];
        const RatFunc c = v[m] * RatFunc(Scalar(e));
        if (j + 1 < n) {
          ++b[j + 1];
          out[index.at(b)] += c;
        } else {
          for (int i = 0; i < n; ++i) {
            if (L.coeff(i).is_zero()) continue;
            Monomial bi = b;
            ++bi[i];
            out[index.at(bi)] -= c * L.coeff(i);
          }
        }
      }
    }
    return out;
  };

  ExactMatrix M(N, N + 1);
  std::vector<RatFunc> v(static_cast<std::size_t>(N));
  Monomial top(static_cast<std::size_t>(n), 0);
  top[0] = k;
  v[index.at(top)] = RatFunc(1);
  for (int c = 0; c <= N; ++c) {
    for (int r = 0; r < N; ++r) M(r, c) = v[r];
    if (c < N) v = delta(v);
  }
  std::vector<ExactVector> ker = nullspace(M);
  // The first free column gives the first derivative dependent on the earlier ones.
  const ExactVector& rel = ker.front();
  int order = N;
  while (order > 0 && rel(order).is_zero()) --order;
  std::vector<RatFunc> coeffs;
  for (int i = 0; i <= order; ++i) coeffs.push_back(rel(i));
  return DiffOperator(coeffs);
}

}  // namespace heisenkep
