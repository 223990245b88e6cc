#include "heisenkep/galois/expsol.hpp"

#include <algorithm>
#include <stdexcept>

#include "heisenkep/exactalg/matrix.hpp"
#include "heisenkep/exactalg/roots.hpp"
#include "heisenkep/galois/local.hpp"

namespace heisenkep {

Poly integrate(const Poly& p) {
  std::vector<Scalar> c(static_cast<std::size_t>(p.degree() + 2));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i + 1)] = p[i] / Scalar(i + 1);
  return Poly(c);
}

std::vector<Poly> polynomial_solutions(const DiffOperator& L) {
  ThetaForm tf = theta_form(L);
  int dmax = -1;
  for (const auto& r : gaussian_rational_roots(tf.rows.back()))
    if (r.value.is_integer() && r.value.re() >= 0) dmax = std::max(dmax, static_cast<int>(r.value.re().get_num().get_si()));
  if (dmax < 0) return {};
  const std::vector<Poly> P = L.cleared();
  std::vector<Poly> images;
  int rows = 0;
  for (int j = 0; j <= dmax; ++j) {
    // L t^j = sum_k P_k j (j-1) ... (j-k+1) t^(j-k)
    Poly img;
    for (int k = 0; k <= std::min(j, L.order()); ++k) {
      mpz_class f = 1;
      for (int i = 0; i < k; ++i) f *= j - i;
      img += P[k] * Poly::monomial(Scalar(f), j - k);
    }
    rows = std::max(rows, img.degree() + 1);
    images.push_back(img);
  }
  ScalarMatrix M(std::max(rows, 1), dmax + 1);
  for (int c = 0; c <= dmax; ++c)
    for (int r = 0; r < M.rows(); ++r) M(r, c) = images[c][r];
  std::vector<Poly> out;
  for (const auto& v : nullspace(M)) {
    std::vector<Scalar> c(v.data(), v.data() + v.size());
    out.push_back(Poly(c).monic());
  }
  return out;
}

namespace {

struct Searcher {
  const DiffOperator& L;
  ExpSearch& out;

  void explore(const Poly& u, int m_upper) {
    out.exponential_parts.push_back(u);
    if (m_upper <= 0) return;
    const std::vector<Poly> P = L.exp_substitution(RatFunc(u)).cleared();
    for (int m = m_upper - 1; m >= 0; --m) {
      int best = 0, kmin = -1;
      bool any = false;
      for (int k = 0; k < static_cast<int>(P.size()); ++k) {
        if (P[k].is_zero()) continue;
        const int w = P[k].degree() + m * k;
        if (!any || w > best) best = w;
        any = true;
      }
      std::vector<Scalar> chi;
      int count = 0;
      for (int k = 0; k < static_cast<int>(P.size()); ++k) {
        if (P[k].is_zero() || P[k].degree() + m * k != best) continue;
        if (kmin < 0) kmin = k;
        chi.resize(static_cast<std::size_t>(k - kmin + 1));
        chi[static_cast<std::size_t>(k - kmin)] = P[k].leading();
        ++count;
      }
      if (count < 2) continue;
      Poly ch(chi);
      int found = 0;
      for (const auto& r : gaussian_rational_roots(ch)) {
        found += r.multiplicity;
        explore(u + Poly::monomial(r.value, m), m);
      }
      if (found < ch.degree()) {
        out.complete = false;
        out.notes.push_back("characteristic roots outside Q(i) at slope " + std::to_string(m));
      }
    }
  }
};

struct ResidueChoice {
  Poly factor;
  std::vector<Scalar> values;
};

std::vector<ResidueChoice> residue_choices(const DiffOperator& L, ExpSearch& out) {
  std::vector<ResidueChoice> choices;
  for (const auto& pt : singularity_analysis(L).points) {
    ResidueChoice c{pt.factor, {}};
    if (pt.kind == PointKind::Irregular) {
      out.complete = false;
      out.notes.push_back("irregular finite point at the roots of " + pt.factor.str());
      c.values.push_back(Scalar(0));
    } else if (!pt.uniform) {
      out.complete = false;
      out.notes.push_back("exponents vary over the roots of " + pt.factor.str());
      c.values.push_back(Scalar(0));
    } else {
      if (pt.other_exponents > 0) {
        out.complete = false;
        out.notes.push_back("exponents outside Q(i) at the roots of " + pt.factor.str());
      }
      // Smallest representative of each class modulo Z.
      for (const auto& e : pt.exponents) {
        bool replaced = false, dominated = false;
        for (auto& v : c.values) {
          Scalar d = e.value - v;
          if (!d.is_integer()) continue;
          if (d.re() < 0) {
            v = e.value;
            replaced = true;
          } else {
            dominated = true;
          }
        }
        if (!replaced && !dominated) c.values.push_back(e.value);
      }
    }
    if (!c.values.empty()) choices.push_back(std::move(c));
    else {
      // No exponent in Q(i): no solution with rational logarithmic derivative has a
      // residue here, so the point is excluded from the ansatz entirely.
      choices.push_back({pt.factor, {}});
    }
  }
  return choices;
}

}  // namespace

ExpSearch exp_solutions(const DiffOperator& L) {
  ExpSearch out;
  const std::vector<Poly> P = L.cleared();
  int maxdeg = 0;
  for (const auto& p : P) maxdeg = std::max(maxdeg, p.degree());
  Searcher{L, out}.explore(Poly(), maxdeg + 1);

  std::vector<ResidueChoice> choices = residue_choices(L, out);
  for (const auto& c : choices)
    if (c.values.empty()) return out;

  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<RatFunc> seen;
  for (const Poly& u : out.exponential_parts) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      RatFunc r0(u);
      std::vector<std::pair<Poly, Scalar>> factors;
      for (std::size_t i = 0; i < choices.size(); ++i) {
        const Scalar& e = choices[i].values[idx[i]];
        if (e.is_zero()) continue;
        r0 += RatFunc(choices[i].factor.derivative() * e, choices[i].factor);
        factors.emplace_back(choices[i].factor, e);
      }
      for (const Poly& p : polynomial_solutions(L.exp_substitution(r0))) {
        RatFunc r = r0 + RatFunc(p.derivative(), p);
        if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
        RatFunc rem = right_remainder(L, r);
        if (!rem.is_zero()) throw std::logic_error("exp_solutions: candidate failed its certificate");
        seen.push_back(r);
        out.solutions.push_back({r, integrate(u), factors, p, rem});
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].values.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return out;
}

Json ExpSolution::to_json(const std::string& var) const {
  Json f = Json::array();
  for (const auto& [p, e] : factors) f.push_back({{"factor", heisenkep::to_json(p)}, {"exponent", heisenkep::to_json(e)}});
  return Json{{"r", heisenkep::to_json(r)},
              {"r_str", r.str(var)},
              {"exponent", heisenkep::to_json(exponent)},
              {"factors", f},
              {"polynomial", heisenkep::to_json(polynomial)},
              {"remainder", heisenkep::to_json(remainder)}};
}

Json ExpSearch::to_json(const std::string& var) const {
  Json sols = Json::array();
  for (const auto& s : solutions) sols.push_back(s.to_json(var));
  Json parts = Json::array();
  for (const auto& u : exponential_parts) parts.push_back(heisenkep::to_json(u));
  return Json{{"solutions", sols}, {"exponential_parts", parts}, {"complete", complete}, {"notes", notes}};
}

}  // namespace heisenkep
