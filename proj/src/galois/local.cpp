#include "heisenkep/galois/local.hpp"

#include <stdexcept>

namespace heisenkep {

const char* to_string(PointKind k) { return k == PointKind::RegularSingular ? "regular" : "irregular"; }

namespace {

// r (r - 1) ... (r - k + 1)
Poly falling(int k) {
  Poly p(1);
  for (int i = 0; i < k; ++i) p *= Poly{Scalar(-i), Scalar(1)};
  return p;
}

// Taylor coefficients P^(j)/j! for j = 0..deg P.
std::vector<Poly> taylor_table(const Poly& p) {
  std::vector<Poly> out;
  Poly d = p;
  mpz_class fact = 1;
  for (int j = 0; j <= p.degree(); ++j) {
    if (j > 0) {
      d = d.derivative();
      fact *= j;
    }
    out.push_back(d * Scalar(mpq_class(1) / mpq_class(fact)));
  }
  return out;
}

struct Split {
  bool happened = false;
  Poly a, b;
};

// Valuations at the roots of g, splitting g on the first zero divisor.
Split valuations(const std::vector<std::vector<Poly>>& taylor, const Poly& g, std::vector<int>& v) {
  v.assign(taylor.size(), -1);
  for (std::size_t k = 0; k < taylor.size(); ++k) {
    for (std::size_t j = 0; j < taylor[k].size(); ++j) {
      Poly c = taylor[k][j] % g;
      if (c.is_zero()) continue;
      Poly h = gcd(c, g);
      if (h.degree() > 0) return {true, h, exact_div(g, h)};
      v[k] = static_cast<int>(j);
      break;
    }
  }
  return {};
}

Scalar coefficient_or_zero(const Poly& p) { return p.is_zero() ? Scalar(0) : p[0]; }

void analyse_factor(const std::vector<std::vector<Poly>>& taylor, const Poly& f, int m, int n,
                    std::vector<FiniteSingularity>& out) {
  std::vector<Poly> work{f};
  while (!work.empty()) {
    Poly g = work.back();
    work.pop_back();
    std::vector<int> v;
    Split s = valuations(taylor, g, v);
    if (s.happened) {
      work.push_back(s.a.monic());
      work.push_back(s.b.monic());
      continue;
    }
    FiniteSingularity pt;
    pt.factor = g;
    pt.multiplicity = m;
    pt.kind = PointKind::RegularSingular;
    for (int k = 0; k < n; ++k)
      if (v[k] >= 0 && v[k] < m - n + k) pt.kind = PointKind::Irregular;
    if (pt.kind == PointKind::RegularSingular) {
      const Poly lead_inv = inverse_mod(taylor[n][m] % g, g);
      pt.uniform = true;
      for (int k = 0; k <= n; ++k) {
        const int j = m - n + k;
        Poly e;
        if (j >= 0 && j < static_cast<int>(taylor[k].size())) e = (taylor[k][j] * lead_inv) % g;
        if (e.degree() > 0) pt.uniform = false;
        pt.indicial.push_back(e);
      }
      if (pt.uniform) {
        Poly ind = pt.indicial_polynomial();
        pt.exponents = gaussian_rational_roots(ind);
        int found = 0;
        for (const auto& r : pt.exponents) found += r.multiplicity;
        pt.other_exponents = ind.degree() - found;
      }
    }
    pt.points = poly_roots_numeric(g);
    out.push_back(std::move(pt));
  }
}

Json roots_json(const std::vector<ExactRoot>& roots) {
  Json a = Json::array();
  for (const auto& r : roots) a.push_back({{"value", to_json(r.value)}, {"multiplicity", r.multiplicity}});
  return a;
}

}  // namespace

Poly FiniteSingularity::indicial_polynomial() const {
  if (!uniform) throw std::logic_error("indicial polynomial depends on the point");
  Poly p;
  for (std::size_t k = 0; k < indicial.size(); ++k) p += falling(static_cast<int>(k)) * coefficient_or_zero(indicial[k]);
  return p;
}

int SingularityData::point_count() const {
  int c = 0;
  for (const auto& p : points) c += p.factor.degree();
  return c;
}

ThetaForm theta_form(const DiffOperator& L) {
  const std::vector<Poly> P = L.cleared();
  int low = 0, top = 0;
  bool first = true;
  for (int k = 0; k < static_cast<int>(P.size()); ++k)
    for (int i = 0; i <= P[k].degree(); ++i) {
      if (P[k][i].is_zero()) continue;
      if (first || i - k < low) low = i - k;
      if (first || i - k > top) top = i - k;
      first = false;
    }
  ThetaForm tf;
  tf.low = low;
  tf.rows.assign(static_cast<std::size_t>(top - low + 1), Poly());
  for (int k = 0; k < static_cast<int>(P.size()); ++k) {
    const Poly fk = falling(k);
    for (int i = 0; i <= P[k].degree(); ++i)
      if (!P[k][i].is_zero()) tf.rows[static_cast<std::size_t>(i - k - low)] += fk * P[k][i];
  }
  return tf;
}

namespace {

InfinityData infinity_data(const DiffOperator& L) {
  InfinityData inf;
  const std::vector<Poly> P = L.cleared();
  const int n = L.order();
  inf.kind = PointKind::RegularSingular;
  for (int k = 0; k < n; ++k)
    if (!P[k].is_zero() && P[k].degree() - P[n].degree() > k - n) inf.kind = PointKind::Irregular;
  ThetaForm tf = theta_form(L);
  inf.top_power = tf.top();
  inf.growth_indicial = tf.rows.back();
  int found = 0;
  for (const auto& r : gaussian_rational_roots(inf.growth_indicial)) {
    inf.exponents.push_back({-r.value, r.multiplicity});
    found += r.multiplicity;
  }
  inf.other_exponents = inf.growth_indicial.degree() - found;
  return inf;
}

}  // namespace

SingularityData singularity_analysis(const DiffOperator& L) {
  SingularityData d;
  d.order = L.order();
  const std::vector<Poly> P = L.cleared();
  d.leading = P.back();
  d.singular_polynomial = squarefree_part(d.leading).monic();
  std::vector<std::vector<Poly>> taylor;
  for (const auto& p : P) taylor.push_back(taylor_table(p));
  for (const auto& [f, m] : squarefree_decomposition(d.leading))
    if (f.degree() > 0) analyse_factor(taylor, f, m, d.order, d.points);
  d.infinity = infinity_data(L);
  return d;
}

Json SingularityData::to_json() const {
  Json pts = Json::array();
  for (const auto& p : points) {
    Json j{{"factor", heisenkep::to_json(p.factor)},
           {"degree", p.factor.degree()},
           {"multiplicity", p.multiplicity},
           {"kind", to_string(p.kind)},
           {"uniform", p.uniform}};
    if (p.kind == PointKind::RegularSingular && p.uniform) {
      j["indicial"] = heisenkep::to_json(p.indicial_polynomial());
      j["exponents"] = roots_json(p.exponents);
      j["other_exponents"] = p.other_exponents;
    }
    pts.push_back(std::move(j));
  }
  return Json{{"order", order},
              {"leading", heisenkep::to_json(leading)},
              {"singular_polynomial", heisenkep::to_json(singular_polynomial)},
              {"point_count", point_count()},
              {"points", pts},
              {"infinity",
               {{"kind", to_string(infinity.kind)},
                {"top_power", infinity.top_power},
                {"growth_indicial", heisenkep::to_json(infinity.growth_indicial)},
                {"exponents", roots_json(infinity.exponents)},
                {"other_exponents", infinity.other_exponents}}}};
}

FuchsReport fuchsian_check(const DiffOperator& L) {
  SingularityData d = singularity_analysis(L);
  FuchsReport r;
  r.fuchsian = d.infinity.kind == PointKind::RegularSingular;
  for (const auto& p : d.points) {
    r.finite.emplace_back(p.factor, p.kind);
    if (p.kind == PointKind::Irregular) r.fuchsian = false;
  }
  r.infinity = d.infinity.kind;
  return r;
}

Json FuchsReport::to_json() const {
  Json f = Json::array();
  for (const auto& [p, k] : finite) f.push_back({{"factor", heisenkep::to_json(p)}, {"kind", to_string(k)}});
  return Json{{"finite", f}, {"infinity", to_string(infinity)}, {"fuchsian", fuchsian}};
}

}  // namespace heisenkep
