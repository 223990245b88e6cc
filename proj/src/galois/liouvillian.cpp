#include "heisenkep/galois/liouvillian.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "heisenkep/galois/expsol.hpp"
#include "heisenkep/galois/sympower.hpp"
#include "heisenkep/variational/linear_system.hpp"
#include "heisenkep/variational/ve.hpp"

namespace heisenkep {

Json CaseReport::to_json() const { return Json{{"case", name}, {"excluded", excluded}, {"evidence", evidence}}; }

namespace {

bool half_integer(const Scalar& s) { return s.is_real() && (s * Scalar(2)).is_integer(); }

Json scalar_list(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

std::vector<Scalar> sorted(std::unordered_set<Scalar> s) {
  std::vector<Scalar> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), [](const Scalar& a, const Scalar& b) { return a.re() < b.re(); });
  return v;
}

}  // namespace

CaseReport case2_obstruction(const DiffOperator& L, const DiffOperator& symL, const SingularityData& sing) {
  CaseReport rep{"case2", false, Json::object()};
  rep.evidence["order"] = L.order();
  rep.evidence["sym_order"] = symL.order();
  rep.evidence["finite_points"] = sing.point_count();

  std::unordered_set<Scalar> sums{Scalar(0)};
  Json per_point = Json::array();
  for (const auto& pt : sing.points) {
    if (pt.kind == PointKind::Irregular || !pt.uniform) {
      rep.evidence["open_reason"] = pt.kind == PointKind::Irregular ? "irregular finite point" : "non-uniform exponents";
      return rep;
    }
    std::vector<Scalar> adm;
    for (const auto& e : pt.exponents)
      if (half_integer(e.value)) adm.push_back(e.value);
    per_point.push_back({{"factor", to_json(pt.factor)}, {"roots", pt.factor.degree()}, {"admissible", scalar_list(adm)}});
    if (adm.empty()) {
      rep.excluded = true;
      rep.evidence["admissible_exponents"] = per_point;
      rep.evidence["reason"] = "a singular point without half-integer exponents";
      return rep;
    }
    for (int root = 0; root < pt.factor.degree(); ++root) {
      std::unordered_set<Scalar> next;
      for (const auto& s : sums)
        for (const auto& e : adm) next.insert(s + e);
      sums = std::move(next);
    }
  }
  rep.evidence["admissible_exponents"] = per_point;
  const std::vector<Scalar> all = sorted(sums);
  rep.evidence["exponent_sum_min"] = to_json(all.front());
  rep.evidence["exponent_sum_max"] = to_json(all.back());

  std::vector<Scalar> alpha_inf;
  for (const auto& e : sing.infinity.exponents) alpha_inf.push_back(e.value);
  rep.evidence["alpha_infinity"] = scalar_list(alpha_inf);
  if (sing.infinity.other_exponents > 0) rep.evidence["alpha_infinity_other"] = sing.infinity.other_exponents;

  Json feasible = Json::array();
  for (const auto& a : alpha_inf)
    for (const auto& s : all) {
      const Scalar d = -a - s;
      if (d.is_integer() && d.re() >= 0) feasible.push_back({{"alpha_infinity", to_json(a)}, {"degree", to_json(d)}});
    }
  rep.evidence["feasible_degrees"] = feasible;
  rep.excluded = feasible.empty();
  return rep;
}

GaloisVerdict liouvillian_verdict(const DiffOperator& L, const std::string& var) {
  if (L.order() != 3) throw std::invalid_argument("liouvillian_verdict needs a third-order operator");
  Json ev{{"operator", to_json(L, var)}};

  ExpSearch es = exp_solutions(L);
  CaseReport c1{"case1", es.solutions.empty() && es.complete, es.to_json(var)};
  ev["case1"] = c1.to_json();
  if (!c1.excluded) return GaloisVerdict::inconclusive("liouvillian", ev);

  FuchsReport fr = fuchsian_check(L);
  CaseReport c3{"case3", !fr.fuchsian, fr.to_json()};
  ev["case3"] = c3.to_json();
  if (!c3.excluded) return GaloisVerdict::inconclusive("liouvillian", ev);

  DiffOperator s3 = sym_power(L, 3);
  SingularityData sing = singularity_analysis(s3);
  CaseReport c2 = case2_obstruction(L, s3, sing);
  c2.evidence["sym3_order"] = s3.order();
  c2.evidence["singular_polynomial"] = sing.singular_polynomial.str(var);
  c2.evidence["singularities"] = sing.to_json();
  ev["case2"] = c2.to_json();
  if (!c2.excluded) return GaloisVerdict::inconclusive("liouvillian", ev);
  return GaloisVerdict::not_solvable("liouvillian", ev);
}

DiffOperator o3r_operator() {
  LinearSystem a1 = ve_twobody_blocks(Scalar(-1), Scalar(1), Scalar(1)).block(0, 4);
  LinearSystem r = gauge_transform(a1, GaugeMatrix(twobody_gauge_mu_minus_one()));
  DiffOperator l3 = cyclic_to_scalar(r.block(0, 3), 1);
  return exp_substitution(l3, Poly{Scalar(0), Scalar(0), Scalar::rational(2, 3)});
}

GaloisVerdict liouvillian_verdict_o3r() { return liouvillian_verdict(o3r_operator(), "tau"); }

}  // namespace heisenkep
