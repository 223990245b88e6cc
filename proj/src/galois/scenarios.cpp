#include "heisenkep/galois/scenarios.hpp"

#include "heisenkep/galois/liouvillian.hpp"
#include "heisenkep/galois/rehm.hpp"
#include "heisenkep/variational/linear_system.hpp"
#include "heisenkep/variational/ve.hpp"

namespace heisenkep {

GaloisVerdict one_body_verdict(const SystemSpec& spec, const Scalar& c) {
  const Scalar a = condition_coefficient_a_exact(spec.potential, c);
  Json ev{{"c", to_json(c)}, {"a", to_json(a)}};
  if (a.is_zero()) {
    ev["reason"] = "a = 0: the reduced equation is not parabolic";
    return GaloisVerdict::inconclusive("rehm", ev);
  }
  DiffOperator l = cyclic_to_scalar(ve_blocks_transformed(spec, c).block(0, 2), 0);
  DiffOperator w = exp_substitution(l, Poly{Scalar(0), Scalar(0), -Scalar::i() * a / Scalar(2)});
  ev["block_equation"] = to_json(l);
  ev["reduced_equation"] = to_json(w);
  GaloisVerdict v = rehm_classify(parabolic_from_ode(w));
  v.evidence["chain"] = ev;
  return v;
}

GaloisVerdict two_body_verdict(const Scalar& mu) {
  if (mu == Scalar(-1)) return liouvillian_verdict_o3r();
  LinearSystem r = gauge_transform(ve_twobody_blocks(mu, Scalar(0), Scalar(1)).block(0, 4),
                                   GaugeMatrix(twobody_gauge_tau0_zero(mu)));
  DiffOperator l = cyclic_to_scalar(r.block(1, 2), 0);
  DiffOperator w = exp_substitution(l, Poly{Scalar(0), Scalar(0), (Scalar(1) - mu) / Scalar(2)});
  Json ev{{"mu", to_json(mu)}, {"block_equation", to_json(l, "tau")}, {"reduced_equation", to_json(w, "tau")}};
  GaloisVerdict v = rehm_classify(parabolic_from_ode(w));
  v.evidence["chain"] = ev;
  return v;
}

}  // namespace heisenkep
