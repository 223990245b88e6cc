#include "heisenkep/cli/commands.hpp"
#include "heisenkep/exactalg/errors.hpp"
#include "heisenkep/galois/factorization.hpp"
#include "heisenkep/galois/liouvillian.hpp"
#include "heisenkep/galois/rehm.hpp"
#include "heisenkep/galois/scenarios.hpp"
#include "heisenkep/variational/ve.hpp"

namespace heisenkep::cli {

namespace {

Json grid(const ExactMatrix& m, const std::string& var) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str(var));
    rows.push_back(r);
  }
  return rows;
}

Scalar scalar_field(const Json& c, const char* key, const Scalar& fallback) {
  return c.contains(key) ? scalar_from_json(c.at(key)) : fallback;
}

// (spec, c) for the one-body branch; "a" alone fixes kappa = 8a at c = 1.
std::pair<SystemSpec, Scalar> one_body_setup(const Json& c) {
  if (c.contains("a") && !c.contains("c")) {
    const Scalar a = scalar_from_json(c.at("a"));
    if (a.is_zero() || !a.is_real()) throw std::invalid_argument("a must be real and nonzero");
    return {SystemSpec::one_body(Scalar(8) * a), Scalar(1)};
  }
  SystemSpec spec = c.contains("system_spec") ? SystemSpec::from_json(c.at("system_spec"))
                                              : SystemSpec::one_body(scalar_field(c, "kappa", Scalar(1)));
  return {spec, scalar_field(c, "c", Scalar(1))};
}

const char* kExpectDefault = "NotSolvableIdentityComponent";

}  // namespace

CommandResult cmd_ve(const RunConfig& cfg) {
  const Json& c = cfg.config;
  const std::string system = c.value("system", std::string("kepler"));
  CommandResult r;
  Json& rep = r.report;
  rep["subcommand"] = "ve";
  rep["seed"] = cfg.seed;
  rep["system"] = system;
  if (system == "kepler") {
    auto [spec, height] = one_body_setup(c);
    const Scalar a = condition_coefficient_a_exact(spec.potential, height);
    rep["kappa"] = to_json(spec.kappa);
    rep["c"] = to_json(height);
    rep["a"] = to_json(a);
    LinearSystem ve = ve_particular(spec, height);
    rep["ve"] = grid(ve.A, "t");
    rep["ve_block"] = grid(ve.A.topLeftCorner(4, 4), "t");
    LinearSystem split = gauge_transform(ve.block(0, 4), GaugeMatrix(splitting_gauge()));
    rep["split_block"] = grid(split.A, "t");
    LinearSystem tr = ve_blocks_transformed(spec, height);
    rep["transformed_blocks"] = grid(tr.A, "t");
    DiffOperator l = cyclic_to_scalar(tr.block(0, 2), 0);
    rep["block_equation"] = to_json(l, "t");
    rep["block_equation_str"] = l.str("t");
    if (!a.is_zero()) {
      DiffOperator w = exp_substitution(l, Poly{Scalar(0), Scalar(0), -Scalar::i() * a / Scalar(2)});
      rep["reduced_equation"] = to_json(w, "t");
      rep["reduced_equation_str"] = w.str("t");
      rep["parabolic"] = parabolic_from_ode(w).to_json();
    }
  } else if (system == "twobody") {
    const Scalar mu = scalar_field(c, "mu", Scalar(1));
    const Scalar tau0 = scalar_field(c, "tau0", Scalar(0));
    const Scalar w2 = scalar_field(c, "w2", Scalar(1));
    rep["mu"] = to_json(mu);
    rep["tau0"] = to_json(tau0);
    rep["w2"] = to_json(w2);
    LinearSystem ve = ve_twobody_blocks(mu, tau0, w2);
    rep["ve"] = grid(ve.A, "tau");
    LinearSystem a1 = ve.block(0, 4);
    if (mu != Scalar(-1) && tau0.is_zero()) {
      LinearSystem g = gauge_transform(a1, GaugeMatrix(twobody_gauge_tau0_zero(mu)));
      rep["gauge_form"] = grid(g.A, "tau");
      DiffOperator l = cyclic_to_scalar(g.block(1, 2), 0);
      DiffOperator w = exp_substitution(l, Poly{Scalar(0), Scalar(0), (Scalar(1) - mu) / Scalar(2)});
      rep["block_equation"] = to_json(l, "tau");
      rep["reduced_equation"] = to_json(w, "tau");
      rep["reduced_equation_str"] = w.str("tau");
      rep["parabolic"] = parabolic_from_ode(w).to_json();
    } else if (mu == Scalar(-1) && tau0 == Scalar(1)) {
      LinearSystem g = gauge_transform(a1, GaugeMatrix(twobody_gauge_mu_minus_one()));
      rep["gauge_form"] = grid(g.A, "tau");
      DiffOperator l3 = cyclic_to_scalar(g.block(0, 3), 1);
      DiffOperator o = exp_substitution(l3, Poly{Scalar(0), Scalar(0), Scalar::rational(2, 3)});
      rep["third_order_equation"] = to_json(l3, "tau");
      rep["reduced_equation"] = to_json(o, "tau");
      rep["reduced_equation_str"] = o.str("tau");
    } else {
      rep["note"] = "reductions are provided for tau0 = 0 (mu != -1) and for mu = -1, tau0 = 1";
    }
  } else {
    throw std::invalid_argument("ve: system must be kepler or twobody");
  }
  return r;
}

CommandResult cmd_galois(const RunConfig& cfg) {
  const Json& c = cfg.config;
  const std::string branch = c.value("branch", std::string("kepler"));
  GaloisVerdict v;
  if (branch == "kepler") {
    auto [spec, height] = one_body_setup(c);
    v = one_body_verdict(spec, height);
  } else if (branch == "twobody") {
    v = two_body_verdict(scalar_field(c, "mu", Scalar(1)));
  } else if (branch == "operator") {
    DiffOperator op = diffop_from_json(c.at("operator"));
    v = op.order() == 2 ? rehm_classify(parabolic_from_ode(op)) : liouvillian_verdict(op, c.value("var", std::string("t")));
  } else {
    throw std::invalid_argument("galois: branch must be kepler, twobody or operator");
  }
  const std::string expect = c.value("expect", std::string(kExpectDefault));
  CommandResult r;
  r.report = Json{{"subcommand", "galois"}, {"seed", cfg.seed}, {"branch", branch}, {"verdict", v.to_json()},
                  {"expect", expect}, {"pass", expect == to_string(v.tag)}};
  r.exit_code = expect == to_string(v.tag) ? 0 : 1;
  return r;
}

CommandResult cmd_factorize(const RunConfig& cfg) {
  const Json& c = cfg.config;
  LinearSystem sys;
  if (c.contains("matrix")) {
    sys = LinearSystem(matrix_from_json(c.at("matrix")));
  } else {
    Json one = c;
    if (!one.contains("a") && !one.contains("c")) one["a"] = "2";
    auto [spec, height] = one_body_setup(one);
    sys = ve_particular(spec, height).block(0, 4);
  }
  if (sys.dim() != 4) throw DimensionError("factorize needs a 4x4 system");

  CommandResult r;
  Json& rep = r.report;
  rep["subcommand"] = "factorize";
  rep["seed"] = cfg.seed;
  rep["A"] = grid(sys.A, "t");
  LinearSystem ext(exterior_square(sys.A));
  rep["exterior_square"] = grid(ext.A, "t");
  std::vector<SystemExpSolution> sols = system_exp_solutions(ext);
  Json sj = Json::array();
  std::vector<ExactVector> ys;
  for (const auto& s : sols) {
    const ExactVector& y = s.direction;
    const RatFunc q = y(2) * y(3) - y(1) * y(4) + y(5) * y(0);
    Json e = s.to_json("t");
    e["plucker"] = q.str("t");
    e["plucker_ok"] = q.is_zero();
    sj.push_back(e);
    if (q.is_zero()) ys.push_back(y);
  }
  rep["solutions"] = sj;
  rep["decomposable"] = ys.size();
  bool ok = !ys.empty();
  if (!cfg.plucker_only && !ys.empty()) {
    Factorization f = factorization_basis(ys, &sys);
    rep["factorization"] = f.to_json("t");
    ok = ok && !f.partial();
  }
  rep["pass"] = ok;
  r.exit_code = ok ? 0 : 1;
  return r;
}

}  // namespace heisenkep::cli
