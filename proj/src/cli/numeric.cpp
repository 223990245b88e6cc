#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include <Eigen/SVD>

#include "heisenkep/cli/commands.hpp"
#include "heisenkep/dynamics/extended.hpp"
#include "heisenkep/dynamics/flow.hpp"
#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep::cli {

namespace {

Json vector_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

PhaseState vector_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw DimensionError("initial state needs " + std::to_string(dim) + " entries");
  PhaseState s(dim);
  for (int i = 0; i < dim; ++i) s(i) = j[static_cast<std::size_t>(i)].get<double>();
  return s;
}

// Scales the momenta so that H = 0; needs V < 0 < T.
PhaseState to_zero_energy(const SystemSpec& spec, PhaseState s) {
  const double T = kinetic_energy(spec, s), V = potential_energy(spec, s);
  if (!(T > 0 && V < 0)) throw std::invalid_argument("zero-energy rescaling needs V < 0 < T");
  s.tail(spec.dof()) *= std::sqrt(-V / T);
  return s;
}

PhaseState initial_state(const SystemSpec& spec, const Json& cfg, std::mt19937_64& rng) {
  const Json init = cfg.value("initial", Json::object());
  PhaseState s;
  if (init.contains("state")) {
    s = vector_from_json(init.at("state"), spec.dim());
  } else if (init.contains("particular")) {
    const Json& p = init.at("particular");
    ParticularParams prm;
    prm.c = p.value("c", prm.c);
    prm.w1 = p.value("w1", prm.w1);
    prm.p_w1 = p.value("p_w1", prm.p_w1);
    s = particular_solution(spec, prm, 0.0);
  } else {
    s = random_phase_state(spec, rng);
  }
  if (cfg.value("zero_energy", false)) s = to_zero_energy(spec, s);
  return s;
}

struct CheckList {
  Json rows = Json::array();
  bool ok = true;
  void add(const std::string& name, double value, double tol) {
    const bool pass = std::isfinite(value) && value <= tol;
    ok = ok && pass;
    rows.push_back({{"name", name}, {"value", value}, {"tol", tol}, {"pass", pass}});
  }
};

void monitor_checks(const Json& checks, const MonitorReport& m, CheckList& out) {
  if (checks.contains("max_drift_H")) out.add("max_drift_H", m.max_drift_H, checks["max_drift_H"]);
  if (checks.contains("max_dJ_residual")) out.add("max_dJ_residual", m.max_dJ_residual, checks["max_dJ_residual"]);
  if (checks.contains("max_drift_J")) out.add("max_drift_J", m.max_drift_J, checks["max_drift_J"]);
  if (checks.contains("max_drift_p_theta") && m.max_drift_p_theta)
    out.add("max_drift_p_theta", *m.max_drift_p_theta, checks["max_drift_p_theta"]);
  if (checks.contains("max_drift_I") && m.max_drift_I) out.add("max_drift_I", m.max_drift_I->maxCoeff(), checks["max_drift_I"]);
}

std::string trajectory_json(const Trajectory& traj, std::uint64_t seed) {
  Json states = Json::array();
  for (const auto& s : traj.states) states.push_back(vector_json(s));
  return Json{{"seed", seed}, {"event", to_string(traj.event)}, {"times", traj.times}, {"states", states}}.dump() + "\n";
}

}  // namespace

CommandResult cmd_simulate(const RunConfig& cfg) {
  const Json& c = cfg.config;
  const SystemSpec spec = SystemSpec::from_json(c.at("system"));
  const IntegratorConfig ic = integrator_from_json(c.value("integrator", Json()));
  std::mt19937_64 rng(cfg.seed);
  const PhaseState s0 = initial_state(spec, c, rng);
  Trajectory traj = integrate(spec, s0, ic);

  CommandResult r;
  Json& rep = r.report;
  rep["subcommand"] = "simulate";
  rep["seed"] = cfg.seed;
  rep["system"] = spec.to_json();
  rep["initial_state"] = vector_json(s0);
  rep["event"] = to_string(traj.event);
  if (!traj.message.empty()) rep["message"] = traj.message;
  rep["t_last"] = traj.times.back();
  rep["last_state"] = vector_json(traj.states.back());
  rep["steps"] = {{"accepted", traj.stats.accepted}, {"rejected", traj.stats.rejected}};
  const MonitorReport m = monitor_conserved(spec, traj);
  rep["monitor"] = m.to_json();

  const Json checks = c.value("checks", Json::object());
  CheckList cl;
  monitor_checks(checks, m, cl);
  if (checks.contains("max_straight_line_deviation")) {
    const double dev = straight_line_deviation(spec, traj);
    rep["straight_line_deviation"] = dev;
    cl.add("max_straight_line_deviation", dev, checks["max_straight_line_deviation"]);
  }
  rep["checks"] = cl.rows;
  const bool ok = traj.ok() && cl.ok;
  rep["pass"] = ok;
  r.exit_code = ok ? 0 : 1;

  if (cfg.format == OutputFormat::Csv) {
    std::ostringstream os;
    write_trajectory_csv(os, spec, traj, cfg.seed);
    r.artifacts.push_back({"trajectory.csv", os.str()});
  } else {
    r.artifacts.push_back({"trajectory.json", trajectory_json(traj, cfg.seed)});
  }
  return r;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const Json& c = cfg.config;
  const int samples = c.value("samples", 100);
  std::mt19937_64 rng(cfg.seed);
  const SystemSpec one = SystemSpec::from_json(c.value("one_body", Json{{"kind", "one-body"}}));
  const SystemSpec two = SystemSpec::from_json(c.value("two_body", Json{{"kind", "two-body"}}));
  CheckList cl;

  // Brackets of the two-body integrals.
  auto I = [](int k) { return Observable([k](const PhaseState& s) { return integral_I(k, s); }); };
  const Observable H2 = [&two](const PhaseState& s) { return hamiltonian(two, s); };
  const Observable H1 = [&one](const PhaseState& s) { return hamiltonian(one, s); };
  const Observable J = [](const PhaseState& s) { return dilation_integral(s); };
  const Observable ptheta = [&one](const PhaseState& s) { return *first_integrals(one, s).p_theta; };
  double r12 = 0, r14 = 0, r24 = 0, rj2 = 0, rh = 0, rj1 = 0, rpt = 0;
  for (int k = 0; k < samples; ++k) {
    PhaseState s = random_phase_state(two, rng);
    r12 = std::max(r12, std::abs(poisson_bracket(I(1), I(2), s) - integral_I(3, s)));
    r14 = std::max(r14, std::abs(poisson_bracket(I(1), I(4), s) - integral_I(2, s)));
    r24 = std::max(r24, std::abs(poisson_bracket(I(2), I(4), s) + integral_I(1, s)));
    for (int i = 1; i <= 4; ++i) rh = std::max(rh, std::abs(poisson_bracket(I(i), H2, s)));
    rj2 = std::max(rj2, std::abs(poisson_bracket(J, H2, s) - 2 * hamiltonian(two, s)));
    PhaseState q = random_phase_state(one, rng);
    rj1 = std::max(rj1, std::abs(poisson_bracket(J, H1, q) - 2 * hamiltonian(one, q)));
    rpt = std::max(rpt, std::abs(poisson_bracket(ptheta, H1, q)));
  }
  cl.add("bracket I1 I2 = I3", r12, 1e-6);
  cl.add("bracket I1 I4 = I2", r14, 1e-6);
  cl.add("bracket I2 I4 = -I1", r24, 1e-6);
  cl.add("bracket Ik H = 0", rh, 1e-6);
  cl.add("bracket J H = 2H (two bodies)", rj2, 1e-6);
  cl.add("bracket J H = 2H (one body)", rj1, 1e-6);
  cl.add("bracket p_theta H = 0", rpt, 1e-6);

  // Along a trajectory.
  const Json tj = c.value("trajectory", Json::object());
  IntegratorConfig ic = integrator_from_json(tj.value("integrator", Json()));
  const PhaseState s0 = tj.contains("state") ? vector_from_json(tj.at("state"), one.dim()) : random_phase_state(one, rng);
  Trajectory traj = integrate(one, s0, ic);
  const MonitorReport m = monitor_conserved(one, traj);
  cl.add("trajectory event", traj.ok() ? 0.0 : 1.0, 0.0);
  cl.add("dJ/dt - 2H residual", m.max_dJ_residual, tj.value("max_dJ_residual", 1e-7));
  cl.add("energy drift", m.max_drift_H, tj.value("max_drift_H", 1e-9));

  // Extended Poisson structure.
  for (const SystemSpec* spec : {&one, &two}) {
    ExtendedSystem ext(*spec);
    const int n = ext.n();
    double rank_fail = 0, casimir = 0;
    for (int k = 0; k < samples; ++k) {
      Eigen::VectorXd x = ext.lift(random_phase_state(*spec, rng));
      Eigen::MatrixXd jm = ext.poisson_matrix(x);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(jm);
      const Eigen::VectorXd sv = svd.singularValues();
      if (!(sv(2 * n - 1) > 1e-8 * sv(0) && sv(2 * n) <= 1e-12 * sv(0))) rank_fail += 1;
      const Eigen::VectorXd gp = ext.grad_P(x);
      casimir = std::max(casimir, (jm * gp).norm() / std::max(1.0, gp.norm()));
    }
    const std::string tag = spec->kind == SystemKind::OneBody ? " (one body)" : " (two bodies)";
    cl.add("extended rank 2n failures" + tag, rank_fail, 0.0);
    cl.add("extended Casimir residual" + tag, casimir, 1e-10);
  }

  CommandResult r;
  r.report = Json{{"subcommand", "verify"}, {"seed", cfg.seed}, {"samples", samples}, {"checks", cl.rows}, {"pass", cl.ok}};
  r.exit_code = cl.ok ? 0 : 1;
  return r;
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  const Json& c = cfg.config;
  const SystemSpec spec = SystemSpec::from_json(c.at("system"));
  const IntegratorConfig ic = integrator_from_json(c.value("integrator", Json()));
  const int count = c.value("count", 16);
  if (count < 1) throw std::invalid_argument("sweep count must be positive");
  std::mt19937_64 rng(cfg.seed);
  std::vector<PhaseState> starts;
  for (int k = 0; k < count; ++k) {
    PhaseState s = random_phase_state(spec, rng);
    if (c.value("zero_energy", false)) s = to_zero_energy(spec, s);
    starts.push_back(std::move(s));
  }

  struct Outcome {
    IntegrationEvent event;
    double t_last;
    MonitorReport monitor;
  };
  std::vector<Outcome> outcomes(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < starts.size(); i = next++) {
      Trajectory traj = integrate(spec, starts[i], ic);
      outcomes[i] = {traj.event, traj.times.back(), monitor_conserved(spec, traj)};
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(starts.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const Json checks = c.value("checks", Json::object());
  CheckList cl;
  Json runs = Json::array();
  std::ostringstream csv;
  csv << "# heisenkep sweep seed=" << cfg.seed << '\n' << "index,event,t_last,H0,max_drift_H,max_drift_J,max_dJ_residual\n";
  int completed = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const Outcome& o = outcomes[i];
    runs.push_back({{"index", i},
                    {"initial_state", vector_json(starts[i])},
                    {"event", to_string(o.event)},
                    {"t_last", o.t_last},
                    {"monitor", o.monitor.to_json()}});
    csv << i << ',' << to_string(o.event) << ',' << Json(o.t_last).dump() << ',' << Json(o.monitor.H0).dump() << ','
        << Json(o.monitor.max_drift_H).dump() << ',' << Json(o.monitor.max_drift_J).dump() << ','
        << Json(o.monitor.max_dJ_residual).dump() << '\n';
    if (o.event == IntegrationEvent::None) {
      ++completed;
      monitor_checks(checks, o.monitor, cl);
    } else if (o.event != IntegrationEvent::Collision && o.event != IntegrationEvent::StepUnderflow) {
      cl.add("run " + std::to_string(i) + " failed: " + to_string(o.event), 1.0, 0.0);
    }
  }
  auto count_event = [&](IntegrationEvent e) {
    return std::count_if(outcomes.begin(), outcomes.end(), [e](const Outcome& o) { return o.event == e; });
  };
  CommandResult r;
  r.report = Json{{"subcommand", "sweep"}, {"seed", cfg.seed}, {"system", spec.to_json()}, {"count", count},
                  {"completed", completed}, {"collisions", count_event(IntegrationEvent::Collision)},
                  {"step_underflows", count_event(IntegrationEvent::StepUnderflow)}, {"runs", runs}, {"checks", cl.rows}, {"pass", cl.ok}};
  r.exit_code = cl.ok ? 0 : 1;
  if (cfg.format == OutputFormat::Csv) r.artifacts.push_back({"sweep.csv", csv.str()});
  return r;
}

}  // namespace heisenkep::cli
