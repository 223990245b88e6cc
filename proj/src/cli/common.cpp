#include <fstream>
#include <sstream>

#include "heisenkep/cli/commands.hpp"
#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep::cli {

Json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("config " + path.string() + ": " + e.what());
  }
}

IntegratorConfig integrator_from_json(const Json& j) {
  IntegratorConfig c;
  if (j.is_null()) return c;
  c.abs_tol = j.value("abs_tol", c.abs_tol);
  c.rel_tol = j.value("rel_tol", c.rel_tol);
  c.max_step = j.value("max_step", c.max_step);
  c.t0 = j.value("t0", c.t0);
  c.t_end = j.value("t_end", c.t_end);
  c.output_dt = j.value("output_dt", c.output_dt);
  c.initial_step = j.value("initial_step", c.initial_step);
  c.max_steps = j.value("max_steps", c.max_steps);
  c.rho_min = j.value("rho_min", c.rho_min);
  c.dense = j.value("dense", c.dense);
  return c;
}

PhaseState random_phase_state(const SystemSpec& spec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(-2, 2), mom(-1, 1);
  const int n = spec.dof();
  PhaseState s(spec.dim());
  do {
    for (int k = 0; k < n; ++k) s(k) = pos(rng);
    for (int k = 0; k < n; ++k) s(n + k) = mom(rng);
  } while (configuration_rho(spec, s) < 0.1);
  return s;
}

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.subcommand == "simulate") return cmd_simulate(cfg);
  if (cfg.subcommand == "verify") return cmd_verify(cfg);
  if (cfg.subcommand == "sweep") return cmd_sweep(cfg);
  if (cfg.subcommand == "ve") return cmd_ve(cfg);
  if (cfg.subcommand == "galois") return cmd_galois(cfg);
  if (cfg.subcommand == "factorize") return cmd_factorize(cfg);
  throw std::invalid_argument("unknown subcommand " + cfg.subcommand);
}

void write_outputs(const std::filesystem::path& dir, const std::string& subcommand, const CommandResult& r) {
  std::filesystem::create_directories(dir);
  std::ofstream(dir / (subcommand + ".json")) << r.report.dump(2) << '\n';
  for (const auto& a : r.artifacts) std::ofstream(dir / a.name) << a.content;
}

}  // namespace heisenkep::cli
