#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heisenkep/dynamics/integrator.hpp"
#include "heisenkep/exactalg/serialize.hpp"
#include "heisenkep/model/system.hpp"

namespace heisenkep::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::string subcommand;
  Json config = Json::object();
  std::optional<std::filesystem::path> out_dir;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Json;
  bool plucker_only = false;
  /// Sweep parallelism; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// A file to be written under the output directory.
struct Artifact {
  std::string name;
  std::string content;
};

struct CommandResult {
  int exit_code = 0;
  Json report = Json::object();
  std::vector<Artifact> artifacts;
};

/// Reads a JSON file; throws ParseError with the path on failure.
Json load_config(const std::filesystem::path& path);

IntegratorConfig integrator_from_json(const Json& j);

/// Dispatches on cfg.subcommand.  Errors inside a subcommand surface as exceptions.
CommandResult run_command(const RunConfig& cfg);

CommandResult cmd_simulate(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_ve(const RunConfig& cfg);
CommandResult cmd_galois(const RunConfig& cfg);
CommandResult cmd_factorize(const RunConfig& cfg);

/// Positions uniform in [-2, 2], momenta uniform in [-1, 1]; redrawn while rho < 0.1.
PhaseState random_phase_state(const SystemSpec& spec, std::mt19937_64& rng);

/// Writes the report as <subcommand>.json plus the artifacts; creates the directory.
void write_outputs(const std::filesystem::path& dir, const std::string& subcommand, const CommandResult& r);

}  // namespace heisenkep::cli
