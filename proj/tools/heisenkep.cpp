#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "heisenkep/cli/commands.hpp"

using namespace heisenkep;

int main(int argc, char** argv) {
  CLI::App app{"heisenkep: Kepler and two-body problems on the Heisenberg group"};
  app.require_subcommand(1);
  std::string config_path, out_dir, format = "json";
  std::uint64_t seed = 0;
  bool plucker_only = false;
  for (const char* name : {"simulate", "verify", "ve", "galois", "factorize", "sweep"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (std::string(name) == "factorize") sub->add_flag("--plucker-only", plucker_only, "only evaluate the Plucker quadric");
  }
  CLI11_PARSE(app, argc, argv);

  cli::RunConfig cfg;
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.seed = seed;
  cfg.format = format == "csv" ? cli::OutputFormat::Csv : cli::OutputFormat::Json;
  cfg.plucker_only = plucker_only;
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (const char* env = std::getenv("HEISENKEP_THREADS")) {
    try {
      cfg.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring HEISENKEP_THREADS=" << env << '\n';
    }
  }
  try {
    cfg.config = cli::load_config(config_path);
    cli::CommandResult r = cli::run_command(cfg);
    std::cout << r.report.dump(2) << '\n';
    if (cfg.out_dir) cli::write_outputs(*cfg.out_dir, cfg.subcommand, r);
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cout << heisenkep::Json{{"subcommand", cfg.subcommand}, {"seed", cfg.seed}, {"error", e.what()}}.dump(2) << '\n';
    return 2;
  }
}
