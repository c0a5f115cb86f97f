#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "csse/cli/commands.hpp"
#include "csse/errors.hpp"

int main(int argc, char** argv) {
  using namespace csse::cli;
  CLI::App app{"Conditional coherent-state superposition schemes: search and verification"};
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::string out_path;
  std::string format;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--seed", seed, "RNG seed (overrides rng_seed)");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    RunConfig cfg = load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (jobs) cfg.jobs = *jobs;
    if (!out_path.empty()) cfg.out_path = out_path;
    if (!format.empty()) cfg.format = format;

    std::ostringstream buf;
    const int rc = run_mode(cfg, buf, std::cerr);
    if (cfg.out_path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(cfg.out_path);
      if (!f) throw csse::ConfigError("cannot write '" + cfg.out_path + "'");
      f << buf.str();
    }
    return rc;
  } catch (const csse::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const csse::Error& e) {
    std::cerr << csse::error_code_name(e.code()) << ": " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
