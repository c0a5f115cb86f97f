#include "csse/cli/config.hpp"

#include <fstream>
#include <set>

#include "csse/errors.hpp"
#include "csse/targets.hpp"

namespace csse::cli {

namespace {

using nlohmann::json;

void allow_keys(const json& j, const std::string& where, std::set<std::string> keys) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    if (!keys.count(k)) throw ConfigError(where + ": unknown key '" + k + "'");
  }
}

template <typename T>
T get(const json& j, const std::string& key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

template <typename T>
void maybe(const json& j, const std::string& key, const std::string& where, T& out) {
  if (j.contains(key)) out = get<T>(j, key, where);
}

Interval interval(const json& j, const std::string& key) {
  const auto v = get<std::vector<double>>(j, key, "bounds");
  if (v.size() != 2) throw ConfigError("bounds." + key + ": expected [lo, hi]");
  return {v[0], v[1]};
}

Mode parse_mode(const std::string& s) {
  for (Mode m : {Mode::kOptimize, Mode::kEvaluate, Mode::kProbSweep, Mode::kSqvacApprox,
                 Mode::kTable}) {
    if (mode_name(m) == s) return m;
  }
  throw ConfigError("mode: unknown '" + s +
                    "' (optimize, evaluate, prob-sweep, sqvac-approx, table)");
}

ExplicitParams parse_params(const json& j) {
  allow_keys(j, "params",
             {"alpha", "phi", "beta", "input_phase", "profile_input_phase", "x", "r", "gamma",
              "n_css"});
  ExplicitParams p;
  if (j.contains("alpha")) p.alpha = get<double>(j, "alpha", "params");
  p.phi = get<double>(j, "phi", "params");
  if (j.contains("beta")) p.beta = get<double>(j, "beta", "params");
  if (j.contains("input_phase")) p.input_phase = get<double>(j, "input_phase", "params");
  maybe(j, "profile_input_phase", "params", p.profile_input_phase);
  p.x = get<std::vector<double>>(j, "x", "params");
  maybe(j, "r", "params", p.r);
  maybe(j, "gamma", "params", p.gamma);
  maybe(j, "n_css", "params", p.n_css);
  if (!p.alpha && !p.beta) throw ConfigError("params: need alpha or beta");
  if (!p.alpha && !p.input_phase && !p.profile_input_phase) {
    throw ConfigError("params: without alpha, give input_phase or profile_input_phase");
  }
  return p;
}

void parse_ga(const json& j, RunConfig& cfg) {
  allow_keys(j, "ga",
             {"population", "generations", "tournament_size", "crossover_rate", "mutation_rate",
              "mutation_sigma", "elitism", "restarts", "stall_generations", "phi_ref",
              "gamma_mode", "n_css", "n_max_objective", "n_max_final", "phi_fixed"});
  GaConfig& g = cfg.ga;
  maybe(j, "population", "ga", g.population);
  maybe(j, "generations", "ga", g.generations);
  maybe(j, "tournament_size", "ga", g.tournament_size);
  maybe(j, "crossover_rate", "ga", g.crossover_rate);
  maybe(j, "mutation_rate", "ga", g.mutation_rate);
  maybe(j, "mutation_sigma", "ga", g.mutation_sigma);
  maybe(j, "elitism", "ga", g.elitism);
  maybe(j, "restarts", "ga", g.restarts);
  maybe(j, "stall_generations", "ga", g.stall_generations);
  maybe(j, "phi_ref", "ga", g.phi_ref);
  maybe(j, "n_css", "ga", g.n_css);
  maybe(j, "n_max_objective", "ga", g.n_max_objective);
  maybe(j, "n_max_final", "ga", g.n_max_final);
  if (j.contains("gamma_mode")) {
    const auto m = get<std::string>(j, "gamma_mode", "ga");
    if (m == "free") {
      g.gamma_mode = GammaMode::kFree;
    } else if (m == "tied") {
      g.gamma_mode = GammaMode::kTied;
    } else {
      throw ConfigError("ga.gamma_mode: expected 'free' or 'tied'");
    }
  }
  if (j.contains("phi_fixed")) cfg.phi_fixed = get<double>(j, "phi_fixed", "ga");
}

}  // namespace

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::kOptimize: return "optimize";
    case Mode::kEvaluate: return "evaluate";
    case Mode::kProbSweep: return "prob-sweep";
    case Mode::kSqvacApprox: return "sqvac-approx";
    case Mode::kTable: return "table";
  }
  return "?";
}

RunConfig parse_config(const json& j) {
  allow_keys(j, "config",
             {"schema_version", "mode", "scheme", "target", "params", "bounds", "ga", "window",
              "deltas", "sqvac", "table", "output", "rng_seed", "jobs"});
  if (!j.contains("schema_version") || get<int>(j, "schema_version", "config") != kSchemaVersion) {
    throw ConfigError("config: schema_version must be " + std::to_string(kSchemaVersion));
  }
  RunConfig cfg;
  cfg.mode = parse_mode(get<std::string>(j, "mode", "config"));
  if (j.contains("scheme")) cfg.scheme = parse_scheme(get<std::string>(j, "scheme", "config"));
  if (j.contains("target")) {
    cfg.target = get<std::string>(j, "target", "config");
    cfg.target = format_target(parse_target(cfg.target));
  }
  if (j.contains("params")) cfg.params = parse_params(j.at("params"));
  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    allow_keys(b, "bounds", {"x", "phi", "beta", "r", "gamma"});
    if (b.contains("x")) cfg.bounds.x = interval(b, "x");
    if (b.contains("phi")) cfg.bounds.phi = interval(b, "phi");
    if (b.contains("beta")) cfg.bounds.beta = interval(b, "beta");
    if (b.contains("r")) cfg.bounds.r = interval(b, "r");
    if (b.contains("gamma")) cfg.bounds.gamma = interval(b, "gamma");
  }
  if (j.contains("ga")) parse_ga(j.at("ga"), cfg);
  if (j.contains("window")) {
    const json& w = j.at("window");
    allow_keys(w, "window", {"delta", "grid_points"});
    maybe(w, "delta", "window", cfg.window.delta);
    maybe(w, "grid_points", "window", cfg.window.grid_points);
  }
  maybe(j, "deltas", "config", cfg.deltas);
  if (j.contains("sqvac")) {
    const json& s = j.at("sqvac");
    allow_keys(s, "sqvac", {"r", "theta", "n_terms", "optimize_gamma", "gamma"});
    maybe(s, "r", "sqvac", cfg.sqvac.r);
    maybe(s, "theta", "sqvac", cfg.sqvac.theta);
    maybe(s, "n_terms", "sqvac", cfg.sqvac.n_terms);
    maybe(s, "optimize_gamma", "sqvac", cfg.sqvac.optimize_gamma);
    maybe(s, "gamma", "sqvac", cfg.sqvac.gamma);
  }
  if (j.contains("table")) {
    const json& t = j.at("table");
    allow_keys(t, "table", {"id", "optimize"});
    cfg.table.id = get<std::string>(t, "id", "table");
    maybe(t, "optimize", "table", cfg.table.optimize);
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    allow_keys(o, "output", {"path", "format"});
    maybe(o, "path", "output", cfg.out_path);
    maybe(o, "format", "output", cfg.format);
  }
  maybe(j, "rng_seed", "config", cfg.seed);
  maybe(j, "jobs", "config", cfg.jobs);

  // Per-mode requirements.
  const bool needs_problem = cfg.mode == Mode::kOptimize || cfg.mode == Mode::kEvaluate ||
                             cfg.mode == Mode::kProbSweep;
  if (needs_problem && (!cfg.scheme || cfg.target.empty())) {
    throw ConfigError(mode_name(cfg.mode) + ": scheme and target are required");
  }
  if ((cfg.mode == Mode::kEvaluate || cfg.mode == Mode::kProbSweep) && !cfg.params) {
    throw ConfigError(mode_name(cfg.mode) + ": params are required");
  }
  if (cfg.params && cfg.scheme &&
      static_cast<int>(cfg.params->x.size()) != measurement_count(*cfg.scheme)) {
    throw ConfigError("params.x: " + scheme_name(*cfg.scheme) + " takes " +
                      std::to_string(measurement_count(*cfg.scheme)) + " results");
  }
  if (cfg.mode == Mode::kProbSweep) {
    if (cfg.deltas.empty()) throw ConfigError("prob-sweep: deltas are required");
    for (std::size_t i = 1; i < cfg.deltas.size(); ++i) {
      if (!(cfg.deltas[i] > cfg.deltas[i - 1])) {
        throw ConfigError("prob-sweep: deltas must be strictly increasing");
      }
    }
  }
  if (cfg.mode == Mode::kTable && cfg.table.id.empty()) {
    throw ConfigError("table: table.id is required");
  }
  if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "csv") {
    throw ConfigError("output.format: expected json or csv");
  }
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  try {
    cfg.window.validate();
    cfg.bounds.validate();
    cfg.ga.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return parse_config(j);
}

std::string effective_format(const RunConfig& cfg) {
  if (!cfg.format.empty()) return cfg.format;
  return (cfg.mode == Mode::kOptimize || cfg.mode == Mode::kEvaluate) ? "json" : "csv";
}

}  // namespace csse::cli
