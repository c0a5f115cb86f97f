#pragma once

// Run configuration: JSON schema, validation and defaults.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "csse/metrics.hpp"
#include "csse/optimizer.hpp"

namespace csse::cli {

inline constexpr int kSchemaVersion = 1;

enum class Mode { kOptimize, kEvaluate, kProbSweep, kSqvacApprox, kTable };

std::string mode_name(Mode mode);

/// Explicit parameters for evaluate and prob-sweep. beta defaults to
/// alpha sin(phi/2). With input_phase set, alpha is rebuilt at fixed phi;
/// with profile_input_phase the phase is scanned for the lowest misfit.
struct ExplicitParams {
  std::optional<double> alpha;
  double phi = 0.0;
  std::optional<double> beta;
  std::optional<double> input_phase;
  bool profile_input_phase = false;
  std::vector<double> x;
  double r = 0.0;
  double gamma = 1.0;
  int n_css = kDefaultCssTerms;
};

struct SqvacConfig {
  std::vector<double> r{0.3, 0.5, 0.85};
  double theta = 0.0;
  std::vector<int> n_terms{1, 3, 5, 7};
  bool optimize_gamma = true;
  double gamma = 1.0;
};

struct TableConfig {
  std::string id;
  bool optimize = false;
};

struct RunConfig {
  Mode mode = Mode::kEvaluate;
  std::optional<SchemeKind> scheme;
  std::string target;
  std::optional<ExplicitParams> params;
  Bounds bounds;
  GaConfig ga;
  std::optional<double> phi_fixed;
  WindowConfig window;
  std::vector<double> deltas;
  SqvacConfig sqvac;
  TableConfig table;
  std::string out_path;
  std::string format;  ///< "json" or "csv"; empty picks the mode's default
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// Throws ConfigError on unknown keys, wrong types or missing mode requirements.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Output format actually used: explicit format, else json for optimize/evaluate, csv otherwise.
std::string effective_format(const RunConfig& cfg);

}  // namespace csse::cli
