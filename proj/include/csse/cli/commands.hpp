#pragma once

// Mode dispatch for the command-line runner.

#include <optional>
#include <ostream>

#include "csse/cli/config.hpp"
#include "csse/cli/report_io.hpp"
#include "csse/cli/tables.hpp"

namespace csse::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitTolerance = 4,
};

struct ResolvedParams {
  SchemeParams params;
  std::optional<double> epsilon_literal;  ///< misfit at the literal (alpha, phi), when alpha was given
};

/// Turns explicit params into scheme parameters (see ExplicitParams).
ResolvedParams resolve_params(SchemeKind kind, const ExplicitParams& e, const FockVector& target);

RunReport cmd_optimize(const RunConfig& cfg, std::ostream& log);
RunReport cmd_evaluate(const RunConfig& cfg);
ResultTable cmd_prob_sweep(const RunConfig& cfg);
ResultTable cmd_sqvac(const RunConfig& cfg);

struct TableRun {
  ResultTable table;
  int misses = 0;  ///< rows whose epsilon is outside the tolerance factor
};

/// One row of achieved-vs-published figures for a published parameter set.
/// With optimize, the GA is rerun for the row's scheme and target.
TableRun cmd_table(const RunConfig& cfg);

/// Runs the configured mode, writing the result to out and a summary to log.
/// Returns an ExitCode; library errors propagate as exceptions.
int run_mode(const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace csse::cli
