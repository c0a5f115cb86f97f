#pragma once

// Heralding probabilities and window-averaged misfit.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csse/scheme.hpp"

namespace csse {

struct WindowConfig {
  double delta = 0.35;  ///< half-width shared by all measurement windows
  int grid_points = 9;  ///< odd, per measurement axis

  /// Throws InvalidArgument unless 0 < delta <= 2 and grid_points is odd and >= 3.
  void validate() const;
};

/// Marginal density of the measured quadrature for a (normalized) two-mode superposition.
std::function<double(double)> reduced_density_quadrature_pdf(const TwoModeCss& s, double theta);

/// Interval [lo, hi] outside of which the density is below ~e^-70.
std::pair<double, double> pdf_support(const TwoModeCss& s, double theta);

/// Probability that the result lands in [x_opt - delta, x_opt + delta]; normalizes s first.
double success_probability(const TwoModeCss& s, double theta, double x_opt, double delta);
/// Probability over an arbitrary interval [lo, hi].
double interval_probability(const TwoModeCss& s, double theta, double lo, double hi);

struct ProbabilityResult {
  std::vector<double> per_measurement_p;  ///< windows around p's own results
  double window_p = 0.0;                  ///< product of per_measurement_p
  double overall_p = 0.0;                 ///< summed over equivalent result tuples
  int multiplicity = 0;                   ///< number of equivalent tuples counted
};

/// Fidelity threshold for treating two result tuples as heralding the same state
/// (or its complex conjugate).
inline constexpr double kEquivalenceFidelity = 1.0 - 1e-6;

/// Each measurement is conditioned on the earlier results at their window centres.
std::vector<double> window_probabilities(const SchemeParams& p, double delta);

/// Window probabilities multiplied over measurements, then summed over the
/// members of degenerate_candidates(p) whose output matches p's output.
ProbabilityResult overall_probability(const SchemeParams& p, const WindowConfig& w);

struct AverageMisfit {
  double epsilon_avg = 0.0;
  double epsilon_min = 0.0;
  double epsilon_max = 0.0;
  double total_weight = 0.0;
  int evaluated = 0;
  int degenerate = 0;
};

/// Probability-weighted mean misfit over a tensor grid of subranges of all windows.
/// Throws AllOutcomesDegenerate when no grid point yields a state.
AverageMisfit average_misfit(const SchemeParams& p, const FockVector& target,
                             const WindowConfig& w);

/// Misfit at p, re-evaluated against a target built at `n_max`.
double scheme_misfit(const SchemeParams& p, const FockVector& target);

struct RunReport {
  std::string mode;
  std::string target;
  SchemeParams params;
  double epsilon = 0.0;
  std::optional<double> epsilon_literal;
  std::vector<double> per_measurement_p;
  double window_p = 0.0;
  double overall_p = 0.0;
  int multiplicity = 0;
  double epsilon_avg = 0.0;
  double delta = 0.0;
  int grid_points = 0;
  std::optional<double> gamma_fit_epsilon;
  std::uint64_t seed = 0;
  int evaluations = 0;

  bool operator==(const RunReport&) const = default;
};

/// Fills epsilon, probabilities and epsilon_avg for given parameters.
RunReport evaluate_report(const SchemeParams& p, const std::string& target_text,
                          const WindowConfig& w, int n_max_final = 96);

}  // namespace csse
