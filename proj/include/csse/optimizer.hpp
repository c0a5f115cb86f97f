#pragma once

// Genetic-algorithm search over scheme parameters.

#include <cstdint>
#include <vector>

#include "csse/metrics.hpp"
#include "csse/targets.hpp"

namespace csse {

struct Interval {
  double lo;
  double hi;
  double width() const { return hi - lo; }
  bool contains(double v) const { return v >= lo && v <= hi; }
};

struct Bounds {
  Interval x{-10.0, 10.0};
  Interval phi{5e-4, 5e-2};
  Interval beta{0.05, 2.5};
  Interval r{0.0, 1.5};
  Interval gamma{0.1, 2.0};

  /// Throws InvalidArgument unless lo < hi everywhere and the ranges are physical.
  void validate() const;
};

/// How scheme 2's coherent spacing is chosen: a free gene, or tied to the
/// best-fitting value for the current squeezing.
enum class GammaMode { kFree, kTied };

struct GaConfig {
  int population = 200;
  int generations = 1500;
  int tournament_size = 4;
  double crossover_rate = 0.9;
  double mutation_rate = 0.15;
  double mutation_sigma = 0.05;  ///< fraction of each gene's interval
  int elitism = 2;
  int restarts = 10;
  int stall_generations = 200;
  std::uint64_t rng_seed = 1;
  int jobs = 1;
  /// phi scale used when (alpha, phi) are rebuilt from (beta, input phase).
  double phi_ref = 1e-3;
  GammaMode gamma_mode = GammaMode::kFree;
  int n_css = kDefaultCssTerms;
  int n_max_objective = kDefaultNMax;
  int n_max_final = 96;

  void validate() const;
};

struct OptimizeResult {
  SchemeParams best;
  double epsilon = 1.0;            ///< at n_max_final
  double objective = 1.0;          ///< at n_max_objective
  std::vector<double> history;     ///< best objective per generation, winning restart
  std::vector<double> restart_best;
  std::int64_t evaluations = 0;
};

/// Gene layout: beta, input phase, x1, x2[, x3] (scheme 1) or beta, input phase,
/// x1, x2, r[, gamma] (scheme 2).
int gene_count(SchemeKind kind, GammaMode gamma_mode);

/// Best-fitting gamma for squeezing r, from a precomputed table (linear interpolation).
double tied_gamma(double r, double theta, int n_css);

/// Throws TargetUnbuildable if the target cannot be built at n_max_objective.
OptimizeResult optimize(SchemeKind kind, const TargetSpec& target, const Bounds& bounds,
                        const GaConfig& config);

/// As optimize, with phi held at phi_fixed and alpha adjusted.
OptimizeResult reoptimize_fixed_phi(SchemeKind kind, const TargetSpec& target,
                                    const Bounds& bounds, const GaConfig& config,
                                    double phi_fixed);

struct PhaseProfile {
  SchemeParams params;
  double epsilon = 1.0;
};

/// Holds phi, beta (to within the branch snap) and the results of p fixed and
/// scans the input phase over [-pi, pi), refining the best cell with Brent's method.
PhaseProfile profile_input_phase(const SchemeParams& p, double beta, const FockVector& target);

/// splitmix64 finalizer; exposed so per-row seeds elsewhere use the same mixing.
std::uint64_t mix_seed(std::uint64_t v);

}  // namespace csse
