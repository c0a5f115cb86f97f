#pragma once

// Target-state families in the photon-number basis.

#include <string>
#include <variant>
#include <vector>

#include "csse/state_core.hpp"

namespace csse {

/// Throws TailTooHeavy when the top levels carry non-negligible mass.
FockVector amplitude_squeezed(double alpha0, double u, double delta, int n_max = kDefaultNMax);
FockVector binomial_state(double p, int m, int n_max = kDefaultNMax);
/// Closed form with S(zeta) = exp((zeta a^dag^2 - conj(zeta) a^2) / 2), so that a
/// real positive r gives positive even coefficients (tanh r)^m sqrt((2m)!)/(2^m m!).
FockVector squeezed_vacuum(double r, double theta, int n_max = kDefaultNMax);
/// S(r)|n> from the exponentiated truncated generator; same sign convention as above.
FockVector squeezed_number(int n, double r, int n_max = kDefaultNMax);
FockVector adhoc_superposition(const std::vector<double>& coeffs, int n_max = kDefaultNMax);

/// The truncated generator (r/2)(a^dag^2 - a^2) on levels 0..dim-1, exponentiated.
/// Exposed for the oracle tests.
std::vector<std::vector<double>> squeeze_operator_dense(double r, int dim);

struct AmplitudeSqueezedSpec {
  double alpha0;
  double u;
  double delta;
  bool operator==(const AmplitudeSqueezedSpec&) const = default;
};
struct BinomialSpec {
  double p;
  int m;
  bool operator==(const BinomialSpec&) const = default;
};
struct SqueezedNumberSpec {
  int n;
  double r;
  bool operator==(const SqueezedNumberSpec&) const = default;
};
struct SqueezedVacuumSpec {
  double r;
  double theta;
  bool operator==(const SqueezedVacuumSpec&) const = default;
};
struct AdHocSpec {
  std::vector<double> coeffs;
  bool operator==(const AdHocSpec&) const = default;
};

using TargetSpec = std::variant<AmplitudeSqueezedSpec, BinomialSpec, SqueezedNumberSpec,
                                SqueezedVacuumSpec, AdHocSpec>;

/// Text form: AS(a0,u,delta), B(p,M), NS(n,r), SV(r,theta), ADHOC(c0,c1,...).
/// "sqrt(2)" style arguments are accepted as sqrt(<number>). Throws ConfigError.
TargetSpec parse_target(const std::string& text);
std::string format_target(const TargetSpec& spec);

/// Throws TargetUnbuildable for invalid parameters or truncation failure.
FockVector build_target(const TargetSpec& spec, int n_max = kDefaultNMax);

}  // namespace csse
