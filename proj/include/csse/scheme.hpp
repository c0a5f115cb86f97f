#pragma once

// Conditional output states of the two homodyne-heralded schemes.
//
// Scheme 1 uses two splitter units plus a third splitter (three homodyne
// results x1, x2, x3); scheme 2 uses one unit plus a splitter fed by a
// superposition approximating squeezed vacuum (results x1, x2).

#include <string>
#include <vector>

#include "csse/css.hpp"

namespace csse {

enum class SchemeKind { kS1Line, kS1Lattice, kS2Line, kS2Lattice };

std::string scheme_name(SchemeKind kind);
/// Accepts the names produced by scheme_name; throws ConfigError otherwise.
SchemeKind parse_scheme(const std::string& name);
bool is_scheme1(SchemeKind kind);
int measurement_count(SchemeKind kind);
/// Homodyne phase of measurement i (0-based).
double measurement_theta(SchemeKind kind, int index);
/// Phase of the squeezing parameter feeding scheme 2: 0 (line) or pi (lattice).
double s2_squeeze_theta(SchemeKind kind);

inline constexpr int kDefaultCssTerms = 7;

struct SchemeParams {
  SchemeKind kind = SchemeKind::kS1Line;
  double alpha = 0.0;  ///< input magnitude |alpha|
  double phi = 0.0;    ///< phase separation of the two input branches
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;  ///< unused by scheme 2
  double r = 0.0;
  double gamma = 1.0;
  int n_css = kDefaultCssTerms;

  double beta() const;
  /// alpha^2 sin(phi) wrapped to [-pi, pi): the relative phase between the
  /// vacuum branch and the displaced branches after the first detections.
  double input_phase() const;

  std::vector<double> outcomes() const;
  void set_outcomes(const std::vector<double>& xs);

  bool operator==(const SchemeParams&) const = default;

  /// Throws InvalidArgument when a field is out of its domain.
  void validate() const;

  /// Builds (alpha, phi) with alpha sin(phi/2) = beta and alpha^2 sin(phi) = input_phase
  /// (mod 2 pi), choosing the branch whose phi is closest to phi_ref.
  static SchemeParams from_beta_phase(SchemeKind kind, double beta, double input_phase,
                                      double phi_ref);
  /// Keeps phi exactly and moves alpha to the nearest value realizing input_phase.
  /// beta_hint selects the branch (beta changes by a relative O(pi / alpha^2 sin phi)).
  static SchemeParams fixed_phi(SchemeKind kind, double phi, double beta_hint,
                                double input_phase);
};

/// Single-unit detection coefficients: the kept mode after the first splitter
/// unit is coeff0 |0> + coeff1 (|d> + |-d>).
struct IntermediateCoeffs {
  cplx a0, a1;
  cplx b0, b1;    ///< second unit, line inputs, x-quadrature (scheme 1 line)
  cplx b0p, b1p;  ///< second unit, lattice inputs, y-quadrature (scheme 1 lattice)
};

IntermediateCoeffs intermediate_coeffs(const SchemeParams& p);

/// Input superposition |A> + |B> of a splitter unit (unit 0 or 1).
CoherentSuperposition unit_input(const SchemeParams& p, int unit);
/// The two-mode state after a unit splitter fed by two copies of unit_input (unnormalized).
TwoModeCss unit_two_mode(const SchemeParams& p, int unit);

/// Result of an output computation: raw keeps the unnormalized coefficients.
struct SchemeOutput {
  CoherentSuperposition raw;
  CoherentSuperposition state;
};

/// Full first-principles pipeline: splitters and quadrature projections.
/// Throws DegenerateSuperposition when the conditional state vanishes.
SchemeOutput scheme_output(const SchemeParams& p);
/// Same, with explicit measurement results overriding those in p.
SchemeOutput scheme_output_at(const SchemeParams& p, const std::vector<double>& outcomes);

CoherentSuperposition scheme1_line_output(const SchemeParams& p);
CoherentSuperposition scheme1_lattice_output(const SchemeParams& p);
CoherentSuperposition scheme2_output(const SchemeParams& p);

/// Vacuum coefficient of the lattice output as printed (<x3|beta>) or as
/// obtained from the splitter algebra (<x3|0>).
enum class VacuumTermForm { kDerived, kPrinted };

/// The closed coefficient formulas, term by term (unnormalized).
CoherentSuperposition transcribed_output(const SchemeParams& p,
                                         VacuumTermForm form = VacuumTermForm::kDerived);

/// Two-mode state in front of measurement `index` (0-based), with earlier
/// measurements conditioned at `outcomes`; unnormalized.
TwoModeCss pre_measurement_state(const SchemeParams& p, int index,
                                 const std::vector<double>& outcomes);

/// Superposition sum_l c'_l |l gamma e^{i theta/2}>, l = -(n-1)/2 .. (n-1)/2, approximating
/// squeezed vacuum with parameter r e^{i theta}; c'_l = exp(-(l gamma)^2 / (e^{2r} - 1)).
CoherentSuperposition squeezed_vacuum_css(double r, double theta, int n_terms, double gamma);

struct SqueezedVacuumFit {
  CoherentSuperposition state;
  double gamma;
  double epsilon;
};

/// Misfit of the approximation against squeezed_vacuum(r, theta); with optimize_gamma
/// gamma is chosen by a grid scan on [0.05, 3] refined by Brent's method.
SqueezedVacuumFit fit_squeezed_vacuum(double r, double theta, int n_terms, bool optimize_gamma,
                                      double gamma = 1.0);

/// Measurement tuples related to p by the sign/swap maps under which the
/// output may be unchanged: all sign patterns of (x1, x2) and, for the line
/// variant of scheme 1, the swap x1 <-> x2 with x3 -> -x3. Scheme 2 flips x1
/// only. Identical tuples are listed once; the first entry is p itself.
std::vector<SchemeParams> degenerate_candidates(const SchemeParams& p);

}  // namespace csse
