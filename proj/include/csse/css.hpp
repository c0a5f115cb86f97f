#pragma once

// Finite superpositions of coherent states, single-mode and two-mode.

#include <vector>

#include "csse/state_core.hpp"

namespace csse {

inline constexpr double kMergeTolerance = 1e-12;
inline constexpr double kDegenerateNorm = 1e-14;

struct CssTerm {
  cplx coeff;
  cplx amp;
};

class CoherentSuperposition {
 public:
  CoherentSuperposition() = default;
  CoherentSuperposition(std::initializer_list<CssTerm> terms);

  /// Adds a term, merging into an existing one whose amplitude is within kMergeTolerance.
  void add(cplx coeff, cplx amp);

  const std::vector<CssTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool normalized() const { return normalized_; }

  CoherentSuperposition scaled(cplx factor) const;
  /// Complex conjugate state: conj coefficients and conj amplitudes.
  CoherentSuperposition conjugated() const;
  double max_abs_amplitude() const;

 private:
  friend CoherentSuperposition css_normalize(const CoherentSuperposition& s);
  std::vector<CssTerm> terms_;
  bool normalized_ = false;
};

/// <s|t> through the coherent-state Gram matrix.
cplx css_inner(const CoherentSuperposition& s, const CoherentSuperposition& t);
double css_norm_squared(const CoherentSuperposition& s);

/// Throws DegenerateSuperposition when the Gram norm^2 is <= 1e-14.
CoherentSuperposition css_normalize(const CoherentSuperposition& s);

/// Throws TailTooHeavy if any amplitude does not fit below n_max or the
/// truncated vector's norm drifts from 1 by more than 1e-8.
FockVector css_to_fock(const CoherentSuperposition& s, int n_max = kDefaultNMax,
                       double tail_threshold = kTailThreshold);

/// <target|s> = sum_j c_j <target|alpha_j>. Exact as long as the target itself
/// is converged at its cutoff; the superposition is never truncated.
cplx css_target_overlap(const CoherentSuperposition& s, const FockVector& target);

/// 1 - |<target|s>|^2 for a Gram-normalized superposition (normalizes a copy
/// if needed). Throws NotNormalized for an unnormalized target.
double css_misfit(const CoherentSuperposition& s, const FockVector& target);

/// Superposition of product coherent states, one mode destined for homodyne
/// detection and one kept.
struct TwoModeTerm {
  cplx coeff;
  cplx measured;
  cplx kept;
};

class TwoModeCss {
 public:
  void add(cplx coeff, cplx measured, cplx kept);
  const std::vector<TwoModeTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  TwoModeCss scaled(cplx factor) const;

 private:
  std::vector<TwoModeTerm> terms_;
};

double two_mode_norm_squared(const TwoModeCss& s);
/// Throws DegenerateSuperposition like css_normalize.
TwoModeCss two_mode_normalize(const TwoModeCss& s);

/// Which output port of a 50:50 splitter goes to the detector:
/// sum port carries (u+v)/sqrt2, difference port (u-v)/sqrt2.
enum class MeasuredPort { kSum, kDifference };

/// Mixes |first> (x) |second> on a balanced splitter.
TwoModeCss split_50_50(const CoherentSuperposition& first, const CoherentSuperposition& second,
                       MeasuredPort measured);

/// Projects the measured mode on <x_theta|; returns the unnormalized kept-mode
/// superposition. Its Gram norm^2 is the joint density at x.
CoherentSuperposition condition_on_quadrature(const TwoModeCss& s, double theta, double x);

}  // namespace csse
