#pragma once

// Brute-force two-mode photon-number-basis simulation of both schemes.
// Slow and memory hungry; meant for verification only.

#include <Eigen/Dense>

#include "csse/scheme.hpp"

namespace csse {

inline constexpr int kOracleNMax = 80;

/// Amplitudes c(n0, n1) of a two-mode state truncated at n_max per mode.
class TwoModeFock {
 public:
  TwoModeFock() = default;
  explicit TwoModeFock(int n_max);

  int n_max() const { return static_cast<int>(coeffs_.rows()) - 1; }
  cplx& operator()(int n0, int n1) { return coeffs_(n0, n1); }
  const cplx& operator()(int n0, int n1) const { return coeffs_(n0, n1); }
  const Eigen::MatrixXcd& matrix() const { return coeffs_; }

  double norm_squared() const { return coeffs_.squaredNorm(); }
  /// Mean of n0 + n1 divided by the norm.
  double mean_total_photons() const;

 private:
  Eigen::MatrixXcd coeffs_;
};

TwoModeFock product_state(const FockVector& mode0, const FockVector& mode1);

/// Balanced splitter with |u>|v> -> |(u+v)/sqrt2>|(u-v)/sqrt2>: mode 0 leaves through
/// the sum port, mode 1 through the difference port. Built per total-photon block as
/// (-1)^{n1} exp(pi/4 (a0^dag a1 - a0 a1^dag)).
/// Throws TailTooHeavy if more than 1e-10 of the norm sits above n0 + n1 = n_max.
TwoModeFock bs50_fock(const TwoModeFock& state);

/// The splitter block acting on |k, N-k>, k = 0..N (exposed for tests).
Eigen::MatrixXd bs50_block(int total);

/// <x_theta| D(frame) |n> for n = 0..n_max.
std::vector<cplx> displaced_quadrature_row(int n_max, double theta, double x, cplx frame);

/// Contracts `measured_mode` against <x_theta| D(frame); returns the other
/// mode, unnormalized.
FockVector project_quadrature(const TwoModeFock& state, int measured_mode, double theta, double x,
                              cplx frame = 0.0);

/// Whole conditional chain in the Fock basis; the large input amplitudes are
/// carried by displacement frames so only the small offsets are truncated.
/// Throws TailTooHeavy or DegenerateSuperposition.
FockVector simulate_scheme(const SchemeParams& p, int n_max = kOracleNMax);

}  // namespace csse
