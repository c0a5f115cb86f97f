#pragma once

// Single-mode primitives: truncated Fock vectors, quadrature wavefunctions,
// coherent-state overlaps and the misfit measure.

#include <complex>
#include <span>
#include <vector>

namespace csse {

using cplx = std::complex<double>;

inline constexpr int kDefaultNMax = 64;
inline constexpr double kTailThreshold = 1e-10;
/// Number of top Fock levels inspected by the truncation-tail predicate.
inline constexpr int kTailGuard = 5;

/// State vector in the photon-number basis, truncated at n_max.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(int n_max);
  explicit FockVector(std::vector<cplx> coeffs);

  int n_max() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  cplx& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const cplx& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }

  std::span<const cplx> coeffs() const { return coeffs_; }
  std::span<cplx> coeffs() { return coeffs_; }

  double norm_squared() const;
  /// Throws InvalidArgument for the zero vector.
  FockVector normalized() const;
  /// Copy truncated or zero-padded to a new cutoff.
  FockVector resized(int n_max) const;

  /// Probability mass carried by the top kTailGuard levels (n > n_max - 5).
  double tail_mass() const;
  bool tail_converged(double threshold = kTailThreshold) const {
    return tail_mass() < threshold;
  }

  double mean_photon_number() const;

 private:
  std::vector<cplx> coeffs_;
};

/// <a|b>; vectors of different cutoff are compared on the common levels.
cplx inner(const FockVector& a, const FockVector& b);

/// log(sqrt(n!)), running sum up to n = 150 and lgamma above.
double log_sqrt_factorial(int n);

/// nth harmonic-oscillator eigenfunction <x|n> (real), stable recurrence.
double hermite_psi(int n, double x);
/// psi_0(x) .. psi_{n_max}(x) in one pass.
std::vector<double> hermite_psi_table(int n_max, double x);

/// <x_theta|alpha> for the rotated quadrature X_theta = (a e^{-i theta} + a^dag e^{i theta})/sqrt(2).
/// Evaluated in the algebraically equivalent completed-square form
///   pi^{-1/4} exp(-(x - sqrt2 p)^2 / 2) exp(i (sqrt2 x q - p q)),  p + i q = alpha e^{-i theta},
/// which stays accurate for |alpha| in the thousands.
cplx quadrature_overlap(double x, double theta, cplx alpha);

/// <a|b> for coherent states.
cplx coherent_overlap(cplx a, cplx b);

/// Poisson mass of |alpha> above n_max - kTailGuard.
double coherent_tail_mass(double abs_alpha, int n_max);

/// Throws TailTooHeavy when the coherent state does not fit below n_max.
FockVector coherent_to_fock(cplx alpha, int n_max, double tail_threshold = kTailThreshold);

/// 1 - |<a|b>|^2. Throws NotNormalized if either norm deviates by more than 1e-8.
double misfit(const FockVector& a, const FockVector& b);

FockVector fock_basis_state(int n, int n_max);

}  // namespace csse
