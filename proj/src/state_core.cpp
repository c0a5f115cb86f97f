#include "csse/state_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "csse/errors.hpp"

namespace csse {

namespace {

constexpr int kLogFactorialSwitch = 150;
const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTailTooHeavy: return "TailTooHeavy";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kDegenerateSuperposition: return "DegenerateSuperposition";
    case ErrorCode::kTargetUnbuildable: return "TargetUnbuildable";
    case ErrorCode::kAllOutcomesDegenerate: return "AllOutcomesDegenerate";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

FockVector::FockVector(int n_max) {
  if (n_max < 0) throw InvalidArgument("FockVector: negative n_max");
  coeffs_.assign(static_cast<std::size_t>(n_max) + 1, cplx{});
}

FockVector::FockVector(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("FockVector: empty coefficient list");
}

double FockVector::norm_squared() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

FockVector FockVector::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw InvalidArgument("FockVector::normalized: zero or non-finite vector");
  }
  FockVector out = *this;
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

FockVector FockVector::resized(int n_max) const {
  FockVector out(n_max);
  const int common = std::min(n_max, this->n_max());
  for (int n = 0; n <= common; ++n) out[n] = (*this)[n];
  return out;
}

double FockVector::tail_mass() const {
  double s = 0.0;
  const int first = std::max(0, n_max() - kTailGuard + 1);
  for (int n = first; n <= n_max(); ++n) s += std::norm((*this)[n]);
  return s;
}

double FockVector::mean_photon_number() const {
  double s = 0.0;
  for (int n = 1; n <= n_max(); ++n) s += n * std::norm((*this)[n]);
  return s;
}

cplx inner(const FockVector& a, const FockVector& b) {
  const int common = std::min(a.n_max(), b.n_max());
  cplx s{};
  for (int n = 0; n <= common; ++n) s += std::conj(a[n]) * b[n];
  return s;
}

double log_sqrt_factorial(int n) {
  if (n < 0) throw InvalidArgument("log_sqrt_factorial: negative argument");
  if (n > kLogFactorialSwitch) return 0.5 * std::lgamma(static_cast<double>(n) + 1.0);
  double s = 0.0;
  for (int k = 2; k <= n; ++k) s += std::log(static_cast<double>(k));
  return 0.5 * s;
}

double hermite_psi(int n, double x) {
  if (n < 0) throw InvalidArgument("hermite_psi: negative index " + std::to_string(n));
  return hermite_psi_table(n, x)[static_cast<std::size_t>(n)];
}

std::vector<double> hermite_psi_table(int n_max, double x) {
  if (n_max < 0) throw InvalidArgument("hermite_psi_table: negative n_max");
  std::vector<double> psi(static_cast<std::size_t>(n_max) + 1);
  psi[0] = kPiQuarter * std::exp(-0.5 * x * x);
  if (n_max >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int n = 2; n <= n_max; ++n) {
    psi[n] = std::sqrt(2.0 / n) * x * psi[n - 1] - std::sqrt((n - 1.0) / n) * psi[n - 2];
  }
  return psi;
}

cplx quadrature_overlap(double x, double theta, cplx alpha) {
  const cplx w = alpha * std::polar(1.0, -theta);
  const double p = w.real();
  const double q = w.imag();
  const double shift = x - std::sqrt(2.0) * p;
  const double phase = std::sqrt(2.0) * x * q - p * q;
  return kPiQuarter * std::exp(-0.5 * shift * shift) * std::polar(1.0, phase);
}

cplx coherent_overlap(cplx a, cplx b) {
  // exp(-|a|^2/2 - |b|^2/2 + conj(a) b) = exp(-|a-b|^2/2 + i Im(conj(a) b))
  const double re = -0.5 * std::norm(a - b);
  const double im = (std::conj(a) * b).imag();
  return std::exp(re) * std::polar(1.0, im);
}

double coherent_tail_mass(double abs_alpha, int n_max) {
  if (abs_alpha == 0.0) return n_max - kTailGuard + 1 <= 0 ? 1.0 : 0.0;
  const double mean = abs_alpha * abs_alpha;
  const double log_mean = std::log(mean);
  const int first = std::max(0, n_max - kTailGuard + 1);
  double s = 0.0;
  for (int n = first;; ++n) {
    const double term = std::exp(-mean + n * log_mean - 2.0 * log_sqrt_factorial(n));
    s += term;
    if (n > mean && term < 1e-18 * std::max(s, 1e-300)) break;
    if (n > first + 100000) break;
  }
  return s;
}

FockVector coherent_to_fock(cplx alpha, int n_max, double tail_threshold) {
  const double r = std::abs(alpha);
  if (coherent_tail_mass(r, n_max) >= tail_threshold) {
    throw TailTooHeavy("coherent_to_fock: |alpha| = " + std::to_string(r) +
                       " does not fit below n_max = " + std::to_string(n_max));
  }
  FockVector v(n_max);
  const double half_mean = 0.5 * r * r;
  // Running product alpha^n / sqrt(n!) scaled by exp(-|alpha|^2 / 2).
  cplx c = std::exp(-half_mean);
  v[0] = c;
  const int running_limit = std::min(n_max, kLogFactorialSwitch);
  for (int n = 1; n <= running_limit; ++n) {
    c *= alpha / std::sqrt(static_cast<double>(n));
    v[n] = c;
  }
  if (n_max > kLogFactorialSwitch && r > 0.0) {
    const double log_r = std::log(r);
    const double arg = std::arg(alpha);
    for (int n = kLogFactorialSwitch + 1; n <= n_max; ++n) {
      v[n] = std::polar(std::exp(-half_mean + n * log_r - log_sqrt_factorial(n)), n * arg);
    }
  }
  return v;
}

double misfit(const FockVector& a, const FockVector& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (std::abs(na - 1.0) > 1e-8 || std::abs(nb - 1.0) > 1e-8) {
    throw NotNormalized("misfit: inputs must be normalized (norms^2 " + std::to_string(na) +
                        ", " + std::to_string(nb) + ")");
  }
  const double f = std::norm(inner(a, b));
  return std::clamp(1.0 - f, 0.0, 1.0);
}

FockVector fock_basis_state(int n, int n_max) {
  if (n < 0 || n > n_max) throw InvalidArgument("fock_basis_state: index out of range");
  FockVector v(n_max);
  v[n] = 1.0;
  return v;
}

}  // namespace csse
