#include "csse/css.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "csse/errors.hpp"

namespace csse {

namespace {

bool same_amp(cplx a, cplx b) { return std::abs(a - b) <= kMergeTolerance; }

// <n|alpha> for n = 0..n_max without building a FockVector (no tail check).
void coherent_column(cplx alpha, int n_max, std::vector<cplx>& out) {
  out.resize(static_cast<std::size_t>(n_max) + 1);
  const double r = std::abs(alpha);
  out[0] = std::exp(-0.5 * r * r);
  for (int n = 1; n <= n_max; ++n) {
    out[n] = out[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  }
}

}  // namespace

CoherentSuperposition::CoherentSuperposition(std::initializer_list<CssTerm> terms) {
  for (const auto& t : terms) add(t.coeff, t.amp);
}

void CoherentSuperposition::add(cplx coeff, cplx amp) {
  normalized_ = false;
  for (auto& t : terms_) {
    if (same_amp(t.amp, amp)) {
      t.coeff += coeff;
      return;
    }
  }
  terms_.push_back({coeff, amp});
}

CoherentSuperposition CoherentSuperposition::scaled(cplx factor) const {
  CoherentSuperposition out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  out.normalized_ = normalized_ && std::abs(std::abs(factor) - 1.0) < 1e-15;
  return out;
}

CoherentSuperposition CoherentSuperposition::conjugated() const {
  CoherentSuperposition out = *this;
  for (auto& t : out.terms_) {
    t.coeff = std::conj(t.coeff);
    t.amp = std::conj(t.amp);
  }
  return out;
}

double CoherentSuperposition::max_abs_amplitude() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.amp));
  return m;
}

cplx css_inner(const CoherentSuperposition& s, const CoherentSuperposition& t) {
  cplx sum{};
  for (const auto& a : s.terms()) {
    for (const auto& b : t.terms()) {
      sum += std::conj(a.coeff) * b.coeff * coherent_overlap(a.amp, b.amp);
    }
  }
  return sum;
}

double css_norm_squared(const CoherentSuperposition& s) {
  return std::max(0.0, css_inner(s, s).real());
}

CoherentSuperposition css_normalize(const CoherentSuperposition& s) {
  const double n2 = css_norm_squared(s);
  if (!(n2 > kDegenerateNorm) || !std::isfinite(n2)) {
    throw DegenerateSuperposition("css_normalize: Gram norm^2 = " + std::to_string(n2));
  }
  CoherentSuperposition out = s.scaled(1.0 / std::sqrt(n2));
  out.normalized_ = true;
  return out;
}

FockVector css_to_fock(const CoherentSuperposition& s, int n_max, double tail_threshold) {
  const CoherentSuperposition ns = s.normalized() ? s : css_normalize(s);
  FockVector v(n_max);
  for (const auto& t : ns.terms()) {
    const FockVector c = coherent_to_fock(t.amp, n_max, tail_threshold);
    for (int n = 0; n <= n_max; ++n) v[n] += t.coeff * c[n];
  }
  const double drift = std::abs(v.norm_squared() - 1.0);
  if (drift >= 1e-8) {
    throw TailTooHeavy("css_to_fock: truncated norm drifts by " + std::to_string(drift));
  }
  return v.normalized();
}

cplx css_target_overlap(const CoherentSuperposition& s, const FockVector& target) {
  std::vector<cplx> column;
  cplx sum{};
  for (const auto& t : s.terms()) {
    coherent_column(t.amp, target.n_max(), column);
    cplx ov{};
    for (int n = 0; n <= target.n_max(); ++n) ov += std::conj(target[n]) * column[n];
    sum += t.coeff * ov;
  }
  return sum;
}

double css_misfit(const CoherentSuperposition& s, const FockVector& target) {
  const double nt = target.norm_squared();
  if (std::abs(nt - 1.0) > 1e-8) {
    throw NotNormalized("css_misfit: target norm^2 " + std::to_string(nt));
  }
  const CoherentSuperposition ns = s.normalized() ? s : css_normalize(s);
  return std::clamp(1.0 - std::norm(css_target_overlap(ns, target)), 0.0, 1.0);
}

void TwoModeCss::add(cplx coeff, cplx measured, cplx kept) {
  for (auto& t : terms_) {
    if (same_amp(t.measured, measured) && same_amp(t.kept, kept)) {
      t.coeff += coeff;
      return;
    }
  }
  terms_.push_back({coeff, measured, kept});
}

TwoModeCss TwoModeCss::scaled(cplx factor) const {
  TwoModeCss out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

double two_mode_norm_squared(const TwoModeCss& s) {
  cplx sum{};
  for (const auto& a : s.terms()) {
    for (const auto& b : s.terms()) {
      sum += std::conj(a.coeff) * b.coeff * coherent_overlap(a.measured, b.measured) *
             coherent_overlap(a.kept, b.kept);
    }
  }
  return std::max(0.0, sum.real());
}

TwoModeCss two_mode_normalize(const TwoModeCss& s) {
  const double n2 = two_mode_norm_squared(s);
  if (!(n2 > kDegenerateNorm) || !std::isfinite(n2)) {
    throw DegenerateSuperposition("two_mode_normalize: Gram norm^2 = " + std::to_string(n2));
  }
  return s.scaled(1.0 / std::sqrt(n2));
}

TwoModeCss split_50_50(const CoherentSuperposition& first, const CoherentSuperposition& second,
                       MeasuredPort measured) {
  const double h = 1.0 / std::sqrt(2.0);
  TwoModeCss out;
  for (const auto& u : first.terms()) {
    for (const auto& v : second.terms()) {
      const cplx sum = (u.amp + v.amp) * h;
      const cplx diff = (u.amp - v.amp) * h;
      if (measured == MeasuredPort::kSum) {
        out.add(u.coeff * v.coeff, sum, diff);
      } else {
        out.add(u.coeff * v.coeff, diff, sum);
      }
    }
  }
  return out;
}

CoherentSuperposition condition_on_quadrature(const TwoModeCss& s, double theta, double x) {
  CoherentSuperposition out;
  for (const auto& t : s.terms()) out.add(t.coeff * quadrature_overlap(x, theta, t.measured), t.kept);
  return out;
}

}  // namespace csse
