#include "csse/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "csse/errors.hpp"
#include "csse/targets.hpp"

namespace csse {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const cplx kI{0.0, 1.0};

double wrap_phase(double v) {
  double w = std::remainder(v, 2.0 * kPi);
  if (w >= kPi) w -= 2.0 * kPi;
  return w;
}

// Nearest T = phase + 2 pi k to t_ref with T > 0.
double unwrap_near(double phase, double t_ref) {
  const double k = std::round((t_ref - phase) / (2.0 * kPi));
  double t = phase + 2.0 * kPi * k;
  while (t <= 0.0) t += 2.0 * kPi;
  return t;
}

// Centre lambda and branch offsets (+d, -d) of a unit's input |lambda + d> + |lambda - d>.
// Keeping the offsets separate avoids the cancellation in A - B for large alpha.
struct UnitGeometry {
  cplx center;
  cplx offset;
};

UnitGeometry unit_geometry(const SchemeParams& p, int unit) {
  const double c = std::cos(0.5 * p.phi);
  const double b = p.beta();
  const bool lattice_unit = unit == 1 && p.kind == SchemeKind::kS1Lattice;
  if (lattice_unit) {
    // alpha e^{+-i phi/2} = alpha cos(phi/2) +- i beta
    return {cplx{p.alpha * c, 0.0}, cplx{0.0, b}};
  }
  // i alpha e^{+-i phi/2} = i alpha cos(phi/2) -+ beta
  return {cplx{0.0, p.alpha * c}, cplx{-b, 0.0}};
}

double unit_theta(const SchemeParams& p, int unit) {
  return (unit == 1 && p.kind == SchemeKind::kS1Lattice) ? 0.5 * kPi : 0.0;
}

}  // namespace

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kS1Line: return "S1Line";
    case SchemeKind::kS1Lattice: return "S1Lattice";
    case SchemeKind::kS2Line: return "S2Line";
    case SchemeKind::kS2Lattice: return "S2Lattice";
  }
  return "?";
}

SchemeKind parse_scheme(const std::string& name) {
  for (SchemeKind k : {SchemeKind::kS1Line, SchemeKind::kS1Lattice, SchemeKind::kS2Line,
                       SchemeKind::kS2Lattice}) {
    if (scheme_name(k) == name) return k;
  }
  throw ConfigError("unknown scheme '" + name + "' (S1Line, S1Lattice, S2Line, S2Lattice)");
}

bool is_scheme1(SchemeKind kind) {
  return kind == SchemeKind::kS1Line || kind == SchemeKind::kS1Lattice;
}

int measurement_count(SchemeKind kind) { return is_scheme1(kind) ? 3 : 2; }

double measurement_theta(SchemeKind kind, int index) {
  return (kind == SchemeKind::kS1Lattice && index == 1) ? 0.5 * kPi : 0.0;
}

double s2_squeeze_theta(SchemeKind kind) { return kind == SchemeKind::kS2Lattice ? kPi : 0.0; }

double SchemeParams::beta() const { return alpha * std::sin(0.5 * phi); }

double SchemeParams::input_phase() const { return wrap_phase(alpha * alpha * std::sin(phi)); }

std::vector<double> SchemeParams::outcomes() const {
  if (is_scheme1(kind)) return {x1, x2, x3};
  return {x1, x2};
}

void SchemeParams::set_outcomes(const std::vector<double>& xs) {
  if (static_cast<int>(xs.size()) != measurement_count(kind)) {
    throw InvalidArgument("set_outcomes: " + scheme_name(kind) + " takes " +
                          std::to_string(measurement_count(kind)) + " results");
  }
  x1 = xs[0];
  x2 = xs[1];
  if (is_scheme1(kind)) x3 = xs[2];
}

void SchemeParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(alpha > 0.0) || !finite(alpha)) throw InvalidArgument("alpha must be > 0");
  if (!(phi > 0.0) || !(phi < kPi)) throw InvalidArgument("phi must lie in (0, pi)");
  if (!finite(x1) || !finite(x2) || !finite(x3)) throw InvalidArgument("non-finite outcome");
  if (!is_scheme1(kind)) {
    if (!(r >= 0.0) || !finite(r)) throw InvalidArgument("r must be >= 0");
    if (!(gamma > 0.0) || !finite(gamma)) throw InvalidArgument("gamma must be > 0");
    if (n_css < 1 || n_css % 2 == 0) throw InvalidArgument("n_css must be odd and >= 1");
  }
}

SchemeParams SchemeParams::from_beta_phase(SchemeKind kind, double beta, double input_phase,
                                           double phi_ref) {
  if (!(beta > 0.0) || !(phi_ref > 0.0)) {
    throw InvalidArgument("from_beta_phase: beta and phi_ref must be > 0");
  }
  const double t_ref = 2.0 * beta * beta / std::tan(0.5 * phi_ref);
  const double t = unwrap_near(input_phase, t_ref);
  SchemeParams p;
  p.kind = kind;
  p.phi = 2.0 * std::atan(2.0 * beta * beta / t);
  p.alpha = beta / std::sin(0.5 * p.phi);
  return p;
}

SchemeParams SchemeParams::fixed_phi(SchemeKind kind, double phi, double beta_hint,
                                     double input_phase) {
  if (!(beta_hint > 0.0) || !(phi > 0.0)) {
    throw InvalidArgument("fixed_phi: beta and phi must be > 0");
  }
  const double t_ref = 2.0 * beta_hint * beta_hint / std::tan(0.5 * phi);
  const double t = unwrap_near(input_phase, t_ref);
  SchemeParams p;
  p.kind = kind;
  p.phi = phi;
  p.alpha = std::sqrt(t / std::sin(phi));
  return p;
}

IntermediateCoeffs intermediate_coeffs(const SchemeParams& p) {
  const double h = 0.5 * p.phi;
  const cplx plus = kSqrt2 * p.alpha * kI * std::polar(1.0, h);
  const cplx minus = kSqrt2 * p.alpha * kI * std::polar(1.0, -h);
  const cplx mid = kSqrt2 * p.alpha * kI * std::cos(h);
  const cplx plus_r = kSqrt2 * p.alpha * std::polar(1.0, h);
  const cplx minus_r = kSqrt2 * p.alpha * std::polar(1.0, -h);
  const cplx mid_r = kSqrt2 * p.alpha * std::cos(h);
  IntermediateCoeffs c;
  c.a0 = quadrature_overlap(p.x1, 0.0, plus) + quadrature_overlap(p.x1, 0.0, minus);
  c.a1 = quadrature_overlap(p.x1, 0.0, mid);
  c.b0 = quadrature_overlap(p.x2, 0.0, plus) + quadrature_overlap(p.x2, 0.0, minus);
  c.b1 = quadrature_overlap(p.x2, 0.0, mid);
  c.b0p = quadrature_overlap(p.x2, 0.5 * kPi, plus_r) + quadrature_overlap(p.x2, 0.5 * kPi, minus_r);
  c.b1p = quadrature_overlap(p.x2, 0.5 * kPi, mid_r);
  return c;
}

CoherentSuperposition unit_input(const SchemeParams& p, int unit) {
  const UnitGeometry g = unit_geometry(p, unit);
  CoherentSuperposition s;
  s.add(1.0, g.center + g.offset);
  s.add(1.0, g.center - g.offset);
  return s;
}

TwoModeCss unit_two_mode(const SchemeParams& p, int unit) {
  // Sum port to the detector, difference port kept:
  // measured (u+v)/sqrt2 = sqrt2 lambda + (du+dv)/sqrt2, kept (du-dv)/sqrt2.
  const UnitGeometry g = unit_geometry(p, unit);
  const cplx offsets[2] = {g.offset, -g.offset};
  TwoModeCss out;
  for (const cplx du : offsets) {
    for (const cplx dv : offsets) {
      out.add(1.0, kSqrt2 * g.center + (du + dv) / kSqrt2, (du - dv) / kSqrt2);
    }
  }
  return out;
}

CoherentSuperposition squeezed_vacuum_css(double r, double theta, int n_terms, double gamma) {
  if (n_terms < 1 || n_terms % 2 == 0) {
    throw InvalidArgument("squeezed_vacuum_css: number of terms must be odd");
  }
  CoherentSuperposition s;
  if (r == 0.0) {
    s.add(1.0, 0.0);
    return s;
  }
  const int half = (n_terms - 1) / 2;
  const cplx dir = std::polar(1.0, 0.5 * theta);
  const double denom = std::expm1(2.0 * r);
  for (int l = -half; l <= half; ++l) {
    const double lg = l * gamma;
    s.add(std::exp(-lg * lg / denom), lg * dir);
  }
  return s;
}

TwoModeCss pre_measurement_state(const SchemeParams& p, int index,
                                 const std::vector<double>& outcomes) {
  const int count = measurement_count(p.kind);
  if (index < 0 || index >= count) throw InvalidArgument("pre_measurement_state: bad index");
  if (static_cast<int>(outcomes.size()) < index) {
    throw InvalidArgument("pre_measurement_state: missing earlier outcomes");
  }
  if (is_scheme1(p.kind)) {
    if (index < 2) return unit_two_mode(p, index);
    const CoherentSuperposition k1 =
        condition_on_quadrature(unit_two_mode(p, 0), unit_theta(p, 0), outcomes[0]);
    const CoherentSuperposition k2 =
        condition_on_quadrature(unit_two_mode(p, 1), unit_theta(p, 1), outcomes[1]);
    return split_50_50(k1, k2, MeasuredPort::kDifference);
  }
  if (index == 0) return unit_two_mode(p, 0);
  const CoherentSuperposition k1 = condition_on_quadrature(unit_two_mode(p, 0), 0.0, outcomes[0]);
  return split_50_50(k1, squeezed_vacuum_css(p.r, s2_squeeze_theta(p.kind), p.n_css, p.gamma),
                     MeasuredPort::kSum);
}

SchemeOutput scheme_output_at(const SchemeParams& p, const std::vector<double>& outcomes) {
  const int last = measurement_count(p.kind) - 1;
  if (static_cast<int>(outcomes.size()) != last + 1) {
    throw InvalidArgument("scheme_output_at: wrong number of outcomes");
  }
  SchemeOutput out;
  out.raw = condition_on_quadrature(pre_measurement_state(p, last, outcomes),
                                    measurement_theta(p.kind, last), outcomes[last]);
  out.state = css_normalize(out.raw);
  return out;
}

SchemeOutput scheme_output(const SchemeParams& p) { return scheme_output_at(p, p.outcomes()); }

CoherentSuperposition scheme1_line_output(const SchemeParams& p) {
  if (p.kind != SchemeKind::kS1Line) throw InvalidArgument("scheme1_line_output: wrong scheme");
  return scheme_output(p).state;
}

CoherentSuperposition scheme1_lattice_output(const SchemeParams& p) {
  if (p.kind != SchemeKind::kS1Lattice) {
    throw InvalidArgument("scheme1_lattice_output: wrong scheme");
  }
  return scheme_output(p).state;
}

CoherentSuperposition scheme2_output(const SchemeParams& p) {
  if (is_scheme1(p.kind)) throw InvalidArgument("scheme2_output: wrong scheme");
  return scheme_output(p).state;
}

CoherentSuperposition transcribed_output(const SchemeParams& p, VacuumTermForm form) {
  const IntermediateCoeffs ic = intermediate_coeffs(p);
  const double b = p.beta();
  auto ov3 = [&](cplx a) { return quadrature_overlap(p.x3, 0.0, a); };
  CoherentSuperposition s;
  switch (p.kind) {
    case SchemeKind::kS1Line: {
      s.add(ic.a1 * ic.b1 * ov3(0.0), -2.0 * b);
      s.add(ic.a0 * ic.b1 * ov3(b) + ic.a1 * ic.b0 * ov3(-b), -b);
      s.add(ic.a0 * ic.b0 * ov3(0.0) + ic.a1 * ic.b1 * ov3(2.0 * b) + ic.a1 * ic.b1 * ov3(-2.0 * b),
            0.0);
      s.add(ic.a0 * ic.b1 * ov3(-b) + ic.a1 * ic.b0 * ov3(b), b);
      s.add(ic.a1 * ic.b1 * ov3(0.0), 2.0 * b);
      break;
    }
    case SchemeKind::kS1Lattice: {
      const cplx a[2] = {ic.a0, ic.a1};
      const cplx bp[2] = {ic.b0p, ic.b1p};
      for (int k = -1; k <= 1; ++k) {
        for (int l = -1; l <= 1; ++l) {
          cplx probe = k * b - kI * (l * b);
          if (k == 0 && l == 0 && form == VacuumTermForm::kPrinted) probe = b;
          s.add(a[std::abs(k)] * bp[std::abs(l)] * ov3(probe), k * b + kI * (l * b));
        }
      }
      break;
    }
    case SchemeKind::kS2Line:
    case SchemeKind::kS2Lattice: {
      const cplx a[2] = {ic.a0, ic.a1};
      const CoherentSuperposition sv =
          squeezed_vacuum_css(p.r, s2_squeeze_theta(p.kind), p.n_css, p.gamma);
      for (int k = -1; k <= 1; ++k) {
        for (const auto& t : sv.terms()) {
          const cplx shift = t.amp / kSqrt2;
          s.add(a[std::abs(k)] * t.coeff * quadrature_overlap(p.x2, 0.0, k * b + shift),
                k * b - shift);
        }
      }
      break;
    }
  }
  return s;
}

SqueezedVacuumFit fit_squeezed_vacuum(double r, double theta, int n_terms, bool optimize_gamma,
                                      double gamma) {
  if (!(r >= 0.0)) throw InvalidArgument("fit_squeezed_vacuum: r must be >= 0");
  if (r == 0.0) return {squeezed_vacuum_css(0.0, theta, n_terms, gamma), gamma, 0.0};
  // Cutoff large enough that the closed-form target is converged.
  const double t = std::tanh(r);
  const int n_max =
      std::max(kDefaultNMax, 2 * static_cast<int>(std::ceil(std::log(1e-16) / std::log(t) / 2.0)) + 16);
  const FockVector target = squeezed_vacuum(r, theta, n_max);
  auto eps = [&](double g) {
    return css_misfit(css_normalize(squeezed_vacuum_css(r, theta, n_terms, g)), target);
  };
  double g_best = gamma;
  if (optimize_gamma && n_terms > 1) {
    constexpr int kGrid = 60;
    constexpr double lo = 0.05;
    constexpr double hi = 3.0;
    const double step = (hi - lo) / kGrid;
    int i_best = 0;
    double e_best = 2.0;
    for (int i = 0; i <= kGrid; ++i) {
      const double e = eps(lo + i * step);
      if (e < e_best) {
        e_best = e;
        i_best = i;
      }
    }
    const double a = std::max(lo, lo + (i_best - 1) * step);
    const double b = std::min(hi, lo + (i_best + 1) * step);
    g_best = boost::math::tools::brent_find_minima(eps, a, b, 40).first;
  }
  const CoherentSuperposition s = css_normalize(squeezed_vacuum_css(r, theta, n_terms, g_best));
  return {s, g_best, css_misfit(s, target)};
}

std::vector<SchemeParams> degenerate_candidates(const SchemeParams& p) {
  std::vector<SchemeParams> out;
  auto push = [&](double a, double b, double c) {
    for (const auto& q : out) {
      if (q.x1 == a && q.x2 == b && q.x3 == c) return;
    }
    SchemeParams q = p;
    q.x1 = a;
    q.x2 = b;
    q.x3 = c;
    out.push_back(q);
  };
  if (!is_scheme1(p.kind)) {
    push(p.x1, p.x2, p.x3);
    push(-p.x1, p.x2, p.x3);
    return out;
  }
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) push(s1 * p.x1, s2 * p.x2, p.x3);
  }
  if (p.kind == SchemeKind::kS1Line) {
    for (double s1 : {1.0, -1.0}) {
      for (double s2 : {1.0, -1.0}) push(s2 * p.x2, s1 * p.x1, -p.x3);
    }
  }
  return out;
}

}  // namespace csse
