#include "csse/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "csse/errors.hpp"
#include "csse/quadrature.hpp"
#include "csse/targets.hpp"

namespace csse {

namespace {

constexpr double kProbabilityTolerance = 1e-10;
// Gaussian envelope of each term is exp(-(x - c)^2 / 2); 12 widths is ~e^-72.
constexpr double kSupportHalfWidth = 12.0;

struct Density {
  std::vector<cplx> measured;
  std::vector<cplx> weight;  // row-major M_jk = c_j conj(c_k) <kept_k|kept_j>
  double theta;

  double operator()(double x) const {
    const std::size_t n = measured.size();
    std::vector<cplx> o(n);
    for (std::size_t j = 0; j < n; ++j) o[j] = quadrature_overlap(x, theta, measured[j]);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      cplx row{};
      for (std::size_t k = 0; k < n; ++k) row += weight[j * n + k] * std::conj(o[k]);
      s += (o[j] * row).real();
    }
    return std::max(0.0, s);
  }
};

Density make_density(const TwoModeCss& s, double theta) {
  Density d;
  d.theta = theta;
  const auto& t = s.terms();
  const std::size_t n = t.size();
  d.measured.resize(n);
  d.weight.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    d.measured[j] = t[j].measured;
    for (std::size_t k = 0; k < n; ++k) {
      d.weight[j * n + k] =
          t[j].coeff * std::conj(t[k].coeff) * coherent_overlap(t[k].kept, t[j].kept);
    }
  }
  return d;
}

double integrate_density(const Density& d, double lo, double hi) {
  return std::clamp(integrate_gauss_legendre(std::cref(d), lo, hi, kProbabilityTolerance), 0.0,
                    1.0);
}

bool same_state(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  if (std::norm(css_inner(a, b)) >= kEquivalenceFidelity) return true;
  return std::norm(css_inner(a.conjugated(), b)) >= kEquivalenceFidelity;
}

}  // namespace

void WindowConfig::validate() const {
  if (!(delta > 0.0) || delta > 2.0) throw InvalidArgument("window delta must lie in (0, 2]");
  if (grid_points < 3 || grid_points % 2 == 0) {
    throw InvalidArgument("grid_points must be odd and >= 3");
  }
}

std::function<double(double)> reduced_density_quadrature_pdf(const TwoModeCss& s, double theta) {
  return make_density(s, theta);
}

std::pair<double, double> pdf_support(const TwoModeCss& s, double theta) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& t : s.terms()) {
    const double c = std::sqrt(2.0) * (t.measured * std::polar(1.0, -theta)).real();
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {lo - kSupportHalfWidth, hi + kSupportHalfWidth};
}

double interval_probability(const TwoModeCss& s, double theta, double lo, double hi) {
  return integrate_density(make_density(two_mode_normalize(s), theta), lo, hi);
}

double success_probability(const TwoModeCss& s, double theta, double x_opt, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("success_probability: delta must be > 0");
  const TwoModeCss ns = two_mode_normalize(s);
  // Clip to the support so huge windows do not waste panels on empty tails.
  const auto [lo_s, hi_s] = pdf_support(ns, theta);
  const double lo = std::max(x_opt - delta, lo_s);
  const double hi = std::min(x_opt + delta, hi_s);
  if (lo >= hi) return 0.0;
  return integrate_density(make_density(ns, theta), lo, hi);
}

std::vector<double> window_probabilities(const SchemeParams& p, double delta) {
  const std::vector<double> xs = p.outcomes();
  std::vector<double> out;
  for (int i = 0; i < measurement_count(p.kind); ++i) {
    out.push_back(success_probability(pre_measurement_state(p, i, xs),
                                      measurement_theta(p.kind, i), xs[i], delta));
  }
  return out;
}

ProbabilityResult overall_probability(const SchemeParams& p, const WindowConfig& w) {
  w.validate();
  ProbabilityResult res;
  res.per_measurement_p = window_probabilities(p, w.delta);
  res.window_p = 1.0;
  for (double v : res.per_measurement_p) res.window_p *= v;

  const CoherentSuperposition primary = scheme_output(p).state;
  for (const SchemeParams& q : degenerate_candidates(p)) {
    CoherentSuperposition out;
    try {
      out = scheme_output(q).state;
    } catch (const DegenerateSuperposition&) {
      continue;
    }
    if (!same_state(primary, out)) continue;
    double prod = 1.0;
    for (double v : window_probabilities(q, w.delta)) prod *= v;
    res.overall_p += prod;
    ++res.multiplicity;
  }
  return res;
}

AverageMisfit average_misfit(const SchemeParams& p, const FockVector& target,
                             const WindowConfig& w) {
  w.validate();
  const int m = measurement_count(p.kind);
  const int g = w.grid_points;
  const double h = 2.0 * w.delta / g;
  const std::vector<double> xs = p.outcomes();

  AverageMisfit res;
  res.epsilon_min = std::numeric_limits<double>::infinity();
  res.epsilon_max = -res.epsilon_min;
  double num = 0.0;
  double den = 0.0;
  std::vector<double> centers(m);

  // Depth-first over the tensor grid; fixed order keeps the sums reproducible.
  auto recurse = [&](auto&& self, int level, double weight) -> void {
    if (level == m) {
      double e;
      try {
        e = css_misfit(scheme_output_at(p, centers).state, target);
      } catch (const DegenerateSuperposition&) {
        ++res.degenerate;
        return;
      }
      ++res.evaluated;
      num += weight * e;
      den += weight;
      res.epsilon_min = std::min(res.epsilon_min, e);
      res.epsilon_max = std::max(res.epsilon_max, e);
      return;
    }
    Density d;
    try {
      d = make_density(two_mode_normalize(pre_measurement_state(p, level, centers)),
                       measurement_theta(p.kind, level));
    } catch (const DegenerateSuperposition&) {
      res.degenerate += static_cast<int>(std::pow(g, m - level));
      return;
    }
    for (int i = 0; i < g; ++i) {
      const double lo = xs[level] - w.delta + i * h;
      centers[level] = lo + 0.5 * h;
      self(self, level + 1, weight * integrate_density(d, lo, lo + h));
    }
  };
  recurse(recurse, 0, 1.0);

  if (res.evaluated == 0) {
    throw AllOutcomesDegenerate("average_misfit: every grid point is degenerate");
  }
  res.total_weight = den;
  // Zero total weight only happens for windows far outside the support; fall
  // back to the unweighted mean so the result stays within [min, max].
  res.epsilon_avg = den > 0.0 ? num / den : res.epsilon_min;
  res.epsilon_avg = std::clamp(res.epsilon_avg, res.epsilon_min, res.epsilon_max);
  return res;
}

double scheme_misfit(const SchemeParams& p, const FockVector& target) {
  return css_misfit(scheme_output(p).state, target);
}

RunReport evaluate_report(const SchemeParams& p, const std::string& target_text,
                          const WindowConfig& w, int n_max_final) {
  const TargetSpec spec = parse_target(target_text);
  const FockVector target = build_target(spec, n_max_final);
  RunReport rep;
  rep.mode = "evaluate";
  rep.target = format_target(spec);
  rep.params = p;
  rep.epsilon = scheme_misfit(p, target);
  const ProbabilityResult pr = overall_probability(p, w);
  rep.per_measurement_p = pr.per_measurement_p;
  rep.window_p = pr.window_p;
  rep.overall_p = pr.overall_p;
  rep.multiplicity = pr.multiplicity;
  rep.epsilon_avg = average_misfit(p, target, w).epsilon_avg;
  rep.delta = w.delta;
  rep.grid_points = w.grid_points;
  return rep;
}

}  // namespace csse
