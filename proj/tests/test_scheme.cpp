#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "csse/cli/tables.hpp"
#include "csse/errors.hpp"
#include "csse/optimizer.hpp"
#include "csse/scheme.hpp"
#include "csse/targets.hpp"

using namespace csse;

namespace {

constexpr double kPi = std::numbers::pi;

double fidelity(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  return std::norm(css_inner(css_normalize(a), css_normalize(b)));
}

double row_epsilon(const std::string& table, const std::string& label) {
  const cli::PublishedRow& row = cli::published_row(table, label);
  const FockVector target = build_target(parse_target(row.target), 96);
  return profile_input_phase(cli::literal_params(row), row.beta, target).epsilon;
}

SchemeParams random_params(SchemeKind kind, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> beta(0.3, 1.5), phase(-kPi, kPi), x(-3.0, 3.0),
      phi(1e-3, 1e-2), r(0.0, 1.0), gamma(0.3, 1.5);
  SchemeParams p = SchemeParams::from_beta_phase(kind, beta(rng), phase(rng), phi(rng));
  p.x1 = x(rng);
  p.x2 = x(rng);
  if (is_scheme1(kind)) p.x3 = x(rng);
  if (!is_scheme1(kind)) {
    p.r = r(rng);
    p.gamma = gamma(rng);
  }
  return p;
}

}  // namespace

TEST_CASE("names and measurement phases") {
  for (SchemeKind k : {SchemeKind::kS1Line, SchemeKind::kS1Lattice, SchemeKind::kS2Line,
                       SchemeKind::kS2Lattice}) {
    CHECK(parse_scheme(scheme_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_scheme("S3"), ConfigError);
  CHECK(measurement_theta(SchemeKind::kS1Line, 1) == 0.0);
  CHECK(measurement_theta(SchemeKind::kS1Lattice, 1) == doctest::Approx(0.5 * kPi));
  CHECK(measurement_theta(SchemeKind::kS1Lattice, 2) == 0.0);
  CHECK(measurement_count(SchemeKind::kS2Lattice) == 2);
}

TEST_CASE("parameter rebuild from beta and input phase") {
  for (double phase : {-3.0, -0.1, 0.0, 1.2, 3.1}) {
    const SchemeParams p = SchemeParams::from_beta_phase(SchemeKind::kS1Line, 0.8, phase, 2e-3);
    CHECK(p.beta() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(std::abs(std::remainder(p.input_phase() - phase, 2 * kPi)) < 1e-7);
    const SchemeParams q = SchemeParams::fixed_phi(SchemeKind::kS1Line, 4e-3, 0.8, phase);
    CHECK(q.phi == 4e-3);
    CHECK(std::abs(std::remainder(q.input_phase() - phase, 2 * kPi)) < 1e-7);
    CHECK(std::abs(q.beta() - 0.8) < 0.01);
  }
  SchemeParams bad;
  bad.alpha = -1.0;
  bad.phi = 0.01;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("intermediate coefficient limits") {
  SchemeParams p;
  p.alpha = 3.0;
  p.phi = 1e-9;
  p.x1 = 0.7;
  const IntermediateCoeffs c = intermediate_coeffs(p);
  CHECK(std::abs(c.a0 - 2.0 * c.a1) < 1e-8 * std::abs(c.a1));

  SchemeParams q = SchemeParams::from_beta_phase(SchemeKind::kS1Line, 2.0, 0.4, 1e-2);
  q.x1 = 0.0;
  const IntermediateCoeffs d = intermediate_coeffs(q);
  CHECK(std::abs(d.a1 / d.a0) > 100.0);
}

TEST_CASE("line output: outer coefficients coincide") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 10; ++i) {
    const SchemeParams p = random_params(SchemeKind::kS1Line, rng);
    const CoherentSuperposition s = transcribed_output(p);
    const double b = p.beta();
    cplx lo{}, hi{};
    for (const auto& t : s.terms()) {
      if (std::abs(t.amp + 2.0 * b) < 1e-9) lo = t.coeff;
      if (std::abs(t.amp - 2.0 * b) < 1e-9) hi = t.coeff;
    }
    CHECK(lo == hi);
    CHECK(s.size() == 5);
  }
}

TEST_CASE("closed coefficient formulas equal the splitter pipeline") {
  std::mt19937_64 rng(22);
  for (SchemeKind k : {SchemeKind::kS1Line, SchemeKind::kS1Lattice, SchemeKind::kS2Line,
                       SchemeKind::kS2Lattice}) {
    for (int i = 0; i < 10; ++i) {
      const SchemeParams p = random_params(k, rng);
      CHECK(1.0 - fidelity(scheme_output(p).state, transcribed_output(p)) < 1e-10);
    }
  }
}

TEST_CASE("outputs are Gram-normalized") {
  std::mt19937_64 rng(23);
  for (SchemeKind k : {SchemeKind::kS1Line, SchemeKind::kS1Lattice, SchemeKind::kS2Line,
                       SchemeKind::kS2Lattice}) {
    const SchemeParams p = random_params(k, rng);
    CHECK(std::abs(css_norm_squared(scheme_output(p).state) - 1.0) < 1e-10);
  }
  SchemeParams line = random_params(SchemeKind::kS1Line, rng);
  CHECK_THROWS_AS(scheme2_output(line), InvalidArgument);
  CHECK(scheme1_line_output(line).size() == 5);
  SchemeParams lat = random_params(SchemeKind::kS1Lattice, rng);
  CHECK(scheme1_lattice_output(lat).size() == 9);
  SchemeParams s2 = random_params(SchemeKind::kS2Lattice, rng);
  CHECK(scheme2_output(s2).size() == 3 * 7);
}

TEST_CASE("squeezed vacuum superposition") {
  const SqueezedVacuumFit one = fit_squeezed_vacuum(1.0, 0.0, 1, true);
  CHECK(one.epsilon == doctest::Approx(1.0 - 1.0 / std::cosh(1.0)).epsilon(1e-10));
  CHECK(fit_squeezed_vacuum(0.85, 0.0, 7, true).epsilon < 1e-4);
  const SqueezedVacuumFit zero = fit_squeezed_vacuum(0.0, 0.0, 7, true);
  CHECK(zero.epsilon == 0.0);
  CHECK(zero.state.size() == 1);

  for (double r : {0.3, 0.5, 0.85, 1.2}) {
    double prev = 2.0;
    for (int n : {1, 3, 5, 7}) {
      const double e = fit_squeezed_vacuum(r, 0.0, n, true).epsilon;
      CHECK(e <= prev);
      prev = e;
    }
  }
  // theta = pi rotates the whole construction by 90 degrees.
  CHECK(fit_squeezed_vacuum(0.5, kPi, 7, true).epsilon ==
        doctest::Approx(fit_squeezed_vacuum(0.5, 0.0, 7, true).epsilon).epsilon(1e-6));
}

TEST_CASE("weak squeezing leaves only the central term") {
  for (double g : {0.3, 0.7, 1.5}) {
    const CoherentSuperposition s = squeezed_vacuum_css(1e-3, 0.0, 7, g);
    cplx c0{};
    double worst = 0.0;
    for (const auto& t : s.terms()) {
      if (std::abs(t.amp) < 1e-15) {
        c0 = t.coeff;
      } else {
        worst = std::max(worst, std::abs(t.coeff));
      }
    }
    CHECK(worst / std::abs(c0) < 1e-12);
  }
}

TEST_CASE("exact symmetries of scheme 1") {
  std::mt19937_64 rng(24);
  const FockVector target = build_target(parse_target("AS(1,2,1)"), 64);
  for (SchemeKind k : {SchemeKind::kS1Line, SchemeKind::kS1Lattice}) {
    for (int i = 0; i < 20; ++i) {
      const SchemeParams p = random_params(k, rng);
      SchemeParams neg = p;
      neg.x1 = -p.x1;
      neg.x2 = -p.x2;
      const double e = css_misfit(scheme_output(p).state, target);
      CHECK(std::abs(css_misfit(scheme_output(neg).state, target) - e) < 1e-12);
      if (k == SchemeKind::kS1Line) {
        SchemeParams sw = p;
        sw.x1 = p.x2;
        sw.x2 = p.x1;
        sw.x3 = -p.x3;
        CHECK(std::abs(css_misfit(scheme_output(sw).state, target) - e) < 1e-12);
      }
    }
  }
}

TEST_CASE("degenerate candidate tuples") {
  std::mt19937_64 rng(25);
  const SchemeParams line = random_params(SchemeKind::kS1Line, rng);
  const auto cl = degenerate_candidates(line);
  CHECK(cl.size() == 8);
  CHECK(cl.front() == line);
  CHECK(degenerate_candidates(random_params(SchemeKind::kS1Lattice, rng)).size() == 4);
  CHECK(degenerate_candidates(random_params(SchemeKind::kS2Line, rng)).size() == 2);
  SchemeParams zero = line;
  zero.x1 = zero.x2 = 0.0;
  CHECK(degenerate_candidates(zero).size() == 2);
}

TEST_CASE("tabulated parameter sets reproduce the printed misfit") {
  CHECK(row_epsilon("II", "AS(1,2,1)") < 10 * 2.6e-4);
  CHECK(row_epsilon("II", "B(0.1,5)") < 10 * 2.5e-4);
  CHECK(row_epsilon("III", "B(0.1,4)") < 10 * 1.7e-4);
  CHECK(row_epsilon("I", "row3") < 10 * 1.03e-4);
  CHECK(row_epsilon("IV", "NS(2,0.3)") < 10 * 1.3e-5);
  CHECK(row_epsilon("V", "B(0.2,8)") < 100 * 6.9e-6);
}

TEST_CASE("resolved parameters echo the beta column") {
  for (const auto& row : cli::published_rows()) {
    const FockVector target = build_target(parse_target(row.target), 96);
    const PhaseProfile prof = profile_input_phase(cli::literal_params(row), row.beta, target);
    // two-decimal agreement, or the largest move the phase-branch snap can make
    const double snap = row.beta * kPi / (row.alpha * row.alpha * std::sin(row.phi));
    CHECK_MESSAGE(std::abs(prof.params.beta() - row.beta) <= std::max(0.005, snap), row.table,
                  " ", row.label);
    CHECK(prof.params.phi == row.phi);
  }
}
