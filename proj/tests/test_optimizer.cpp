#include <cmath>

#include "doctest.h"

#include "csse/errors.hpp"
#include "csse/optimizer.hpp"

using namespace csse;

namespace {

GaConfig small_config(std::uint64_t seed) {
  GaConfig c;
  c.population = 40;
  c.generations = 80;
  c.restarts = 2;
  c.stall_generations = 40;
  c.rng_seed = seed;
  return c;
}

}  // namespace

TEST_CASE("gene layout") {
  CHECK(gene_count(SchemeKind::kS1Line, GammaMode::kFree) == 5);
  CHECK(gene_count(SchemeKind::kS1Lattice, GammaMode::kTied) == 5);
  CHECK(gene_count(SchemeKind::kS2Line, GammaMode::kFree) == 6);
  CHECK(gene_count(SchemeKind::kS2Lattice, GammaMode::kTied) == 5);
}

TEST_CASE("configuration checks") {
  GaConfig c;
  CHECK_NOTHROW(c.validate());
  c.population = 41;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = GaConfig{};
  c.mutation_rate = 1.5;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  Bounds b;
  CHECK_NOTHROW(b.validate());
  b.phi = {0.02, 0.01};
  CHECK_THROWS_AS(b.validate(), InvalidArgument);
}

TEST_CASE("seed determinism, thread independence and monotone history") {
  const TargetSpec target = parse_target("B(0.5,1)");
  const OptimizeResult a = optimize(SchemeKind::kS1Line, target, Bounds{}, small_config(9));
  const OptimizeResult b = optimize(SchemeKind::kS1Line, target, Bounds{}, small_config(9));
  CHECK(a.best == b.best);
  CHECK(a.history == b.history);
  CHECK(a.evaluations == b.evaluations);

  GaConfig threaded = small_config(9);
  threaded.jobs = 3;
  const OptimizeResult t = optimize(SchemeKind::kS1Line, target, Bounds{}, threaded);
  CHECK(t.best == a.best);
  CHECK(t.history == a.history);

  const OptimizeResult other = optimize(SchemeKind::kS1Line, target, Bounds{}, small_config(10));
  CHECK_FALSE(other.best == a.best);

  REQUIRE_FALSE(a.history.empty());
  for (std::size_t i = 1; i < a.history.size(); ++i) CHECK(a.history[i] <= a.history[i - 1]);
  CHECK(a.restart_best.size() == 2);
}

TEST_CASE("solutions stay inside the bounds") {
  Bounds b;
  b.x = {-2.0, 2.0};
  b.beta = {0.2, 1.0};
  const OptimizeResult r = optimize(SchemeKind::kS2Line, parse_target("B(0.3,2)"), b, small_config(4));
  for (double x : r.best.outcomes()) CHECK(b.x.contains(x));
  CHECK(r.best.beta() >= 0.2 - 1e-6);
  CHECK(r.best.beta() <= 1.0 + 1e-2);
  CHECK(b.r.contains(r.best.r));
  CHECK(b.gamma.contains(r.best.gamma));
}

TEST_CASE("symmetry maps of the best scheme-1 solution") {
  const TargetSpec spec = parse_target("AS(1,2,1)");
  const FockVector target = build_target(spec, 96);
  const OptimizeResult r = optimize(SchemeKind::kS1Line, spec, Bounds{}, small_config(12));
  const double e = scheme_misfit(r.best, target);
  SchemeParams sw = r.best;
  sw.x1 = r.best.x2;
  sw.x2 = r.best.x1;
  sw.x3 = -r.best.x3;
  CHECK(std::abs(scheme_misfit(sw, target) - e) < 1e-10);
  SchemeParams neg = r.best;
  neg.x1 = -neg.x1;
  neg.x2 = -neg.x2;
  CHECK(std::abs(scheme_misfit(neg, target) - e) < 1e-10);
}

TEST_CASE("fixed phase separation") {
  GaConfig c = small_config(5);
  const OptimizeResult r =
      reoptimize_fixed_phi(SchemeKind::kS1Lattice, parse_target("AS(1,2,1)"), Bounds{}, c, 7.3e-3);
  CHECK(r.best.phi == 7.3e-3);
}

TEST_CASE("tied spacing follows the fitted optimum") {
  for (double r : {0.2, 0.5, 0.85, 1.3}) {
    const double g = tied_gamma(r, 0.0, 7);
    const double direct = fit_squeezed_vacuum(r, 0.0, 7, true).gamma;
    CHECK(g == doctest::Approx(direct).epsilon(0.02));
    const double e_tied = fit_squeezed_vacuum(r, 0.0, 7, false, g).epsilon;
    const double e_best = fit_squeezed_vacuum(r, 0.0, 7, true).epsilon;
    CHECK(e_tied <= e_best * 1.05 + 1e-12);
  }
}

TEST_CASE("unbuildable target is reported") {
  CHECK_THROWS_AS(optimize(SchemeKind::kS1Line, parse_target("B(1.2,3)"), Bounds{}, small_config(1)),
                  TargetUnbuildable);
}
