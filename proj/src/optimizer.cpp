#include "csse/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include <boost/math/tools/minima.hpp>

#include "csse/errors.hpp"

namespace csse {

namespace {

constexpr double kPi = std::numbers::pi;

struct Genome {
  std::vector<double> genes;
  double fitness = 1.0;
};

struct GeneSpace {
  std::vector<Interval> range;
  std::vector<bool> periodic;
};

GeneSpace gene_space(SchemeKind kind, const Bounds& b, GammaMode gm) {
  GeneSpace s;
  // beta spans orders of magnitude and the best optima often sit near its floor,
  // so the GA works on log(beta).
  s.range = {{std::log(b.beta.lo), std::log(b.beta.hi)}, {-kPi, kPi}, b.x, b.x};
  s.periodic = {false, true, false, false};
  if (is_scheme1(kind)) {
    s.range.push_back(b.x);
    s.periodic.push_back(false);
  } else {
    s.range.push_back(b.r);
    s.periodic.push_back(false);
    if (gm == GammaMode::kFree) {
      s.range.push_back(b.gamma);
      s.periodic.push_back(false);
    }
  }
  return s;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t restart, std::uint64_t gen,
                       std::uint64_t idx) {
  std::uint64_t h = mix_seed(seed);
  h = mix_seed(h ^ (restart + 0x9e3779b97f4a7c15ULL));
  h = mix_seed(h ^ (gen + 0xbf58476d1ce4e5b9ULL));
  h = mix_seed(h ^ (idx + 0x94d049bb133111ebULL));
  return std::mt19937_64(h);
}

double clamp_gene(double v, const Interval& r, bool periodic) {
  if (periodic) {
    const double w = r.width();
    double t = std::fmod(v - r.lo, w);
    if (t < 0.0) t += w;
    return r.lo + t;
  }
  // Reflect at the walls, then clamp whatever is still outside.
  if (v < r.lo) v = r.lo + (r.lo - v);
  if (v > r.hi) v = r.hi - (v - r.hi);
  return std::clamp(v, r.lo, r.hi);
}

struct Problem {
  SchemeKind kind;
  GaConfig config;
  Bounds bounds;
  GeneSpace space;
  FockVector target;
  std::optional<double> phi_fixed;

  SchemeParams decode(const std::vector<double>& g) const {
    const double beta = std::exp(g[0]);
    SchemeParams p = phi_fixed ? SchemeParams::fixed_phi(kind, *phi_fixed, beta, g[1])
                               : SchemeParams::from_beta_phase(kind, beta, g[1], config.phi_ref);
    p.x1 = g[2];
    p.x2 = g[3];
    if (is_scheme1(kind)) {
      p.x3 = g[4];
    } else {
      p.r = g[4];
      p.n_css = config.n_css;
      p.gamma = config.gamma_mode == GammaMode::kFree
                    ? g[5]
                    : tied_gamma(p.r, s2_squeeze_theta(kind), config.n_css);
    }
    return p;
  }

  double objective(const std::vector<double>& g) const {
    try {
      return css_misfit(scheme_output(decode(g)).state, target);
    } catch (const DegenerateSuperposition&) {
      return 1.0;
    } catch (const InvalidArgument&) {
      return 1.0;
    }
  }
};

void evaluate_all(const Problem& prob, std::vector<Genome>& pop, std::size_t first, int jobs) {
  const std::size_t n = pop.size();
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n; i += stride) pop[i].fitness = prob.objective(pop[i].genes);
  };
  if (jobs <= 1 || n - first < 2) {
    work(first, 1);
    return;
  }
  // Each slot is written by exactly one thread; results do not depend on scheduling.
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(work, first + t, static_cast<std::size_t>(jobs));
  for (auto& th : threads) th.join();
}

const Genome& tournament(const std::vector<Genome>& pop, int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
  const Genome* best = &pop[pick(rng)];
  for (int i = 1; i < size; ++i) {
    const Genome& c = pop[pick(rng)];
    if (c.fitness < best->fitness) best = &c;
  }
  return *best;
}

struct RestartResult {
  Genome best;
  std::vector<double> history;
  std::int64_t evaluations = 0;
};

RestartResult run_restart(const Problem& prob, int restart) {
  const GaConfig& cfg = prob.config;
  const std::size_t ng = prob.space.range.size();
  const std::uint64_t seed = cfg.rng_seed;

  const std::size_t strat = is_scheme1(prob.kind) ? 0 : 4;
  std::vector<Genome> pop(cfg.population);
  for (int i = 0; i < cfg.population; ++i) {
    auto rng = stream(seed, restart, 0, i);
    pop[i].genes.resize(ng);
    for (std::size_t k = 0; k < ng; ++k) {
      Interval r = prob.space.range[k];
      if (k == strat && cfg.restarts > 1) {
        // Restart j seeds its population in the j-th slice of this gene. Thin valleys
        // at small squeezing are otherwise swamped by broad basins elsewhere.
        const double w = r.width() / cfg.restarts;
        r = {r.lo + w * restart, r.lo + w * (restart + 1)};
      }
      pop[i].genes[k] = std::uniform_real_distribution<double>(r.lo, r.hi)(rng);
    }
  }
  RestartResult res;
  evaluate_all(prob, pop, 0, cfg.jobs);
  res.evaluations += cfg.population;

  auto by_fitness = [](const Genome& a, const Genome& b) { return a.fitness < b.fitness; };
  std::stable_sort(pop.begin(), pop.end(), by_fitness);
  res.history.push_back(pop.front().fitness);
  int stall = 0;

  for (int gen = 1; gen <= cfg.generations; ++gen) {
    std::vector<Genome> next(pop.begin(), pop.begin() + cfg.elitism);
    next.resize(cfg.population);
    for (int i = cfg.elitism; i < cfg.population; i += 2) {
      auto rng = stream(seed, restart, gen, i);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const Genome& pa = tournament(pop, cfg.tournament_size, rng);
      const Genome& pb = tournament(pop, cfg.tournament_size, rng);
      std::vector<double> ca = pa.genes;
      std::vector<double> cb = pb.genes;
      if (unit(rng) < cfg.crossover_rate) {
        // BLX-0.5
        for (std::size_t k = 0; k < ng; ++k) {
          const double lo = std::min(pa.genes[k], pb.genes[k]);
          const double hi = std::max(pa.genes[k], pb.genes[k]);
          const double ext = 0.5 * (hi - lo);
          std::uniform_real_distribution<double> blx(lo - ext, hi + ext + 1e-300);
          ca[k] = blx(rng);
          cb[k] = blx(rng);
        }
      }
      for (auto* child : {&ca, &cb}) {
        for (std::size_t k = 0; k < ng; ++k) {
          const Interval& r = prob.space.range[k];
          if (unit(rng) < cfg.mutation_rate) {
            (*child)[k] += std::normal_distribution<double>(0.0, cfg.mutation_sigma * r.width())(rng);
          }
          (*child)[k] = clamp_gene((*child)[k], r, prob.space.periodic[k]);
        }
      }
      next[i].genes = std::move(ca);
      if (i + 1 < cfg.population) next[i + 1].genes = std::move(cb);
    }
    evaluate_all(prob, next, static_cast<std::size_t>(cfg.elitism), cfg.jobs);
    res.evaluations += cfg.population - cfg.elitism;
    std::stable_sort(next.begin(), next.end(), by_fitness);
    pop = std::move(next);

    const double prev = res.history.back();
    const double now = std::min(prev, pop.front().fitness);
    res.history.push_back(now);
    stall = (now < prev * (1.0 - 1e-9)) ? 0 : stall + 1;
    if (stall >= cfg.stall_generations) break;
  }
  res.best = pop.front();
  return res;
}

OptimizeResult run(SchemeKind kind, const TargetSpec& target, const Bounds& bounds,
                   const GaConfig& config, std::optional<double> phi_fixed) {
  bounds.validate();
  config.validate();
  Problem prob{kind, config, bounds, gene_space(kind, bounds, config.gamma_mode),
               build_target(target, config.n_max_objective), phi_fixed};

  OptimizeResult out;
  Genome best;
  for (int r = 0; r < config.restarts; ++r) {
    RestartResult rr = run_restart(prob, r);
    out.evaluations += rr.evaluations;
    out.restart_best.push_back(rr.best.fitness);
    if (r == 0 || rr.best.fitness < best.fitness) {
      best = rr.best;
      out.history = std::move(rr.history);
    }
  }
  out.best = prob.decode(best.genes);
  out.objective = best.fitness;
  const FockVector final_target = build_target(target, config.n_max_final);
  try {
    out.epsilon = css_misfit(scheme_output(out.best).state, final_target);
  } catch (const DegenerateSuperposition&) {
    out.epsilon = 1.0;
  }
  return out;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

void Bounds::validate() const {
  for (const Interval* i : {&x, &phi, &beta, &r, &gamma}) {
    if (!(i->lo < i->hi) || !std::isfinite(i->lo) || !std::isfinite(i->hi)) {
      throw InvalidArgument("bounds: every interval needs lo < hi");
    }
  }
  if (phi.lo <= 0.0 || phi.hi >= kPi) throw InvalidArgument("bounds: phi must lie in (0, pi)");
  if (beta.lo <= 0.0) throw InvalidArgument("bounds: beta must be positive");
  if (r.lo < 0.0) throw InvalidArgument("bounds: r must be non-negative");
  if (gamma.lo <= 0.0) throw InvalidArgument("bounds: gamma must be positive");
}

void GaConfig::validate() const {
  auto rate = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (population < 4 || population % 2 != 0) {
    throw InvalidArgument("ga: population must be even and >= 4");
  }
  if (generations < 0 || restarts < 1 || tournament_size < 1 || stall_generations < 1) {
    throw InvalidArgument("ga: generations >= 0, restarts >= 1, tournament >= 1 required");
  }
  if (elitism < 0 || elitism >= population || elitism % 2 != 0) {
    throw InvalidArgument("ga: elitism must be even and below the population");
  }
  if (!rate(crossover_rate) || !rate(mutation_rate) || !rate(mutation_sigma)) {
    throw InvalidArgument("ga: rates must lie in [0, 1]");
  }
  if (!(phi_ref > 0.0) || jobs < 1 || n_css < 1 || n_css % 2 == 0) {
    throw InvalidArgument("ga: phi_ref > 0, jobs >= 1 and odd n_css required");
  }
  if (n_max_objective < 8 || n_max_final < n_max_objective) {
    throw InvalidArgument("ga: n_max_final must be >= n_max_objective >= 8");
  }
}

int gene_count(SchemeKind kind, GammaMode gamma_mode) {
  if (is_scheme1(kind)) return 5;
  return gamma_mode == GammaMode::kFree ? 6 : 5;
}

double tied_gamma(double r, double theta, int n_css) {
  constexpr int kPoints = 151;
  constexpr double kRMax = 1.5;
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<double>> tables;
  const int theta_key = theta == 0.0 ? 0 : 1;
  std::vector<double>* table;
  {
    std::lock_guard<std::mutex> lock(mu);
    table = &tables[{theta_key, n_css}];
    if (table->empty()) {
      table->resize(kPoints);
      for (int i = 0; i < kPoints; ++i) {
        // r = 0 has no preferred spacing; reuse the first positive grid value.
        const double ri = std::max(kRMax * i / (kPoints - 1), kRMax / (kPoints - 1));
        (*table)[i] = fit_squeezed_vacuum(ri, theta, n_css, true).gamma;
      }
    }
  }
  const double t = std::clamp(r / kRMax, 0.0, 1.0) * (kPoints - 1);
  const int i = std::min(static_cast<int>(t), kPoints - 2);
  const double f = t - i;
  return (1.0 - f) * (*table)[i] + f * (*table)[i + 1];
}

PhaseProfile profile_input_phase(const SchemeParams& p, double beta, const FockVector& target) {
  auto at = [&](double phase) {
    SchemeParams q = SchemeParams::fixed_phi(p.kind, p.phi, beta, phase);
    q.x1 = p.x1;
    q.x2 = p.x2;
    q.x3 = p.x3;
    q.r = p.r;
    q.gamma = p.gamma;
    q.n_css = p.n_css;
    return q;
  };
  auto eps = [&](double phase) {
    try {
      return css_misfit(scheme_output(at(phase)).state, target);
    } catch (const DegenerateSuperposition&) {
      return 1.0;
    }
  };
  constexpr int kGrid = 72;
  const double step = 2.0 * kPi / kGrid;
  double best = -kPi;
  double e_best = 2.0;
  for (int i = 0; i < kGrid; ++i) {
    const double ph = -kPi + i * step;
    const double e = eps(ph);
    if (e < e_best) {
      e_best = e;
      best = ph;
    }
  }
  const auto refined = boost::math::tools::brent_find_minima(eps, best - step, best + step, 40);
  PhaseProfile out;
  if (refined.second < e_best) {
    best = refined.first;
    e_best = refined.second;
  }
  out.params = at(best);
  out.epsilon = e_best;
  return out;
}

OptimizeResult optimize(SchemeKind kind, const TargetSpec& target, const Bounds& bounds,
                        const GaConfig& config) {
  return run(kind, target, bounds, config, std::nullopt);
}

OptimizeResult reoptimize_fixed_phi(SchemeKind kind, const TargetSpec& target,
                                    const Bounds& bounds, const GaConfig& config,
                                    double phi_fixed) {
  if (!bounds.phi.contains(phi_fixed)) {
    throw InvalidArgument("reoptimize_fixed_phi: phi outside bounds");
  }
  return run(kind, target, bounds, config, phi_fixed);
}

}  // namespace csse
