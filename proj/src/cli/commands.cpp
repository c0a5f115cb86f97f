#include "csse/cli/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "csse/css.hpp"
#include "csse/errors.hpp"

namespace csse::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::optional<double> gamma_fit(const SchemeParams& p) {
  if (is_scheme1(p.kind)) return std::nullopt;
  return fit_squeezed_vacuum(p.r, s2_squeeze_theta(p.kind), p.n_css, false, p.gamma).epsilon;
}

std::string sci(double v) { return format_real(v); }

}  // namespace

ResolvedParams resolve_params(SchemeKind kind, const ExplicitParams& e, const FockVector& target) {
  SchemeParams lit;
  lit.kind = kind;
  lit.phi = e.phi;
  lit.r = e.r;
  lit.gamma = e.gamma;
  lit.n_css = e.n_css;
  lit.set_outcomes(e.x);
  const double beta = e.beta ? *e.beta : e.alpha.value_or(0.0) * std::sin(0.5 * e.phi);

  ResolvedParams out;
  if (e.alpha) {
    lit.alpha = *e.alpha;
    lit.validate();
    out.epsilon_literal = scheme_misfit(lit, target);
  }
  if (e.input_phase) {
    SchemeParams q = SchemeParams::fixed_phi(kind, e.phi, beta, *e.input_phase);
    q.r = lit.r;
    q.gamma = lit.gamma;
    q.n_css = lit.n_css;
    q.set_outcomes(e.x);
    out.params = q;
  } else if (e.profile_input_phase) {
    lit.alpha = beta / std::sin(0.5 * e.phi);
    out.params = profile_input_phase(lit, beta, target).params;
  } else {
    out.params = lit;
  }
  out.params.validate();
  return out;
}

RunReport cmd_optimize(const RunConfig& cfg, std::ostream& log) {
  GaConfig ga = cfg.ga;
  ga.rng_seed = cfg.seed;
  ga.jobs = cfg.jobs;
  const TargetSpec spec = parse_target(cfg.target);
  const OptimizeResult res =
      cfg.phi_fixed ? reoptimize_fixed_phi(*cfg.scheme, spec, cfg.bounds, ga, *cfg.phi_fixed)
                    : optimize(*cfg.scheme, spec, cfg.bounds, ga);
  RunReport rep = evaluate_report(res.best, cfg.target, cfg.window, ga.n_max_final);
  rep.mode = "optimize";
  rep.seed = cfg.seed;
  rep.evaluations = static_cast<int>(res.evaluations);
  rep.gamma_fit_epsilon = gamma_fit(res.best);

  log << scheme_name(res.best.kind) << " -> " << rep.target << '\n'
      << "  epsilon      " << sci(rep.epsilon) << '\n'
      << "  beta         " << sci(res.best.beta()) << "  input phase " << sci(res.best.input_phase())
      << '\n'
      << "  alpha        " << sci(res.best.alpha) << "  phi " << sci(res.best.phi) << '\n';
  log << "  x           ";
  for (double x : res.best.outcomes()) log << ' ' << sci(x);
  log << '\n';
  if (!is_scheme1(res.best.kind)) {
    log << "  r            " << sci(res.best.r) << "  gamma " << sci(res.best.gamma) << '\n';
  }
  log << "  P            " << sci(rep.overall_p) << " (x" << rep.multiplicity << ")  epsilon_avg "
      << sci(rep.epsilon_avg) << "  delta " << rep.delta << '\n'
      << "  evaluations  " << rep.evaluations << "  restarts' best:";
  for (double b : res.restart_best) log << ' ' << sci(b);
  log << '\n';
  return rep;
}

RunReport cmd_evaluate(const RunConfig& cfg) {
  const FockVector target = build_target(parse_target(cfg.target), cfg.ga.n_max_final);
  const ResolvedParams rp = resolve_params(*cfg.scheme, *cfg.params, target);
  RunReport rep = evaluate_report(rp.params, cfg.target, cfg.window, cfg.ga.n_max_final);
  rep.epsilon_literal = rp.epsilon_literal;
  rep.gamma_fit_epsilon = gamma_fit(rp.params);
  rep.seed = cfg.seed;
  return rep;
}

ResultTable cmd_prob_sweep(const RunConfig& cfg) {
  const FockVector target = build_target(parse_target(cfg.target), cfg.ga.n_max_final);
  const SchemeParams p = resolve_params(*cfg.scheme, *cfg.params, target).params;
  ResultTable t;
  t.columns = {"delta", "overall_p", "window_p", "multiplicity", "epsilon_avg", "epsilon_min",
               "epsilon_max"};
  for (double delta : cfg.deltas) {
    WindowConfig w = cfg.window;
    w.delta = delta;
    w.validate();
    const ProbabilityResult pr = overall_probability(p, w);
    const AverageMisfit am = average_misfit(p, target, w);
    t.add_row({delta, pr.overall_p, pr.window_p, static_cast<long long>(pr.multiplicity),
               am.epsilon_avg, am.epsilon_min, am.epsilon_max});
  }
  return t;
}

ResultTable cmd_sqvac(const RunConfig& cfg) {
  ResultTable t;
  t.columns = {"r", "theta", "n_terms", "gamma", "epsilon"};
  for (double r : cfg.sqvac.r) {
    for (int n : cfg.sqvac.n_terms) {
      const SqueezedVacuumFit fit =
          fit_squeezed_vacuum(r, cfg.sqvac.theta, n, cfg.sqvac.optimize_gamma, cfg.sqvac.gamma);
      t.add_row({r, cfg.sqvac.theta, static_cast<long long>(n), fit.gamma, fit.epsilon});
    }
  }
  return t;
}

namespace {

std::vector<Cell> table_row(const PublishedRow& row, const RunConfig& cfg, std::size_t index,
                            bool& miss) {
  const FockVector target = build_target(parse_target(row.target), cfg.ga.n_max_final);
  const SchemeParams lit = literal_params(row);
  double eps_literal = kNaN;
  try {
    eps_literal = scheme_misfit(lit, target);
  } catch (const DegenerateSuperposition&) {
  }
  const PhaseProfile prof = profile_input_phase(lit, row.beta, target);
  const SchemeParams& p = prof.params;
  const double eps = scheme_misfit(p, target);

  double p_all = kNaN, p_win = kNaN, eps_avg = kNaN;
  long long mult = 0;
  if (!std::isnan(row.delta)) {
    WindowConfig w = cfg.window;
    w.delta = row.delta;
    const ProbabilityResult pr = overall_probability(p, w);
    p_all = pr.overall_p;
    p_win = pr.window_p;
    mult = pr.multiplicity;
    eps_avg = average_misfit(p, target, w).epsilon_avg;
  }

  double eps_ga = kNaN;
  if (cfg.table.optimize) {
    GaConfig ga = cfg.ga;
    ga.rng_seed = mix_seed(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    ga.jobs = 1;
    eps_ga = optimize(row.scheme, parse_target(row.target), cfg.bounds, ga).epsilon;
  }

  const double factor = epsilon_tolerance_factor(row.epsilon);
  const double best = std::isnan(eps_ga) ? eps : std::min(eps, eps_ga);
  miss = !(best <= factor * row.epsilon);
  return {row.table,      row.label,         scheme_name(row.scheme), row.target,
          row.epsilon,    eps,               eps_literal,             eps_ga,
          best / row.epsilon, factor,        std::string(miss ? "no" : "yes"),
          row.delta,      row.p,             p_all,                   p_win,
          mult,           row.epsilon_avg,   eps_avg,                 p.beta(),
          p.input_phase(), p.alpha,          p.phi,                   p.x1,
          p.x2,           p.x3,              p.r,                     p.gamma};
}

}  // namespace

TableRun cmd_table(const RunConfig& cfg) {
  const std::vector<PublishedRow> rows = cfg.table.id == "all" ? published_rows()
                                                                 : published_table(cfg.table.id);
  TableRun run;
  run.table.columns = {"table",          "label",         "scheme",      "target",
                       "epsilon_published", "epsilon",    "epsilon_literal", "epsilon_ga",
                       "epsilon_ratio",  "epsilon_factor", "epsilon_ok", "delta",
                       "p_published",    "overall_p",     "window_p",    "multiplicity",
                       "epsilon_avg_published", "epsilon_avg", "beta",  "input_phase",
                       "alpha",          "phi",           "x1",          "x2",
                       "x3",             "r",             "gamma"};
  std::vector<std::vector<Cell>> cells(rows.size());
  std::vector<char> miss(rows.size(), 0);
  std::vector<std::exception_ptr> errors(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        bool m = false;
        cells[i] = table_row(rows[i], cfg, i, m);
        miss[i] = m;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    run.table.add_row(std::move(cells[i]));
    run.misses += miss[i];
  }
  return run;
}

int run_mode(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const std::string fmt = effective_format(cfg);
  switch (cfg.mode) {
    case Mode::kOptimize:
    case Mode::kEvaluate: {
      const RunReport rep = cfg.mode == Mode::kOptimize ? cmd_optimize(cfg, log) : cmd_evaluate(cfg);
      if (fmt == "json") {
        out << report_to_json(rep).dump(2) << '\n';
      } else {
        ResultTable t;
        const nlohmann::json j = report_to_json(rep);
        std::vector<Cell> row;
        for (const auto& [k, v] : j.items()) {
          if (v.is_structured() || k == "schema_version") continue;
          t.columns.push_back(k);
          if (v.is_string()) {
            row.emplace_back(v.get<std::string>());
          } else if (v.is_number_integer() || v.is_number_unsigned()) {
            row.emplace_back(v.get<long long>());
          } else {
            row.emplace_back(v.is_null() ? kNaN : v.get<double>());
          }
        }
        t.add_row(std::move(row));
        write_csv(t, out);
      }
      return kExitOk;
    }
    case Mode::kProbSweep:
      write_table(cmd_prob_sweep(cfg), fmt, out);
      return kExitOk;
    case Mode::kSqvacApprox:
      write_table(cmd_sqvac(cfg), fmt, out);
      return kExitOk;
    case Mode::kTable: {
      const TableRun run = cmd_table(cfg);
      write_table(run.table, fmt, out);
      if (run.misses > 0) {
        log << run.misses << " of " << run.table.rows.size()
            << " rows outside the epsilon tolerance\n";
        return kExitTolerance;
      }
      return kExitOk;
    }
  }
  return kExitOk;
}

}  // namespace csse::cli
