#include "edgelab/experiments.hpp"

#include <cmath>
#include <limits>

#include "edgelab/gaussian_kernels.hpp"
#include "edgelab/parallel.hpp"
#include "edgelab/stats.hpp"
#include "edgelab/tracy_widom.hpp"

namespace edgelab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_common(const ExperimentConfig& cfg) {
  require(cfg.n >= 2, Error::Kind::invalid_dimension, "n must be >= 2");
  require(cfg.samples >= 1, Error::Kind::invalid_input, "samples must be >= 1");
  require(cfg.threads >= 1, Error::Kind::invalid_input, "threads must be >= 1");
  require(!cfg.x.empty(), Error::Kind::invalid_input, "x grid is empty");
}

std::int64_t as_int(Index v) { return static_cast<std::int64_t>(v); }

}  // namespace

LargestSamples sample_largest(const EnsembleSpec& spec, Index n, Index samples, std::uint64_t seed, int threads,
                              bool fast_path) {
  const auto report = validate_spec(spec);
  require(report.passed(), Error::Kind::invalid_spec, "invalid ensemble spec: " + report.summary());
  const auto outcomes = dispatch_scalar(spec.symmetry, [&]<typename Scalar>() {
    return parallel_map<double>(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
      const auto h = sample_from_stream<Scalar>(spec, n, seed, i, kWignerStream);
      return fast_path ? largest_eigenvalue(h.entries) : eigen(h).largest();
    });
  });
  LargestSamples out;
  for (const auto& o : outcomes) {
    if (o.value) {
      out.values.push_back(*o.value);
    } else {
      ++out.failures;
    }
  }
  require(out.failures * 100 <= samples, Error::Kind::numeric,
          std::to_string(out.failures) + " of " + std::to_string(samples) + " samples failed");
  return out;
}

std::vector<TailEstimate> tail_estimates(const std::vector<double>& largest, const std::vector<double>& xs, Side side,
                                         Index n, int beta, bool gaussian, double window_m) {
  require(!largest.empty(), Error::Kind::invalid_input, "no successful samples");
  const double nd = static_cast<double>(n);
  const double scale = std::pow(nd, 2.0 / 3.0);
  const double log_n = std::log(nd);
  const double limit = side == Side::right ? window_m * std::pow(log_n, 2.0 / 3.0) : window_m * std::cbrt(log_n);
  std::vector<TailEstimate> out;
  for (double x : xs) {
    TailEstimate e{};
    e.x = x;
    e.n = n;
    e.beta = beta;
    e.trials = static_cast<std::int64_t>(largest.size());
    for (double lam : largest) {
      const double s = scale * (lam - 2.0);
      if (side == Side::right ? s > x : s < -x) ++e.hits;
    }
    e.p_hat = static_cast<double>(e.hits) / static_cast<double>(e.trials);
    const auto ci = wilson_interval(e.hits, e.trials);
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    e.reference_exact = kNaN;
    if (gaussian && side == Side::right && x >= -10.0) {
      if (beta == 2) {
        e.reference_exact = gue_expected_count_above(static_cast<int>(n), x, false).expected_count;
      } else if (n % 2 == 0) {
        e.reference_exact = goe_expected_count_above(static_cast<int>(n), x, false).expected_count;
      }
    }
    e.reference_asymptote = kNaN;
    if (side == Side::right && x >= 1.0) e.reference_asymptote = tail_asymptote(beta, x, TailSide::right);
    if (side == Side::left && x >= 1.0) e.reference_asymptote = tail_asymptote(beta, -x, TailSide::left);
    e.in_window = x <= limit;
    out.push_back(e);
  }
  return out;
}

double fit_left_constant(const std::vector<TailEstimate>& rows, int beta) {
  double num = 0.0, den = 0.0;
  for (const auto& r : rows) {
    if (r.hits == 0 || r.x <= 0.0 || r.hits == r.trials) continue;
    const double a = beta * r.x * r.x * r.x;
    num += -a * std::log(r.p_hat);
    den += a * a;
  }
  if (num <= 0.0) return kNaN;
  return den / num;
}

TailMcResult run_tail_mc(const ExperimentConfig& cfg) {
  check_common(cfg);
  const auto spec = ensemble_spec(cfg);
  const auto largest = sample_largest(spec, cfg.n, cfg.samples, cfg.seed, cfg.threads, cfg.fast_path);
  TailMcResult r;
  r.failures = largest.failures;
  r.estimates = tail_estimates(largest.values, cfg.x, cfg.side, cfg.n, cfg.beta, is_gaussian(spec), cfg.window_m);
  r.fitted_c0 = cfg.side == Side::left ? fit_left_constant(r.estimates, cfg.beta) : kNaN;
  return r;
}

CsvTable tail_mc_table(const TailMcResult& r, const ExperimentConfig& cfg) {
  CsvTable t;
  t.header = {"n",       "beta",   "dist",           "side",           "x",
              "trials",  "hits",   "p_hat",          "ci_low",         "ci_high",
              "reference_exact",   "reference_asymptote", "in_window", "failures", "fitted_c0"};
  for (const auto& e : r.estimates) {
    t.add_row({as_int(e.n), std::int64_t{e.beta}, to_string(cfg.dist), to_string(cfg.side), e.x, e.trials, e.hits,
               e.p_hat, e.ci_low, e.ci_high, e.reference_exact, e.reference_asymptote,
               std::int64_t{e.in_window ? 1 : 0}, as_int(r.failures), r.fitted_c0});
  }
  return t;
}

double fitted_prefactor(const std::vector<double>& r, const std::vector<double>& count,
                        const std::vector<double>& shape, double lo, double hi) {
  double sum = 0.0;
  int used = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < lo || r[i] > hi || !(count[i] > 0.0) || !(shape[i] > 0.0)) continue;
    sum += std::log(count[i]) - std::log(shape[i]);
    ++used;
  }
  return used ? std::exp(sum / used) : kNaN;
}

ExactTailsResult run_exact_tails(const ExperimentConfig& cfg) {
  require(cfg.dist == Family::gaussian && !cfg.m2, Error::Kind::invalid_input, "exact tails need a Gaussian ensemble");
  require(!(cfg.beta == 1 && cfg.n % 2 != 0), Error::Kind::unsupported_dimension, "GOE exact tails need even n");
  require(cfg.n >= 2, Error::Kind::invalid_dimension, "n must be >= 2");
  const int n = static_cast<int>(cfg.n);
  const bool with_goe = n % 2 == 0;
  const auto outcomes = parallel_map<ExactTailRow>(cfg.x.size(), cfg.threads, [&](std::size_t i) {
    const double r = cfg.x[i];
    ExactTailRow row{r, gue_expected_count_above(n, r, false).expected_count,
                     with_goe ? goe_expected_count_above(n, r, false).expected_count : kNaN, kNaN, kNaN};
    if (r >= 1.0) {
      row.gue_shape = gue_sharp_shape(r);
      row.goe_shape = tail_asymptote(1, r, TailSide::right);
    }
    return row;
  });
  ExactTailsResult out;
  std::vector<double> rs, gue, goe, gue_shape, goe_shape;
  for (const auto& o : outcomes) {
    require(o.value.has_value(), Error::Kind::numeric, "exact tail integral failed");
    out.rows.push_back(*o.value);
    rs.push_back(o.value->r);
    gue.push_back(o.value->gue_count);
    goe.push_back(o.value->goe_count);
    gue_shape.push_back(o.value->gue_shape);
    goe_shape.push_back(o.value->goe_shape);
  }
  out.gue_fitted_c = fitted_prefactor(rs, gue, gue_shape);
  out.goe_fitted_c = fitted_prefactor(rs, goe, goe_shape);
  return out;
}

CsvTable exact_tails_table(const ExactTailsResult& r) {
  CsvTable t;
  t.header = {"r", "gue_count", "goe_count", "gue_shape", "goe_shape", "gue_fitted_c", "goe_fitted_c"};
  for (const auto& row : r.rows) {
    t.add_row({row.r, row.gue_count, row.goe_count, row.gue_shape, row.goe_shape, r.gue_fitted_c, r.goe_fitted_c});
  }
  return t;
}

FlowConfig flow_config(const ExperimentConfig& cfg) {
  check_common(cfg);
  FlowConfig f;
  f.x = cfg.x.front();
  f.epsilon = cfg.epsilon;
  f.times = cfg.times;
  f.n = cfg.n;
  f.samples = cfg.samples;
  f.threads = cfg.threads;
  f.validate();
  return f;
}

FlowCompareResult run_flow_compare(const ExperimentConfig& cfg) {
  const auto spec = ensemble_spec(cfg);
  const auto f = flow_config(cfg);
  return {comparison_curve(spec, f, cfg.seed), endpoint_difference(spec, f, cfg.seed)};
}

CsvTable flow_compare_table(const FlowCompareResult& r) {
  CsvTable t;
  t.header = {"row", "t", "mean", "standard_error", "count", "delta", "ci_low", "ci_high", "bound", "failures"};
  const double bound = r.endpoint.predicted_bound;
  for (const auto& row : r.curve.rows) {
    t.add_row({std::string("curve"), row.t, row.mean, row.standard_error, as_int(row.count), kNaN, kNaN, kNaN, bound,
               as_int(r.curve.failures)});
  }
  const auto& e = r.endpoint;
  t.add_row({std::string("endpoint"), kNaN, e.delta, e.standard_error, as_int(std::min(e.wigner_count, e.gaussian_count)),
             e.delta, e.ci_low, e.ci_high, bound, as_int(e.failures)});
  return t;
}

LocalLawResult run_local_law(const ExperimentConfig& cfg) {
  check_common(cfg);
  const auto spec = ensemble_spec(cfg);
  const auto report = validate_spec(spec);
  require(report.passed(), Error::Kind::invalid_spec, "invalid ensemble spec: " + report.summary());
  const double nd = static_cast<double>(cfg.n);
  const double x = cfg.x.front();
  const Complex z(2.0 + std::pow(nd, -2.0 / 3.0) * x, std::pow(nd, -2.0 / 3.0 + cfg.epsilon));
  const auto gamma = classical_locations(cfg.n);
  const auto counting = CountingConfig::at_edge(x, cfg.n, cfg.sandwich_epsilon);
  const double e_sandwich = 2.0 + std::pow(nd, -2.0 / 3.0) * x;
  const auto probes = default_probes(cfg.n);

  const auto outcomes = dispatch_scalar(spec.symmetry, [&]<typename Scalar>() {
    return parallel_map<LocalLawRow>(static_cast<std::size_t>(cfg.samples), cfg.threads, [&](std::size_t i) {
      const auto h = sample_from_stream<Scalar>(spec, cfg.n, cfg.seed, i, kWignerStream);
      const auto d = eigen_decompose(h.entries);
      const auto ll = local_law_report(d, z, cfg.epsilon, probes);
      const auto rig = rigidity_report(d.spectrum, gamma, cfg.rigidity_exponent);
      const auto sw = sandwich_check(d.spectrum, e_sandwich, counting);
      return LocalLawRow{i,
                         z,
                         ll.entrywise_max,
                         ll.trace_residual,
                         ll.isotropic_residuals[0].value,
                         ll.isotropic_residuals[1].value,
                         ll.isotropic_residuals[2].value,
                         ll.bound,
                         ll.psi,
                         rig.max_residual,
                         static_cast<Index>(rig.flagged.size()),
                         sw.holds,
                         sw.lower_margin,
                         sw.upper_margin};
    });
  });
  LocalLawResult out;
  for (const auto& o : outcomes) {
    if (o.value) {
      out.rows.push_back(*o.value);
    } else {
      ++out.failures;
    }
  }
  return out;
}

CsvTable local_law_table(const LocalLawResult& r) {
  CsvTable t;
  t.header = {"sample",      "z_re",     "z_im",     "entrywise_max",         "trace_residual",
              "iso_e1e1",    "iso_e1e2", "iso_uu",   "bound",                 "psi",
              "rigidity_max", "rigidity_flagged", "sandwich_holds", "sandwich_lower_margin", "sandwich_upper_margin"};
  for (const auto& row : r.rows) {
    t.add_row({static_cast<std::int64_t>(row.sample), row.z.real(), row.z.imag(), row.entrywise_max,
               row.trace_residual, row.iso_e1e1, row.iso_e1e2, row.iso_uu, row.bound, row.psi, row.rigidity_max,
               as_int(row.rigidity_flagged), std::int64_t{row.sandwich_holds ? 1 : 0}, row.sandwich_lower_margin,
               row.sandwich_upper_margin});
  }
  return t;
}

CsvTable tw_table(const ExperimentConfig& cfg) {
  CsvTable t;
  t.header = {"x",          "tw1",         "tw2",        "survival1", "survival2",
              "right_shape1", "right_shape2", "left_shape1", "left_shape2"};
  for (double x : cfg.x) {
    const double r1 = x >= 1.0 ? tail_asymptote(1, x, TailSide::right) : kNaN;
    const double r2 = x >= 1.0 ? tail_asymptote(2, x, TailSide::right) : kNaN;
    const double l1 = x <= -1.0 ? tail_asymptote(1, x, TailSide::left) : kNaN;
    const double l2 = x <= -1.0 ? tail_asymptote(2, x, TailSide::left) : kNaN;
    t.add_row({x, tw_cdf(1, x).cdf, tw_cdf(2, x).cdf, tw_survival(1, x), tw_survival(2, x), r1, r2, l1, l2});
  }
  return t;
}

CsvTable run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::tail_mc: return tail_mc_table(run_tail_mc(cfg), cfg);
    case ExperimentKind::exact_tails: return exact_tails_table(run_exact_tails(cfg));
    case ExperimentKind::flow_compare: return flow_compare_table(run_flow_compare(cfg));
    case ExperimentKind::local_law: return local_law_table(run_local_law(cfg));
    case ExperimentKind::tw_table: return tw_table(cfg);
  }
  fail(Error::Kind::invalid_input, "unknown experiment kind");
}

}  // namespace edgelab
