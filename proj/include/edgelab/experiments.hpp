#pragma once

#include <cstdint>
#include <vector>

#include "edgelab/config.hpp"
#include "edgelab/csv.hpp"
#include "edgelab/flow.hpp"

namespace edgelab {

/// Largest eigenvalue per sample index, failures dropped (index order kept).
struct LargestSamples {
  std::vector<double> values;
  Index failures = 0;
};

/// Throws a numeric error when more than 1% of the samples fail.
LargestSamples sample_largest(const EnsembleSpec& spec, Index n, Index samples, std::uint64_t seed, int threads,
                              bool fast_path);

struct TailEstimate {
  double x;
  std::int64_t trials;
  std::int64_t hits;  // N^{2/3}(lambda_N - 2) > x (right) or < -x (left)
  double p_hat;
  double ci_low;
  double ci_high;
  double reference_exact;      // kernel expected count (Gaussian, right side), else nan
  double reference_asymptote;  // tail shape, nan outside its domain
  Index n;
  int beta;
  bool in_window;  // x <= M (log N)^{2/3} (right) or M (log N)^{1/3} (left)
};

std::vector<TailEstimate> tail_estimates(const std::vector<double>& largest, const std::vector<double>& xs, Side side,
                                         Index n, int beta, bool gaussian, double window_m);

/// Least-squares C0 in p = exp(-beta x^3 / C0) over rows with hits > 0 and x > 0.
double fit_left_constant(const std::vector<TailEstimate>& rows, int beta);

struct TailMcResult {
  std::vector<TailEstimate> estimates;
  Index failures = 0;
  double fitted_c0;  // left side only, nan otherwise
};

TailMcResult run_tail_mc(const ExperimentConfig& cfg);
CsvTable tail_mc_table(const TailMcResult& r, const ExperimentConfig& cfg);

struct ExactTailRow {
  double r;
  double gue_count;
  double goe_count;  // nan for odd n
  double gue_shape;  // x^{-3/2} e^{-(4/3) x^{3/2}}
  double goe_shape;  // x^{-3/4} e^{-(2/3) x^{3/2}}
};

struct ExactTailsResult {
  std::vector<ExactTailRow> rows;
  double gue_fitted_c;
  double goe_fitted_c;
};

/// exp(mean(log count - log shape)) over rows with r in [lo, hi].
double fitted_prefactor(const std::vector<double>& r, const std::vector<double>& count,
                        const std::vector<double>& shape, double lo = 1.5, double hi = 3.5);

ExactTailsResult run_exact_tails(const ExperimentConfig& cfg);
CsvTable exact_tails_table(const ExactTailsResult& r);

struct FlowCompareResult {
  FlowCurve curve;
  EndpointDifference endpoint;
};

FlowConfig flow_config(const ExperimentConfig& cfg);
FlowCompareResult run_flow_compare(const ExperimentConfig& cfg);
CsvTable flow_compare_table(const FlowCompareResult& r);

struct LocalLawRow {
  std::uint64_t sample;
  Complex z;
  double entrywise_max;
  double trace_residual;
  double iso_e1e1;
  double iso_e1e2;
  double iso_uu;
  double bound;
  double psi;
  double rigidity_max;
  Index rigidity_flagged;
  bool sandwich_holds;
  double sandwich_lower_margin;
  double sandwich_upper_margin;
};

struct LocalLawResult {
  std::vector<LocalLawRow> rows;
  Index failures = 0;
};

/// Per sample: local law at z = 2 + N^{-2/3} x + i N^{-2/3+eps}, rigidity
/// against N^{rigidity_exponent}, sandwich at E = 2 + N^{-2/3} x with
/// sandwich_epsilon. Uses x[0].
LocalLawResult run_local_law(const ExperimentConfig& cfg);
CsvTable local_law_table(const LocalLawResult& r);

CsvTable tw_table(const ExperimentConfig& cfg);

/// Dispatches on cfg.kind.
CsvTable run_experiment(const ExperimentConfig& cfg);

}  // namespace edgelab
