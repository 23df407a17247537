#include "edgelab/flow.hpp"

#include <algorithm>
#include <cmath>

#include "edgelab/cutoff.hpp"
#include "edgelab/parallel.hpp"

namespace edgelab {

void FlowConfig::validate() const {
  require(!times.empty() && times.front() == 0.0, Error::Kind::invalid_input, "flow times must start at 0");
  require(std::is_sorted(times.begin(), times.end()), Error::Kind::invalid_input, "flow times must be sorted");
  require(samples >= 1, Error::Kind::invalid_input, "samples must be >= 1");
  require(n >= 2, Error::Kind::invalid_dimension, "flow needs n >= 2");
  counting().validate();
}

double observable_FX(const Spectrum& s, const FlowConfig& cfg) {
  const double x = mollified_count(s, cfg.counting());
  return cutoff_F(std::max(0.0, x));
}

namespace {

struct Moments {
  double mean = 0.0;
  double se = std::numeric_limits<double>::infinity();
  Index count = 0;
};

// Index-ordered sums, so the result does not depend on scheduling.
Moments summarize(const std::vector<double>& v) {
  Moments m;
  m.count = static_cast<Index>(v.size());
  if (v.empty()) return m;
  double sum = 0.0;
  for (double x : v) sum += x;
  m.mean = sum / static_cast<double>(v.size());
  if (v.size() < 2) return m;
  double ss = 0.0;
  for (double x : v) ss += (x - m.mean) * (x - m.mean);
  m.se = std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
  return m;
}

}  // namespace

FlowCurve comparison_curve(const EnsembleSpec& spec, const FlowConfig& cfg, std::uint64_t master_seed) {
  cfg.validate();
  const auto outcomes = dispatch_scalar(spec.symmetry, [&]<typename Scalar>() {
    return parallel_map<std::vector<double>>(
        static_cast<std::size_t>(cfg.samples), cfg.threads, [&](std::size_t i) {
          const auto h0 = sample_wigner<Scalar>(spec, cfg.n, master_seed, i, kWignerStream);
          const auto w = sample_gaussian<Scalar>(cfg.n, master_seed, i, kGaussianStream);
          std::vector<double> values;
          values.reserve(cfg.times.size());
          for (double t : cfg.times) values.push_back(observable_FX(eigen(interpolate(h0, w, t)), cfg));
          return values;
        });
  });
  FlowCurve curve;
  std::vector<std::vector<double>> per_time(cfg.times.size());
  for (const auto& o : outcomes) {
    if (!o.value) {
      ++curve.failures;
      continue;
    }
    for (std::size_t k = 0; k < cfg.times.size(); ++k) per_time[k].push_back((*o.value)[k]);
  }
  for (std::size_t k = 0; k < cfg.times.size(); ++k) {
    const auto m = summarize(per_time[k]);
    curve.rows.push_back({cfg.times[k], m.mean, m.se, m.count});
  }
  return curve;
}

double comparison_bound(Index n, double x, double epsilon, int beta) {
  const double nd = static_cast<double>(n);
  const double shape = x > 0.0 ? std::pow(x, -0.75 * beta) * std::exp(-2.0 * beta / 3.0 * std::pow(x, 1.5)) : 1.0;
  return std::pow(nd, -1.0 / 6.0 + 4.0 * epsilon) * shape;
}

EndpointDifference endpoint_difference(const EnsembleSpec& spec, const FlowConfig& cfg, std::uint64_t master_seed) {
  cfg.validate();
  const auto outcomes = dispatch_scalar(spec.symmetry, [&]<typename Scalar>() {
    return parallel_map<std::pair<double, double>>(
        static_cast<std::size_t>(cfg.samples), cfg.threads, [&](std::size_t i) {
          const auto h = sample_wigner<Scalar>(spec, cfg.n, master_seed, i, kWignerStream);
          const auto g = sample_gaussian<Scalar>(cfg.n, master_seed, i, kGaussianStream);
          return std::pair{observable_FX(eigen(h), cfg), observable_FX(eigen(g), cfg)};
        });
  });
  std::vector<double> wig, gau;
  Index failures = 0;
  for (const auto& o : outcomes) {
    if (!o.value) {
      ++failures;
      continue;
    }
    wig.push_back(o.value->first);
    gau.push_back(o.value->second);
  }
  const auto mw = summarize(wig);
  const auto mg = summarize(gau);
  EndpointDifference r{};
  r.wigner_mean = mw.mean;
  r.gaussian_mean = mg.mean;
  r.wigner_count = mw.count;
  r.gaussian_count = mg.count;
  r.failures = failures;
  r.delta = mw.mean - mg.mean;
  r.standard_error = std::sqrt(mw.se * mw.se + mg.se * mg.se);
  r.ci_low = r.delta - 1.959963984540054 * r.standard_error;
  r.ci_high = r.delta + 1.959963984540054 * r.standard_error;
  r.predicted_bound = comparison_bound(cfg.n, cfg.x, cfg.epsilon, beta_of(spec.symmetry));
  return r;
}

Complex green_derivative(const ComplexMatrix& g, Index i, Index j, Index a, Index b) {
  const double norm = a == b ? 2.0 : 1.0;
  return -(g(i, a) * g(b, j) + g(i, b) * g(a, j)) / norm;
}

}  // namespace edgelab
