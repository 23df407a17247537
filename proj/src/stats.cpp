#include "edgelab/stats.hpp"

#include <cmath>
#include <limits>

#include "edgelab/common.hpp"

namespace edgelab {

double normal_quantile(double p) {
  require(p > 0.0 && p < 1.0, Error::Kind::invalid_input, "quantile level must be in (0, 1)");
  // Newton on Phi(z) = p, started from a logistic guess
  double z = std::log(p / (1.0 - p)) / 1.702;
  for (int it = 0; it < 100; ++it) {
    const double cdf = 0.5 * std::erfc(-z / std::sqrt(2.0));
    const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
    const double step = (cdf - p) / pdf;
    z -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

Interval wilson_interval(std::int64_t hits, std::int64_t trials, double level) {
  require(trials >= 1 && hits >= 0 && hits <= trials, Error::Kind::invalid_input,
          "Wilson interval needs 0 <= hits <= trials and trials >= 1");
  require(level > 0.0 && level < 1.0, Error::Kind::invalid_input, "confidence level must be in (0, 1)");
  const double z = normal_quantile(0.5 * (1.0 + level));
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (hits == 0) ci.low = 0.0;
  if (hits == trials) ci.high = 1.0;
  return ci;
}

SampleMoments sample_moments(const std::vector<double>& values) {
  SampleMoments m{0.0, std::numeric_limits<double>::infinity(), static_cast<std::int64_t>(values.size())};
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return m;
  double ss = 0.0;
  for (double v : values) ss += (v - m.mean) * (v - m.mean);
  const double n = static_cast<double>(values.size());
  m.standard_error = std::sqrt(ss / (n - 1.0) / n);
  return m;
}

}  // namespace edgelab
