#pragma once

#include <cstdint>
#include <vector>

namespace edgelab {

struct Interval {
  double low;
  double high;
};

/// Standard normal quantile.
double normal_quantile(double p);

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::int64_t hits, std::int64_t trials, double level = 0.95);

struct SampleMoments {
  double mean;
  double standard_error;  // +inf for fewer than two values
  std::int64_t count;
};

/// Mean and standard error, summed in index order.
SampleMoments sample_moments(const std::vector<double>& values);

}  // namespace edgelab
