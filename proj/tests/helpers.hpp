#pragma once

#include <cmath>
#include <vector>

#include <doctest.h>

#include "edgelab/common.hpp"

// Runs `expr` and checks it throws edgelab::Error of the given kind.
#define CHECK_ERROR_KIND(expr, k)                          \
  do {                                                     \
    bool thrown_ = false;                                  \
    try {                                                  \
      (void)(expr);                                        \
    } catch (const edgelab::Error& e_) {                   \
      thrown_ = true;                                      \
      CHECK(e_.kind() == edgelab::Error::Kind::k);         \
    }                                                      \
    CHECK_MESSAGE(thrown_, "expected an error: " #expr);   \
  } while (0)

namespace testing {

struct MeanSe {
  double mean;
  double se;
};

inline MeanSe mean_se(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  const double m = s / v.size();
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return {m, std::sqrt(ss / (v.size() - 1) / v.size())};
}

}  // namespace testing
