#pragma once

#include <functional>
#include <vector>

#include "edgelab/common.hpp"

namespace edgelab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on P_n; cached per order, thread-safe.
const GaussLegendre& gauss_legendre(int order);

/// Composite rule: `panels` equal panels on [a, b], each of the given order.
template <typename Fn>
double integrate_panels(Fn&& f, double a, double b, int panels, int order = 16) {
  const auto& rule = gauss_legendre(order);
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double half = 0.5 * width;
    const double mid = lo + half;
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
    total += half * acc;
  }
  return total;
}

/// Composite Gauss-Legendre with the panel count doubled until two
/// successive estimates agree to `rel_tol` (relative to the larger value).
double integrate_converged(const std::function<double(double)>& f, double a, double b, double panel_width = 0.25,
                           int order = 16, double rel_tol = 1e-9, int max_doublings = 8);

}  // namespace edgelab
