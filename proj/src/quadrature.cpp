#include "edgelab/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace edgelab {

namespace {

GaussLegendre compute_rule(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
  require(order >= 1, Error::Kind::invalid_order, "quadrature order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussLegendre>(compute_rule(order));
  return *slot;
}

double integrate_converged(const std::function<double(double)>& f, double a, double b, double panel_width, int order,
                           double rel_tol, int max_doublings) {
  if (b <= a) return 0.0;
  int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));
  double prev = integrate_panels(f, a, b, panels, order);
  for (int d = 0; d < max_doublings; ++d) {
    panels *= 2;
    const double cur = integrate_panels(f, a, b, panels, order);
    if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), std::abs(prev)) ||
        std::abs(cur - prev) <= 1e-300) {
      return cur;
    }
    prev = cur;
  }
  fail(Error::Kind::numeric, "composite quadrature did not converge");
}

}  // namespace edgelab
