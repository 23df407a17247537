#include "edgelab/cutoff.hpp"

#include <array>
#include <cmath>

#include "edgelab/common.hpp"
#include "edgelab/quadrature.hpp"

namespace edgelab {

namespace {

constexpr double kLow = 1.0 / 9.0;
constexpr double kHigh = 2.0 / 9.0;
constexpr int kMaxOrder = 4;

double bump(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return std::exp(-1.0 / (t * (1.0 - t)));
}

double bump_integral(double a, double b) { return integrate_panels(bump, a, b, 8, 32); }

double bump_mass() {
  static const double z = bump_integral(0.0, 1.0);
  return z;
}

// Truncated Taylor series in (t - t0) up to order kMaxOrder - 1.
struct Jet {
  static constexpr int K = kMaxOrder;
  std::array<double, K> c{};

  static Jet variable(double t0) {
    Jet j;
    j.c[0] = t0;
    j.c[1] = 1.0;
    return j;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i < K; ++i)
      for (int j = 0; i + j < K; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }
  friend Jet operator-(double s, const Jet& a) {
    Jet r;
    for (int i = 0; i < K; ++i) r.c[i] = -a.c[i];
    r.c[0] += s;
    return r;
  }
  Jet recip() const {
    Jet r;
    r.c[0] = 1.0 / c[0];
    for (int k = 1; k < K; ++k) {
      double s = 0.0;
      for (int j = 1; j <= k; ++j) s += c[j] * r.c[k - j];
      r.c[k] = -s / c[0];
    }
    return r;
  }
  Jet exp() const {
    Jet r;
    r.c[0] = std::exp(c[0]);
    for (int k = 1; k < K; ++k) {
      double s = 0.0;
      for (int j = 1; j <= k; ++j) s += j * c[j] * r.c[k - j];
      r.c[k] = s / k;
    }
    return r;
  }
};

// m-th derivative of the bump at t, m < kMaxOrder.
double bump_derivative(int m, double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const Jet x = Jet::variable(t);
  const Jet u = x * (1.0 - x);
  Jet g = u.recip();
  for (auto& v : g.c) v = -v;
  const Jet b = g.exp();
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  return fact * b.c[m];
}

}  // namespace

double cutoff_F(double x) {
  require(x >= 0.0, Error::Kind::domain, "cutoff_F needs x >= 0");
  if (x <= kLow) return 0.0;
  if (x >= kHigh) return 1.0;
  const double s = 9.0 * (x - kLow);
  // integrate from the nearer end so F stays monotone to rounding
  if (s <= 0.5) return bump_integral(0.0, s) / bump_mass();
  return 1.0 - bump_integral(s, 1.0) / bump_mass();
}

double cutoff_derivative(int k, double x) {
  require(k >= 0 && k <= kMaxOrder, Error::Kind::invalid_order, "cutoff derivative order must be in [0, 4]");
  if (k == 0) return cutoff_F(x);
  require(x >= 0.0, Error::Kind::domain, "cutoff_F needs x >= 0");
  if (x <= kLow || x >= kHigh) return 0.0;
  const double s = 9.0 * (x - kLow);
  return std::pow(9.0, k) * bump_derivative(k - 1, s) / bump_mass();
}

double cutoff_derivative_bound(int k) {
  require(k >= 0 && k <= kMaxOrder, Error::Kind::invalid_order, "cutoff derivative order must be in [0, 4]");
  static const std::array<double, kMaxOrder + 1> bounds = [] {
    std::array<double, kMaxOrder + 1> b{};
    b[0] = 1.0;
    constexpr int grid = 20000;
    std::array<int, kMaxOrder> at{};
    for (int i = 1; i < grid; ++i) {
      const double s = static_cast<double>(i) / grid;
      for (int m = 0; m < kMaxOrder; ++m) {
        const double v = std::abs(bump_derivative(m, s));
        if (v > b[m + 1]) {
          b[m + 1] = v;
          at[m] = i;
        }
      }
    }
    // refine around the coarse maximum
    constexpr int fine = 4000;
    for (int m = 0; m < kMaxOrder; ++m) {
      for (int i = -fine; i <= fine; ++i) {
        const double s = (at[m] + static_cast<double>(i) / fine) / grid;
        if (s > 0.0 && s < 1.0) b[m + 1] = std::max(b[m + 1], std::abs(bump_derivative(m, s)));
      }
    }
    for (int k = 1; k <= kMaxOrder; ++k) b[k] *= std::pow(9.0, k) / bump_mass();
    return b;
  }();
  return bounds[k];
}

}  // namespace edgelab
