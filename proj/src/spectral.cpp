#include "edgelab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace edgelab {

double tridiagonal_largest_eigenvalue(const RealVector& diag, const RealVector& offdiag) {
  const Index n = diag.size();
  require(n >= 1 && offdiag.size() == n - 1, Error::Kind::invalid_dimension, "bad tridiagonal shape");
  // Gershgorin bracket
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Index i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(offdiag(i - 1)) : 0.0) + (i + 1 < n ? std::abs(offdiag(i)) : 0.0);
    lo = std::min(lo, diag(i) - r);
    hi = std::max(hi, diag(i) + r);
  }
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, hi * hi);
  // number of eigenvalues strictly greater than x
  auto count_above = [&](double x) {
    Index below = 0;
    double d = 1.0;
    for (Index i = 0; i < n; ++i) {
      const double e2 = i > 0 ? offdiag(i - 1) * offdiag(i - 1) : 0.0;
      d = diag(i) - x - (i > 0 ? e2 / d : 0.0);
      if (std::abs(d) < pivmin) d = -pivmin;
      if (d < 0.0) ++below;
    }
    return n - below;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_above(mid) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double semicircle_density(double e) {
  const double s = 4.0 - e * e;
  return s > 0.0 ? std::sqrt(s) / (2.0 * kPi) : 0.0;
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(0.5 * x) / kPi;
}

Complex semicircle_stieltjes(Complex z) {
  require(z.imag() > 0.0, Error::Kind::domain, "Stieltjes transform needs Im z > 0");
  // sqrt(z-2) sqrt(z+2) ~ z at infinity and is analytic off [-2, 2]
  const Complex s = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
  Complex m = -2.0 / (z + s);
  if (m.imag() <= 0.0) m = 1.0 / m;  // the other root: product of roots is 1
  return m;
}

ClassicalLocations classical_locations(Index n) {
  require(n >= 1, Error::Kind::invalid_dimension, "need n >= 1");
  ClassicalLocations out;
  out.gamma.resize(n);
  const double nd = static_cast<double>(n);
  for (Index j = 1; j <= n; ++j) {
    if (j == n) {
      out.gamma(j - 1) = 2.0;
      continue;
    }
    const double target = static_cast<double>(j) / nd;
    double lo = -2.0, hi = 2.0;
    double x = 2.0 * std::sin(kPi * (target - 0.5));  // rough start
    for (int it = 0; it < 200; ++it) {
      const double f = semicircle_cdf(x) - target;
      if (f == 0.0) break;
      (f < 0.0 ? lo : hi) = x;
      const double rho = semicircle_density(x);
      double next = rho > 0.0 ? x - f / rho : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - x) <= 1e-16 * (1.0 + std::abs(x)) || hi - lo < 1e-15) {
        x = next;
        break;
      }
      x = next;
    }
    out.gamma(j - 1) = x;
  }
  return out;
}

RigidityReport rigidity_report(const Spectrum& s, const ClassicalLocations& gamma, double tolerance_exponent) {
  const Index n = s.n();
  require(gamma.n() == n, Error::Kind::invalid_dimension, "classical locations size mismatch");
  RigidityReport r;
  r.residuals.resize(n);
  const double nd = static_cast<double>(n);
  const double edge_scale = std::pow(nd, 2.0 / 3.0);
  r.threshold = std::pow(nd, tolerance_exponent);
  for (Index j = 1; j <= n; ++j) {
    const double index_factor = std::cbrt(static_cast<double>(std::min(j, n - j + 1)));
    const double v = std::abs(s.eigenvalues(j - 1) - gamma.gamma(j - 1)) * edge_scale * index_factor;
    r.residuals(j - 1) = v;
    if (v > r.threshold) r.flagged.push_back(j - 1);
  }
  r.max_residual = n > 0 ? r.residuals.maxCoeff() : 0.0;
  return r;
}

RigidityReport rigidity_report(const Spectrum& s, double tolerance_exponent) {
  return rigidity_report(s, classical_locations(s.n()), tolerance_exponent);
}

double semicircle_kolmogorov_distance(const Spectrum& s) {
  const Index n = s.n();
  double d = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double f = semicircle_cdf(s.eigenvalues(i));
    d = std::max({d, std::abs(f - static_cast<double>(i) / n), std::abs(f - static_cast<double>(i + 1) / n)});
  }
  return d;
}

}  // namespace edgelab
