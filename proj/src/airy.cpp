#include "edgelab/airy.hpp"

#include <cmath>

#include "edgelab/common.hpp"
#include "edgelab/quadrature.hpp"

namespace edgelab {

namespace {

constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kAip0 = -0.258819403792806798405183560189203964L;

AiryValue maclaurin(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double a = 1.0L, f = 1.0L;       // f series
  long double b = x, g = x;             // g series
  long double p = 0.5L * x * x, fp = p; // f'
  long double r = 1.0L, gp = 1.0L;      // g'
  for (int k = 1; k < 200; ++k) {
    a *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    b *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    r *= x3 / ((3.0L * k - 2.0L) * (3.0L * k));
    if (k >= 2) p *= x3 / ((3.0L * k - 1.0L) * 3.0L * (k - 1.0L));
    f += a;
    g += b;
    gp += r;
    if (k >= 2) fp += p;
    const long double tol = 1e-24L;
    if (k > 3 && std::abs(a) + std::abs(b) <= tol * (std::abs(f) + std::abs(g)) &&
        std::abs(p) + std::abs(r) <= tol * (std::abs(fp) + std::abs(gp) + 1e-300L)) {
      break;
    }
  }
  return {static_cast<double>(kAi0 * f + kAip0 * g), static_cast<double>(kAi0 * fp + kAip0 * gp)};
}

// Ai(-z), Ai'(-z) for z >= 8.
AiryValue oscillatory(double z) {
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  // u_k = Gamma(3k+1/2) / (54^k k! Gamma(k+1/2)); v_k = -(6k+1)/(6k-1) u_k
  double u[40], v[40];
  u[0] = 1.0;
  v[0] = 1.0;
  for (int k = 1; k < 40; ++k) {
    u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0));
    v[k] = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u[k];
  }
  double pu = 0, qu = 0, pv = 0, qv = 0;
  double zpow = 1.0, last = 1e300;
  for (int k = 0; k < 40; ++k) {
    const double tu = u[k] * zpow;
    if (std::abs(tu) > last) break;  // asymptotic series: stop at smallest term
    last = std::abs(tu);
    const double sign = (k / 2) % 2 ? -1.0 : 1.0;
    if (k % 2 == 0) {
      pu += sign * tu;
      pv += sign * v[k] * zpow;
    } else {
      qu += sign * tu;
      qv += sign * v[k] * zpow;
    }
    zpow /= zeta;
    if (last < 1e-17) break;
  }
  const double phase = zeta - 0.25 * kPi;
  const double c = std::cos(phase), s = std::sin(phase);
  const double z14 = std::pow(z, 0.25);
  const double ai = (c * pu + s * qu) / (std::sqrt(kPi) * z14);
  const double aip = z14 / std::sqrt(kPi) * (s * pv - c * qv);
  return {ai, aip};
}

// e^{zeta} Ai(x), e^{zeta} Ai'(x) for x >= 2.
AiryValue steepest_descent(double x) {
  const double sx = std::sqrt(x);
  const double upper = std::sqrt(45.0 / sx);
  double j0 = 0.0, j2 = 0.0;
  const auto& rule = gauss_legendre(16);
  const int panels = 32;
  const double width = upper / panels;
  for (int p = 0; p < panels; ++p) {
    const double half = 0.5 * width;
    const double mid = (p + 0.5) * width;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double t = mid + half * rule.nodes[k];
      const double w = half * rule.weights[k] * std::exp(-sx * t * t) * std::cos(t * t * t / 3.0);
      j0 += w;
      j2 += w * t * t;
    }
  }
  return {j0 / kPi, (-sx * j0 - j2 / (2.0 * sx)) / kPi};
}

}  // namespace

AiryValue detail::airy_unbounded(double x) {
  if (x < -8.0) return oscillatory(-x);
  if (x <= 2.0) return maclaurin(x);
  const double decay = std::exp(-2.0 / 3.0 * x * std::sqrt(x));
  const AiryValue s = steepest_descent(x);
  return {s.ai * decay, s.aip * decay};
}

AiryValue airy(double x) {
  require(x >= -20.0 && x <= 200.0, Error::Kind::domain, "Airy argument outside [-20, 200]");
  return detail::airy_unbounded(x);
}

double airy_ai(double x) { return airy(x).ai; }
double airy_ai_prime(double x) { return airy(x).aip; }

AiryValue airy_scaled(double x) {
  require(x > 0.0 && x <= 200.0, Error::Kind::domain, "scaled Airy needs 0 < x <= 200");
  if (x >= 2.0) return steepest_descent(x);
  const double grow = std::exp(2.0 / 3.0 * x * std::sqrt(x));
  const AiryValue v = maclaurin(x);
  return {v.ai * grow, v.aip * grow};
}

double airy_ai_asymptote(double x) {
  require(x > 0.0, Error::Kind::domain, "Airy asymptote needs x > 0");
  return std::exp(-2.0 / 3.0 * x * std::sqrt(x)) / (2.0 * std::sqrt(kPi) * std::pow(x, 0.25));
}

}  // namespace edgelab
