#include "edgelab/gaussian_kernels.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "edgelab/airy.hpp"
#include "edgelab/quadrature.hpp"

namespace edgelab {

namespace {

constexpr double kRescaleAbove = 1e200;
const double kLogRescale = std::log(kRescaleAbove);

// Recurrence coefficients sqrt(2/j), sqrt((j-1)/j), grown on demand.
struct RecurrenceTable {
  std::vector<double> a{0.0}, b{0.0};
  void ensure(int k) {
    for (int j = static_cast<int>(a.size()); j <= k; ++j) {
      a.push_back(std::sqrt(2.0 / j));
      b.push_back(std::sqrt((j - 1.0) / j));
    }
  }
};

double combine(double mantissa, double log_scale) {
  if (mantissa == 0.0) return 0.0;
  return std::copysign(std::exp(log_scale + std::log(std::abs(mantissa))), mantissa);
}

HermitePair hermite_pair_unchecked(int k, double x) {
  thread_local RecurrenceTable table;
  table.ensure(k);
  double log_scale = -0.5 * x * x - 0.25 * std::log(kPi);
  double prev = 0.0, cur = 1.0;
  for (int j = 1; j <= k; ++j) {
    const double next = x * table.a[j] * cur - table.b[j] * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAbove) {
      cur /= kRescaleAbove;
      prev /= kRescaleAbove;
      log_scale += kLogRescale;
    }
  }
  return {combine(prev, log_scale), combine(cur, log_scale)};
}

struct EdgeMap {
  int n;
  double center;
  double scale;
  double prefactor;  // N^{1/12}

  explicit EdgeMap(int n_)
      : n(n_),
        center(std::sqrt(2.0 * n_)),
        scale(1.0 / (std::sqrt(2.0) * std::pow(static_cast<double>(n_), 1.0 / 6.0))),
        prefactor(std::pow(static_cast<double>(n_), 1.0 / 12.0)) {}

  double original(double x) const { return center + x * scale; }

  EdgeFG fg(double x) const {
    const auto p = hermite_pair_unchecked(n, original(x));
    return {prefactor * p.current, prefactor * p.previous};
  }
};

constexpr double kEdgeLimit = 60.0;

// First point past the peak where |integrand| falls below rel * peak,
// scanning from `start` in steps of 0.25.
template <typename Fn>
double truncation_point(Fn&& integrand, double start, double rel, double min_length = 2.0) {
  double peak = 0.0;
  int quiet = 0;
  for (double s = start; s <= kEdgeLimit; s += 0.25) {
    const double v = std::abs(integrand(s));
    peak = std::max(peak, v);
    if (s >= start + min_length && v <= rel * peak) {
      if (++quiet == 3) return s;
    } else {
      quiet = 0;
    }
  }
  fail(Error::Kind::numeric, "edge quadrature: integrand did not decay before the edge-coordinate limit");
}

void check_n(int n) { require(n >= 2, Error::Kind::invalid_dimension, "edge kernels need N >= 2"); }

double gue_diagonal_kernel(const EdgeMap& map, double x) {
  auto integrand = [&](double s) {
    const auto v = map.fg(s);
    return v.f * v.g;
  };
  const double upper = truncation_point(integrand, x, 1e-17);
  return integrate_converged(integrand, x, upper) / std::sqrt(2.0);
}

// int_x^upper f for every outer node, combined with g; see goe_expected_count_above.
double goe_nested_term(const EdgeMap& map, double r, double upper, int panels) {
  const auto& rule = gauss_legendre(16);
  const double width = (upper - r) / panels;
  std::vector<double> panel_f(panels);
  for (int p = 0; p < panels; ++p) {
    const double lo = r + p * width;
    panel_f[p] = integrate_panels([&](double s) { return map.fg(s).f; }, lo, lo + width, 1, 16);
  }
  std::vector<double> tail(panels + 1, 0.0);
  for (int p = panels - 1; p >= 0; --p) tail[p] = tail[p + 1] + panel_f[p];
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = r + p * width;
    const double hi = lo + width;
    const double half = 0.5 * width;
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = lo + half * (1.0 + rule.nodes[k]);
      const double inner = integrate_panels([&](double s) { return map.fg(s).f; }, x, hi, 1, 16) + tail[p + 1];
      acc += rule.weights[k] * map.fg(x).g * inner;
    }
    total += half * acc;
  }
  return total;
}

double goe_nested_converged(const EdgeMap& map, double r, double upper) {
  int panels = std::max(1, static_cast<int>(std::ceil((upper - r) / 0.25)));
  double prev = goe_nested_term(map, r, upper, panels);
  for (int d = 0; d < 6; ++d) {
    panels *= 2;
    const double cur = goe_nested_term(map, r, upper, panels);
    if (std::abs(cur - prev) <= 1e-9 * std::max(std::abs(cur), std::abs(prev))) return cur;
    prev = cur;
  }
  fail(Error::Kind::numeric, "GOE nested quadrature did not converge");
}

double goe_density_at(const EdgeMap& map, double x, double half_integral) {
  const double k2 = gue_diagonal_kernel(map, x);
  auto f_only = [&](double s) { return map.fg(s).f; };
  const double upper = truncation_point(f_only, x, 1e-17);
  const double tail_f = integrate_converged(f_only, x, upper);
  const double g = map.fg(x).g;
  const double n14 = std::pow(static_cast<double>(map.n), 0.25);
  return k2 + 0.5 * n14 * half_integral * g - g * tail_f / (2.0 * std::sqrt(2.0));
}

double tail_reference(int beta, double r) {
  if (r <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::pow(r, -0.75 * beta) * std::exp(-2.0 * beta / 3.0 * std::pow(r, 1.5));
}

}  // namespace

double hermite_phi(int k, double x) {
  require(k >= 0, Error::Kind::invalid_order, "Hermite order must be non-negative");
  if (k == 0) return std::exp(-0.5 * x * x) / std::pow(kPi, 0.25);
  return hermite_pair_unchecked(k, x).current;
}

HermitePair hermite_pair(int k, double x) {
  require(k >= 1, Error::Kind::invalid_order, "Hermite pair needs order >= 1");
  return hermite_pair_unchecked(k, x);
}

double hermite_kernel_diagonal(int n, double x) {
  require(n >= 1, Error::Kind::invalid_dimension, "kernel needs N >= 1");
  thread_local RecurrenceTable table;
  table.ensure(n);
  double log_scale = -0.5 * x * x - 0.25 * std::log(kPi);
  double prev = 0.0, cur = 1.0;
  // sum of squares in the running scale
  double sum = 1.0;
  for (int j = 1; j < n; ++j) {
    const double next = x * table.a[j] * cur - table.b[j] * prev;
    prev = cur;
    cur = next;
    sum += cur * cur;
    if (std::abs(cur) > 1e100) {
      cur /= 1e100;
      prev /= 1e100;
      sum /= 1e200;
      log_scale += std::log(1e100);
    }
  }
  return sum == 0.0 ? 0.0 : std::exp(2.0 * log_scale + std::log(sum));
}

EdgeFG edge_fg(int n, double x) {
  check_n(n);
  const double hi = 4.0 * std::pow(static_cast<double>(n), 1.0 / 6.0);
  require(x >= -10.0 && x <= hi, Error::Kind::domain, "edge_fg argument outside [-10, 4 N^{1/6}]");
  return EdgeMap(n).fg(x);
}

EdgeKernelEval gue_edge_kernel(int n, double x, double y) {
  check_n(n);
  const EdgeMap map(n);
  if (x == y) return {n, 2, x, y, gue_diagonal_kernel(map, x)};
  auto integrand = [&](double z) {
    const auto a = map.fg(x + z);
    const auto b = map.fg(y + z);
    return a.f * b.g + a.g * b.f;
  };
  const double upper = truncation_point(integrand, 0.0, 1e-17);
  const double value = integrate_converged(integrand, 0.0, upper) / (2.0 * std::sqrt(2.0));
  return {n, 2, x, y, value};
}

double hermite_half_integral(int n) {
  require(n >= 0, Error::Kind::invalid_order, "Hermite order must be non-negative");
  const double upper = std::sqrt(2.0 * n + 1.0) + 12.0;
  const double width = std::min(0.25, 1.0 / std::sqrt(2.0 * n + 1.0));
  return integrate_converged([n](double t) { return hermite_phi(n, t); }, 0.0, upper, width, 16, 1e-12);
}

EdgeKernelEval goe_edge_density(int n, double x) {
  check_n(n);
  require(n % 2 == 0, Error::Kind::unsupported_dimension, "GOE edge density is implemented for even N only");
  const EdgeMap map(n);
  return {n, 1, x, x, goe_density_at(map, x, hermite_half_integral(n))};
}

TailIntegral gue_expected_count_above(int n, double r, bool cross_check) {
  check_n(n);
  const EdgeMap map(n);
  auto weighted = [&](double s) {
    const auto v = map.fg(s);
    return (s - r) * v.f * v.g;
  };
  const double upper = truncation_point(weighted, r, 1e-18);
  const double count = integrate_converged(weighted, r, upper) / std::sqrt(2.0);
  double check = std::numeric_limits<double>::quiet_NaN();
  if (cross_check) {
    check = integrate_converged([&](double x) { return gue_diagonal_kernel(map, x); }, r, upper);
  }
  return {n, 2, r, count, check, tail_reference(2, r)};
}

TailIntegral goe_expected_count_above(int n, double r, bool cross_check) {
  check_n(n);
  require(n % 2 == 0, Error::Kind::unsupported_dimension, "GOE tail integral is implemented for even N only");
  const EdgeMap map(n);
  const double gue = gue_expected_count_above(n, r, false).expected_count;
  const double half_integral = hermite_half_integral(n);
  auto g_only = [&](double s) { return map.fg(s).g; };
  const double upper = truncation_point(g_only, r, 1e-18);
  const double g_tail = integrate_converged(g_only, r, upper);
  const double nested = goe_nested_converged(map, r, upper);
  const double n14 = std::pow(static_cast<double>(n), 0.25);
  const double count = gue + 0.5 * n14 * half_integral * g_tail - nested / (2.0 * std::sqrt(2.0));
  double check = std::numeric_limits<double>::quiet_NaN();
  if (cross_check) {
    check = integrate_converged([&](double x) { return goe_density_at(map, x, half_integral); }, r, upper, 0.25, 16,
                                1e-8);
  }
  return {n, 1, r, count, check, tail_reference(1, r)};
}

double plancherel_rotach_xi(double t) {
  require(t > 0.0, Error::Kind::domain, "xi needs t > 0");
  const double u = t - 1.0;
  const double c = std::cbrt(2.0);
  if (std::abs(u) < 1e-4) return c * u * (1.0 + u / 10.0);
  if (t > 1.0) {
    const double w = 0.75 * (t * std::sqrt(t * t - 1.0) - std::acosh(t));
    return std::pow(w, 2.0 / 3.0);
  }
  const double w = 0.75 * (std::acos(t) - t * std::sqrt(1.0 - t * t));
  return -std::pow(w, 2.0 / 3.0);
}

HermiteAsymptote plancherel_rotach(int n, double t) {
  require(n >= 1, Error::Kind::invalid_order, "order must be >= 1");
  require(t >= 0.5 && t <= 3.0, Error::Kind::domain, "Plancherel-Rotach variable outside [0.5, 3]");
  const double m = 2.0 * n + 1.0;
  const double xi = plancherel_rotach_xi(t);
  const double u = t - 1.0;
  // xi / (t^2 - 1) > 0 on both branches
  const double ratio = std::abs(u) < 1e-4 ? std::cbrt(2.0) * (1.0 + u / 10.0) / (2.0 + u) : xi / (t * t - 1.0);
  const double arg = std::pow(m, 2.0 / 3.0) * xi;

  double log_ai;
  int sign = 1;
  if (arg > 0.0) {
    // log Ai via the scaled function (no underflow)
    const double zeta = 2.0 / 3.0 * arg * std::sqrt(arg);
    const double scaled = arg <= 200.0 ? airy_scaled(arg).ai : 1.0 / (2.0 * std::sqrt(kPi) * std::pow(arg, 0.25));
    log_ai = std::log(scaled) - zeta;
  } else {
    const double ai = detail::airy_unbounded(arg).ai;
    sign = ai < 0.0 ? -1 : 1;
    log_ai = std::log(std::abs(ai));
  }
  const double log_q = 0.5 * std::log(2.0 * kPi) + (0.5 * n + 1.0 / 6.0) * std::log(m) + 0.5 * m * (t * t - 0.5) +
                       0.25 * std::log(ratio) + log_ai;
  const double x = std::sqrt(m) * t;
  const double log_norm = 0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0) + 0.5 * std::log(kPi));
  const double phi = sign * std::exp(-0.5 * x * x + log_q - log_norm);
  return {log_q, sign, phi};
}

}  // namespace edgelab
