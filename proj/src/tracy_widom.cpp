#include "edgelab/tracy_widom.hpp"

#include <array>
#include <cmath>

#include "edgelab/airy.hpp"
#include "edgelab/quadrature.hpp"

namespace edgelab {

namespace {

using State = std::array<double, 5>;  // q, q', I1, J, I2

State rhs(double x, const State& y) {
  const double q = y[0];
  return {y[1], x * q + 2.0 * q * q * q, -q, -q * q, -y[3]};
}

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [c, k] : terms) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * c * (*k)[i];
  }
  return out;
}

struct StepResult {
  State y;
  double err;
};

// One Dormand-Prince 5(4) step; err is the scaled max-norm error estimate.
StepResult dopri_step(double x, const State& y, double h, double rtol) {
  const State k1 = rhs(x, y);
  const State k2 = rhs(x + h / 5.0, axpy(y, h, {{1.0 / 5.0, &k1}}));
  const State k3 = rhs(x + 3.0 * h / 10.0, axpy(y, h, {{3.0 / 40.0, &k1}, {9.0 / 40.0, &k2}}));
  const State k4 =
      rhs(x + 4.0 * h / 5.0, axpy(y, h, {{44.0 / 45.0, &k1}, {-56.0 / 15.0, &k2}, {32.0 / 9.0, &k3}}));
  const State k5 = rhs(x + 8.0 * h / 9.0, axpy(y, h,
                                               {{19372.0 / 6561.0, &k1},
                                                {-25360.0 / 2187.0, &k2},
                                                {64448.0 / 6561.0, &k3},
                                                {-212.0 / 729.0, &k4}}));
  const State k6 = rhs(x + h, axpy(y, h,
                                   {{9017.0 / 3168.0, &k1},
                                    {-355.0 / 33.0, &k2},
                                    {46732.0 / 5247.0, &k3},
                                    {49.0 / 176.0, &k4},
                                    {-5103.0 / 18656.0, &k5}}));
  const State y5 = axpy(y, h,
                        {{35.0 / 384.0, &k1},
                         {500.0 / 1113.0, &k3},
                         {125.0 / 192.0, &k4},
                         {-2187.0 / 6784.0, &k5},
                         {11.0 / 84.0, &k6}});
  const State k7 = rhs(x + h, y5);
  constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0;
  constexpr double e3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
  constexpr double e4 = 125.0 / 192.0 - 393.0 / 640.0;
  constexpr double e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
  constexpr double e6 = 11.0 / 84.0 - 187.0 / 2100.0;
  constexpr double e7 = -1.0 / 40.0;
  double err = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    const double scale = 1e-300 + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
    err = std::max(err, std::abs(e) / scale);
  }
  return {y5, err};
}

// Integrates from x0 to x1 (either direction) with adaptive steps.
State integrate(double x0, double x1, State y, double rtol, double& h_guess) {
  const double dir = x1 > x0 ? 1.0 : -1.0;
  double x = x0;
  int steps = 0;
  while (dir * (x1 - x) > 0.0) {
    double h = dir * std::min(std::abs(h_guess), std::abs(x1 - x));
    for (;;) {
      const auto step = dopri_step(x, y, h, rtol);
      if (step.err <= 1.0) {
        x = std::abs(x1 - (x + h)) < 1e-15 ? x1 : x + h;
        y = step.y;
        const double grow = step.err == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(step.err, -0.2));
        h_guess = std::abs(h) * grow;
        break;
      }
      h *= std::max(0.1, 0.9 * std::pow(step.err, -0.2));
      require(std::abs(h) > 1e-14, Error::Kind::numeric, "Painleve integrator step size underflow");
    }
    require(++steps < 1000000, Error::Kind::numeric, "Painleve integrator exceeded step budget");
    require(std::abs(y[0]) <= 1e6, Error::Kind::wrong_branch, "Painleve solution blew up (wrong branch)");
  }
  return y;
}

// Cubic Hermite basis on [0, 1].
double hermite_cubic(double s, double h, double y0, double d0, double y1, double d1) {
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0 + (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * h * d1;
}

}  // namespace

PainleveSolution::PainleveSolution(const PainleveOptions& opts) {
  require(opts.x_right >= 6.0 && opts.x_left <= -8.0, Error::Kind::domain,
          "Painleve interval must satisfy x_right >= 6 and x_left <= -8");
  const double xr = opts.x_right;
  const auto a = airy(xr);
  // tail integrals of the Airy data beyond x_right
  const double span = 14.0;
  auto ai = [](double t) { return airy_ai(t); };
  const double i1 = integrate_panels(ai, xr, xr + span, 56, 16);
  const double j0 = integrate_panels([&](double t) { return ai(t) * ai(t); }, xr, xr + span, 56, 16);
  const double i2 = integrate_panels([&](double t) { return (t - xr) * ai(t) * ai(t); }, xr, xr + span, 56, 16);

  const auto count = static_cast<std::size_t>(std::llround((opts.x_right - opts.x_left) / opts.grid_step));
  const std::size_t nodes = count + 1;
  grid_.resize(nodes);
  q_.resize(nodes);
  dq_.resize(nodes);
  i1_.resize(nodes);
  j0_.resize(nodes);
  i2_.resize(nodes);
  State y{a.ai, a.aip, i1, j0, i2};
  double h = opts.grid_step;
  auto store = [&](std::size_t idx, double x, const State& s) {
    grid_[idx] = x;
    q_[idx] = s[0];
    dq_[idx] = s[1];
    i1_[idx] = s[2];
    j0_[idx] = s[3];
    i2_[idx] = s[4];
  };
  store(count, xr, y);
  for (std::size_t k = count; k-- > 0;) {
    const double x_from = xr - static_cast<double>(count - k - 1) * opts.grid_step;
    const double x_to = xr - static_cast<double>(count - k) * opts.grid_step;
    y = integrate(x_from, x_to, y, opts.rel_tol, h);
    require(y[0] > 0.0, Error::Kind::wrong_branch, "Hastings-McLeod solution lost positivity");
    store(k, x_to, y);
  }
}

PainleveSolution::Bracket PainleveSolution::locate(double x) const {
  require(x >= grid_.front() - 1e-12 && x <= grid_.back() + 1e-12, Error::Kind::domain,
          "x outside the solved Painleve range");
  const double h = grid_[1] - grid_[0];
  auto lo = static_cast<std::size_t>(std::floor((x - grid_.front()) / h));
  lo = std::min(lo, grid_.size() - 2);
  const double s = std::clamp((x - grid_[lo]) / h, 0.0, 1.0);
  return {lo, h, s};
}

double PainleveSolution::q(double x) const {
  const auto b = locate(x);
  return hermite_cubic(b.s, b.h, q_[b.lo], dq_[b.lo], q_[b.lo + 1], dq_[b.lo + 1]);
}

double PainleveSolution::i1(double x) const {
  const auto b = locate(x);
  return hermite_cubic(b.s, b.h, i1_[b.lo], -q_[b.lo], i1_[b.lo + 1], -q_[b.lo + 1]);
}

double PainleveSolution::i2(double x) const {
  const auto b = locate(x);
  return hermite_cubic(b.s, b.h, i2_[b.lo], -j0_[b.lo], i2_[b.lo + 1], -j0_[b.lo + 1]);
}

const PainleveSolution& default_painleve() {
  static const PainleveSolution solution{};
  return solution;
}

namespace {
double tw_exponent(const PainleveSolution& sol, int beta, double x) {
  require(beta == 1 || beta == 2, Error::Kind::invalid_input, "Tracy-Widom beta must be 1 or 2");
  const double i2 = sol.i2(x);
  return beta == 2 ? i2 : 0.5 * (i2 + sol.i1(x));
}
}  // namespace

TWValue tw_cdf(const PainleveSolution& sol, int beta, double x) {
  return {beta, x, std::exp(-tw_exponent(sol, beta, x))};
}

TWValue tw_cdf(int beta, double x) { return tw_cdf(default_painleve(), beta, x); }

double tw_survival(const PainleveSolution& sol, int beta, double x) {
  return -std::expm1(-tw_exponent(sol, beta, x));
}

double tw_survival(int beta, double x) { return tw_survival(default_painleve(), beta, x); }

double airy_kernel(double a, double b) {
  const auto va = airy(a);
  if (std::abs(a - b) < 1e-8) return va.aip * va.aip - a * va.ai * va.ai;
  const auto vb = airy(b);
  return (va.ai * vb.aip - va.aip * vb.ai) / (a - b);
}

namespace {

double fredholm_at_order(double x, int m) {
  const auto& rule = gauss_legendre(m);
  // K_Ai(s, s) < 1e-30 beyond 12
  const double upper = std::max(x, 0.0) + 12.0;
  const double half = 0.5 * (upper - x);
  const double mid = 0.5 * (upper + x);
  std::vector<double> nodes(m), sqrt_w(m);
  std::vector<AiryValue> ai(m);
  for (int i = 0; i < m; ++i) {
    nodes[i] = mid + half * rule.nodes[i];
    sqrt_w[i] = std::sqrt(half * rule.weights[i]);
    ai[i] = airy(nodes[i]);
  }
  RealMatrix a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double k;
      if (i == j) {
        k = ai[i].aip * ai[i].aip - nodes[i] * ai[i].ai * ai[i].ai;
      } else {
        k = (ai[i].ai * ai[j].aip - ai[i].aip * ai[j].ai) / (nodes[i] - nodes[j]);
      }
      a(i, j) = (i == j ? 1.0 : 0.0) - sqrt_w[i] * k * sqrt_w[j];
    }
  }
  return a.partialPivLu().determinant();
}

}  // namespace

double fredholm_oracle(double x, int quadrature_order) {
  require(x >= -10.0 && x <= 10.0, Error::Kind::domain, "Fredholm oracle needs x in [-10, 10]");
  require(quadrature_order >= 2, Error::Kind::invalid_order, "quadrature order must be >= 2");
  int m = quadrature_order;
  double prev = fredholm_at_order(x, m);
  for (int d = 0; d < 5; ++d) {
    m *= 2;
    const double cur = fredholm_at_order(x, m);
    if (std::abs(cur - prev) < 1e-9) return cur;
    prev = cur;
  }
  fail(Error::Kind::numeric, "Fredholm determinant did not converge");
}

double tail_asymptote(int beta, double x, TailSide side) {
  require(beta == 1 || beta == 2, Error::Kind::invalid_input, "beta must be 1 or 2");
  if (side == TailSide::right) {
    require(x >= 1.0, Error::Kind::domain, "right-tail asymptote needs x >= 1");
    return std::pow(x, -0.75 * beta) * std::exp(-2.0 * beta / 3.0 * std::pow(x, 1.5));
  }
  require(x <= -1.0, Error::Kind::domain, "left-tail asymptote needs x <= -1");
  const double ax = -x;
  return std::pow(ax, -beta / 16.0) * std::exp(-beta / 24.0 * ax * ax * ax);
}

double gue_sharp_shape(double x) {
  require(x >= 1.0, Error::Kind::domain, "GUE tail shape needs x >= 1");
  return std::pow(x, -1.5) * std::exp(-4.0 / 3.0 * std::pow(x, 1.5));
}

}  // namespace edgelab
