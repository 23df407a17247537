#pragma once

#include <vector>

#include "edgelab/common.hpp"

namespace edgelab {

struct PainleveOptions {
  double x_left = -8.0;
  double x_right = 8.0;
  double rel_tol = 1e-12;
  double grid_step = 1.0 / 128.0;
};

/// Hastings-McLeod solution of q'' = x q + 2 q^3 on a uniform grid, with the
/// tail integrals I1(x) = int_x^inf q, J(x) = int_x^inf q^2 and
/// I2(x) = int_x^inf (t - x) q^2 carried in the integrator state.
class PainleveSolution {
 public:
  /// Integrates from x_right (Airy data) down to x_left with an adaptive
  /// Dormand-Prince 5(4) stepper.
  explicit PainleveSolution(const PainleveOptions& opts = {});

  double x_left() const { return grid_.front(); }
  double x_right() const { return grid_.back(); }

  // Ascending grid.
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& q_values() const { return q_; }
  const std::vector<double>& dq_values() const { return dq_; }
  const std::vector<double>& i1_values() const { return i1_; }
  const std::vector<double>& i2_values() const { return i2_; }

  double q(double x) const;
  double i1(double x) const;
  double i2(double x) const;

 private:
  struct Bracket {
    std::size_t lo;
    double h;
    double s;
  };
  Bracket locate(double x) const;

  std::vector<double> grid_, q_, dq_, i1_, j0_, i2_;
};

/// Shared default solution on [-8, 8], computed on first use.
const PainleveSolution& default_painleve();

struct TWValue {
  int beta;
  double x;
  double cdf;
};

/// TW_2 = exp(-I2), TW_1 = sqrt(TW_2) exp(-I1 / 2).
TWValue tw_cdf(int beta, double x);
TWValue tw_cdf(const PainleveSolution& sol, int beta, double x);

/// 1 - TW_beta(x) without cancellation.
double tw_survival(int beta, double x);
double tw_survival(const PainleveSolution& sol, int beta, double x);

/// Airy kernel (Ai(a) Ai'(b) - Ai'(a) Ai(b)) / (a - b), with the diagonal
/// limit Ai'(a)^2 - a Ai(a)^2 for |a - b| < 1e-8.
double airy_kernel(double a, double b);

/// det(I - K_Ai) on L^2(x, inf) by Gauss-Legendre Nystrom discretization,
/// order doubled from `quadrature_order` until successive values agree to 1e-9.
double fredholm_oracle(double x, int quadrature_order = 32);

enum class TailSide { right, left };

/// right: x^{-3 beta/4} e^{-(2 beta/3) x^{3/2}} (x >= 1);
/// left: |x|^{-beta/16} e^{-(beta/24) |x|^3} (x <= -1).
double tail_asymptote(int beta, double x, TailSide side);

/// x^{-3/2} e^{-(4/3) x^{3/2}}, the two-sided GUE right-tail shape.
double gue_sharp_shape(double x);

}  // namespace edgelab
