#pragma once

// Finite-N Gaussian edge quantities in the edge coordinate
// x_original = sqrt(2N) + x / (sqrt(2) N^{1/6}) of the rescaled matrix
// sqrt(N/2) H, whose GUE weight is e^{-x^2} and GOE weight e^{-x^2/2}.

#include "edgelab/common.hpp"

namespace edgelab {

/// Orthonormal Hermite function phi_k(x) = e^{-x^2/2} q_k(x) / sqrt(2^k k! sqrt(pi))
/// via the three-term recurrence with dynamic rescaling (no overflow for
/// k <= 1e5).
double hermite_phi(int k, double x);

/// phi_{k-1}(x) and phi_k(x) from a single recurrence pass, k >= 1.
struct HermitePair {
  double previous;  // phi_{k-1}
  double current;   // phi_k
};
HermitePair hermite_pair(int k, double x);

/// Christoffel-Darboux diagonal sum_{k<N} phi_k(x)^2 (GUE one-point density).
double hermite_kernel_diagonal(int n, double x);

struct EdgeFG {
  double f;  // N^{1/12} phi_N(sqrt(2N) + x / (sqrt2 N^{1/6}))
  double g;  // same with phi_{N-1}
};

/// Checked for N >= 2 and x in [-10, 4 N^{1/6}].
EdgeFG edge_fg(int n, double x);

struct EdgeKernelEval {
  int n;
  int beta;
  double x;
  double y;
  double value;
};

/// Rescaled GUE kernel (1/(2 sqrt2)) int_0^inf [f(x+z) g(y+z) + g(x+z) f(y+z)] dz.
EdgeKernelEval gue_edge_kernel(int n, double x, double y);

/// Rescaled GOE one-point function (even N).
EdgeKernelEval goe_edge_density(int n, double x);

struct TailIntegral {
  int n;
  int beta;
  double r;
  double expected_count;   // int_r^inf K_N,beta(x, x) dx
  double cross_check;      // same quantity by the independent route (NaN if skipped)
  double reference;        // r^{-3 beta/4} e^{-(2 beta/3) r^{3/2}} (NaN for r <= 0)
};

/// Expected number of GUE eigenvalues above 2 + N^{-2/3} r, from
/// (1/sqrt2) int_r^inf (s - r) f g ds; `cross_check` also evaluates
/// int_r^inf K(x, x) dx with the kernel's own inner quadrature.
TailIntegral gue_expected_count_above(int n, double r, bool cross_check = true);

/// GOE analogue (even N only).
TailIntegral goe_expected_count_above(int n, double r, bool cross_check = false);

/// int_0^inf phi_n(t) dt by quadrature.
double hermite_half_integral(int n);

/// Plancherel-Rotach variable xi(t) for t > 0, negative for t < 1.
double plancherel_rotach_xi(double t);

struct HermiteAsymptote {
  double log_abs_q;  // log |q_N(sqrt(2N+1) t)|
  int sign;
  double phi;        // the corresponding normalized phi_N value
};

/// Leading uniform asymptote of q_N(sqrt(2N+1) t), t in [0.5, 3].
HermiteAsymptote plancherel_rotach(int n, double t);

}  // namespace edgelab
