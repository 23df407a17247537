#pragma once

namespace edgelab {

/// Smooth non-decreasing cutoff: 0 on [0, 1/9], 1 on [2/9, inf), and in
/// between the normalized integral of exp(-1/(t(1-t))) with t = 9(x - 1/9).
double cutoff_F(double x);

/// k-th derivative of cutoff_F (k = 0 is F itself), 0 <= k <= 4.
double cutoff_derivative(int k, double x);

/// sup_x |F^(k)(x)| for 0 <= k <= 4, computed once on a fine grid.
double cutoff_derivative_bound(int k);

}  // namespace edgelab
