#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "edgelab/ensembles.hpp"
#include "edgelab/resolvent.hpp"
#include "edgelab/spectral.hpp"

namespace edgelab {

/// e^{-t/2} H0 + sqrt(1 - e^{-t}) W.
template <typename Scalar>
WignerMatrix<Scalar> interpolate(const WignerMatrix<Scalar>& h0, const WignerMatrix<Scalar>& w, double t) {
  require(h0.n() == w.n(), Error::Kind::invalid_pair, "flow endpoints differ in dimension");
  require(t >= 0.0, Error::Kind::domain, "flow time must be >= 0");
  if (t == 0.0) return h0;
  WignerMatrix<Scalar> out = h0;
  const double a = std::exp(-0.5 * t);
  const double b = std::sqrt(-std::expm1(-t));
  out.entries = a * h0.entries + b * w.entries;
  return out;
}

struct FlowConfig {
  double x = 1.0;
  double epsilon = 0.15;
  std::vector<double> times{0.0, 0.5, 1.0, 2.0, 5.0, 50.0};
  Index n = 200;
  Index samples = 1000;
  int threads = 1;

  CountingConfig counting() const { return CountingConfig::at_edge(x, n, epsilon); }
  void validate() const;
};

/// F(X) with X the mollified count over [E1, E2] at eta = N^{-2/3-eps}.
double observable_FX(const Spectrum& s, const FlowConfig& cfg);

struct FlowRow {
  double t;
  double mean;
  double standard_error;  // +inf when fewer than two samples
  Index count;
};

struct FlowCurve {
  std::vector<FlowRow> rows;
  Index failures = 0;
};

/// Per sample index draws (H0, W) once and evaluates F(X(t)) at every time.
FlowCurve comparison_curve(const EnsembleSpec& spec, const FlowConfig& cfg, std::uint64_t master_seed);

struct EndpointDifference {
  double delta;           // mean_Wigner F(X) - mean_Gaussian F(X)
  double standard_error;  // two-sample
  double ci_low;
  double ci_high;
  double predicted_bound;  // N^{-1/6+4 eps} x^{-3 beta/4} e^{-(2 beta/3) x^{3/2}}
  double wigner_mean;
  double gaussian_mean;
  Index wigner_count;
  Index gaussian_count;
  Index failures;
};

EndpointDifference endpoint_difference(const EnsembleSpec& spec, const FlowConfig& cfg, std::uint64_t master_seed);

/// N^{-1/6+4 eps} times the right-tail shape at x (x <= 0 uses shape 1).
double comparison_bound(Index n, double x, double epsilon, int beta);

/// dG_ij / dh_ab for a Hermitian perturbation of the (a, b) and (b, a) entries:
/// -(G_ia G_bj + G_ib G_aj) / (1 + delta_ab).
Complex green_derivative(const ComplexMatrix& g, Index i, Index j, Index a, Index b);

}  // namespace edgelab
