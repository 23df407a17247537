#pragma once

#include <string>
#include <vector>

#include "edgelab/common.hpp"
#include "edgelab/spectral.hpp"

namespace edgelab {

/// S(eps) = {E + i eta : |E| <= 5, N^{-1+eps} <= eta <= 10}.
struct SpectralDomain {
  double epsilon;

  bool contains(Complex z, Index n) const;
};

/// G(z) = V diag(1 / (lambda_j - z)) V^*.
ComplexMatrix green_entry_grid(const EigenDecomposition<double>& d, Complex z);
ComplexMatrix green_entry_grid(const EigenDecomposition<Complex>& d, Complex z);

template <typename Scalar>
ComplexMatrix green_entry_grid(const WignerMatrix<Scalar>& h, Complex z) {
  require(z.imag() > 0.0, Error::Kind::domain, "resolvent needs Im z > 0");
  return green_entry_grid(eigen_decompose(h.entries), z);
}

/// (1/N) sum_j 1 / (lambda_j - z).
Complex m_N(const Spectrum& s, Complex z);

struct ProbePair {
  std::string label;
  ComplexVector v;
  ComplexVector w;
};

/// (e1, e1), (e1, e2) and (u, u) with u_i = 1/sqrt(N).
std::vector<ProbePair> default_probes(Index n);

struct IsotropicResidual {
  std::string label;
  double value;
};

struct LocalLawReport {
  Complex z;
  double entrywise_max = 0.0;   // max_ij |G_ij - delta_ij m_sc|
  double trace_residual = 0.0;  // |m_N - m_sc|
  std::vector<IsotropicResidual> isotropic_residuals;
  double bound = 0.0;  // sqrt(Im m_sc / (N eta)) + 1 / (N eta)
  double psi = 0.0;    // N^{-1/3 + eps}
};

template <typename Scalar>
LocalLawReport local_law_report(const EigenDecomposition<Scalar>& d, Complex z, double epsilon,
                                const std::vector<ProbePair>& probes);

template <typename Scalar>
LocalLawReport local_law_report(const WignerMatrix<Scalar>& h, Complex z, double epsilon,
                                const std::vector<ProbePair>& probes) {
  return local_law_report(eigen_decompose(h.entries), z, epsilon, probes);
}

template <typename Scalar>
LocalLawReport local_law_report(const WignerMatrix<Scalar>& h, Complex z, double epsilon) {
  return local_law_report(h, z, epsilon, default_probes(h.n()));
}

/// Window [E1, E2] and mollifier width eta for the counting functional.
struct CountingConfig {
  double e1;
  double e2;
  double eta;
  double epsilon = 0.0;
  double l = 0.0;

  /// eta = N^{-2/3-eps}, l = N^{-2/3-eps/9}, E2 = E_L = 2 + N^{-2/3+eps},
  /// E1 = 2 + N^{-2/3} x - l.
  static CountingConfig at_edge(double x, Index n, double epsilon);

  void validate() const;
};

/// Tr chi_[E1,E2] * theta_eta (H) in closed form:
/// (1/pi) sum_j [atan((E2 - lambda_j)/eta) - atan((E1 - lambda_j)/eta)].
double mollified_count(const Spectrum& s, const CountingConfig& cfg);

/// The same quantity as (N/pi) int_{E1}^{E2} Im m_N(y + i eta) dy by quadrature.
double mollified_count_quadrature(const Spectrum& s, const CountingConfig& cfg);

struct SandwichResult {
  bool holds;
  double count;        // #{E <= lambda_j <= E_L}
  double lower;        // Tr chi_{E+l} * theta_eta - N^{-eps/9}
  double upper;        // Tr chi_{E-l} * theta_eta + N^{-eps/9}
  double lower_margin;  // count - lower
  double upper_margin;  // upper - count
  Index excluded_above;  // eigenvalues above E_L
};

/// Checks the two-sided mollifier bound on the window count at E. The
/// configuration supplies eta, l, eps and E_L; its E1 is ignored.
SandwichResult sandwich_check(const Spectrum& s, double e, const CountingConfig& cfg);

}  // namespace edgelab
