#pragma once

#include <vector>

#include "edgelab/common.hpp"
#include "edgelab/ensembles.hpp"

namespace edgelab {

/// Eigenvalues sorted non-decreasing.
struct Spectrum {
  RealVector eigenvalues;

  Index n() const { return eigenvalues.size(); }
  double largest() const { return eigenvalues(eigenvalues.size() - 1); }
};

template <typename Scalar>
struct EigenDecomposition {
  Spectrum spectrum;
  DenseMatrix<Scalar> vectors;  // columns, same order as eigenvalues
};

namespace detail {
template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m) {
  require(m.allFinite(), Error::Kind::numeric_input, "matrix has non-finite entries");
}
}  // namespace detail

/// Full eigenvalue computation: Householder tridiagonalization followed by
/// implicit symmetric QR (Eigen::SelfAdjointEigenSolver).
template <typename Derived>
Spectrum eigenvalues(const Eigen::MatrixBase<Derived>& h) {
  detail::require_finite(h);
  using Mat = DenseMatrix<typename Derived::Scalar>;
  Eigen::SelfAdjointEigenSolver<Mat> solver(h, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, Error::Kind::numeric, "symmetric eigensolver did not converge");
  return {solver.eigenvalues()};
}

template <typename Scalar>
Spectrum eigen(const WignerMatrix<Scalar>& h) {
  return eigenvalues(h.entries);
}

template <typename Derived>
EigenDecomposition<typename Derived::Scalar> eigen_decompose(const Eigen::MatrixBase<Derived>& h) {
  detail::require_finite(h);
  using Mat = DenseMatrix<typename Derived::Scalar>;
  Eigen::SelfAdjointEigenSolver<Mat> solver(h, Eigen::ComputeEigenvectors);
  require(solver.info() == Eigen::Success, Error::Kind::numeric, "symmetric eigensolver did not converge");
  return {{solver.eigenvalues()}, solver.eigenvectors()};
}

/// Largest eigenvalue of the symmetric tridiagonal matrix (diag, offdiag) by
/// Sturm-count bisection to full double precision.
double tridiagonal_largest_eigenvalue(const RealVector& diag, const RealVector& offdiag);

/// Largest eigenvalue only: tridiagonalize, then bisect on the Sturm count.
template <typename Derived>
double largest_eigenvalue(const Eigen::MatrixBase<Derived>& h) {
  detail::require_finite(h);
  using Mat = DenseMatrix<typename Derived::Scalar>;
  if (h.rows() == 1) return std::real(h(0, 0));
  Eigen::Tridiagonalization<Mat> tri(h);
  const RealVector diag = tri.diagonal();
  const RealVector off = tri.subDiagonal();
  return tridiagonal_largest_eigenvalue(diag, off);
}

// Semicircle law.
double semicircle_density(double e);
/// Closed-form distribution function of the semicircle law.
double semicircle_cdf(double x);
/// Root of 1 + z m + m^2 = 0 with Im m > 0.
Complex semicircle_stieltjes(Complex z);

struct ClassicalLocations {
  RealVector gamma;  // gamma_1 .. gamma_N
  Index n() const { return gamma.size(); }
};

ClassicalLocations classical_locations(Index n);

struct RigidityReport {
  RealVector residuals;  // |lambda_j - gamma_j| N^{2/3} min(j, N-j+1)^{1/3}
  double max_residual = 0.0;
  double threshold = 0.0;
  std::vector<Index> flagged;  // zero-based indices with residual > threshold
};

/// Flags indices with residual > N^{tolerance_exponent}.
RigidityReport rigidity_report(const Spectrum& s, double tolerance_exponent);
RigidityReport rigidity_report(const Spectrum& s, const ClassicalLocations& gamma, double tolerance_exponent);

/// Kolmogorov distance between the empirical spectral CDF and the semicircle CDF.
double semicircle_kolmogorov_distance(const Spectrum& s);

}  // namespace edgelab
