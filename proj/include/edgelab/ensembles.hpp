#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "edgelab/common.hpp"
#include "edgelab/rng.hpp"

namespace edgelab {

enum class Family { gaussian, rademacher, uniform, discrete };

std::string to_string(Family f);
Family family_from_string(const std::string& name);

/// Unit-variance entry law multiplied by `scale`. For `discrete` the support
/// and weights are given explicitly and must themselves be standardized.
struct EntryDistribution {
  Family family = Family::gaussian;
  double scale = 1.0;
  std::vector<double> values;
  std::vector<double> probabilities;

  static EntryDistribution gaussian(double scale = 1.0) { return {Family::gaussian, scale, {}, {}}; }
  static EntryDistribution rademacher(double scale = 1.0) { return {Family::rademacher, scale, {}, {}}; }
  static EntryDistribution uniform(double scale = 1.0) { return {Family::uniform, scale, {}, {}}; }
  static EntryDistribution discrete(std::vector<double> values, std::vector<double> probs, double scale = 1.0) {
    return {Family::discrete, scale, std::move(values), std::move(probs)};
  }

  /// Exact E[X^k] of the scaled variable.
  double moment(int k) const;

  /// Maps two independent uniforms to two independent draws (scaled).
  std::pair<double, double> transform(const UniformPair& u) const;
  /// transform(u).first without computing the second draw.
  double transform_first(const UniformPair& u) const;

  bool operator==(const EntryDistribution&) const = default;
};

/// Entry law of a Wigner ensemble: distributions of sqrt(N)*H_ij.
struct EnsembleSpec {
  Symmetry symmetry = Symmetry::real;
  EntryDistribution offdiag;
  EntryDistribution diag;
  double m2 = 2.0;
  bool complex_pseudo_variance_zero = true;

  bool operator==(const EnsembleSpec&) const = default;
};

/// GOE (beta=1) or GUE (beta=2).
EnsembleSpec gaussian_spec(Symmetry s);

/// Off-diagonal family `offdiag`; the diagonal uses the same family scaled to
/// variance m2 (default 2/beta, matching the Gaussian ensemble).
EnsembleSpec wigner_spec(Symmetry s, const EntryDistribution& offdiag);
EnsembleSpec wigner_spec(Symmetry s, const EntryDistribution& offdiag, double m2);

bool is_gaussian(const EnsembleSpec& spec);

struct ValidationReport {
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;

  bool passed() const;
  std::string summary() const;
};

ValidationReport validate_spec(const EnsembleSpec& spec);

/// k-th cumulant from exact moments via the moment-cumulant recursion.
double cumulant(const EntryDistribution& dist, int k);

/// |E[h f(h)] - sum_{k=0}^{l-1} c^{(k+1)}(h)/k! E[f^{(k)}(h)]| for polynomial f
/// (coefficients in increasing degree) and h = X / sqrt(n_scale).
double cumulant_expansion_residual(const EntryDistribution& dist, const std::vector<double>& poly_coeffs, int l,
                                   double n_scale);

template <typename Scalar>
struct WignerMatrix {
  DenseMatrix<Scalar> entries;
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;

  Index n() const { return entries.rows(); }
  static constexpr Symmetry symmetry() { return symmetry_of<Scalar>(); }
};

using RealWigner = WignerMatrix<double>;
using ComplexWigner = WignerMatrix<Complex>;

// Stream tags separating independent matrices drawn for the same sample.
inline constexpr std::uint32_t kWignerStream = 0;
inline constexpr std::uint32_t kGaussianStream = 1;

namespace detail {

template <typename Scalar>
Scalar draw_offdiag(const EntryDistribution& d, const UniformPair& u) {
  if constexpr (is_complex<Scalar>::value) {
    const auto [a, b] = d.transform(u);
    return Scalar(a, b) * std::sqrt(0.5);
  } else {
    return d.transform_first(u);
  }
}

template <typename Scalar>
Scalar draw_diag(const EntryDistribution& d, const UniformPair& u) {
  return Scalar(d.transform_first(u));
}

}  // namespace detail

/// Single entry sqrt(n)-unscaled draw of cell (i, j), i <= j. The matrix
/// samplers call this per cell, so it addresses exactly the same variate.
template <typename Scalar>
Scalar sample_cell(const EnsembleSpec& spec, std::uint64_t master_seed, std::uint64_t sample_index,
                   std::uint32_t stream, Index i, Index j) {
  const CellRng rng(master_seed, sample_index, stream);
  const auto u = rng.uniforms(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  if (i == j) return detail::draw_diag<Scalar>(spec.diag, u);
  return detail::draw_offdiag<Scalar>(spec.offdiag, u);
}

template <typename Scalar>
WignerMatrix<Scalar> sample_from_stream(const EnsembleSpec& spec, Index n, std::uint64_t master_seed,
                                        std::uint64_t sample_index, std::uint32_t stream) {
  require(n >= 1, Error::Kind::invalid_dimension, "matrix dimension must be at least 1");
  require(spec.symmetry == symmetry_of<Scalar>(), Error::Kind::invalid_spec,
          "scalar type does not match the spec symmetry class");
  const CellRng rng(master_seed, sample_index, stream);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  WignerMatrix<Scalar> h;
  h.entries.resize(n, n);
  h.master_seed = master_seed;
  h.sample_index = sample_index;
  // upper triangle column by column, then mirror
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      const auto u = rng.uniforms(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      h.entries(i, j) = detail::draw_offdiag<Scalar>(spec.offdiag, u) * inv_sqrt_n;
    }
    const auto u = rng.uniforms(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(j));
    h.entries(j, j) = detail::draw_diag<Scalar>(spec.diag, u) * inv_sqrt_n;
  }
  h.entries.template triangularView<Eigen::StrictlyLower>() = h.entries.adjoint();
  return h;
}

/// GOE/GUE sample; the symmetry class is carried by Scalar.
template <typename Scalar>
WignerMatrix<Scalar> sample_gaussian(Index n, std::uint64_t master_seed, std::uint64_t sample_index,
                                     std::uint32_t stream = kGaussianStream) {
  return sample_from_stream<Scalar>(gaussian_spec(symmetry_of<Scalar>()), n, master_seed, sample_index, stream);
}

template <typename Scalar>
WignerMatrix<Scalar> sample_wigner(const EnsembleSpec& spec, Index n, std::uint64_t master_seed,
                                   std::uint64_t sample_index, std::uint32_t stream = kWignerStream) {
  const auto report = validate_spec(spec);
  require(report.passed(), Error::Kind::invalid_spec, "invalid ensemble spec: " + report.summary());
  return sample_from_stream<Scalar>(spec, n, master_seed, sample_index, stream);
}

/// Calls fn.template operator()<Scalar>() with Scalar matching the symmetry.
template <typename Fn>
decltype(auto) dispatch_scalar(Symmetry s, Fn&& fn) {
  if (s == Symmetry::real) return fn.template operator()<double>();
  return fn.template operator()<Complex>();
}

}  // namespace edgelab
