#include <algorithm>
#include <numeric>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "helpers.hpp"
#include "edgelab/spectral.hpp"

using namespace edgelab;

TEST_SUITE("spectral") {

TEST_CASE("small explicit spectra") {
  const auto z = eigenvalues(RealMatrix::Zero(3, 3));
  CHECK(z.eigenvalues.isZero(0.0));
  RealMatrix d = RealMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = -1.0;
  const auto s = eigenvalues(d);
  CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(s.eigenvalues(1) == doctest::Approx(2.0));
  RealMatrix bad = RealMatrix::Zero(2, 2);
  bad(0, 1) = bad(1, 0) = std::nan("");
  CHECK_ERROR_KIND(eigenvalues(bad), numeric_input);
}

TEST_CASE("GOE spectrum is close to the semicircle") {
  const auto s = eigen(sample_gaussian<double>(1000, 3, 0));
  CHECK(semicircle_kolmogorov_distance(s) < 0.02);
}

TEST_CASE("spectrum invariants") {
  const auto h = sample_gaussian<double>(60, 4, 1);
  const auto s = eigen(h);
  CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  CHECK(std::abs(s.eigenvalues.sum() - h.entries.trace()) <= 1e-8 * 60);

  const auto d = eigen_decompose(h.entries);
  const double norm = h.entries.norm();
  for (Index k = 0; k < 60; ++k) {
    const RealVector r = h.entries * d.vectors.col(k) - d.spectrum.eigenvalues(k) * d.vectors.col(k);
    CHECK(r.norm() <= 1e-9 * norm);
  }

  std::vector<Index> perm(60);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), CounterEngine(1, 1));
  Eigen::PermutationMatrix<Eigen::Dynamic> p(60);
  for (Index i = 0; i < 60; ++i) p.indices()(i) = static_cast<int>(perm[i]);
  const RealMatrix ph = p * h.entries * p.transpose();
  CHECK((eigenvalues(ph).eigenvalues - s.eigenvalues).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("largest-only path agrees with the full solve") {
  for (std::uint64_t k = 0; k < 5; ++k) {
    const auto h = sample_gaussian<double>(50, 6, k);
    CHECK(std::abs(largest_eigenvalue(h.entries) - eigen(h).largest()) < 1e-12);
    const auto c = sample_gaussian<Complex>(50, 6, k);
    CHECK(std::abs(largest_eigenvalue(c.entries) - eigen(c).largest()) < 1e-12);
  }
  RealMatrix one(1, 1);
  one(0, 0) = 0.25;
  CHECK(largest_eigenvalue(one) == 0.25);
}

TEST_CASE("semicircle density") {
  CHECK(semicircle_density(0.0) == doctest::Approx(1.0 / kPi));
  CHECK(semicircle_density(2.0) == 0.0);
  CHECK(semicircle_density(-2.0) == 0.0);
  CHECK(semicircle_density(3.0) == 0.0);
}

TEST_CASE("semicircle Stieltjes transform") {
  const Complex a = semicircle_stieltjes({0.0, 1e-9});
  CHECK(std::abs(a - Complex(0.0, 1.0)) < 1e-8);
  const Complex b = semicircle_stieltjes({2.0, 1e-9});
  CHECK(std::abs(b + 1.0) < 1e-4);
  const Complex c = semicircle_stieltjes({0.0, 2.0});
  CHECK(std::abs(c - Complex(0.0, std::sqrt(2.0) - 1.0)) < 1e-14);
  CHECK_ERROR_KIND(semicircle_stieltjes({0.0, 0.0}), domain);
}

TEST_CASE("self-consistent equation and Im m scaling on a grid") {
  double worst = 0.0;
  double lo = 1e300, hi = 0.0;
  for (int a = 0; a < 100; ++a) {
    const double e = -5.0 + 10.0 * a / 99.0;
    for (int b = 0; b < 100; ++b) {
      const double eta = std::pow(10.0, -4.0 + 5.0 * b / 99.0);
      const Complex z(e, eta);
      const Complex m = semicircle_stieltjes(z);
      worst = std::max(worst, std::abs(1.0 + z * m + m * m));
      CHECK(m.imag() > 0.0);
      CHECK(std::abs(m) <= 1.0 + 1e-12);
      const double kappa = std::abs(std::abs(e) - 2.0);
      const double ratio = std::abs(e) <= 2.0 ? m.imag() / std::sqrt(kappa + eta)
                                              : m.imag() / (eta / std::sqrt(kappa + eta));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  CHECK(worst < 1e-12);
  // at eta = 10, E = 0 the ratio is about 0.0286: Im m ~ eta / |z|^2
  CHECK(lo >= 1.0 / 40.0);
  CHECK(hi <= 1.0);
}

TEST_CASE("classical locations") {
  const auto g = classical_locations(10);
  CHECK(std::abs(g.gamma(4)) < 1e-12);  // j = n/2
  CHECK(g.gamma(9) == 2.0);
  for (Index j = 1; j < 10; ++j) CHECK(g.gamma(j) > g.gamma(j - 1));

  const auto g4 = classical_locations(4);
  const double mass = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [](double x) { return std::sqrt(std::max(0.0, 4.0 - x * x)) / (2.0 * kPi); }, -2.0, g4.gamma(0), 15, 1e-14);
  CHECK(mass == doctest::Approx(0.25).epsilon(1e-10));

  const Index n = 501;
  const auto gl = classical_locations(n);
  for (Index j = 1; j <= n; ++j) {
    CHECK(std::abs(semicircle_cdf(gl.gamma(j - 1)) - double(j) / n) < 1e-10);
    CHECK(gl.gamma(j - 1) > -2.0);
    CHECK(gl.gamma(j - 1) <= 2.0);
  }
  // gamma_j = -gamma_{N-j}
  for (Index j = 1; j < n; ++j) CHECK(std::abs(gl.gamma(j - 1) + gl.gamma(n - j - 1)) < 1e-9);
}

TEST_CASE("rigidity report") {
  const Index n = 200;
  const auto g = classical_locations(n);
  const auto exact = rigidity_report(Spectrum{g.gamma}, 0.1);
  CHECK(exact.max_residual == 0.0);
  CHECK(exact.flagged.empty());
  const RealVector shifted = g.gamma.array() + 1.0;
  const auto off = rigidity_report(Spectrum{shifted}, 0.1);
  CHECK(off.max_residual >= std::pow(double(n), 2.0 / 3.0));
  CHECK(off.flagged.size() == static_cast<std::size_t>(n));
  CHECK((off.residuals.array() >= 0.0).all());
}

}
