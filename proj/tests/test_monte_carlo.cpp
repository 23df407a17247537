// Monte Carlo examples with the sample sizes quoted for each operation.
// Criteria-level runs (tail universality, local law, sandwich) live in the
// acceptance binary and are not repeated here.

#include "helpers.hpp"
#include "edgelab/experiments.hpp"
#include "edgelab/gaussian_kernels.hpp"
#include "edgelab/parallel.hpp"

using namespace edgelab;

namespace {

double tail_p_hat(const std::vector<double>& largest, Index n, double r) {
  const auto e = tail_estimates(largest, {r}, Side::right, n, 1, false, 2.0);
  return e[0].p_hat;
}

double binomial_se(double p, std::size_t trials) { return std::sqrt(p * (1.0 - p) / trials); }

}  // namespace

TEST_SUITE("monte_carlo") {

TEST_CASE("GUE expected count bounds the tail probability") {
  const Index n = 200;
  const auto lam = sample_largest(gaussian_spec(Symmetry::complex), n, 10000, 501, 1, true);
  for (double r : {1.0, 2.0}) {
    const double p = tail_p_hat(lam.values, n, r);
    const double count = gue_expected_count_above(static_cast<int>(n), r, false).expected_count;
    CHECK(p <= count + 3.0 * binomial_se(p, lam.values.size()));
  }
}

TEST_CASE("GOE expected count bounds the tail probability") {
  const Index n = 200;
  const auto lam = sample_largest(gaussian_spec(Symmetry::real), n, 10000, 502, 1, true);
  const double p = tail_p_hat(lam.values, n, 1.0);
  const double count = goe_expected_count_above(static_cast<int>(n), 1.0).expected_count;
  CHECK(p <= count + 3.0 * binomial_se(p, lam.values.size()));
}

TEST_CASE("GUE count at the edge center is order one") {
  const Index n = 200;
  const auto lam = sample_largest(gaussian_spec(Symmetry::complex), n, 4000, 503, 1, true);
  const double p = tail_p_hat(lam.values, n, 0.0);
  const double count = gue_expected_count_above(static_cast<int>(n), 0.0, false).expected_count;
  CHECK(count >= p - 3.0 * binomial_se(p, lam.values.size()));
  CHECK(count < 2.0);
}

TEST_CASE("GOE m_N at the edge scale") {
  const Index n = 1000;
  const double eta = std::pow(double(n), -2.0 / 3.0);
  const Complex z(2.0, eta);
  const auto ok = parallel_map<int>(100, 1, [&](std::size_t k) {
    const auto s = eigen(sample_gaussian<double>(n, 504, k));
    return std::abs(m_N(s, z) - semicircle_stieltjes(z)) <= std::pow(double(n), 0.1) / (n * eta) ? 1 : 0;
  });
  int held = 0;
  for (const auto& o : ok) held += o.value.value_or(0);
  CHECK(held >= 99);
}

TEST_CASE("isotropic (u, u) residual under the local-law bound") {
  const Index n = 1000;
  const Complex z(2.0, std::pow(double(n), -2.0 / 3.0 + 0.05));
  const auto probe = default_probes(n);
  const std::vector<ProbePair> uu{probe[2]};
  const auto ok = parallel_map<int>(100, 1, [&](std::size_t k) {
    const auto h = sample_gaussian<double>(n, 505, k);
    const auto d = eigen_decompose(h.entries);
    const auto r = local_law_report(d, z, 0.05, uu);
    return r.isotropic_residuals[0].value <= std::pow(double(n), 0.1) * r.bound ? 1 : 0;
  });
  int held = 0;
  for (const auto& o : ok) held += o.value.value_or(0);
  CHECK(held >= 99);
}

TEST_CASE("fourth cumulant shifts the edge by kappa4 / N") {
  // mean of N^{2/3}(lambda_N - 2), Rademacher minus GOE, against kappa4 N^{-1/3}
  const Index n = 100;
  auto mean_se = [&](const EnsembleSpec& spec, std::uint64_t seed) {
    const auto lam = sample_largest(spec, n, 10000, seed, 1, true);
    std::vector<double> y;
    for (double v : lam.values) y.push_back(std::pow(double(n), 2.0 / 3.0) * (v - 2.0));
    return testing::mean_se(y);
  };
  const auto g = mean_se(gaussian_spec(Symmetry::real), 511);
  const auto r = mean_se(wigner_spec(Symmetry::real, EntryDistribution::rademacher()), 512);
  const double shift = r.mean - g.mean;
  const double predicted = cumulant(EntryDistribution::rademacher(), 4) / std::cbrt(double(n));
  CHECK(shift < -5.0 * std::hypot(r.se, g.se));
  CHECK(std::abs(shift) <= 2.0 * std::abs(predicted));
  MESSAGE("edge shift " << shift << " predicted " << predicted);
}

TEST_CASE("Rademacher flow endpoints within the comparison bound") {
  FlowConfig cfg;
  cfg.n = 200;
  cfg.x = 1.0;
  cfg.samples = 10000;
  cfg.times = {0.0, 50.0};
  const auto curve = comparison_curve(wigner_spec(Symmetry::real, EntryDistribution::rademacher()), cfg, 506);
  const auto& a = curve.rows.front();
  const auto& b = curve.rows.back();
  const double bound = comparison_bound(cfg.n, cfg.x, cfg.epsilon, 1);
  CHECK(curve.failures == 0);
  CHECK(std::abs(a.mean - b.mean) <= bound + 3.0 * std::hypot(a.standard_error, b.standard_error));
  MESSAGE("t=0 " << a.mean << " t=50 " << b.mean << " bound " << bound);
}

TEST_CASE("endpoint differences at N = 400") {
  FlowConfig cfg;
  cfg.n = 400;
  cfg.samples = 2000;
  const std::pair<EntryDistribution, double> cases[] = {{EntryDistribution::rademacher(), 1.0},
                                                        {EntryDistribution::uniform(), 2.0}};
  for (const auto& [dist, x] : cases) {
    cfg.x = x;
    const auto d = endpoint_difference(wigner_spec(Symmetry::real, dist), cfg, 507);
    CHECK(d.predicted_bound == doctest::Approx(comparison_bound(400, x, cfg.epsilon, 1)));
    CHECK(std::abs(d.delta) <= d.predicted_bound + 3.0 * d.standard_error);
    MESSAGE(to_string(dist.family) << " x=" << x << " delta=" << d.delta << " se=" << d.standard_error
                                   << " predicted bound=" << d.predicted_bound);
  }
}

TEST_CASE("observable dominates the edge tail probability") {
  // Cauchy tails of the mollifier put X above 1/9 far more often than
  // lambda_N exceeds E_+, so only the lower comparison is asserted.
  FlowConfig cfg;
  cfg.n = 400;
  cfg.x = 1.0;
  cfg.samples = 10000;
  cfg.times = {0.0};
  const auto curve = comparison_curve(gaussian_spec(Symmetry::real), cfg, 508);
  const auto& row = curve.rows.front();
  const double reference = goe_expected_count_above(400, 1.0).expected_count;
  CHECK(row.mean >= reference - 3.0 * row.standard_error);
  MESSAGE("mean F(X)=" << row.mean << " se=" << row.standard_error << " kernel reference=" << reference);
}

}
