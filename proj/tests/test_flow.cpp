#include "helpers.hpp"
#include "edgelab/cutoff.hpp"
#include "edgelab/flow.hpp"

using namespace edgelab;

TEST_SUITE("flow") {

TEST_CASE("interpolation endpoints") {
  const auto spec = wigner_spec(Symmetry::real, EntryDistribution::rademacher());
  const auto h0 = sample_wigner<double>(spec, 30, 1, 0);
  const auto w = sample_gaussian<double>(30, 1, 0);
  CHECK(interpolate(h0, w, 0.0).entries == h0.entries);
  const auto far = interpolate(h0, w, 50.0);
  const double bound = std::exp(-25.0) * h0.entries.cwiseAbs().maxCoeff() +
                       (1.0 - std::sqrt(1.0 - std::exp(-50.0))) * w.entries.cwiseAbs().maxCoeff();
  CHECK((far.entries - w.entries).cwiseAbs().maxCoeff() <= bound + 1e-16);
  CHECK(far.entries == far.entries.transpose());
  const auto other = sample_gaussian<double>(31, 1, 0);
  CHECK_ERROR_KIND(interpolate(h0, other, 1.0), invalid_pair);
  CHECK_ERROR_KIND(interpolate(h0, w, -1.0), domain);
}

TEST_CASE("entry variance is preserved along the flow") {
  const auto spec = wigner_spec(Symmetry::real, EntryDistribution::rademacher());
  const auto gauss = gaussian_spec(Symmetry::real);
  const Index n = 50;
  // the matrix entry is the scaled cell pair
  const auto h0 = sample_wigner<double>(spec, n, 9, 4);
  const auto w = sample_gaussian<double>(n, 9, 4);
  const double t0 = 0.7;
  const double a = sample_cell<double>(spec, 9, 4, kWignerStream, 2, 3);
  const double b = sample_cell<double>(gauss, 9, 4, kGaussianStream, 2, 3);
  CHECK(std::sqrt(double(n)) * interpolate(h0, w, t0).entries(2, 3) ==
        doctest::Approx(std::exp(-t0 / 2) * a + std::sqrt(1 - std::exp(-t0)) * b).epsilon(1e-14));
  for (double t : {0.0, 0.3, 1.0, 4.0, 50.0}) {
    std::vector<double> sq;
    for (std::uint64_t k = 0; k < 100000; ++k) {
      const double x = std::exp(-t / 2) * sample_cell<double>(spec, 9, k, kWignerStream, 0, 1) +
                       std::sqrt(-std::expm1(-t)) * sample_cell<double>(gauss, 9, k, kGaussianStream, 0, 1);
      sq.push_back(x * x);
    }
    const auto m = testing::mean_se(sq);
    if (t == 0.0) {
      CHECK(m.mean == doctest::Approx(1.0));  // Rademacher squares are exactly 1
    } else {
      CHECK(std::abs(m.mean - 1.0) <= 4 * m.se);
    }
  }
}

TEST_CASE("observable on constructed spectra") {
  FlowConfig cfg;
  cfg.n = 400;
  cfg.x = 1.0;
  RealVector low = RealVector::LinSpaced(400, -3.0, 1.0);
  CHECK(observable_FX({low}, cfg) == 0.0);
  const auto c = cfg.counting();
  RealVector three = RealVector::LinSpaced(400, -3.0, 0.0);
  three.tail(3).setConstant(0.5 * (c.e1 + c.e2));
  CHECK(observable_FX({three}, cfg) == 1.0);
}

TEST_CASE("observable range and monotonicity in the window") {
  const auto s = eigen(sample_gaussian<double>(200, 2, 0));
  FlowConfig cfg;
  cfg.n = 200;
  double prev = 1e300;
  for (double x = -3.0; x <= 3.0; x += 0.25) {
    cfg.x = x;
    const double fx = observable_FX(s, cfg);
    CHECK(fx >= 0.0);
    CHECK(fx <= 1.0);
    const double count = mollified_count(s, cfg.counting());
    CHECK(count <= prev + 1e-12);
    prev = count;
  }
}

TEST_CASE("flow configuration checks") {
  FlowConfig cfg;
  cfg.times = {0.5, 1.0};
  CHECK_ERROR_KIND(cfg.validate(), invalid_input);
  cfg.times = {0.0, 2.0, 1.0};
  CHECK_ERROR_KIND(cfg.validate(), invalid_input);
  cfg.times = {0.0, 1.0};
  cfg.samples = 0;
  CHECK_ERROR_KIND(cfg.validate(), invalid_input);
}

TEST_CASE("single sample curve") {
  FlowConfig cfg;
  cfg.n = 20;
  cfg.samples = 1;
  cfg.times = {0.0, 1.0};
  const auto curve = comparison_curve(gaussian_spec(Symmetry::real), cfg, 3);
  REQUIRE(curve.rows.size() == 2);
  for (const auto& r : curve.rows) {
    CHECK(std::isinf(r.standard_error));
    CHECK(r.count == 1);
  }
}

TEST_CASE("gaussian input gives a flat curve") {
  FlowConfig cfg;
  cfg.n = 60;
  cfg.x = -1.0;
  cfg.samples = 1000;
  cfg.times = {0.0, 0.5, 2.0, 50.0};
  for (auto sym : {Symmetry::real, Symmetry::complex}) {
    const auto curve = comparison_curve(gaussian_spec(sym), cfg, 17);
    const auto& r0 = curve.rows.front();
    CHECK(curve.failures == 0);
    for (const auto& r : curve.rows) {
      CHECK(r.mean >= 0.0);
      CHECK(r.mean <= 1.0);
      CHECK(std::abs(r.mean - r0.mean) <= 3.0 * std::hypot(r.standard_error, r0.standard_error));
    }
  }
}

TEST_CASE("gaussian endpoint difference is consistent with zero") {
  FlowConfig cfg;
  cfg.n = 60;
  cfg.x = -1.0;
  cfg.samples = 1000;
  const auto d = endpoint_difference(gaussian_spec(Symmetry::real), cfg, 4);
  CHECK(std::abs(d.delta) <= 3.0 * d.standard_error);
  CHECK(d.ci_low <= d.delta);
  CHECK(d.ci_high >= d.delta);
}

TEST_CASE("comparison bound formula") {
  CHECK(comparison_bound(400, 1.0, 0.15, 1) ==
        doctest::Approx(std::pow(400.0, -1.0 / 6.0 + 0.6) * std::exp(-2.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("derivative rule against finite differences") {
  RealMatrix h(5, 5);
  CounterEngine eng(12, 0);
  for (Index j = 0; j < 5; ++j)
    for (Index i = 0; i <= j; ++i) h(i, j) = h(j, i) = eng.normal() / std::sqrt(5.0);
  const Complex z(0.2, 0.4);
  auto resolvent = [&](const RealMatrix& m) {
    return ComplexMatrix((m.cast<Complex>() - z * ComplexMatrix::Identity(5, 5)).inverse());
  };
  const ComplexMatrix g = resolvent(h);
  const double step = 1e-5;
  double worst = 0.0;
  for (Index a = 0; a < 5; ++a) {
    for (Index b = a; b < 5; ++b) {
      RealMatrix hp = h, hm = h;
      hp(a, b) += step;
      hm(a, b) -= step;
      if (a != b) {
        hp(b, a) += step;
        hm(b, a) -= step;
      }
      const ComplexMatrix fd = (resolvent(hp) - resolvent(hm)) / (2 * step);
      for (Index i = 0; i < 5; ++i)
        for (Index j = 0; j < 5; ++j)
          worst = std::max(worst, std::abs(fd(i, j) - green_derivative(g, i, j, a, b)));
    }
  }
  CHECK(worst <= 1e-6);
}

}
