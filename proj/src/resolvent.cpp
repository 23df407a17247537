#include "edgelab/resolvent.hpp"

#include <cmath>

#include "edgelab/quadrature.hpp"

namespace edgelab {

bool SpectralDomain::contains(Complex z, Index n) const {
  const double eta_min = std::pow(static_cast<double>(n), -1.0 + epsilon);
  return std::abs(z.real()) <= 5.0 && z.imag() >= eta_min && z.imag() <= 10.0;
}

namespace {

ComplexVector resolvent_weights(const Spectrum& s, Complex z) {
  require(z.imag() > 0.0, Error::Kind::domain, "resolvent needs Im z > 0");
  ComplexVector d(s.n());
  for (Index k = 0; k < s.n(); ++k) d(k) = 1.0 / (s.eigenvalues(k) - z);
  return d;
}

}  // namespace

ComplexMatrix green_entry_grid(const EigenDecomposition<double>& d, Complex z) {
  const ComplexVector w = resolvent_weights(d.spectrum, z);
  const auto& v = d.vectors;
  // two real products instead of one complex one
  const RealMatrix re = v * w.real().asDiagonal() * v.transpose();
  const RealMatrix im = v * w.imag().asDiagonal() * v.transpose();
  ComplexMatrix g(v.rows(), v.rows());
  g.real() = re;
  g.imag() = im;
  return g;
}

ComplexMatrix green_entry_grid(const EigenDecomposition<Complex>& d, Complex z) {
  const ComplexVector w = resolvent_weights(d.spectrum, z);
  return d.vectors * w.asDiagonal() * d.vectors.adjoint();
}

Complex m_N(const Spectrum& s, Complex z) { return resolvent_weights(s, z).mean(); }

std::vector<ProbePair> default_probes(Index n) {
  require(n >= 2, Error::Kind::invalid_dimension, "default probes need n >= 2");
  const ComplexVector e1 = ComplexVector::Unit(n, 0);
  const ComplexVector e2 = ComplexVector::Unit(n, 1);
  const ComplexVector u = ComplexVector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  return {{"e1,e1", e1, e1}, {"e1,e2", e1, e2}, {"u,u", u, u}};
}

template <typename Scalar>
LocalLawReport local_law_report(const EigenDecomposition<Scalar>& d, Complex z, double epsilon,
                                const std::vector<ProbePair>& probes) {
  const Index n = d.spectrum.n();
  require(SpectralDomain{epsilon}.contains(z, n), Error::Kind::domain, "z outside the spectral domain S(eps)");
  const double nd = static_cast<double>(n);
  const Complex msc = semicircle_stieltjes(z);

  LocalLawReport r;
  r.z = z;
  ComplexMatrix g = green_entry_grid(d, z);
  g.diagonal().array() -= msc;
  r.entrywise_max = g.cwiseAbs().maxCoeff();
  r.trace_residual = std::abs(m_N(d.spectrum, z) - msc);

  const ComplexVector w = resolvent_weights(d.spectrum, z);
  for (const auto& p : probes) {
    require(p.v.size() == n && p.w.size() == n, Error::Kind::invalid_input, "probe vector has wrong length");
    const ComplexVector a = d.vectors.adjoint() * p.v;
    const ComplexVector b = d.vectors.adjoint() * p.w;
    const Complex vgw = (a.conjugate().array() * w.array() * b.array()).sum();
    r.isotropic_residuals.push_back({p.label, std::abs(vgw - msc * p.v.dot(p.w))});
  }
  const double eta = z.imag();
  r.bound = std::sqrt(msc.imag() / (nd * eta)) + 1.0 / (nd * eta);
  r.psi = std::pow(nd, -1.0 / 3.0 + epsilon);
  return r;
}

template LocalLawReport local_law_report(const EigenDecomposition<double>&, Complex, double,
                                         const std::vector<ProbePair>&);
template LocalLawReport local_law_report(const EigenDecomposition<Complex>&, Complex, double,
                                         const std::vector<ProbePair>&);

CountingConfig CountingConfig::at_edge(double x, Index n, double epsilon) {
  require(n >= 1, Error::Kind::invalid_dimension, "n must be >= 1");
  require(epsilon > 0.0, Error::Kind::invalid_input, "epsilon must be positive");
  const double nd = static_cast<double>(n);
  CountingConfig c;
  c.epsilon = epsilon;
  c.eta = std::pow(nd, -2.0 / 3.0 - epsilon);
  c.l = std::pow(nd, -2.0 / 3.0 - epsilon / 9.0);
  c.e2 = 2.0 + std::pow(nd, -2.0 / 3.0 + epsilon);
  c.e1 = 2.0 + std::pow(nd, -2.0 / 3.0) * x - c.l;
  c.validate();
  return c;
}

void CountingConfig::validate() const {
  require(e1 < e2, Error::Kind::invalid_input, "counting window needs E1 < E2");
  require(eta > 0.0, Error::Kind::invalid_input, "mollifier width must be positive");
}

namespace {
double window_mass(const Spectrum& s, double e1, double e2, double eta) {
  double sum = 0.0;
  for (Index j = 0; j < s.n(); ++j) {
    const double lam = s.eigenvalues(j);
    sum += std::atan((e2 - lam) / eta) - std::atan((e1 - lam) / eta);
  }
  return sum / kPi;
}
}  // namespace

double mollified_count(const Spectrum& s, const CountingConfig& cfg) {
  cfg.validate();
  return window_mass(s, cfg.e1, cfg.e2, cfg.eta);
}

double mollified_count_quadrature(const Spectrum& s, const CountingConfig& cfg) {
  cfg.validate();
  const double nd = static_cast<double>(s.n());
  auto f = [&](double y) { return nd / kPi * m_N(s, Complex(y, cfg.eta)).imag(); };
  return integrate_converged(f, cfg.e1, cfg.e2, 0.5 * cfg.eta, 16, 1e-11, 10);
}

SandwichResult sandwich_check(const Spectrum& s, double e, const CountingConfig& cfg) {
  const double nd = static_cast<double>(s.n());
  require(cfg.eta > 0.0 && cfg.l > 0.0, Error::Kind::invalid_input, "sandwich needs eta > 0 and l > 0");
  require(std::abs(e - 2.0) <= std::pow(nd, -2.0 / 3.0 + cfg.epsilon), Error::Kind::domain,
          "E outside the edge window |E - 2| <= N^{-2/3+eps}");
  SandwichResult r{};
  for (Index j = 0; j < s.n(); ++j) {
    const double lam = s.eigenvalues(j);
    if (lam > cfg.e2) {
      ++r.excluded_above;
    } else if (lam >= e) {
      r.count += 1.0;
    }
  }
  const double slack = std::pow(nd, -cfg.epsilon / 9.0);
  r.lower = window_mass(s, e + cfg.l, cfg.e2, cfg.eta) - slack;
  r.upper = window_mass(s, e - cfg.l, cfg.e2, cfg.eta) + slack;
  r.lower_margin = r.count - r.lower;
  r.upper_margin = r.upper - r.count;
  r.holds = r.lower_margin >= 0.0 && r.upper_margin >= 0.0;
  return r;
}

}  // namespace edgelab
