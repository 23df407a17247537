#include "edgelab/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace edgelab {

Symmetry symmetry_from_beta(int beta) {
  require(beta == 1 || beta == 2, Error::Kind::invalid_input, "beta must be 1 or 2, got " + std::to_string(beta));
  return static_cast<Symmetry>(beta);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::gaussian: return "gaussian";
    case Family::rademacher: return "rademacher";
    case Family::uniform: return "uniform";
    case Family::discrete: return "discrete";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "gaussian") return Family::gaussian;
  if (name == "rademacher") return Family::rademacher;
  if (name == "uniform") return Family::uniform;
  if (name == "discrete") return Family::discrete;
  fail(Error::Kind::invalid_input, "unknown distribution family '" + name + "'");
}

namespace {

double unit_moment(const EntryDistribution& d, int k) {
  if (k == 0) return 1.0;
  switch (d.family) {
    case Family::gaussian: {
      if (k % 2) return 0.0;
      double m = 1.0;
      for (int j = k - 1; j > 0; j -= 2) m *= j;
      return m;
    }
    case Family::rademacher:
      return k % 2 ? 0.0 : 1.0;
    case Family::uniform:
      // uniform on [-sqrt3, sqrt3]
      return k % 2 ? 0.0 : std::pow(3.0, 0.5 * k) / (k + 1);
    case Family::discrete: {
      double m = 0.0;
      for (std::size_t i = 0; i < d.values.size(); ++i) m += d.probabilities[i] * std::pow(d.values[i], k);
      return m;
    }
  }
  return 0.0;
}

double unit_transform(const EntryDistribution& d, double u) {
  switch (d.family) {
    case Family::rademacher: return u < 0.5 ? -1.0 : 1.0;
    case Family::uniform: return std::sqrt(3.0) * (2.0 * u - 1.0);
    case Family::discrete: {
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < d.values.size(); ++i) {
        acc += d.probabilities[i];
        if (u < acc) return d.values[i];
      }
      return d.values.back();
    }
    case Family::gaussian: break;
  }
  return 0.0;
}

}  // namespace

double EntryDistribution::moment(int k) const {
  require(k >= 0, Error::Kind::invalid_order, "moment order must be non-negative");
  return std::pow(scale, k) * unit_moment(*this, k);
}

std::pair<double, double> EntryDistribution::transform(const UniformPair& u) const {
  if (family == Family::gaussian) {
    const double r = std::sqrt(-2.0 * std::log(1.0 - u.first));
    const double phase = 2.0 * kPi * u.second;
    return {scale * r * std::cos(phase), scale * r * std::sin(phase)};
  }
  return {scale * unit_transform(*this, u.first), scale * unit_transform(*this, u.second)};
}

double EntryDistribution::transform_first(const UniformPair& u) const {
  if (family == Family::gaussian) return scale * std::sqrt(-2.0 * std::log(1.0 - u.first)) * std::cos(2.0 * kPi * u.second);
  return scale * unit_transform(*this, u.first);
}

EnsembleSpec gaussian_spec(Symmetry s) {
  const double m2 = s == Symmetry::real ? 2.0 : 1.0;
  return {s, EntryDistribution::gaussian(), EntryDistribution::gaussian(std::sqrt(m2)), m2, true};
}

EnsembleSpec wigner_spec(Symmetry s, const EntryDistribution& offdiag) {
  return wigner_spec(s, offdiag, s == Symmetry::real ? 2.0 : 1.0);
}

EnsembleSpec wigner_spec(Symmetry s, const EntryDistribution& offdiag, double m2) {
  EntryDistribution diag = offdiag;
  diag.scale = offdiag.scale * std::sqrt(m2);
  return {s, offdiag, diag, m2, true};
}

bool is_gaussian(const EnsembleSpec& spec) {
  return spec == gaussian_spec(spec.symmetry);
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!first) os << "; ";
    os << c.name << ": " << c.detail;
    first = false;
  }
  return first ? "ok" : os.str();
}

namespace {

void check_distribution(const EntryDistribution& d, const std::string& label, ValidationReport& report) {
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back({label + "." + name, ok, detail});
  };
  add("scale", std::isfinite(d.scale) && d.scale > 0.0, "scale must be finite and positive");
  if (d.family == Family::discrete) {
    const bool shape = !d.values.empty() && d.values.size() == d.probabilities.size();
    add("support", shape, "values and probabilities must be non-empty and of equal length");
    if (!shape) return;
    const bool nonneg = std::all_of(d.probabilities.begin(), d.probabilities.end(), [](double p) { return p >= 0.0; });
    const double total = std::accumulate(d.probabilities.begin(), d.probabilities.end(), 0.0);
    add("probabilities", nonneg && std::abs(total - 1.0) <= 1e-12, "probabilities must be >= 0 and sum to 1");
    const double mean = unit_moment(d, 1);
    const double var = unit_moment(d, 2);
    add("standardized", std::abs(mean) <= 1e-12 && std::abs(var - 1.0) <= 1e-12,
        "support must have mean 0 and variance 1 before scaling");
  }
  bool finite = true;
  for (int k = 1; k <= 8; ++k) finite = finite && std::isfinite(d.moment(k));
  add("moments", finite, "first 8 moments must be finite");
  add("mean", std::abs(d.moment(1)) <= 1e-12, "mean must be 0");
}

}  // namespace

ValidationReport validate_spec(const EnsembleSpec& spec) {
  ValidationReport report;
  const int beta = beta_of(spec.symmetry);
  report.checks.push_back({"symmetry", beta == 1 || beta == 2, "beta must be 1 or 2"});
  check_distribution(spec.offdiag, "offdiag", report);
  check_distribution(spec.diag, "diag", report);
  const double var = spec.offdiag.moment(2);
  report.checks.push_back(
      {"offdiag.variance", std::abs(var - 1.0) <= 1e-12, "off-diagonal variance is " + std::to_string(var) + ", not 1"});
  const double dvar = spec.diag.moment(2);
  report.checks.push_back({"m2", std::isfinite(spec.m2) && spec.m2 > 0.0 && std::abs(dvar - spec.m2) <= 1e-12,
                           "m2 must be finite, positive and equal the diagonal second moment"});
  if (spec.symmetry == Symmetry::complex) {
    report.checks.push_back({"pseudo_variance", spec.complex_pseudo_variance_zero,
                             "E[H_ij^2] must vanish (i.i.d. real and imaginary parts)"});
  }
  return report;
}

double cumulant(const EntryDistribution& dist, int k) {
  require(k >= 1, Error::Kind::invalid_order, "cumulant order must be >= 1");
  std::vector<double> m(k + 1), kappa(k + 1, 0.0);
  for (int j = 0; j <= k; ++j) m[j] = dist.moment(j);
  // kappa_n = m_n - sum_{j=1}^{n-1} C(n-1, j-1) kappa_j m_{n-j}
  for (int n = 1; n <= k; ++n) {
    double acc = m[n];
    double binom = 1.0;  // C(n-1, j-1)
    for (int j = 1; j < n; ++j) {
      acc -= binom * kappa[j] * m[n - j];
      binom = binom * (n - j) / j;
    }
    kappa[n] = acc;
  }
  return kappa[k];
}

double cumulant_expansion_residual(const EntryDistribution& dist, const std::vector<double>& poly_coeffs, int l,
                                   double n_scale) {
  require(!poly_coeffs.empty(), Error::Kind::invalid_input, "polynomial must have at least one coefficient");
  require(l >= 1, Error::Kind::invalid_order, "expansion order must be >= 1");
  require(n_scale > 0.0, Error::Kind::invalid_input, "scale must be positive");
  const int degree = static_cast<int>(poly_coeffs.size()) - 1;
  const double s = 1.0 / std::sqrt(n_scale);
  auto h_moment = [&](int k) { return dist.moment(k) * std::pow(s, k); };

  // E[h f(h)]
  double lhs = 0.0;
  for (int i = 0; i <= degree; ++i) lhs += poly_coeffs[i] * h_moment(i + 1);

  double rhs = 0.0;
  double factorial = 1.0;
  for (int k = 0; k < l; ++k) {
    if (k > 0) factorial *= k;
    // E[f^{(k)}(h)]
    double ef = 0.0;
    for (int i = k; i <= degree; ++i) {
      double falling = 1.0;
      for (int r = 0; r < k; ++r) falling *= (i - r);
      ef += poly_coeffs[i] * falling * h_moment(i - k);
    }
    rhs += cumulant(dist, k + 1) * std::pow(s, k + 1) / factorial * ef;
  }
  return std::abs(lhs - rhs);
}

}  // namespace edgelab
