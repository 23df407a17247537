#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "edgelab/experiments.hpp"
#include "edgelab/stats.hpp"

using namespace edgelab;

namespace {

ExperimentConfig small_tail_config() {
  ExperimentConfig c;
  c.kind = ExperimentKind::tail_mc;
  c.n = 40;
  c.samples = 300;
  c.x = {-1.0, 0.0, 1.0, 2.0};
  c.seed = 99;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("Wilson interval") {
  const double z = 1.959963984540054;
  const auto zero = wilson_interval(0, 100, 0.95);
  CHECK(zero.low == 0.0);
  CHECK(zero.high == doctest::Approx(z * z / (100 + z * z)).epsilon(1e-12));
  CHECK(zero.high == doctest::Approx(0.0370).epsilon(1e-2));
  CHECK(wilson_interval(100, 100, 0.95).high == 1.0);
  const auto half = wilson_interval(50, 100, 0.95);
  CHECK(half.low < 0.5);
  CHECK(half.high > 0.5);
  CHECK(0.5 - half.low == doctest::Approx(half.high - 0.5).epsilon(1e-12));
  CHECK(normal_quantile(0.975) == doctest::Approx(z).epsilon(1e-14));
  CHECK_ERROR_KIND(wilson_interval(5, 3), invalid_input);
  CHECK_ERROR_KIND(wilson_interval(0, 0), invalid_input);
  CHECK_ERROR_KIND(wilson_interval(1, 3, 1.0), invalid_input);
}

TEST_CASE("config round trip") {
  ExperimentConfig c = small_tail_config();
  c.kind = ExperimentKind::flow_compare;
  c.beta = 2;
  c.dist = Family::discrete;
  c.dist_values = {-1.0, 1.0};
  c.dist_probs = {0.5, 0.5};
  c.m2 = 1.25;
  c.side = Side::left;
  c.epsilon = 0.1234567890123;
  c.times = {0.0, 0.1, 1e-7, 33.3};
  c.out = "result.csv";
  c.fast_path = false;
  CHECK(parse_config(serialize_config(c)) == c);
  CHECK(parse_config(serialize_config(ExperimentConfig{})) == ExperimentConfig{});
}

TEST_CASE("config parsing errors name the line") {
  const std::string text = "# comment\nn = 10\nsampels = 4\n";
  try {
    (void)parse_config(text);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::parse);
    const std::string what = e.what();
    CHECK(what.find("sampels") != std::string::npos);
    CHECK(what.find("line 3") != std::string::npos);
  }
  CHECK_ERROR_KIND(parse_config("n = ten"), parse);
  CHECK_ERROR_KIND(parse_config("just words"), parse);
  CHECK_ERROR_KIND(parse_config("beta = 3"), parse);
  CHECK_ERROR_KIND(parse_config("side = up"), parse);
  CHECK_ERROR_KIND(load_config("/nonexistent/dir/cfg.txt"), io);
  const auto c = parse_config("  n = 12   # trailing comment\n\nx = 1, 2.5\n");
  CHECK(c.n == 12);
  CHECK(c.x == std::vector<double>{1.0, 2.5});
}

TEST_CASE("shortest round-trip floats") {
  CounterEngine eng(3, 3);
  for (int i = 0; i < 1000; ++i) {
    const double v = (eng.uniform() - 0.5) * std::pow(10.0, static_cast<int>(eng.uniform() * 40) - 20);
    const std::string s = format_double(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("CSV layout and file output") {
  CsvTable t;
  t.header = {"a", "b", "c"};
  t.add_row({1.5, std::int64_t{2}, std::string("x")});
  CHECK(t.str() == "a,b,c\n1.5,2,x\n");
  CHECK_ERROR_KIND(t.add_row({1.0}), invalid_input);
  const auto path = (std::filesystem::temp_directory_path() / "edgelab_csv_test.csv").string();
  emit_csv(t, path);
  CHECK(read_file(path) == t.str());
  std::filesystem::remove(path);
  CHECK_ERROR_KIND(emit_csv(t, "/nonexistent/dir/out.csv"), io);
}

TEST_CASE("tail estimates: intervals, monotonicity, accounting") {
  const auto cfg = small_tail_config();
  const auto r = run_tail_mc(cfg);
  REQUIRE(r.estimates.size() == cfg.x.size());
  double prev = 1.0;
  for (const auto& e : r.estimates) {
    CHECK(e.hits <= e.trials);
    CHECK(0.0 <= e.ci_low);
    CHECK(e.ci_low <= e.p_hat);
    CHECK(e.p_hat <= e.ci_high);
    CHECK(e.ci_high <= 1.0);
    CHECK(e.p_hat <= prev);
    prev = e.p_hat;
    CHECK(e.trials + r.failures == cfg.samples);
    CHECK(std::isfinite(e.reference_exact));
  }
  CHECK(std::isnan(r.fitted_c0));
}

TEST_CASE("sentinel below the spectrum") {
  auto cfg = small_tail_config();
  cfg.x = {-4.0 * std::pow(double(cfg.n), 2.0 / 3.0) - 1.0};
  const auto r = run_tail_mc(cfg);
  CHECK(r.estimates[0].p_hat == 1.0);
  CHECK(r.estimates[0].ci_high == 1.0);
}

TEST_CASE("window guard and left side") {
  auto cfg = small_tail_config();
  cfg.side = Side::left;
  cfg.x = {0.5, 1.0, 1.5, 2.0, 10.0};
  const auto r = run_tail_mc(cfg);
  const double limit = 2.0 * std::cbrt(std::log(40.0));
  for (const auto& e : r.estimates) CHECK(e.in_window == (e.x <= limit));
  CHECK(std::isfinite(r.fitted_c0));
  CHECK(r.fitted_c0 > 0.0);
  const auto table = tail_mc_table(r, cfg);
  CHECK(table.rows.size() == cfg.x.size());
}

TEST_CASE("left constant fit recovers a planted value") {
  std::vector<TailEstimate> rows;
  for (double x : {1.0, 1.5, 2.0}) {
    TailEstimate e{};
    e.x = x;
    e.trials = 1000000;
    e.p_hat = std::exp(-x * x * x / 6.0);
    e.hits = static_cast<std::int64_t>(e.p_hat * e.trials);
    rows.push_back(e);
  }
  CHECK(fit_left_constant(rows, 1) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("experiment output is deterministic and thread independent") {
  auto tail = small_tail_config();
  auto flow = tail;
  flow.kind = ExperimentKind::flow_compare;
  flow.samples = 40;
  flow.x = {0.0};
  flow.dist = Family::rademacher;
  auto law = tail;
  law.kind = ExperimentKind::local_law;
  law.samples = 6;
  law.x = {0.0};
  law.epsilon = 0.05;
  for (auto cfg : {tail, flow, law}) {
    cfg.threads = 1;
    const std::string one = run_experiment(cfg).str();
    CHECK(one == run_experiment(cfg).str());
    cfg.threads = 8;
    CHECK(one == run_experiment(cfg).str());
  }
}

TEST_CASE("flow-compare rows and bound column") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::flow_compare;
  cfg.n = 400;
  cfg.samples = 2;
  cfg.x = {1.0};
  cfg.epsilon = 0.15;
  cfg.times = {0.0, 50.0};
  const auto table = run_experiment(cfg);
  CHECK(table.rows.size() == cfg.times.size() + 1);
  const double expected = std::pow(400.0, -1.0 / 6.0 + 0.6) * std::exp(-2.0 / 3.0);
  for (const auto& row : table.rows) CHECK(std::get<double>(row[8]) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("exact tails") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::exact_tails;
  cfg.n = 200;
  for (double r = 1.5; r <= 3.5 + 1e-9; r += 0.25) cfg.x.push_back(r);
  cfg.x.erase(cfg.x.begin());
  const auto res = run_exact_tails(cfg);
  std::vector<double> rs, gue, goe, gs, os;
  for (std::size_t i = 0; i < res.rows.size(); ++i) {
    const auto& row = res.rows[i];
    if (i) {
      CHECK(row.gue_count < res.rows[i - 1].gue_count);
      CHECK(row.goe_count < res.rows[i - 1].goe_count);
    }
    rs.push_back(row.r);
    gue.push_back(row.gue_count);
    goe.push_back(row.goe_count);
    gs.push_back(row.gue_shape);
    os.push_back(row.goe_shape);
  }
  // refitting on a sub-window moves C by less than a factor 2
  for (auto [all, sub] : {std::pair{res.gue_fitted_c, fitted_prefactor(rs, gue, gs, 2.0, 3.0)},
                          {res.goe_fitted_c, fitted_prefactor(rs, goe, os, 2.0, 3.0)}}) {
    CHECK(sub / all < 2.0);
    CHECK(all / sub < 2.0);
  }
  // one band around the fitted prefactor covers the GUE counts on [1.5, 3]
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] > 3.0) continue;
    const double ratio = gue[i] / gs[i] / res.gue_fitted_c;
    CHECK(ratio > 0.5);
    CHECK(ratio < 2.0);
  }
  CHECK(exact_tails_table(res).rows.size() == rs.size());

  cfg.n = 201;
  CHECK_ERROR_KIND(run_exact_tails(cfg), unsupported_dimension);
  cfg.beta = 2;
  const auto odd = run_exact_tails(cfg);
  CHECK(std::isnan(odd.rows[0].goe_count));
  cfg.dist = Family::rademacher;
  CHECK_ERROR_KIND(run_exact_tails(cfg), invalid_input);
}

TEST_CASE("tw table") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::tw_table;
  cfg.x = {-3.0, 0.0, 2.0};
  const auto t = run_experiment(cfg);
  CHECK(t.rows.size() == 3);
  CHECK(t.header.size() == t.rows[0].size());
}

TEST_CASE("ensemble spec from config") {
  ExperimentConfig c;
  CHECK(ensemble_spec(c) == gaussian_spec(Symmetry::real));
  c.beta = 2;
  c.dist = Family::uniform;
  const auto s = ensemble_spec(c);
  CHECK(s.symmetry == Symmetry::complex);
  CHECK(s.offdiag.family == Family::uniform);
  CHECK(validate_spec(s).passed());
}

}
