#include "edgelab/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "edgelab/csv.hpp"

namespace edgelab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s) {
  const std::string t = trim(s);
  double v = 0.0;
  if (t == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (t == "inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf") return -std::numeric_limits<double>::infinity();
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  require(res.ec == std::errc{} && res.ptr == t.data() + t.size() && !t.empty(), Error::Kind::parse,
          "not a number: '" + t + "'");
  return v;
}

template <typename Int>
Int parse_int(const std::string& s) {
  const std::string t = trim(s);
  Int v{};
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  require(res.ec == std::errc{} && res.ptr == t.data() + t.size() && !t.empty(), Error::Kind::parse,
          "not an integer: '" + t + "'");
  return v;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
  require(!out.empty(), Error::Kind::parse, "empty list");
  return out;
}

bool parse_bool(const std::string& s) {
  const std::string t = trim(s);
  if (t == "true" || t == "1") return true;
  if (t == "false" || t == "0") return false;
  fail(Error::Kind::parse, "not a boolean: '" + t + "'");
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  return out;
}

}  // namespace

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::tail_mc: return "tail-mc";
    case ExperimentKind::flow_compare: return "flow-compare";
    case ExperimentKind::local_law: return "local-law";
    case ExperimentKind::exact_tails: return "exact-tails";
    case ExperimentKind::tw_table: return "tw-table";
  }
  return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
  for (auto k : {ExperimentKind::tail_mc, ExperimentKind::flow_compare, ExperimentKind::local_law,
                 ExperimentKind::exact_tails, ExperimentKind::tw_table}) {
    if (to_string(k) == s) return k;
  }
  fail(Error::Kind::parse, "unknown experiment kind '" + s + "'");
}

std::string to_string(Side s) { return s == Side::right ? "right" : "left"; }

Side side_from_string(const std::string& s) {
  if (s == "right") return Side::right;
  if (s == "left") return Side::left;
  fail(Error::Kind::parse, "side must be 'right' or 'left', got '" + s + "'");
}

void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "kind") {
    cfg.kind = experiment_kind_from_string(value);
  } else if (key == "beta") {
    cfg.beta = parse_int<int>(value);
    require(cfg.beta == 1 || cfg.beta == 2, Error::Kind::parse, "beta must be 1 or 2");
  } else if (key == "dist") {
    try {
      cfg.dist = family_from_string(value);
    } catch (const Error& e) {
      fail(Error::Kind::parse, e.what());
    }
  } else if (key == "m2") {
    if (value.empty() || value == "default") {
      cfg.m2.reset();
    } else {
      cfg.m2 = parse_double(value);
    }
  } else if (key == "dist_values") {
    cfg.dist_values = parse_list(value);
  } else if (key == "dist_probs") {
    cfg.dist_probs = parse_list(value);
  } else if (key == "n") {
    cfg.n = parse_int<Index>(value);
  } else if (key == "samples") {
    cfg.samples = parse_int<Index>(value);
  } else if (key == "x") {
    cfg.x = parse_list(value);
  } else if (key == "side") {
    cfg.side = side_from_string(value);
  } else if (key == "epsilon") {
    cfg.epsilon = parse_double(value);
  } else if (key == "seed") {
    cfg.seed = parse_int<std::uint64_t>(value);
  } else if (key == "threads") {
    cfg.threads = parse_int<int>(value);
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "window_m") {
    cfg.window_m = parse_double(value);
  } else if (key == "fast_path") {
    cfg.fast_path = parse_bool(value);
  } else if (key == "times") {
    cfg.times = parse_list(value);
  } else if (key == "sandwich_epsilon") {
    cfg.sandwich_epsilon = parse_double(value);
  } else if (key == "rigidity_exponent") {
    cfg.rigidity_exponent = parse_double(value);
  } else {
    fail(Error::Kind::parse, "unknown key '" + key + "'");
  }
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig cfg) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(Error::Kind::parse, "line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    try {
      set_config_value(cfg, key, line.substr(eq + 1));
    } catch (const Error& e) {
      fail(Error::Kind::parse, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig parse_config(const std::string& text) { return parse_config(text, ExperimentConfig{}); }

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(static_cast<bool>(f), Error::Kind::io, "cannot open config " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream o;
  o << "kind = " << to_string(cfg.kind) << '\n';
  o << "beta = " << cfg.beta << '\n';
  o << "dist = " << to_string(cfg.dist) << '\n';
  o << "m2 = " << (cfg.m2 ? format_double(*cfg.m2) : std::string("default")) << '\n';
  if (!cfg.dist_values.empty()) o << "dist_values = " << join(cfg.dist_values) << '\n';
  if (!cfg.dist_probs.empty()) o << "dist_probs = " << join(cfg.dist_probs) << '\n';
  o << "n = " << cfg.n << '\n';
  o << "samples = " << cfg.samples << '\n';
  o << "x = " << join(cfg.x) << '\n';
  o << "side = " << to_string(cfg.side) << '\n';
  o << "epsilon = " << format_double(cfg.epsilon) << '\n';
  o << "seed = " << cfg.seed << '\n';
  o << "threads = " << cfg.threads << '\n';
  if (!cfg.out.empty()) o << "out = " << cfg.out << '\n';
  o << "window_m = " << format_double(cfg.window_m) << '\n';
  o << "fast_path = " << (cfg.fast_path ? "true" : "false") << '\n';
  o << "times = " << join(cfg.times) << '\n';
  o << "sandwich_epsilon = " << format_double(cfg.sandwich_epsilon) << '\n';
  o << "rigidity_exponent = " << format_double(cfg.rigidity_exponent) << '\n';
  return o.str();
}

EnsembleSpec ensemble_spec(const ExperimentConfig& cfg) {
  const Symmetry s = symmetry_from_beta(cfg.beta);
  if (cfg.dist == Family::gaussian && !cfg.m2) return gaussian_spec(s);
  EntryDistribution d;
  switch (cfg.dist) {
    case Family::gaussian: d = EntryDistribution::gaussian(); break;
    case Family::rademacher: d = EntryDistribution::rademacher(); break;
    case Family::uniform: d = EntryDistribution::uniform(); break;
    case Family::discrete: d = EntryDistribution::discrete(cfg.dist_values, cfg.dist_probs); break;
  }
  return cfg.m2 ? wigner_spec(s, d, *cfg.m2) : wigner_spec(s, d);
}

}  // namespace edgelab
