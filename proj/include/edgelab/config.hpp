#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgelab/ensembles.hpp"

namespace edgelab {

enum class ExperimentKind { tail_mc, flow_compare, local_law, exact_tails, tw_table };
enum class Side { right, left };

std::string to_string(ExperimentKind k);
ExperimentKind experiment_kind_from_string(const std::string& s);
std::string to_string(Side s);
Side side_from_string(const std::string& s);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::tail_mc;
  int beta = 1;
  Family dist = Family::gaussian;
  std::optional<double> m2;  // diagonal second moment; unset means 2/beta
  std::vector<double> dist_values;
  std::vector<double> dist_probs;
  Index n = 200;
  Index samples = 1000;
  std::vector<double> x{1.0};
  Side side = Side::right;
  double epsilon = 0.15;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;  // empty: stdout
  double window_m = 2.0;
  bool fast_path = true;
  std::vector<double> times{0.0, 0.5, 1.0, 2.0, 5.0, 50.0};
  double sandwich_epsilon = 0.15;
  double rigidity_exponent = 0.1;

  bool operator==(const ExperimentConfig&) const = default;
};

/// `key = value` lines; '#' starts a comment; lists are comma separated.
/// Unknown keys and malformed values throw a parse error naming the line.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base);
ExperimentConfig load_config(const std::string& path);

/// Text that parse_config maps back to `cfg`.
std::string serialize_config(const ExperimentConfig& cfg);

/// Applies a single `key`, `value` pair (shared by the file parser and CLI).
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

EnsembleSpec ensemble_spec(const ExperimentConfig& cfg);

}  // namespace edgelab
