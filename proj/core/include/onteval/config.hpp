// config.hpp : run configuration
#ifndef ONTEVAL_CONFIG_HPP
#define ONTEVAL_CONFIG_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onteval/framework.hpp"

namespace onteval {

struct Thresholds {
  double similarity = 0.8;      // alignment match threshold
  std::size_t term_k = 50;      // corpus terms to rank
  std::size_t window = 10;      // co-occurrence window
  std::size_t triple_cap = 1000000;  // inference derivation cap

  bool operator==(const Thresholds&) const = default;
};

struct MatrixOverride {
  Method method;
  Level level;
  Grade grade;

  bool operator==(const MatrixOverride&) const = default;
};

struct RunConfig {
  std::set<Purpose> purposes;
  // When absent, availability is inferred from which inputs were given.
  std::optional<ResourceFlags> resources;
  std::vector<Exclusion> exclusions;

  // Several ontology files merge into one graph; per-file triple sets feed
  // the cross-source redundancy check.
  std::vector<std::string> ontology_paths;
  std::optional<std::string> gold_path;
  std::optional<std::string> corpus_dir;
  std::optional<std::string> suite_path;
  std::optional<std::string> rules_path;
  std::optional<std::string> expert_scores_path;
  std::optional<std::string> expected_terms_path;

  bool include_structure_level = false;
  Thresholds thresholds;
  std::vector<MatrixOverride> matrix_overlay;
  std::string source_path;  // config file this came from, if any
};

// Strict parse: unknown keys, bad enum names, out-of-range thresholds and
// malformed sections all raise ConfigError. Relative input paths resolve
// against the config file's directory when source_path is given.
RunConfig parse_run_config(const std::string& json_text,
                           const std::string& source_path = "");

// The configured resource flags, or flags inferred from which inputs were
// given when the config leaves them out.
ResourceFlags effective_flags(const RunConfig& cfg);

// Starter config written by the init command.
std::string default_config_json();

// Default matrix with the config's overrides applied. Overrides that would
// change which cells are usable raise ConfigError.
SuitabilityMatrix apply_overlay(const RunConfig& cfg);

}  // namespace onteval

#endif  // ONTEVAL_CONFIG_HPP
