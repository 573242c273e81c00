// report.hpp : evaluation pipeline and report rendering
#ifndef ONTEVAL_REPORT_HPP
#define ONTEVAL_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onteval/competency.hpp"
#include "onteval/config.hpp"
#include "onteval/findings.hpp"
#include "onteval/framework.hpp"
#include "onteval/syntax_check.hpp"

namespace onteval {

inline constexpr const char* kToolVersion = "0.1.0";

struct LevelSummary {
  Level level;
  std::string status;  // pass | findings | skipped
  std::string reason;  // set when skipped

  bool operator==(const LevelSummary&) const = default;
};

struct ReportAggregates {
  // Consistency: circularity, partition and semantic-inconsistency counts.
  // Conciseness: redundancy, grammatical and identical-definition counts.
  std::size_t consistency_errors = 0;
  std::size_t conciseness_errors = 0;
  double consistency_per_1000 = 0.0;
  double conciseness_per_1000 = 0.0;

  bool operator==(const ReportAggregates&) const = default;
};

struct Report {
  std::string tool_version = kToolVersion;
  EvaluationPlan plan;
  std::size_t triple_count = 0;
  Thresholds thresholds;
  std::string overlay_source;
  std::vector<MetricResult> results;  // by level, method, name
  std::optional<ContextReport> context;
  std::optional<SyntacticReport> syntactic;
  std::vector<LevelSummary> level_summaries;
  ReportAggregates aggregates;
  std::vector<std::pair<std::string, std::string>> input_digests;  // by path
  std::vector<std::string> notes;

  bool operator==(const Report&) const = default;
};

// Runs the full evaluation the config calls for, reading every referenced
// file. Missing or unreadable files raise IoError; a config without an
// ontology path raises ConfigError. Methods whose prerequisites are absent
// are skipped with a note rather than failing the run.
Report run_pipeline(const RunConfig& cfg);

// format: "json" (stable, machine-readable, byte-identical for equal
// reports) or "markdown".
std::string render_report(const Report& r, const std::string& format);

// Inverse of the JSON rendering. Throws ValidationError on malformed input.
Report parse_report(const std::string& json_text);

}  // namespace onteval

#endif  // ONTEVAL_REPORT_HPP
