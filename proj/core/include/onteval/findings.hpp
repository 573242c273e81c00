// findings.hpp : shared result records produced by evaluation metrics
#ifndef ONTEVAL_FINDINGS_HPP
#define ONTEVAL_FINDINGS_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "onteval/framework.hpp"
#include "onteval/rdf.hpp"

namespace onteval {

enum class FindingKind {
  Circularity,
  PartitionError,
  SemanticInconsistency,
  Redundancy,
  GrammaticalRedundancy,
  IdenticalDefinition,
  MissingTerm,
  ExpertComment,
};

std::string to_string(FindingKind k);
std::optional<FindingKind> finding_kind_from_string(const std::string& s);

// One concrete defect or observation. subjects lists the entities involved
// (empty only for MissingTerm and ExpertComment, whose carrier is textual).
struct Finding {
  FindingKind kind;
  std::vector<Iri> subjects;
  std::string detail;

  friend auto operator<=>(const Finding&, const Finding&) = default;
};

// Outcome of one metric run at one (level, method) cell.
struct MetricResult {
  std::string name;
  Level level;
  Method method;
  double value = 0.0;
  // True when the inputs made the metric vacuous (nothing to measure) and
  // the value is the convention for that case, not a measurement.
  bool degenerate = false;
  std::vector<Finding> findings;
  std::string note;

  bool operator==(const MetricResult&) const = default;
};

}  // namespace onteval

#endif  // ONTEVAL_FINDINGS_HPP
