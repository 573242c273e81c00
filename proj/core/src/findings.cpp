#include "onteval/findings.hpp"

#include <stdexcept>

namespace onteval {

std::string to_string(FindingKind k) {
  switch (k) {
    case FindingKind::Circularity:
      return "circularity";
    case FindingKind::PartitionError:
      return "partition_error";
    case FindingKind::SemanticInconsistency:
      return "semantic_inconsistency";
    case FindingKind::Redundancy:
      return "redundancy";
    case FindingKind::GrammaticalRedundancy:
      return "grammatical_redundancy";
    case FindingKind::IdenticalDefinition:
      return "identical_definition";
    case FindingKind::MissingTerm:
      return "missing_term";
    case FindingKind::ExpertComment:
      return "expert_comment";
  }
  throw std::logic_error("unknown finding kind");
}

std::optional<FindingKind> finding_kind_from_string(const std::string& s) {
  static const FindingKind kAll[] = {
      FindingKind::Circularity,         FindingKind::PartitionError,
      FindingKind::SemanticInconsistency, FindingKind::Redundancy,
      FindingKind::GrammaticalRedundancy, FindingKind::IdenticalDefinition,
      FindingKind::MissingTerm,         FindingKind::ExpertComment,
  };
  for (FindingKind k : kAll)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

}  // namespace onteval
