// criteria.hpp : criteria-based evaluation metrics
#ifndef ONTEVAL_CRITERIA_HPP
#define ONTEVAL_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "onteval/findings.hpp"
#include "onteval/ontology.hpp"

namespace onteval {

// Subclass cycles. One finding per cycle; subjects are the cycle's classes.
MetricResult circularity_errors(const OntologyGraph& g);

// Entities sitting under both halves of a disjoint pair, through any chain
// of subclass links. One finding per (entity, pair).
MetricResult partition_errors(const OntologyGraph& g);

// Property assertions where some declared domain (or range) class is
// disjoint, under the subclass-closed reading, with every declared type of
// the subject (or object). One finding per assertion side; untyped nodes
// are never flagged.
MetricResult semantic_inconsistency_errors(const OntologyGraph& g);

// Subclass edges and type assertions already implied by longer chains.
// Throws CyclicGraphError when the subclass graph is cyclic.
MetricResult redundancy_errors(const OntologyGraph& g);

// Class pairs with the same formal definition: same direct superclasses,
// same incoming property domains, same disjointness partners.
MetricResult identical_definitions(const OntologyGraph& g);

// Duplicate knowledge across sources: triples stated in more than one
// source, plus labels of one entity that collapse to the same normal form.
MetricResult grammatical_redundancy_errors(const std::vector<TripleSet>& sources);

// Fraction of expected terms covered by some entity's lexical form.
// Unmatched terms become MissingTerm findings. Throws EmptyReferenceError
// when no usable expected terms remain after normalization.
MetricResult completeness_coverage(const OntologyGraph& g,
                                   const std::vector<std::string>& expected_terms);

enum class ExpertCriterion {
  Clarity,
  Coherence,
  Conciseness,
  Completeness,
  Extendibility,
  MinimalEncodingBias,
  MinimalOntologicalCommitment,
  Sensitiveness,
};

std::string to_string(ExpertCriterion c);
std::optional<ExpertCriterion> criterion_from_string(const std::string& s);
// Extendibility and minimal ontological commitment speak to fitness in
// context; the rest judge the relation structure itself.
Level level_for_criterion(ExpertCriterion c);

struct ExpertScore {
  std::string criterion;
  double score = 0.0;  // 1..5
  std::string assessor;
  std::string comment;

  bool operator==(const ExpertScore&) const = default;
};

// Aggregates scores per criterion (mean), one result per criterion present,
// ordered by criterion. Comments ride along as findings. Throws
// ValidationError on the first record with an unknown criterion, a score
// outside [1,5], or a blank assessor.
std::vector<MetricResult> ingest_expert_scores(
    const std::vector<ExpertScore>& scores);

// Score file: [{"criterion", "score", "assessor", "comment"}].
std::vector<ExpertScore> load_expert_scores_json(const std::string& json_text);

}  // namespace onteval

#endif  // ONTEVAL_CRITERIA_HPP
