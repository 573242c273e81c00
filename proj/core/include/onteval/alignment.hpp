// alignment.hpp : gold-standard comparison
#ifndef ONTEVAL_ALIGNMENT_HPP
#define ONTEVAL_ALIGNMENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "onteval/findings.hpp"
#include "onteval/ontology.hpp"

namespace onteval {

// Normalized edit-distance similarity in [0,1]; 1 when both normalize to
// the empty string.
double string_similarity(const std::string& a, const std::string& b);

struct MatchPair {
  Iri candidate;
  Iri gold;
  double similarity = 0.0;
  std::string candidate_form;  // the label pair behind the score
  std::string gold_form;

  bool operator==(const MatchPair&) const = default;
};

struct Alignment {
  std::vector<MatchPair> pairs;            // greedy order
  std::vector<Iri> unmatched_candidate;    // sorted
  std::vector<Iri> unmatched_gold;         // sorted
  double threshold = 0.8;

  bool operator==(const Alignment&) const = default;
};

// One-to-one greedy alignment of entities (classes, properties, instances)
// by best label-pair similarity. Pairs below the threshold never match; an
// empty gold side just leaves every candidate unmatched.
Alignment align_lexicon(const OntologyGraph& candidate,
                        const OntologyGraph& gold, double threshold = 0.8);

// precision = pairs / candidate_count, recall = pairs / gold_count, then
// the harmonic mean; a zero count yields 0 for the affected ratio. Returns
// the three results in that order. Throws ValidationError when a count is
// smaller than the pair count.
std::vector<MetricResult> lexical_precision_recall(const Alignment& a,
                                                   std::size_t candidate_count,
                                                   std::size_t gold_count);

// Mean Jaccard overlap between each matched entity's proper ancestors
// (mapped through the alignment) and its gold partner's; a pair with two
// empty ancestor sets counts 1. No pairs at all leaves the value 1 and
// marks the result degenerate. Throws CyclicGraphError when either
// subclass graph has a cycle.
MetricResult taxonomic_overlap(const OntologyGraph& candidate,
                               const OntologyGraph& gold, const Alignment& a);

}  // namespace onteval

#endif  // ONTEVAL_ALIGNMENT_HPP
