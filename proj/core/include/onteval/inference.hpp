// inference.hpp : forward-chaining materialization
#ifndef ONTEVAL_INFERENCE_HPP
#define ONTEVAL_INFERENCE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "onteval/ontology.hpp"
#include "onteval/query.hpp"

namespace onteval {

// A conjunctive body deriving a single triple. Every head variable must be
// bound by the body.
struct Rule {
  std::string name;
  std::vector<TriplePattern> body;
  TriplePattern head;

  bool operator==(const Rule&) const = default;
};

// Runs user rules plus the built-in entailments to a fixpoint: subclass
// transitivity, type inheritance along subclass links, and sameAs symmetry,
// transitivity and assertion copying across all three triple positions.
// Semi-naive: each round only joins against the previous round's new
// triples. Throws ValidationError on a malformed rule and
// FixpointOverflowError when more than triple_cap triples get derived.
OntologyGraph materialize_inferences(const OntologyGraph& g,
                                     const std::vector<Rule>& rules = {},
                                     std::size_t triple_cap = 1000000);

}  // namespace onteval

#endif  // ONTEVAL_INFERENCE_HPP
