// corpus.hpp : data-driven evaluation against a text corpus
#ifndef ONTEVAL_CORPUS_HPP
#define ONTEVAL_CORPUS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "onteval/findings.hpp"
#include "onteval/ontology.hpp"

namespace onteval {

struct DocumentText {
  std::string id;
  std::string text;
};

struct Document {
  std::string id;
  std::vector<std::string> tokens;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;  // ingestion order
  // Unigram and bigram counts; bigram keys are space-joined token pairs.
  std::map<std::string, std::size_t> term_frequencies;
  std::map<std::string, std::size_t> document_frequencies;
  std::size_t total_tokens = 0;  // unigram occurrences

  bool operator==(const Corpus&) const = default;
};

// Tokenizes documents and tallies term statistics. Throws
// DuplicateDocIdError when two documents share an id.
Corpus ingest_corpus(const std::vector<DocumentText>& docs);

struct ScoredTerm {
  std::string term;
  double score = 0.0;
  std::size_t tf = 0;
  std::size_t df = 0;

  bool operator==(const ScoredTerm&) const = default;
};
using TermRanking = std::vector<ScoredTerm>;

// Top terms by tf * ln(1 + N/df); stop words drop out of the unigram pool,
// bigrams rank as written. Ties break toward the smaller term. Throws
// EmptyCorpusError when the corpus has no documents.
TermRanking extract_terms(const Corpus& c, std::size_t top_k = 50);

struct CorpusFit {
  MetricResult coverage;  // ontology labels found in the corpus
  MetricResult focus;     // top corpus terms found in the ontology
};

// coverage: fraction of entity labels (those normalizing to one or two
// tokens) present in the corpus vocabulary. focus: fraction of the top-k
// extracted terms matching some entity label. Vacuous sides come back 1
// and degenerate. Throws EmptyCorpusError when the corpus has no documents.
CorpusFit lexical_coverage(const OntologyGraph& g, const Corpus& c,
                           std::size_t top_k = 50);

// Fraction of subclass edges whose endpoint labels co-occur within `window`
// token positions in some document, over edges whose endpoint labels occur
// in the corpus at all. A shared label needs two distinct occurrences. No
// measurable edges (an empty corpus included) leaves the value 1 and marks
// the result degenerate. Throws CyclicGraphError on a cyclic subclass graph
// and std::invalid_argument when window < 2.
MetricResult structural_fit(const OntologyGraph& g, const Corpus& c,
                            std::size_t window = 10);

}  // namespace onteval

#endif  // ONTEVAL_CORPUS_HPP
