#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "onteval/corpus.hpp"
#include "onteval/errors.hpp"
#include "onteval/ontology.hpp"

using namespace onteval;

namespace {

const Iri kType("http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
const Iri kSub("http://www.w3.org/2000/01/rdf-schema#subClassOf");
const Iri kLabel("http://www.w3.org/2000/01/rdf-schema#label");
const Iri kOwlClass("http://www.w3.org/2002/07/owl#Class");

OntologyGraph class_graph(
    const std::vector<std::pair<std::string, std::string>>& labels,
    const std::vector<std::pair<std::string, std::string>>& edges = {}) {
  TripleSet ts;
  for (const auto& [name, text] : labels) {
    Iri e("http://ex/" + name);
    ts.triples.insert({e, kType, kOwlClass});
    if (!text.empty()) ts.triples.insert({e, kLabel, Literal{text, {}, {}}});
  }
  for (const auto& [child, parent] : edges)
    ts.triples.insert(
        {Iri("http://ex/" + child), kSub, Iri("http://ex/" + parent)});
  return build_ontology(ts);
}

}  // namespace

TEST_CASE("corpus ingestion tallies unigrams and bigrams") {
  Corpus c = ingest_corpus({{"d1", "Aphids attack crops."}});
  REQUIRE(c.documents.size() == 1);
  CHECK(c.documents[0].tokens ==
        std::vector<std::string>{"aphids", "attack", "crops"});
  CHECK(c.total_tokens == 3);
  CHECK(c.term_frequencies.at("aphids") == 1);
  CHECK(c.term_frequencies.at("aphids attack") == 1);
  CHECK(c.term_frequencies.at("attack crops") == 1);
  CHECK(c.document_frequencies.at("aphids") == 1);

  Corpus two = ingest_corpus({{"d1", "aphid aphid"}, {"d2", "aphid"}});
  CHECK(two.term_frequencies.at("aphid") == 3);
  CHECK(two.document_frequencies.at("aphid") == 2);
  CHECK(two.term_frequencies.at("aphid aphid") == 1);

  CHECK_THROWS_AS(ingest_corpus({{"dup", "a"}, {"dup", "b"}}),
                  DuplicateDocIdError);
  CHECK(ingest_corpus({}).documents.empty());
  CHECK(ingest_corpus({{"empty", ""}}).total_tokens == 0);
}

TEST_CASE("term extraction scores tf times ln(1 + N/df)") {
  Corpus c = ingest_corpus({{"d1", "aphid aphid beetle"}, {"d2", "aphid mite"}});
  TermRanking all = extract_terms(c, 100);
  REQUIRE_FALSE(all.empty());
  CHECK(all[0].term == "aphid");
  CHECK(all[0].tf == 3);
  CHECK(all[0].df == 2);
  CHECK(all[0].score == doctest::Approx(3.0 * std::log(2.0)));
  // The ln(3) tie resolves toward the smaller term.
  CHECK(all[1].term == "aphid aphid");
  CHECK(all[2].term == "aphid beetle");
  CHECK(all[3].term == "aphid mite");
  CHECK(all[4].term == "beetle");
  CHECK(all[5].term == "mite");
  CHECK(all[1].score == doctest::Approx(std::log(3.0)));

  // top_k is a prefix of the full ranking.
  for (std::size_t k : {std::size_t{1}, std::size_t{3}, std::size_t{5}}) {
    TermRanking head = extract_terms(c, k);
    REQUIRE(head.size() == std::min(k, all.size()));
    for (std::size_t i = 0; i < head.size(); ++i)
      CHECK(head[i] == all[i]);
  }

  CHECK_THROWS_AS(extract_terms(Corpus{}, 5), EmptyCorpusError);
}

TEST_CASE("stop words drop from unigrams but survive inside bigrams") {
  Corpus c = ingest_corpus({{"d", "the aphid the aphid"}});
  TermRanking terms = extract_terms(c, 100);
  for (const ScoredTerm& t : terms) CHECK(t.term != "the");
  bool saw_bigram = false;
  for (const ScoredTerm& t : terms)
    if (t.term == "the aphid") saw_bigram = true;
  CHECK(saw_bigram);
}

TEST_CASE("lexical coverage and focus") {
  OntologyGraph g = class_graph(
      {{"A", "aphid"}, {"M", "leaf mite"}, {"I", "integrated pest management"}});
  Corpus c = ingest_corpus({{"d", "aphid damage and leaf mite pressure"}});
  CorpusFit fit = lexical_coverage(g, c, 10);
  // The three-token label cannot match and is not counted.
  CHECK(fit.coverage.name == "lexical_coverage");
  CHECK(fit.coverage.value == 1.0);
  CHECK_FALSE(fit.coverage.degenerate);
  CHECK(fit.focus.name == "corpus_focus");
  CHECK(fit.focus.value < 1.0);
  CHECK_FALSE(fit.focus.findings.empty());

  Corpus missing = ingest_corpus({{"d", "aphid only here"}});
  CorpusFit half = lexical_coverage(g, missing, 10);
  CHECK(half.coverage.value == 0.5);
  REQUIRE(half.coverage.findings.size() == 1);
  CHECK(half.coverage.findings[0].kind == FindingKind::MissingTerm);
  CHECK(half.coverage.findings[0].detail == "leaf mite");

  OntologyGraph unlabeled = class_graph({});
  CorpusFit vac = lexical_coverage(unlabeled, c, 10);
  CHECK(vac.coverage.value == 1.0);
  CHECK(vac.coverage.degenerate);

  CHECK_THROWS_AS(lexical_coverage(g, Corpus{}, 10), EmptyCorpusError);
}

TEST_CASE("structural fit counts windowed co-occurrence") {
  OntologyGraph g = class_graph({{"Aphid", "aphid"}, {"Insect", "insect"}},
                                {{"Aphid", "Insect"}});
  Corpus c = ingest_corpus({{"d", "the aphid is an insect"}});
  MetricResult r = structural_fit(g, c, 5);
  CHECK(r.name == "structural_fit");
  CHECK(r.level == Level::Hierarchy);
  CHECK(r.method == Method::DataDriven);
  CHECK(r.value == 1.0);
  CHECK_FALSE(r.degenerate);

  // Gap between the labels is 3 tokens, so a window of 2 misses it.
  CHECK(structural_fit(g, c, 2).value == 0.0);
}

TEST_CASE("structural fit edge cases") {
  OntologyGraph g = class_graph({{"Aphid", "aphid"}, {"Insect", "insect"}},
                                {{"Aphid", "Insect"}});
  // Parent label absent from the corpus: nothing measurable.
  Corpus absent = ingest_corpus({{"d", "aphid aphid aphid"}});
  MetricResult rd = structural_fit(g, absent, 5);
  CHECK(rd.value == 1.0);
  CHECK(rd.degenerate);

  MetricResult re = structural_fit(g, Corpus{}, 5);
  CHECK(re.value == 1.0);
  CHECK(re.degenerate);

  // A shared label needs two distinct positions.
  OntologyGraph shared = class_graph({{"X", "pest"}, {"Y", "pest"}},
                                     {{"X", "Y"}});
  CHECK(structural_fit(shared, ingest_corpus({{"d", "pest control"}}), 5)
            .value == 0.0);
  CHECK(structural_fit(shared, ingest_corpus({{"d", "pest versus pest"}}), 5)
            .value == 1.0);

  OntologyGraph cyclic = class_graph(
      {{"P", "p"}, {"Q", "q"}}, {{"P", "Q"}, {"Q", "P"}});
  CHECK_THROWS_AS(structural_fit(cyclic, absent, 5), CyclicGraphError);
  CHECK_THROWS_AS(structural_fit(g, absent, 1), std::invalid_argument);
}

TEST_CASE("structural fit ignores document order") {
  OntologyGraph g = class_graph({{"Aphid", "aphid"}, {"Insect", "insect"},
                                 {"Mite", "mite"}},
                                {{"Aphid", "Insect"}, {"Mite", "Insect"}});
  std::vector<DocumentText> docs = {
      {"a", "aphid near an insect colony"},
      {"b", "mite infestations and other words entirely"},
      {"c", "insect pests include the mite"},
  };
  MetricResult forward = structural_fit(g, ingest_corpus(docs), 4);
  std::reverse(docs.begin(), docs.end());
  MetricResult backward = structural_fit(g, ingest_corpus(docs), 4);
  CHECK(forward.value == backward.value);
}
