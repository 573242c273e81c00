#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "onteval/criteria.hpp"
#include "onteval/errors.hpp"
#include "onteval/ntriples.hpp"
#include "onteval/ontology.hpp"

using namespace onteval;
using testutil::node_iri;

namespace {

const Iri kType("http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
const Iri kSub("http://www.w3.org/2000/01/rdf-schema#subClassOf");
const Iri kLabel("http://www.w3.org/2000/01/rdf-schema#label");
const Iri kDomain("http://www.w3.org/2000/01/rdf-schema#domain");
const Iri kRange("http://www.w3.org/2000/01/rdf-schema#range");
const Iri kDisjoint("http://www.w3.org/2002/07/owl#disjointWith");
const Iri kOwlClass("http://www.w3.org/2002/07/owl#Class");

Iri ex(const std::string& name) { return Iri("http://ex/" + name); }

struct GraphBuilder {
  TripleSet ts;
  GraphBuilder& sub(const std::string& a, const std::string& b) {
    ts.triples.insert({ex(a), kSub, ex(b)});
    return *this;
  }
  GraphBuilder& type(const std::string& i, const std::string& c) {
    ts.triples.insert({ex(i), kType, ex(c)});
    return *this;
  }
  GraphBuilder& disjoint(const std::string& a, const std::string& b) {
    ts.triples.insert({ex(a), kDisjoint, ex(b)});
    return *this;
  }
  GraphBuilder& domain(const std::string& p, const std::string& c) {
    ts.triples.insert({ex(p), kDomain, ex(c)});
    return *this;
  }
  GraphBuilder& range(const std::string& p, const std::string& c) {
    ts.triples.insert({ex(p), kRange, ex(c)});
    return *this;
  }
  GraphBuilder& assert_triple(const std::string& s, const std::string& p,
                              const std::string& o) {
    ts.triples.insert({ex(s), ex(p), ex(o)});
    return *this;
  }
  GraphBuilder& label(const std::string& e, const std::string& text) {
    ts.triples.insert({ex(e), kLabel, Literal{text, {}, {}}});
    return *this;
  }
  GraphBuilder& declare(const std::string& c) {
    ts.triples.insert({ex(c), kType, kOwlClass});
    return *this;
  }
  OntologyGraph graph() const { return build_ontology(ts); }
};

}  // namespace

TEST_CASE("circularity: one finding per subclass cycle") {
  OntologyGraph cyclic = GraphBuilder{}.sub("A", "B").sub("B", "A").graph();
  MetricResult r = circularity_errors(cyclic);
  CHECK(r.name == "circularity_errors");
  CHECK(r.level == Level::Hierarchy);
  CHECK(r.method == Method::CriteriaBased);
  CHECK(r.value == 1.0);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].kind == FindingKind::Circularity);
  CHECK(r.findings[0].subjects == std::vector<Iri>{ex("A"), ex("B")});

  OntologyGraph acyclic = GraphBuilder{}.sub("A", "B").sub("B", "C").graph();
  CHECK(circularity_errors(acyclic).value == 0.0);

  OntologyGraph two = GraphBuilder{}
                          .sub("A", "B")
                          .sub("B", "A")
                          .sub("C", "C")
                          .graph();
  CHECK(circularity_errors(two).value == 2.0);
}

TEST_CASE("partition: entities under both halves of a disjoint pair") {
  OntologyGraph g = GraphBuilder{}
                        .disjoint("B", "C")
                        .sub("A", "B")
                        .sub("A", "C")
                        .graph();
  MetricResult r = partition_errors(g);
  CHECK(r.value == 1.0);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].kind == FindingKind::PartitionError);
  CHECK(r.findings[0].subjects == std::vector<Iri>{ex("A"), ex("B"), ex("C")});

  // The subclass relation is reflexive here: B itself sits under both.
  OntologyGraph refl = GraphBuilder{}.disjoint("B", "C").sub("B", "C").graph();
  MetricResult rr = partition_errors(refl);
  CHECK(rr.value == 1.0);
  REQUIRE(rr.findings.size() == 1);
  CHECK(rr.findings[0].subjects ==
        std::vector<Iri>{ex("B"), ex("B"), ex("C")});

  OntologyGraph inst = GraphBuilder{}
                           .disjoint("B", "C")
                           .sub("D", "C")
                           .type("i", "B")
                           .type("i", "D")
                           .graph();
  MetricResult ri = partition_errors(inst);
  CHECK(ri.value == 1.0);
  REQUIRE(ri.findings.size() == 1);
  CHECK(ri.findings[0].subjects ==
        std::vector<Iri>{ex("i"), ex("B"), ex("C")});

  CHECK(partition_errors(GraphBuilder{}.sub("A", "B").graph()).value == 0.0);
}

TEST_CASE("partition findings grow monotonically with the graph") {
  for (int iter = 0; iter < 100; ++iter) {
    GraphBuilder b;
    std::size_t n = 3 + testutil::pick(5);
    auto name = [](std::size_t k) { return "C" + std::to_string(k); };
    for (std::size_t i = 0; i < 2 * n; ++i)
      b.sub(name(testutil::pick(n)), name(testutil::pick(n)));
    b.disjoint(name(testutil::pick(n)), name(testutil::pick(n) + 1));
    for (std::size_t i = 0; i < n; ++i)
      b.type("i" + std::to_string(i), name(testutil::pick(n)));

    MetricResult before = partition_errors(b.graph());
    b.sub(name(testutil::pick(n)), name(testutil::pick(n)));
    b.disjoint(name(testutil::pick(n)), name(testutil::pick(n) + 2));
    b.type("i" + std::to_string(testutil::pick(n)), name(testutil::pick(n)));
    MetricResult after = partition_errors(b.graph());

    for (const Finding& f : before.findings)
      CHECK(std::find(after.findings.begin(), after.findings.end(), f) !=
            after.findings.end());
  }
}

TEST_CASE("semantic inconsistency: expected class disjoint with every "
          "declared type") {
  OntologyGraph g = GraphBuilder{}
                        .domain("p", "B")
                        .disjoint("B", "C")
                        .type("i", "C")
                        .assert_triple("i", "p", "o")
                        .graph();
  MetricResult r = semantic_inconsistency_errors(g);
  CHECK(r.name == "semantic_inconsistency_errors");
  CHECK(r.level == Level::SemanticRelations);
  CHECK(r.value == 1.0);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].kind == FindingKind::SemanticInconsistency);
  CHECK(r.findings[0].subjects == std::vector<Iri>{ex("i"), ex("p"), ex("B")});
  CHECK(r.findings[0].detail.find("domain") == 0);

  // A second, compatible type clears it: not every type clashes any more.
  OntologyGraph softened = GraphBuilder{}
                               .domain("p", "B")
                               .disjoint("B", "C")
                               .type("i", "C")
                               .type("i", "B")
                               .assert_triple("i", "p", "o")
                               .graph();
  CHECK(semantic_inconsistency_errors(softened).value == 0.0);

  // Untyped subjects are never flagged.
  OntologyGraph untyped = GraphBuilder{}
                              .domain("p", "B")
                              .disjoint("B", "C")
                              .assert_triple("i", "p", "o")
                              .graph();
  CHECK(semantic_inconsistency_errors(untyped).value == 0.0);
}

TEST_CASE("semantic inconsistency on the range side, literals skipped") {
  OntologyGraph g = GraphBuilder{}
                        .range("p", "R")
                        .disjoint("R", "D")
                        .type("o", "D")
                        .assert_triple("s", "p", "o")
                        .graph();
  MetricResult r = semantic_inconsistency_errors(g);
  CHECK(r.value == 1.0);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].subjects == std::vector<Iri>{ex("o"), ex("p"), ex("R")});
  CHECK(r.findings[0].detail.find("range") == 0);

  GraphBuilder lit;
  lit.range("p", "R").disjoint("R", "D");
  lit.ts.triples.insert({ex("s"), ex("p"), Literal{"text", {}, {}}});
  CHECK(semantic_inconsistency_errors(lit.graph()).value == 0.0);
}

TEST_CASE("disjointness respects subclass chains both ways") {
  // want = B, node typed E with E below C, and B disjoint C.
  OntologyGraph g = GraphBuilder{}
                        .domain("p", "B")
                        .disjoint("B", "C")
                        .sub("E", "C")
                        .type("i", "E")
                        .assert_triple("i", "p", "o")
                        .graph();
  CHECK(semantic_inconsistency_errors(g).value == 1.0);
}

TEST_CASE("redundancy: links and types already implied") {
  OntologyGraph g =
      GraphBuilder{}.sub("A", "B").sub("B", "C").sub("A", "C").graph();
  MetricResult r = redundancy_errors(g);
  CHECK(r.value == 1.0);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].kind == FindingKind::Redundancy);
  CHECK(r.findings[0].subjects == std::vector<Iri>{ex("A"), ex("C")});

  OntologyGraph types = GraphBuilder{}
                            .sub("A", "B")
                            .type("i", "A")
                            .type("i", "B")
                            .graph();
  MetricResult rt = redundancy_errors(types);
  CHECK(rt.value == 1.0);
  REQUIRE(rt.findings.size() == 1);
  CHECK(rt.findings[0].subjects == std::vector<Iri>{ex("i"), ex("B")});

  CHECK(redundancy_errors(
            GraphBuilder{}.sub("A", "B").sub("B", "C").graph())
            .value == 0.0);
  CHECK_THROWS_AS(
      redundancy_errors(GraphBuilder{}.sub("A", "B").sub("B", "A").graph()),
      CyclicGraphError);
}

TEST_CASE("identical definitions pair classes with one signature") {
  OntologyGraph g = GraphBuilder{}.sub("D", "B").sub("E", "B").graph();
  MetricResult r = identical_definitions(g);
  CHECK(r.value == 1.0);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].kind == FindingKind::IdenticalDefinition);
  CHECK(r.findings[0].subjects == std::vector<Iri>{ex("D"), ex("E")});

  // A disjointness partner on E breaks the tie.
  OntologyGraph split = GraphBuilder{}
                            .sub("D", "B")
                            .sub("E", "B")
                            .disjoint("E", "F")
                            .graph();
  CHECK(identical_definitions(split).value == 0.0);

  // Two bare declared classes share the empty definition.
  OntologyGraph bare = GraphBuilder{}.declare("C1").declare("C2").graph();
  MetricResult rb = identical_definitions(bare);
  CHECK(rb.value == 1.0);
  CHECK(rb.findings[0].subjects == std::vector<Iri>{ex("C1"), ex("C2")});

  // Domain properties distinguish classes too.
  OntologyGraph dom = GraphBuilder{}
                          .declare("C1")
                          .declare("C2")
                          .domain("p", "C1")
                          .graph();
  CHECK(identical_definitions(dom).value == 0.0);
}

TEST_CASE("grammatical redundancy across sources and label variants") {
  TripleSet one = parse_ntriples(
      "<http://ex/a> <http://ex/p> <http://ex/b> .\n"
      "<http://ex/a> <http://ex/q> <http://ex/c> .\n",
      "one.nt");
  TripleSet two = parse_ntriples(
      "<http://ex/a> <http://ex/p> <http://ex/b> .\n", "two.nt");
  MetricResult r = grammatical_redundancy_errors({one, two});
  CHECK(r.name == "grammatical_redundancy_errors");
  CHECK(r.level == Level::Lexical);
  CHECK(r.value == 1.0);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].kind == FindingKind::GrammaticalRedundancy);
  CHECK(r.findings[0].detail.find("one.nt") != std::string::npos);
  CHECK(r.findings[0].detail.find("two.nt") != std::string::npos);

  GraphBuilder b;
  b.label("E", "Aphid").label("E", "  aphid ");
  MetricResult rl = grammatical_redundancy_errors({b.ts});
  CHECK(rl.value == 1.0);
  CHECK(rl.findings[0].subjects == std::vector<Iri>{ex("E")});

  // Distinct language tags keep equal-normal-form labels apart.
  TripleSet tagged = parse_ntriples(
      "<http://ex/E> <http://www.w3.org/2000/01/rdf-schema#label> "
      "\"Aphid\"@en .\n"
      "<http://ex/E> <http://www.w3.org/2000/01/rdf-schema#label> "
      "\"aphid\"@de .\n");
  CHECK(grammatical_redundancy_errors({tagged}).value == 0.0);

  MetricResult empty = grammatical_redundancy_errors({});
  CHECK(empty.degenerate);
}

TEST_CASE("completeness coverage over expected terms") {
  OntologyGraph g = GraphBuilder{}.label("A", "Aphid").declare("A").graph();
  MetricResult r = completeness_coverage(g, {"Aphid", "Mite"});
  CHECK(r.value == 0.5);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].kind == FindingKind::MissingTerm);
  CHECK(r.findings[0].detail == "mite");
  CHECK(r.findings[0].subjects.empty());

  // Local names back labels up.
  OntologyGraph unlabeled = GraphBuilder{}.declare("Thrips").graph();
  CHECK(completeness_coverage(unlabeled, {"thrips"}).value == 1.0);

  CHECK_THROWS_AS(completeness_coverage(g, {"  ", ""}), EmptyReferenceError);
  CHECK_THROWS_AS(completeness_coverage(g, {}), EmptyReferenceError);
}

TEST_CASE("expert score ingestion aggregates per criterion") {
  std::vector<ExpertScore> scores = {
      {"clarity", 4.0, "reviewer-a", "clear enough"},
      {"clarity", 5.0, "reviewer-b", ""},
      {"extendibility", 3.0, "reviewer-a", "rigid partitions"},
  };
  std::vector<MetricResult> out = ingest_expert_scores(scores);
  REQUIRE(out.size() == 2);
  CHECK(out[0].name == "expert_clarity");
  CHECK(out[0].value == 4.5);
  CHECK(out[0].level == Level::SemanticRelations);
  CHECK(out[0].method == Method::CriteriaBased);
  CHECK(out[0].findings.size() == 2);
  CHECK(out[0].findings[0].kind == FindingKind::ExpertComment);
  CHECK(out[1].name == "expert_extendibility");
  CHECK(out[1].level == Level::Context);
  CHECK(out[1].value == 3.0);
}

TEST_CASE("expert score validation") {
  CHECK_THROWS_AS(ingest_expert_scores({{"clarity", 6.0, "r", ""}}),
                  ValidationError);
  CHECK_THROWS_AS(ingest_expert_scores({{"clarity", 0.0, "r", ""}}),
                  ValidationError);
  CHECK_THROWS_AS(ingest_expert_scores({{"clarity", 4.5, "r", ""}}),
                  ValidationError);
  CHECK_THROWS_AS(ingest_expert_scores({{"lucidity", 4.0, "r", ""}}),
                  ValidationError);
  CHECK_THROWS_AS(ingest_expert_scores({{"clarity", 4.0, "", ""}}),
                  ValidationError);
  CHECK(ingest_expert_scores({}).empty());
}

TEST_CASE("expert score JSON loading") {
  std::vector<ExpertScore> scores = load_expert_scores_json(
      R"([{"criterion": "clarity", "score": 4, "assessor": "r1",
           "comment": "fine"},
          {"criterion": "coherence", "score": 5, "assessor": "r2"}])");
  REQUIRE(scores.size() == 2);
  CHECK(scores[0].criterion == "clarity");
  CHECK(scores[0].score == 4.0);
  CHECK(scores[0].comment == "fine");
  CHECK(scores[1].comment.empty());

  CHECK_THROWS_AS(load_expert_scores_json("not json"), ValidationError);
  CHECK_THROWS_AS(load_expert_scores_json("{}"), ValidationError);
  CHECK_THROWS_AS(load_expert_scores_json(R"([{"criterion": "clarity"}])"),
                  ValidationError);
}

TEST_CASE("criterion level assignment") {
  CHECK(level_for_criterion(ExpertCriterion::Clarity) ==
        Level::SemanticRelations);
  CHECK(level_for_criterion(ExpertCriterion::Extendibility) == Level::Context);
  CHECK(level_for_criterion(ExpertCriterion::MinimalOntologicalCommitment) ==
        Level::Context);
  CHECK(level_for_criterion(ExpertCriterion::Sensitiveness) ==
        Level::SemanticRelations);
  CHECK(criterion_from_string("minimal_encoding_bias") ==
        ExpertCriterion::MinimalEncodingBias);
}
