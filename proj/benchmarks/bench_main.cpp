#include <benchmark/benchmark.h>

#include <string>

#include "onteval/alignment.hpp"
#include "onteval/criteria.hpp"
#include "onteval/inference.hpp"
#include "onteval/ntriples.hpp"
#include "onteval/ontology.hpp"
#include "onteval/query.hpp"

using namespace onteval;

namespace {

Iri node(std::size_t i) { return Iri("http://bench/c" + std::to_string(i)); }

// `n` declared, labeled classes hanging off 20 roots.
TripleSet hierarchy(std::size_t n) {
  TripleSet ts;
  for (std::size_t i = 0; i < n; ++i) {
    ts.triples.insert({node(i), vocab::kRdfType, Term(vocab::kOwlClass)});
    ts.triples.insert({node(i), vocab::kRdfsLabel,
                       Term(Literal{"class " + std::to_string(i), {}, {}})});
    if (i >= 20)
      ts.triples.insert({node(i), vocab::kRdfsSubClassOf, Term(node(i % 20))});
  }
  return ts;
}

TripleSet chain(std::size_t n) {
  TripleSet ts;
  for (std::size_t i = 0; i + 1 < n; ++i)
    ts.triples.insert({node(i), vocab::kRdfsSubClassOf, Term(node(i + 1))});
  return ts;
}

}  // namespace

static void BM_ParseNTriples(benchmark::State& state) {
  const std::string text = serialize_ntriples(hierarchy(state.range(0)));
  for (auto _ : state) {
    TripleSet ts = parse_ntriples(text, "bench");
    benchmark::DoNotOptimize(ts);
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_ParseNTriples)->Arg(1000)->Arg(5000);

static void BM_SerializeNTriples(benchmark::State& state) {
  const TripleSet ts = hierarchy(state.range(0));
  for (auto _ : state) {
    std::string text = serialize_ntriples(ts);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_SerializeNTriples)->Arg(1000)->Arg(5000);

static void BM_HierarchyMetrics(benchmark::State& state) {
  const OntologyGraph g = build_ontology(hierarchy(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(circularity_errors(g));
    benchmark::DoNotOptimize(redundancy_errors(g));
    benchmark::DoNotOptimize(identical_definitions(g));
  }
}
BENCHMARK(BM_HierarchyMetrics)->Arg(500)->Arg(2000);

static void BM_QueryJoin(benchmark::State& state) {
  const OntologyGraph g = build_ontology(hierarchy(state.range(0)));
  const GraphPatternQuery q = parse_query(
      "SELECT ?x ?y WHERE { ?x <http://www.w3.org/2000/01/rdf-schema#"
      "subClassOf> ?y . ?y <http://www.w3.org/2000/01/rdf-schema#label> "
      "?l . }");
  for (auto _ : state) {
    QueryResult r = evaluate_query(g, q);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_QueryJoin)->Arg(500)->Arg(2000);

static void BM_Materialize(benchmark::State& state) {
  const OntologyGraph g = build_ontology(chain(state.range(0)));
  for (auto _ : state) {
    OntologyGraph m = materialize_inferences(g);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_Materialize)->Arg(32)->Arg(128);

static void BM_AlignLexicon(benchmark::State& state) {
  const OntologyGraph cand = build_ontology(hierarchy(state.range(0)));
  const OntologyGraph gold = build_ontology(hierarchy(state.range(0) / 2));
  for (auto _ : state) {
    Alignment a = align_lexicon(cand, gold, 0.8);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_AlignLexicon)->Arg(100)->Arg(300);

BENCHMARK_MAIN();
