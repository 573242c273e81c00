#include <doctest.h>

#include <set>
#include <utility>

#include "closure.hpp"
#include "helpers.hpp"

using namespace onteval;
using testutil::node_iri;

namespace {

std::set<std::pair<Iri, Iri>> closure_pairs(
    const std::set<std::pair<Iri, Iri>>& edges, const std::set<Iri>& nodes) {
  detail::Closure c(edges, nodes);
  std::set<Iri> all = nodes;
  for (const auto& [a, b] : edges) {
    all.insert(a);
    all.insert(b);
  }
  std::set<std::pair<Iri, Iri>> out;
  for (const Iri& a : all)
    for (const Iri& b : all)
      if (c.reaches(a, b)) out.insert({a, b});
  return out;
}

}  // namespace

TEST_CASE("closure matches Floyd-Warshall on random digraphs") {
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + testutil::pick(12);
    auto edges = testutil::random_digraph_edges(n, 0.2);
    std::set<Iri> nodes;
    for (std::size_t k = 0; k < n; ++k) nodes.insert(node_iri(k));
    CHECK(closure_pairs(edges, nodes) == testutil::naive_closure(edges, nodes));
  }
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 2 + testutil::pick(9);
    auto edges = testutil::random_digraph_edges(n, 0.18);
    std::set<Iri> nodes;
    for (std::size_t k = 0; k < n; ++k) nodes.insert(node_iri(k));

    auto closed = closure_pairs(edges, nodes);
    // Extensive: every edge and every node's self-pair is in the closure.
    for (const auto& e : edges) CHECK(closed.count(e) == 1);
    for (const Iri& x : nodes)
      CHECK(closed.count({x, x}) == 1);

    // Monotone: adding one edge never removes a reachable pair.
    auto grown = edges;
    grown.insert({node_iri(testutil::pick(n)), node_iri(testutil::pick(n))});
    auto closed_grown = closure_pairs(grown, nodes);
    for (const auto& p : closed) CHECK(closed_grown.count(p) == 1);

    // Idempotent: closing the closure changes nothing.
    CHECK(closure_pairs(closed, nodes) == closed);
  }
}

TEST_CASE("cycle detection and members") {
  detail::Closure acyclic({{node_iri(0), node_iri(1)}}, {});
  CHECK_FALSE(acyclic.has_cycle());
  CHECK(acyclic.cycles().empty());

  detail::Closure self_loop({{node_iri(0), node_iri(0)}}, {});
  CHECK(self_loop.has_cycle());

  detail::Closure two_cycle(
      {{node_iri(0), node_iri(1)}, {node_iri(1), node_iri(0)}}, {});
  CHECK(two_cycle.has_cycle());
  REQUIRE(two_cycle.cycles().size() == 1);
  CHECK(two_cycle.cycles()[0] ==
        std::vector<Iri>{node_iri(0), node_iri(1)});
}

TEST_CASE("reachable_from lists the reflexive-transitive image") {
  detail::Closure c({{node_iri(0), node_iri(1)}, {node_iri(1), node_iri(2)}},
                    {node_iri(3)});
  CHECK(c.reachable_from(node_iri(0)) ==
        std::vector<Iri>{node_iri(0), node_iri(1), node_iri(2)});
  CHECK(c.reachable_from(node_iri(3)) == std::vector<Iri>{node_iri(3)});
}
