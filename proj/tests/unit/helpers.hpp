// helpers.hpp : shared generators and reference implementations
#ifndef ONTEVAL_TESTS_HELPERS_HPP
#define ONTEVAL_TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "onteval/ontology.hpp"
#include "onteval/rdf.hpp"

namespace testutil {

using onteval::Iri;
using onteval::Literal;
using onteval::Term;
using onteval::Triple;
using onteval::TripleSet;

inline std::mt19937& rng() {
  static std::mt19937 gen(20260822u);
  return gen;
}

// Uniform in [0, n); n must be positive.
inline std::size_t pick(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng());
}

inline bool chance(double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng()) < p;
}

inline Iri node_iri(std::size_t i) {
  return Iri("http://example.org/n" + std::to_string(i));
}

inline std::string random_word(std::size_t min_len = 1,
                               std::size_t max_len = 8) {
  std::size_t len = min_len + pick(max_len - min_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i)
    out += static_cast<char>('a' + pick(26));
  return out;
}

// Edges only go from a lower to a higher node index, so the graph is a DAG.
inline std::set<std::pair<Iri, Iri>> random_dag_edges(std::size_t n,
                                                      double p) {
  std::set<std::pair<Iri, Iri>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (chance(p)) edges.insert({node_iri(i), node_iri(j)});
  return edges;
}

inline std::set<std::pair<Iri, Iri>> random_digraph_edges(std::size_t n,
                                                          double p) {
  std::set<std::pair<Iri, Iri>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (chance(p)) edges.insert({node_iri(i), node_iri(j)});
  return edges;
}

// Reflexive-transitive closure by Floyd-Warshall.
inline std::set<std::pair<Iri, Iri>> naive_closure(
    const std::set<std::pair<Iri, Iri>>& edges, const std::set<Iri>& nodes) {
  std::vector<Iri> all(nodes.begin(), nodes.end());
  for (const auto& [a, b] : edges) {
    if (!nodes.count(a)) all.push_back(a);
    if (!nodes.count(b)) all.push_back(b);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::map<Iri, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  const std::size_t n = all.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [a, b] : edges) reach[index[a]][index[b]] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::set<std::pair<Iri, Iri>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j]) out.insert({all[i], all[j]});
  return out;
}

// Full-matrix Levenshtein, the textbook recurrence.
inline std::size_t naive_edit_distance(const std::string& a,
                                       const std::string& b) {
  std::vector<std::vector<std::size_t>> d(
      a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

inline Iri random_iri() {
  switch (pick(3)) {
    case 0:
      return Iri("http://example.org/" + random_word(1, 10));
    case 1:
      return Iri("urn:test:" + random_word(1, 6) + ":" + random_word(1, 6));
    default:
      return Iri("http://data.test/v1#" + random_word(1, 8));
  }
}

inline Literal random_literal() {
  Literal lit;
  // Lexical forms stress the escaper: quotes, backslashes, control bytes.
  static const char* pool =
      "abcXYZ019 \t\n\r\"\\'~!#{}|^`\x01\x1f\x7f";
  std::size_t len = pick(12);
  for (std::size_t i = 0; i < len; ++i)
    lit.lexical += pool[pick(std::char_traits<char>::length(pool))];
  if (chance(0.25)) {
    lit.language_tag = random_word(2, 3);
    if (chance(0.5)) *lit.language_tag += "-" + random_word(1, 3);
  } else if (chance(0.25)) {
    lit.datatype = Iri("http://www.w3.org/2001/XMLSchema#" + random_word(3, 8));
  }
  return lit;
}

inline TripleSet random_triples(std::size_t max_triples) {
  TripleSet ts;
  std::size_t count = pick(max_triples + 1);
  for (std::size_t i = 0; i < count; ++i) {
    Triple t;
    t.subject = random_iri();
    t.predicate = random_iri();
    if (chance(0.5))
      t.object = random_iri();
    else
      t.object = random_literal();
    ts.triples.insert(std::move(t));
  }
  return ts;
}

// Jaccard similarity with the both-empty convention used by the overlap
// metric.
inline double naive_jaccard(const std::set<Iri>& a, const std::set<Iri>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (const Iri& x : a)
    if (b.count(x)) ++inter;
  return static_cast<double>(inter) /
         static_cast<double>(a.size() + b.size() - inter);
}

}  // namespace testutil

#endif  // ONTEVAL_TESTS_HELPERS_HPP
