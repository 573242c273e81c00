// query.hpp : conjunctive graph-pattern queries
#ifndef ONTEVAL_QUERY_HPP
#define ONTEVAL_QUERY_HPP

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "onteval/ontology.hpp"
#include "onteval/rdf.hpp"

namespace onteval {

struct Variable {
  std::string name;  // without the '?'

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Variable, Iri, Literal>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  friend auto operator<=>(const TriplePattern&, const TriplePattern&) = default;
};

using Binding = std::map<std::string, Term>;

struct GraphPatternQuery {
  std::vector<std::string> projection;  // variable names, SELECT order
  std::vector<TriplePattern> where;
  std::map<std::string, std::string> prefixes;

  bool operator==(const GraphPatternQuery&) const = default;
};

// Grammar: optional PREFIX declarations, then
//   SELECT ?v ... WHERE { pattern ( . pattern )* .? }
// Pattern terms are <iri>, prefixed names, literals, variables, or the
// keyword a. Keywords are case-insensitive. Unsupported constructs
// (OPTIONAL, FILTER, UNION, ...) raise SyntaxError by name; projection
// variables absent from the patterns raise UnboundProjectionError.
GraphPatternQuery parse_query(const std::string& text);

struct QueryResult {
  std::vector<std::string> variables;
  std::vector<std::vector<Term>> rows;  // sorted, duplicate-free

  bool operator==(const QueryResult&) const = default;
};

QueryResult evaluate_query(const OntologyGraph& g,
                           const GraphPatternQuery& q);

}  // namespace onteval

#endif  // ONTEVAL_QUERY_HPP
