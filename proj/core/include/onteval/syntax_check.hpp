// syntax_check.hpp : syntactic-level checks
#ifndef ONTEVAL_SYNTAX_CHECK_HPP
#define ONTEVAL_SYNTAX_CHECK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "onteval/ontology.hpp"

namespace onteval {

enum class RdfFormat { NTriples, Turtle };

// By file extension: .ttl/.turtle parse as Turtle, everything else as
// N-Triples.
RdfFormat detect_format(const std::string& path);

enum class IssueSeverity { Error, Warning };
std::string to_string(IssueSeverity s);

struct SyntacticIssue {
  IssueSeverity severity = IssueSeverity::Warning;
  std::string code;     // e.g. UNDECLARED_CLASS
  std::string subject;  // IRI involved; empty for whole-file issues
  std::string message;

  friend auto operator<=>(const SyntacticIssue&,
                          const SyntacticIssue&) = default;
};

struct SyntacticReport {
  bool parse_ok = false;
  std::vector<SyntacticIssue> issues;  // errors first, then by code/subject
  std::size_t error_count = 0;
  std::size_t warning_count = 0;

  bool operator==(const SyntacticReport&) const = default;
};

// Graph-level checks on an already-parsed ontology:
//   UNDECLARED_CLASS     class used without a declaration
//   UNDECLARED_PROPERTY  predicate never typed and without domain/range
//   RELATIVE_IRI         IRI with no scheme separator
//   MISSING_LABEL        class without an rdfs:label
//   DANGLING_REFERENCE   IRI appearing only as a superclass
SyntacticReport check_graph(const OntologyGraph& g);

// Parses then checks. A parse failure yields one SYNTAX_ERROR issue of
// Error severity and parse_ok = false.
SyntacticReport check_syntax(const std::string& text, RdfFormat format,
                             const std::string& source_name = "");

}  // namespace onteval

#endif  // ONTEVAL_SYNTAX_CHECK_HPP
