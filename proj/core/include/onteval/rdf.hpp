// rdf.hpp : RDF terms, triples and triple sets
#ifndef ONTEVAL_RDF_HPP
#define ONTEVAL_RDF_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <variant>

namespace onteval {

// An absolute IRI (or a blank-node IRI minted by the parser). Construction
// rejects text that could not survive a serialization round trip; whether the
// IRI is absolute is a lint concern, not a construction failure (see
// check_syntax, code RELATIVE_IRI).
class Iri {
 public:
  Iri() = default;
  explicit Iri(std::string value);

  const std::string& value() const { return value_; }

  // Fragment after the last '#' or '/', or the full value if neither occurs.
  std::string local_name() const;
  // Everything up to and including the last '#' or '/'; falls back to the
  // scheme prefix, then to the whole value.
  std::string namespace_part() const;
  // True if the value contains a ':' (scheme separator present).
  bool is_absolute() const;

  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

struct Literal {
  std::string lexical;
  std::optional<std::string> language_tag;
  std::optional<Iri> datatype;  // mutually exclusive with language_tag

  auto operator<=>(const Literal&) const = default;
};

// Object position of a triple; subjects and predicates are always IRIs.
using Term = std::variant<Iri, Literal>;

bool is_iri(const Term& t);
const Iri& as_iri(const Term& t);
const Literal& as_literal(const Term& t);
std::string term_to_string(const Term& t);

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

// A deduplicated set of triples plus the name of the document it came from.
// Equality ignores source_name: two sets are equal when they hold the same
// statements.
struct TripleSet {
  std::set<Triple> triples;
  std::string source_name;

  std::size_t size() const { return triples.size(); }
  bool contains(const Triple& t) const { return triples.count(t) > 0; }

  bool operator==(const TripleSet& other) const {
    return triples == other.triples;
  }
};

// The vocabulary the toolkit interprets. Anything else is carried through
// as opaque data.
namespace vocab {
extern const Iri kRdfType;
extern const Iri kRdfsSubClassOf;
extern const Iri kRdfsLabel;
extern const Iri kRdfsDomain;
extern const Iri kRdfsRange;
extern const Iri kOwlClass;
extern const Iri kRdfsClass;
extern const Iri kOwlObjectProperty;
extern const Iri kRdfProperty;
extern const Iri kOwlDisjointWith;
extern const Iri kOwlEquivalentClass;
extern const Iri kOwlSameAs;

// True for the class/property declaration objects (owl:Class, rdfs:Class,
// owl:ObjectProperty, rdf:Property).
bool is_declaration_object(const Iri& iri);
// True for any predicate or declaration object listed above.
bool is_reserved(const Iri& iri);
}  // namespace vocab

}  // namespace onteval

#endif  // ONTEVAL_RDF_HPP
