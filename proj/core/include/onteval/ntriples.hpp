// ntriples.hpp : line-oriented N-Triples reader and writer
#ifndef ONTEVAL_NTRIPLES_HPP
#define ONTEVAL_NTRIPLES_HPP

#include <string>

#include "onteval/rdf.hpp"

namespace onteval {

// Parses N-Triples text. Duplicate statements collapse; blank nodes get
// stable urn:bnode:<n> identifiers in first-seen order. Throws SyntaxError
// (with line and column) on the first malformed line.
TripleSet parse_ntriples(const std::string& text,
                         const std::string& source_name = "");

// Deterministic serialization: one statement per line, LF endings, lines
// sorted lexicographically. parse_ntriples(serialize_ntriples(ts)) == ts.
std::string serialize_ntriples(const TripleSet& ts);

}  // namespace onteval

#endif  // ONTEVAL_NTRIPLES_HPP
