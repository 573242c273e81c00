// turtle.hpp : reader for the supported Turtle subset
#ifndef ONTEVAL_TURTLE_HPP
#define ONTEVAL_TURTLE_HPP

#include <string>

#include "onteval/rdf.hpp"

namespace onteval {

// Supported subset: @prefix directives, IRIs, prefixed names, the 'a'
// keyword, ';' and ',' abbreviations, plain / language-tagged / typed
// literals, '#' comments. Unsupported constructs (blank-node property lists,
// collections, blank node labels, @base, numeric and boolean literals,
// triple-quoted literals) raise SyntaxError naming the construct.
TripleSet parse_turtle_subset(const std::string& text,
                              const std::string& source_name = "");

}  // namespace onteval

#endif  // ONTEVAL_TURTLE_HPP
