// text.hpp : shared lexical helpers
#ifndef ONTEVAL_TEXT_HPP
#define ONTEVAL_TEXT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace onteval {

// Case-fold (ASCII), trim, and collapse internal whitespace runs to a single
// space. This is the normal form used for label comparison everywhere.
std::string normalize_label(const std::string& s);

// Maximal alphanumeric runs, case-folded. Non-alphanumeric bytes separate
// tokens.
std::vector<std::string> tokenize(const std::string& text);

// Levenshtein distance (unit costs).
std::size_t edit_distance(const std::string& a, const std::string& b);

// Fixed 50-word English stop list, applied to unigram term ranking only.
bool is_stop_word(const std::string& token);

}  // namespace onteval

#endif  // ONTEVAL_TEXT_HPP
