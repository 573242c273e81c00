#include "onteval/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace onteval {

namespace {

bool is_space_byte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

char fold(unsigned char c) {
  return static_cast<char>(std::tolower(c));
}

}  // namespace

std::string normalize_label(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (unsigned char c : s) {
    if (is_space_byte(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += fold(c);
  }
  return out;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      cur += fold(c);
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  const std::size_t n = a.size(), m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

bool is_stop_word(const std::string& token) {
  static const std::unordered_set<std::string> kStop = {
      "a",    "an",   "the",  "and",  "or",   "but",  "if",   "of",
      "at",   "by",   "for",  "with", "to",   "from", "in",   "on",
      "is",   "are",  "was",  "were", "be",   "been", "being", "it",
      "its",  "this", "that", "these", "those", "as",  "into", "than",
      "then", "so",   "such", "not",  "no",   "nor",  "can",  "will",
      "may",  "must", "has",  "have", "had",  "do",   "does", "did",
      "we",   "they"};
  return kStop.count(token) > 0;
}

}  // namespace onteval
