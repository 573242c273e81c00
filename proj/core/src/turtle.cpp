#include "onteval/turtle.hpp"

#include <cctype>
#include <map>

#include "onteval/errors.hpp"

namespace onteval {

namespace {

bool pname_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.';
}

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char peek2() const { return pos + 1 < text.size() ? text[pos + 1] : '\0'; }
  char peek3() const { return pos + 2 < text.size() ? text[pos + 2] : '\0'; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw SyntaxError(line, col, reason);
  }

  void skip_ws_and_comments() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c, const std::string& what) {
    if (eof() || peek() != c) fail("expected " + what);
    advance();
  }

  // Rejects constructs the subset does not cover, naming them.
  void reject_unsupported() {
    if (eof()) return;
    char c = peek();
    if (c == '[') fail("unsupported construct: blank-node property list");
    if (c == '(') fail("unsupported construct: collection");
    if (c == '_' && peek2() == ':')
      fail("unsupported construct: blank node label");
    if (c == '"' && peek2() == '"' && peek3() == '"')
      fail("unsupported construct: triple-quoted literal");
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-')
      fail("unsupported construct: numeric literal");
  }
};

struct TurtleParser {
  Scanner s;
  std::map<std::string, std::string> prefixes;
  TripleSet out;

  explicit TurtleParser(const std::string& text) : s{text} {}

  Iri read_iriref() {
    s.expect('<', "'<'");
    std::string value;
    while (true) {
      if (s.eof()) s.fail("unterminated IRI");
      char c = s.peek();
      if (c == '>') {
        s.advance();
        break;
      }
      unsigned char b = static_cast<unsigned char>(c);
      if (b <= 0x20 || c == '<' || c == '"' || c == '\\')
        s.fail("forbidden character in IRI");
      value += c;
      s.advance();
    }
    if (value.empty()) s.fail("empty IRI");
    return Iri(value);
  }

  std::string read_pname_part() {
    std::string part;
    while (!s.eof() && pname_char(s.peek())) {
      part += s.peek();
      s.advance();
    }
    // A trailing '.' terminates the statement, not the name.
    while (!part.empty() && part.back() == '.') {
      part.pop_back();
      --s.pos;
      --s.col;
    }
    return part;
  }

  Iri expand_pname() {
    std::size_t at_line = s.line, at_col = s.col;
    std::string prefix = read_pname_part();
    if (s.eof() || s.peek() != ':')
      throw SyntaxError(at_line, at_col,
                        "expected IRI, prefixed name, or literal");
    s.advance();
    std::string local = read_pname_part();
    auto it = prefixes.find(prefix);
    if (it == prefixes.end())
      throw SyntaxError(at_line, at_col,
                        "undeclared prefix '" + prefix + ":'");
    return Iri(it->second + local);
  }

  Iri read_iri_term() {
    s.reject_unsupported();
    if (s.peek() == '<') return read_iriref();
    return expand_pname();
  }

  std::string read_quoted() {
    s.expect('"', "'\"'");
    std::string outstr;
    while (true) {
      if (s.eof()) s.fail("unterminated literal");
      char c = s.peek();
      if (c == '"') {
        s.advance();
        return outstr;
      }
      if (c == '\\') {
        s.advance();
        if (s.eof()) s.fail("dangling escape");
        char e = s.peek();
        s.advance();
        switch (e) {
          case 't': outstr += '\t'; break;
          case 'n': outstr += '\n'; break;
          case 'r': outstr += '\r'; break;
          case '"': outstr += '"'; break;
          case '\\': outstr += '\\'; break;
          default: s.fail(std::string("invalid escape '\\") + e + "'");
        }
        continue;
      }
      if (c == '\n') s.fail("unterminated literal");
      outstr += c;
      s.advance();
    }
  }

  Literal read_literal() {
    Literal lit;
    lit.lexical = read_quoted();
    if (!s.eof() && s.peek() == '@') {
      s.advance();
      std::string tag;
      while (!s.eof() && (std::isalnum(static_cast<unsigned char>(s.peek())) ||
                          s.peek() == '-')) {
        tag += s.peek();
        s.advance();
      }
      // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
      std::size_t i = 0;
      while (i < tag.size() && std::isalpha(static_cast<unsigned char>(tag[i])))
        ++i;
      bool ok = i > 0;
      while (ok && i < tag.size()) {
        if (tag[i] != '-') ok = false;
        std::size_t start = ++i;
        while (i < tag.size() &&
               std::isalnum(static_cast<unsigned char>(tag[i])))
          ++i;
        ok = ok && i > start;
      }
      if (!ok) s.fail("malformed language tag");
      lit.language_tag = tag;
    } else if (!s.eof() && s.peek() == '^' && s.peek2() == '^') {
      s.advance();
      s.advance();
      lit.datatype = read_iri_term();
    }
    return lit;
  }

  Term read_object() {
    s.reject_unsupported();
    if (s.peek() == '"') return read_literal();
    if (s.peek() == 't' || s.peek() == 'f') {
      // Look ahead for the boolean keywords; 'true'/'false' are not pnames
      // unless a colon follows.
      std::size_t save = s.pos;
      std::string word;
      while (save < s.text.size() && pname_char(s.text[save]))
        word += s.text[save++];
      if ((word == "true" || word == "false") &&
          (save >= s.text.size() || s.text[save] != ':'))
        s.fail("unsupported construct: boolean literal");
    }
    return read_iri_term();
  }

  void read_prefix_directive() {
    // '@prefix' already consumed up to the keyword; read "px: <iri> ."
    s.skip_ws_and_comments();
    std::string prefix = read_pname_part();
    s.expect(':', "':' in prefix declaration");
    s.skip_ws_and_comments();
    Iri ns = read_iriref();
    s.skip_ws_and_comments();
    s.expect('.', "'.' after prefix declaration");
    prefixes[prefix] = ns.value();
  }

  void read_directive() {
    std::size_t at_line = s.line, at_col = s.col;
    s.advance();  // '@'
    std::string keyword;
    while (!s.eof() && std::isalpha(static_cast<unsigned char>(s.peek()))) {
      keyword += s.peek();
      s.advance();
    }
    if (keyword == "prefix") {
      read_prefix_directive();
    } else if (keyword == "base") {
      throw SyntaxError(at_line, at_col, "unsupported construct: @base directive");
    } else {
      throw SyntaxError(at_line, at_col, "unknown directive '@" + keyword + "'");
    }
  }

  Iri read_verb() {
    s.reject_unsupported();
    if (s.peek() == 'a') {
      // 'a' keyword only when not the start of a prefixed name.
      std::size_t save = s.pos + 1;
      bool bare = save >= s.text.size() ||
                  (!pname_char(s.text[save]) && s.text[save] != ':');
      if (bare) {
        s.advance();
        return vocab::kRdfType;
      }
    }
    if (s.peek() == '"') s.fail("literal in predicate position");
    return read_iri_term();
  }

  void read_statement() {
    s.reject_unsupported();
    if (s.peek() == '"') s.fail("literal in subject position");
    Iri subject = read_iri_term();
    while (true) {
      s.skip_ws_and_comments();
      Iri predicate = read_verb();
      while (true) {
        s.skip_ws_and_comments();
        Term object = read_object();
        out.triples.insert(Triple{subject, predicate, object});
        s.skip_ws_and_comments();
        if (!s.eof() && s.peek() == ',') {
          s.advance();
          continue;
        }
        break;
      }
      if (!s.eof() && s.peek() == ';') {
        s.advance();
        s.skip_ws_and_comments();
        if (!s.eof() && s.peek() == '.') break;  // trailing ';' is legal
        continue;
      }
      break;
    }
    s.expect('.', "terminating '.'");
  }

  TripleSet run() {
    while (true) {
      s.skip_ws_and_comments();
      if (s.eof()) break;
      if (s.peek() == '@') {
        read_directive();
      } else {
        read_statement();
      }
    }
    return std::move(out);
  }
};

}  // namespace

TripleSet parse_turtle_subset(const std::string& text,
                              const std::string& source_name) {
  TurtleParser parser(text);
  TripleSet ts = parser.run();
  ts.source_name = source_name;
  return ts;
}

}  // namespace onteval
