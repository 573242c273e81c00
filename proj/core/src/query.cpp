#include "onteval/query.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "onteval/errors.hpp"

namespace onteval {

namespace {

struct Token {
  enum Kind { Word, Pname, Var, IriRef, LiteralTok, Punct, End } kind;
  std::string text;               // word/pname/var name/iri value/punct
  Literal literal{"", {}, {}};    // when kind == LiteralTok
  std::size_t line = 1, column = 1;
};

const std::set<std::string>& unsupported_keywords() {
  static const std::set<std::string> kw = {
      "OPTIONAL", "FILTER",   "UNION", "GRAPH",  "BIND",
      "MINUS",    "SERVICE",  "VALUES", "LIMIT",  "OFFSET",
      "ORDER",    "DISTINCT", "ASK",    "CONSTRUCT", "DESCRIBE",
  };
  return kw;
}

std::string upper(std::string s) {
  for (char& c : s)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return s;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = text_[pos_];
    if (c == '{' || c == '}' || c == '.') {
      t.kind = Token::Punct;
      t.text = std::string(1, c);
      advance();
      return t;
    }
    if (c == '<') {
      advance();
      std::string iri;
      while (pos_ < text_.size() && text_[pos_] != '>') {
        iri += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) fail(t, "unterminated IRI");
      advance();
      t.kind = Token::IriRef;
      t.text = std::move(iri);
      return t;
    }
    if (c == '?') {
      advance();
      std::string name;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) {
        name += text_[pos_];
        advance();
      }
      if (name.empty()) fail(t, "empty variable name");
      t.kind = Token::Var;
      t.text = std::move(name);
      return t;
    }
    if (c == '"') return read_literal(t);
    if (is_word_start(c)) {
      std::string word;
      while (pos_ < text_.size() &&
             (is_name_char(text_[pos_]) || text_[pos_] == ':' ||
              text_[pos_] == '.')) {
        // A dot only continues a prefixed-name local part.
        if (text_[pos_] == '.' &&
            (pos_ + 1 >= text_.size() || !is_name_char(text_[pos_ + 1]) ||
             word.find(':') == std::string::npos))
          break;
        word += text_[pos_];
        advance();
      }
      if (word.find(':') != std::string::npos) {
        t.kind = Token::Pname;
      } else {
        t.kind = Token::Word;
      }
      t.text = std::move(word);
      return t;
    }
    fail(t, std::string("unexpected character '") + c + "'");
    return t;  // unreachable
  }

 private:
  static bool is_word_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' ||
           c == ':';
  }
  static bool is_name_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-';
  }

  Token read_literal(Token& t) {
    advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= text_.size()) fail(t, "unterminated literal");
      char c = text_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) fail(t, "unterminated escape");
        char e = text_[pos_];
        switch (e) {
          case 't': value += '\t'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default:
            fail(t, std::string("unsupported escape '\\") + e + "'");
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
    t.kind = Token::LiteralTok;
    t.literal.lexical = std::move(value);
    if (pos_ < text_.size() && text_[pos_] == '@') {
      advance();
      std::string lang;
      while (pos_ < text_.size() &&
             (is_name_char(text_[pos_]))) {
        lang += text_[pos_];
        advance();
      }
      if (lang.empty()) fail(t, "empty language tag");
      t.literal.language_tag = std::move(lang);
    } else if (pos_ + 1 < text_.size() && text_[pos_] == '^' &&
               text_[pos_ + 1] == '^') {
      advance();
      advance();
      if (pos_ >= text_.size() || text_[pos_] != '<')
        fail(t, "expected <iri> after ^^");
      advance();
      std::string iri;
      while (pos_ < text_.size() && text_[pos_] != '>') {
        iri += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) fail(t, "unterminated datatype IRI");
      advance();
      t.literal.datatype = Iri(iri);
    }
    return t;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const Token& t, const std::string& why) {
    throw SyntaxError(t.line, t.column, why);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  GraphPatternQuery run() {
    while (current_.kind == Token::Word &&
           upper(current_.text) == "PREFIX") {
      shift();
      read_prefix_decl();
    }
    expect_keyword("SELECT");
    if (current_.kind == Token::Word &&
        unsupported_keywords().count(upper(current_.text)))
      fail(upper(current_.text) + " is not supported");
    while (current_.kind == Token::Var) {
      query_.projection.push_back(current_.text);
      shift();
    }
    if (query_.projection.empty())
      fail("expected at least one projection variable");
    expect_keyword("WHERE");
    expect_punct("{");
    while (!(current_.kind == Token::Punct && current_.text == "}")) {
      if (current_.kind == Token::End) fail("unterminated group pattern");
      TriplePattern p;
      p.subject = read_term(false);
      p.predicate = read_term(true);
      p.object = read_term(false);
      query_.where.push_back(std::move(p));
      if (current_.kind == Token::Punct && current_.text == ".") {
        shift();
      } else if (!(current_.kind == Token::Punct && current_.text == "}")) {
        fail("expected '.' or '}' after pattern");
      }
    }
    shift();  // closing brace
    if (current_.kind != Token::End) fail("trailing content after '}'");

    std::set<std::string> bound;
    for (const TriplePattern& p : query_.where)
      for (const PatternTerm* t : {&p.subject, &p.predicate, &p.object})
        if (const Variable* v = std::get_if<Variable>(t)) bound.insert(v->name);
    for (const std::string& v : query_.projection)
      if (!bound.count(v))
        throw UnboundProjectionError("projected variable ?" + v +
                                     " is not bound by any pattern");
    return std::move(query_);
  }

 private:
  void read_prefix_decl() {
    if (current_.kind != Token::Pname || current_.text.empty() ||
        current_.text.back() != ':')
      fail("expected prefix name ending in ':'");
    std::string prefix = current_.text.substr(0, current_.text.size() - 1);
    shift();
    if (current_.kind != Token::IriRef) fail("expected <iri> in PREFIX");
    query_.prefixes[prefix] = current_.text;
    shift();
  }

  PatternTerm read_term(bool predicate_position) {
    switch (current_.kind) {
      case Token::Var: {
        Variable v{current_.text};
        shift();
        return v;
      }
      case Token::IriRef: {
        Iri iri(current_.text);
        shift();
        return iri;
      }
      case Token::Pname: {
        Iri iri = expand_pname(current_.text);
        shift();
        return iri;
      }
      case Token::LiteralTok: {
        Literal l = current_.literal;
        shift();
        return l;
      }
      case Token::Word: {
        std::string word = current_.text;
        std::string up = upper(word);
        if (unsupported_keywords().count(up))
          fail(up + " is not supported");
        if (word == "a" && predicate_position) {
          shift();
          return vocab::kRdfType;
        }
        fail("bare token '" + word + "' is not a term");
      }
      default:
        fail("expected a term");
    }
    fail("expected a term");
  }

  Iri expand_pname(const std::string& pname) {
    std::size_t colon = pname.find(':');
    std::string prefix = pname.substr(0, colon);
    auto it = query_.prefixes.find(prefix);
    if (it == query_.prefixes.end())
      fail("undeclared prefix '" + prefix + ":'");
    return Iri(it->second + pname.substr(colon + 1));
  }

  void expect_keyword(const std::string& kw) {
    if (current_.kind == Token::Word && upper(current_.text) == kw) {
      shift();
      return;
    }
    if (current_.kind == Token::Word &&
        unsupported_keywords().count(upper(current_.text)))
      fail(upper(current_.text) + " is not supported");
    fail("expected " + kw);
  }

  void expect_punct(const std::string& p) {
    if (current_.kind == Token::Punct && current_.text == p) {
      shift();
      return;
    }
    fail("expected '" + p + "'");
  }

  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& why) {
    throw SyntaxError(current_.line, current_.column, why);
  }

  Lexer lexer_;
  Token current_;
  GraphPatternQuery query_;
};

bool match_term(const PatternTerm& pattern, const Term& value, Binding& b) {
  if (const Variable* v = std::get_if<Variable>(&pattern)) {
    auto it = b.find(v->name);
    if (it == b.end()) {
      b.emplace(v->name, value);
      return true;
    }
    return it->second == value;
  }
  if (const Iri* iri = std::get_if<Iri>(&pattern))
    return is_iri(value) && as_iri(value) == *iri;
  return !is_iri(value) && as_literal(value) == std::get<Literal>(pattern);
}

}  // namespace

GraphPatternQuery parse_query(const std::string& text) {
  return Parser(text).run();
}

QueryResult evaluate_query(const OntologyGraph& g,
                           const GraphPatternQuery& q) {
  std::set<std::string> pattern_vars;
  for (const TriplePattern& p : q.where)
    for (const PatternTerm* t : {&p.subject, &p.predicate, &p.object})
      if (const Variable* v = std::get_if<Variable>(t))
        pattern_vars.insert(v->name);
  for (const std::string& v : q.projection)
    if (!pattern_vars.count(v))
      throw UnboundProjectionError("projected variable ?" + v +
                                   " is not bound by any pattern");

  std::vector<Binding> bindings = {Binding{}};
  std::vector<Triple> full_scan;
  bool full_scan_ready = false;
  for (const TriplePattern& p : q.where) {
    std::vector<Binding> next;
    for (const Binding& b : bindings) {
      // Resolve the predicate up front so the per-predicate index applies.
      const std::vector<Triple>* candidates = nullptr;
      const Iri* pred = std::get_if<Iri>(&p.predicate);
      if (!pred) {
        if (const Variable* v = std::get_if<Variable>(&p.predicate)) {
          auto it = b.find(v->name);
          if (it != b.end()) {
            if (!is_iri(it->second)) continue;
            pred = &as_iri(it->second);
          }
        } else {
          continue;  // literal predicate matches nothing
        }
      }
      if (pred) {
        auto it = g.by_predicate().find(*pred);
        if (it == g.by_predicate().end()) continue;
        candidates = &it->second;
      } else {
        if (!full_scan_ready) {
          full_scan.assign(g.triples().triples.begin(),
                           g.triples().triples.end());
          full_scan_ready = true;
        }
        candidates = &full_scan;
      }
      for (const Triple& t : *candidates) {
        Binding attempt = b;
        if (!match_term(p.subject, Term(t.subject), attempt)) continue;
        if (!match_term(p.predicate, Term(t.predicate), attempt)) continue;
        if (!match_term(p.object, t.object, attempt)) continue;
        next.push_back(std::move(attempt));
      }
    }
    bindings = std::move(next);
    if (bindings.empty()) break;
  }

  QueryResult result;
  result.variables = q.projection;
  std::set<std::vector<Term>> rows;
  for (const Binding& b : bindings) {
    std::vector<Term> row;
    row.reserve(q.projection.size());
    for (const std::string& v : q.projection) row.push_back(b.at(v));
    rows.insert(std::move(row));
  }
  result.rows.assign(rows.begin(), rows.end());
  return result;
}

}  // namespace onteval
