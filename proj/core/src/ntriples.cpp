#include "onteval/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <vector>

#include "onteval/errors.hpp"

namespace onteval {

namespace {

// Cursor over one physical line. All positions are byte offsets; errors are
// reported 1-based.
struct LineCursor {
  const std::string& line;
  std::size_t line_no;
  std::size_t pos = 0;

  bool eof() const { return pos >= line.size(); }
  char peek() const { return line[pos]; }

  [[noreturn]] void fail(const std::string& reason) const {
    throw SyntaxError(line_no, pos + 1, reason);
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  void expect(char c, const std::string& what) {
    if (eof() || peek() != c) fail("expected " + what);
    ++pos;
  }
};

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::uint32_t read_hex(LineCursor& c, int digits) {
  std::uint32_t v = 0;
  for (int i = 0; i < digits; ++i) {
    if (c.eof() || !std::isxdigit(static_cast<unsigned char>(c.peek())))
      c.fail("bad \\u escape: expected hex digit");
    char h = c.peek();
    v = v * 16 + (std::isdigit(static_cast<unsigned char>(h))
                      ? h - '0'
                      : std::tolower(h) - 'a' + 10);
    ++c.pos;
  }
  if (v > 0x10FFFF) c.fail("bad \\u escape: code point out of range");
  return v;
}

// \uXXXX and \UXXXXXXXX only; used inside IRIs.
void read_uchar_escape(LineCursor& c, std::string& out) {
  ++c.pos;  // backslash
  if (c.eof()) c.fail("dangling escape");
  char e = c.peek();
  ++c.pos;
  if (e == 'u') {
    append_utf8(out, read_hex(c, 4));
  } else if (e == 'U') {
    append_utf8(out, read_hex(c, 8));
  } else {
    c.fail(std::string("invalid escape '\\") + e + "' in IRI");
  }
}

Iri read_iri(LineCursor& c) {
  std::size_t start = c.pos;
  c.expect('<', "'<'");
  std::string value;
  while (true) {
    if (c.eof()) c.fail("unterminated IRI");
    char ch = c.peek();
    if (ch == '>') {
      ++c.pos;
      break;
    }
    if (ch == '\\') {
      read_uchar_escape(c, value);
      continue;
    }
    unsigned char b = static_cast<unsigned char>(ch);
    if (b <= 0x20 || ch == '<' || ch == '"')
      c.fail("forbidden character in IRI");
    value += ch;
    ++c.pos;
  }
  if (value.empty()) throw SyntaxError(c.line_no, start + 1, "empty IRI");
  // Escapes must not smuggle in characters the IRI grammar forbids.
  for (unsigned char b : value)
    if (b <= 0x20 || b == '<' || b == '>' || b == '"' || b == '\\')
      throw SyntaxError(c.line_no, start + 1,
                        "escape resolves to forbidden character in IRI");
  return Iri(value);
}

std::string read_blank_label(LineCursor& c) {
  c.expect('_', "blank node");
  c.expect(':', "':' after '_' in blank node");
  std::string label;
  while (!c.eof()) {
    char ch = c.peek();
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
        ch == '-' || ch == '.') {
      label += ch;
      ++c.pos;
    } else {
      break;
    }
  }
  // A trailing dot belongs to the statement, not the label.
  while (!label.empty() && label.back() == '.') {
    label.pop_back();
    --c.pos;
  }
  if (label.empty()) c.fail("empty blank node label");
  return label;
}

std::string read_quoted(LineCursor& c) {
  c.expect('"', "'\"'");
  std::string out;
  while (true) {
    if (c.eof()) c.fail("unterminated literal");
    char ch = c.peek();
    if (ch == '"') {
      ++c.pos;
      return out;
    }
    if (ch == '\\') {
      ++c.pos;
      if (c.eof()) c.fail("dangling escape");
      char e = c.peek();
      ++c.pos;
      switch (e) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u': append_utf8(out, read_hex(c, 4)); break;
        case 'U': append_utf8(out, read_hex(c, 8)); break;
        default:
          c.fail(std::string("invalid escape '\\") + e + "' in literal");
      }
      continue;
    }
    out += ch;
    ++c.pos;
  }
}

Literal read_literal(LineCursor& c) {
  Literal lit;
  lit.lexical = read_quoted(c);
  if (!c.eof() && c.peek() == '@') {
    ++c.pos;
    std::string tag;
    while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) ||
                        c.peek() == '-')) {
      tag += c.peek();
      ++c.pos;
    }
    // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
    std::size_t i = 0;
    while (i < tag.size() && std::isalpha(static_cast<unsigned char>(tag[i])))
      ++i;
    bool ok = i > 0;
    while (ok && i < tag.size()) {
      if (tag[i] != '-') ok = false;
      std::size_t start = ++i;
      while (i < tag.size() && std::isalnum(static_cast<unsigned char>(tag[i])))
        ++i;
      ok = ok && i > start;
    }
    if (!ok) c.fail("malformed language tag");
    lit.language_tag = tag;
  } else if (c.pos + 1 < c.line.size() && c.peek() == '^' &&
             c.line[c.pos + 1] == '^') {
    c.pos += 2;
    lit.datatype = read_iri(c);
  }
  return lit;
}

}  // namespace

TripleSet parse_ntriples(const std::string& text,
                         const std::string& source_name) {
  TripleSet ts;
  ts.source_name = source_name;
  std::map<std::string, std::size_t> blank_ids;

  auto blank_iri = [&](const std::string& label) {
    auto it = blank_ids.find(label);
    if (it == blank_ids.end())
      it = blank_ids.emplace(label, blank_ids.size()).first;
    return Iri("urn:bnode:" + std::to_string(it->second));
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;

    LineCursor c{line, line_no};
    c.skip_ws();
    if (!c.eof() && c.peek() != '#') {
      if (c.peek() == '"') c.fail("literal in subject position");
      Iri subject = c.peek() == '_' ? blank_iri(read_blank_label(c))
                  : read_iri(c);
      c.skip_ws();
      if (!c.eof() && c.peek() == '"') c.fail("literal in predicate position");
      if (!c.eof() && c.peek() == '_') c.fail("blank node in predicate position");
      Iri predicate = read_iri(c);
      c.skip_ws();
      Term object = [&]() -> Term {
        if (c.eof()) c.fail("missing object");
        if (c.peek() == '"') return read_literal(c);
        if (c.peek() == '_') return blank_iri(read_blank_label(c));
        return read_iri(c);
      }();
      c.skip_ws();
      c.expect('.', "terminating '.'");
      c.skip_ws();
      if (!c.eof() && c.peek() != '#') c.fail("trailing content after '.'");
      ts.triples.insert(Triple{std::move(subject), std::move(predicate),
                               std::move(object)});
    }

    if (end == std::string::npos) break;
    start = end + 1;
  }
  return ts;
}

namespace {

void escape_literal_text(const std::string& in, std::string& out) {
  for (unsigned char b : in) {
    switch (b) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (b < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", b);
          out += buf;
        } else {
          out += static_cast<char>(b);
        }
    }
  }
}

std::string render_term(const Term& t) {
  if (is_iri(t)) return "<" + as_iri(t).value() + ">";
  const Literal& lit = as_literal(t);
  std::string out = "\"";
  escape_literal_text(lit.lexical, out);
  out += "\"";
  if (lit.language_tag) out += "@" + *lit.language_tag;
  if (lit.datatype) out += "^^<" + lit.datatype->value() + ">";
  return out;
}

}  // namespace

std::string serialize_ntriples(const TripleSet& ts) {
  std::vector<std::string> lines;
  lines.reserve(ts.triples.size());
  for (const Triple& t : ts.triples) {
    lines.push_back("<" + t.subject.value() + "> <" + t.predicate.value() +
                    "> " + render_term(t.object) + " .");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace onteval
