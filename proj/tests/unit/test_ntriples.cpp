#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "onteval/errors.hpp"
#include "onteval/ntriples.hpp"
#include "onteval/rdf.hpp"

using namespace onteval;

TEST_CASE("parses IRI and literal objects") {
  std::string text =
      "<http://ex/s> <http://ex/p> <http://ex/o> .\n"
      "<http://ex/s> <http://ex/label> \"Crop\" .\n"
      "<http://ex/s> <http://ex/label> \"Culture\"@fr-CA .\n"
      "<http://ex/s> <http://ex/count> "
      "\"3\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n";
  TripleSet ts = parse_ntriples(text, "in.nt");
  CHECK(ts.size() == 4);
  CHECK(ts.source_name == "in.nt");
  CHECK(ts.contains(
      {Iri("http://ex/s"), Iri("http://ex/p"), Iri("http://ex/o")}));
  CHECK(ts.contains(
      {Iri("http://ex/s"), Iri("http://ex/label"), Literal{"Crop", {}, {}}}));
  CHECK(ts.contains({Iri("http://ex/s"), Iri("http://ex/label"),
                     Literal{"Culture", "fr-CA", {}}}));
  CHECK(ts.contains(
      {Iri("http://ex/s"), Iri("http://ex/count"),
       Literal{"3", {}, Iri("http://www.w3.org/2001/XMLSchema#integer")}}));
}

TEST_CASE("escape sequences in literals and IRIs") {
  TripleSet ts = parse_ntriples(
      "<http://ex/s> <http://ex/p> \"a\\tb\\nc\\\"d\\\\e\" .\n"
      "<http://ex/s> <http://ex/p> \"\\u00e9\\U0001F600\" .\n"
      "<http://ex/\\u0041> <http://ex/p> <http://ex/o> .\n");
  CHECK(ts.contains({Iri("http://ex/s"), Iri("http://ex/p"),
                     Literal{"a\tb\nc\"d\\e", {}, {}}}));
  CHECK(ts.contains({Iri("http://ex/s"), Iri("http://ex/p"),
                     Literal{"\xc3\xa9\xf0\x9f\x98\x80", {}, {}}}));
  CHECK(ts.contains(
      {Iri("http://ex/A"), Iri("http://ex/p"), Iri("http://ex/o")}));
}

TEST_CASE("comments and blank lines") {
  TripleSet ts = parse_ntriples(
      "# header comment\n"
      "\n"
      "<http://ex/s> <http://ex/p> <http://ex/o> . # trailing\n"
      "   \n");
  CHECK(ts.size() == 1);
}

TEST_CASE("blank nodes become stable IRIs in document order") {
  TripleSet ts = parse_ntriples(
      "_:b <http://ex/p> _:a .\n"
      "_:a <http://ex/p> _:b .\n");
  // _:b first seen before _:a, so it takes identifier 0.
  CHECK(ts.contains(
      {Iri("urn:bnode:0"), Iri("http://ex/p"), Iri("urn:bnode:1")}));
  CHECK(ts.contains(
      {Iri("urn:bnode:1"), Iri("http://ex/p"), Iri("urn:bnode:0")}));
  CHECK_THROWS_AS(parse_ntriples("<http://ex/s> _:p <http://ex/o> .\n"),
                  SyntaxError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_ntriples(
        "<http://ex/s> <http://ex/p> <http://ex/o> .\n"
        "<http://ex/s> <http://ex/p> <http://ex/o>\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 1);
  }
  CHECK_THROWS_AS(parse_ntriples("\"lit\" <http://ex/p> <http://ex/o> .\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_ntriples("<http://ex/s> \"lit\" <http://ex/o> .\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_ntriples("<http://ex/s> <http://ex/p> .\n"),
                  SyntaxError);
  CHECK_THROWS_AS(
      parse_ntriples("<http://ex/s> <http://ex/p> <http://ex/o> . junk\n"),
      SyntaxError);
  CHECK_THROWS_AS(parse_ntriples("<http://ex/s> <http://ex/p> \"bad\\q\" .\n"),
                  SyntaxError);
  CHECK_THROWS_AS(
      parse_ntriples("<http://ex/s> <http://ex/p> \"x\"@9bad .\n"),
      SyntaxError);
}

TEST_CASE("serialization sorts lines and escapes control characters") {
  TripleSet ts;
  ts.triples.insert({Iri("urn:s:b"), Iri("urn:p:1"), Literal{"x\x01y", {}, {}}});
  ts.triples.insert({Iri("urn:s:a"), Iri("urn:p:1"), Iri("urn:o:1")});
  std::string out = serialize_ntriples(ts);
  std::size_t first = out.find("urn:s:a");
  std::size_t second = out.find("urn:s:b");
  REQUIRE(first != std::string::npos);
  REQUIRE(second != std::string::npos);
  CHECK(first < second);
  CHECK(out.find("\\u0001") != std::string::npos);
  CHECK(parse_ntriples(out) == ts);
}

TEST_CASE("round trip holds on random triple sets") {
  for (int i = 0; i < 200; ++i) {
    TripleSet ts = testutil::random_triples(30);
    std::string text = serialize_ntriples(ts);
    TripleSet back = parse_ntriples(text);
    CHECK(back == ts);
    // Serialization of the reparse is byte-identical.
    CHECK(serialize_ntriples(back) == text);
  }
}
