#include "onteval/rdf.hpp"

#include "onteval/errors.hpp"

namespace onteval {

namespace {

bool valid_iri_text(const std::string& v) {
  if (v.empty()) return false;
  for (unsigned char c : v) {
    if (c <= 0x20) return false;
    if (c == '<' || c == '>' || c == '"' || c == '\\') return false;
  }
  return true;
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!valid_iri_text(value_))
    throw ModelError("invalid IRI text: '" + value_ + "'");
}

std::string Iri::local_name() const {
  auto pos = value_.find_last_of("#/");
  if (pos == std::string::npos || pos + 1 >= value_.size()) {
    if (pos != std::string::npos) return "";
    return value_;
  }
  return value_.substr(pos + 1);
}

std::string Iri::namespace_part() const {
  auto pos = value_.find_last_of("#/");
  if (pos != std::string::npos) return value_.substr(0, pos + 1);
  pos = value_.find_last_of(':');
  if (pos != std::string::npos) return value_.substr(0, pos + 1);
  return value_;
}

bool Iri::is_absolute() const {
  return value_.find(':') != std::string::npos;
}

bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }

const Iri& as_iri(const Term& t) { return std::get<Iri>(t); }

const Literal& as_literal(const Term& t) { return std::get<Literal>(t); }

std::string term_to_string(const Term& t) {
  if (is_iri(t)) return "<" + as_iri(t).value() + ">";
  const Literal& lit = as_literal(t);
  std::string out = "\"" + lit.lexical + "\"";
  if (lit.language_tag) out += "@" + *lit.language_tag;
  if (lit.datatype) out += "^^<" + lit.datatype->value() + ">";
  return out;
}

namespace vocab {

namespace {
const char* kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const char* kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
const char* kOwlNs = "http://www.w3.org/2002/07/owl#";
}  // namespace

const Iri kRdfType{std::string(kRdfNs) + "type"};
const Iri kRdfsSubClassOf{std::string(kRdfsNs) + "subClassOf"};
const Iri kRdfsLabel{std::string(kRdfsNs) + "label"};
const Iri kRdfsDomain{std::string(kRdfsNs) + "domain"};
const Iri kRdfsRange{std::string(kRdfsNs) + "range"};
const Iri kOwlClass{std::string(kOwlNs) + "Class"};
const Iri kRdfsClass{std::string(kRdfsNs) + "Class"};
const Iri kOwlObjectProperty{std::string(kOwlNs) + "ObjectProperty"};
const Iri kRdfProperty{std::string(kRdfNs) + "Property"};
const Iri kOwlDisjointWith{std::string(kOwlNs) + "disjointWith"};
const Iri kOwlEquivalentClass{std::string(kOwlNs) + "equivalentClass"};
const Iri kOwlSameAs{std::string(kOwlNs) + "sameAs"};

bool is_declaration_object(const Iri& iri) {
  return iri == kOwlClass || iri == kRdfsClass || iri == kOwlObjectProperty ||
         iri == kRdfProperty;
}

bool is_reserved(const Iri& iri) {
  return is_declaration_object(iri) || iri == kRdfType ||
         iri == kRdfsSubClassOf || iri == kRdfsLabel || iri == kRdfsDomain ||
         iri == kRdfsRange || iri == kOwlDisjointWith ||
         iri == kOwlEquivalentClass || iri == kOwlSameAs;
}

}  // namespace vocab

}  // namespace onteval
