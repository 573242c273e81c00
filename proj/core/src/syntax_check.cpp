#include "onteval/syntax_check.hpp"

#include <algorithm>
#include <set>

#include "onteval/errors.hpp"
#include "onteval/ntriples.hpp"
#include "onteval/turtle.hpp"

namespace onteval {

RdfFormat detect_format(const std::string& path) {
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) ==
               0;
  };
  if (ends_with(".ttl") || ends_with(".turtle")) return RdfFormat::Turtle;
  return RdfFormat::NTriples;
}

std::string to_string(IssueSeverity s) {
  return s == IssueSeverity::Error ? "error" : "warning";
}

SyntacticReport check_graph(const OntologyGraph& g) {
  SyntacticReport report;
  report.parse_ok = true;

  auto warn = [&](const std::string& code, const Iri& subject,
                  const std::string& message) {
    report.issues.push_back(
        {IssueSeverity::Warning, code, subject.value(), message});
  };

  for (const Iri& c : g.classes()) {
    if (!g.declared_classes().count(c))
      warn("UNDECLARED_CLASS", c,
           "class " + c.local_name() + " is used but never declared");
    if (!g.labels().count(c))
      warn("MISSING_LABEL", c, "class " + c.local_name() + " has no label");
  }

  std::set<Iri> predicates;
  for (const auto& [p, triples] : g.by_predicate()) predicates.insert(p);
  for (const Iri& p : predicates) {
    if (vocab::is_reserved(p)) continue;
    if (!g.properties().count(p))
      warn("UNDECLARED_PROPERTY", p,
           "property " + p.local_name() +
               " is used but never typed or given a domain or range");
  }

  std::set<Iri> mentioned;
  std::set<Iri> non_super_mentions;  // appears anywhere but as a superclass
  for (const Triple& t : g.triples().triples) {
    mentioned.insert(t.subject);
    mentioned.insert(t.predicate);
    non_super_mentions.insert(t.subject);
    non_super_mentions.insert(t.predicate);
    if (is_iri(t.object)) {
      const Iri& o = as_iri(t.object);
      mentioned.insert(o);
      if (t.predicate != vocab::kRdfsSubClassOf) non_super_mentions.insert(o);
    } else if (as_literal(t.object).datatype) {
      mentioned.insert(*as_literal(t.object).datatype);
      non_super_mentions.insert(*as_literal(t.object).datatype);
    }
  }
  for (const Iri& iri : mentioned)
    if (!iri.is_absolute())
      warn("RELATIVE_IRI", iri, "relative IRI <" + iri.value() + ">");

  for (const auto& [child, parent] : g.subclass_edges()) {
    (void)child;
    if (!non_super_mentions.count(parent))
      warn("DANGLING_REFERENCE", parent,
           "IRI " + parent.local_name() +
               " is referenced only as a superclass");
  }

  std::sort(report.issues.begin(), report.issues.end());
  report.issues.erase(
      std::unique(report.issues.begin(), report.issues.end()),
      report.issues.end());
  for (const SyntacticIssue& i : report.issues) {
    if (i.severity == IssueSeverity::Error)
      ++report.error_count;
    else
      ++report.warning_count;
  }
  return report;
}

SyntacticReport check_syntax(const std::string& text, RdfFormat format,
                             const std::string& source_name) {
  TripleSet triples;
  try {
    triples = format == RdfFormat::Turtle
                  ? parse_turtle_subset(text, source_name)
                  : parse_ntriples(text, source_name);
  } catch (const SyntaxError& e) {
    SyntacticReport report;
    report.parse_ok = false;
    report.issues.push_back(
        {IssueSeverity::Error, "SYNTAX_ERROR", "", e.what()});
    report.error_count = 1;
    return report;
  } catch (const ModelError& e) {
    SyntacticReport report;
    report.parse_ok = false;
    report.issues.push_back(
        {IssueSeverity::Error, "SYNTAX_ERROR", "", e.what()});
    report.error_count = 1;
    return report;
  }
  return check_graph(build_ontology(triples));
}

}  // namespace onteval
