#include "onteval/ontology.hpp"

#include <algorithm>

#include "onteval/errors.hpp"

namespace onteval {

namespace {

IriPair canonical(const Iri& a, const Iri& b) {
  return a < b ? IriPair{a, b} : IriPair{b, a};
}

}  // namespace

std::vector<std::string> OntologyGraph::lexical_forms(const Iri& entity) const {
  std::vector<std::string> forms;
  auto it = labels_.find(entity);
  if (it != labels_.end()) {
    for (const Literal& l : it->second) forms.push_back(l.lexical);
  }
  if (forms.empty()) forms.push_back(entity.local_name());
  return forms;
}

OntologyGraph build_ontology(const TripleSet& ts, bool strict) {
  using namespace vocab;
  OntologyGraph g;
  g.triples_ = ts;

  std::set<Iri> datatypes_seen;

  auto issue = [&](const Iri& subject, const std::string& message) {
    g.model_issues_.push_back(ModelIssue{subject, message});
  };

  for (const Triple& t : ts.triples) {
    g.by_predicate_[t.predicate].push_back(t);
    g.namespaces_.insert(t.subject.namespace_part());
    g.namespaces_.insert(t.predicate.namespace_part());
    if (is_iri(t.object)) {
      g.namespaces_.insert(as_iri(t.object).namespace_part());
    } else if (as_literal(t.object).datatype) {
      datatypes_seen.insert(*as_literal(t.object).datatype);
      g.namespaces_.insert(as_literal(t.object).datatype->namespace_part());
    }

    const Iri& p = t.predicate;
    if (p == kRdfType) {
      if (!is_iri(t.object)) {
        issue(t.subject, "literal object in rdf:type assertion");
        continue;
      }
      const Iri& o = as_iri(t.object);
      if (o == kOwlClass || o == kRdfsClass) {
        g.declared_classes_.insert(t.subject);
        g.classes_.insert(t.subject);
      } else if (o == kOwlObjectProperty || o == kRdfProperty) {
        g.properties_.insert(t.subject);
      } else if (is_reserved(o)) {
        issue(t.subject, "rdf:type with reserved vocabulary object <" +
                             o.value() + ">");
      } else {
        g.classes_.insert(o);
        g.instances_.insert(t.subject);
        g.type_assertions_.insert({t.subject, o});
        g.asserted_types_[t.subject].insert(o);
      }
    } else if (p == kRdfsSubClassOf) {
      if (!is_iri(t.object)) {
        issue(t.subject, "literal object in rdfs:subClassOf");
        continue;
      }
      const Iri& o = as_iri(t.object);
      g.classes_.insert(t.subject);
      g.classes_.insert(o);
      g.subclass_edges_.insert({t.subject, o});
      g.subclass_parents_[t.subject].insert(o);
      g.subclass_children_[o].insert(t.subject);
    } else if (p == kRdfsLabel) {
      if (is_iri(t.object)) {
        issue(t.subject, "IRI object in rdfs:label");
        continue;
      }
      g.labels_[t.subject].insert(as_literal(t.object));
    } else if (p == kRdfsDomain || p == kRdfsRange) {
      if (!is_iri(t.object)) {
        issue(t.subject, "literal object in rdfs:domain/rdfs:range");
        continue;
      }
      g.properties_.insert(t.subject);
      auto& index = (p == kRdfsDomain) ? g.domains_ : g.ranges_;
      index[t.subject].insert(as_iri(t.object));
    } else if (p == kOwlDisjointWith) {
      if (!is_iri(t.object)) {
        issue(t.subject, "literal object in owl:disjointWith");
        continue;
      }
      const Iri& o = as_iri(t.object);
      if (o == t.subject) {
        issue(t.subject, "class declared disjoint with itself");
        continue;
      }
      g.disjoint_pairs_.insert(canonical(t.subject, o));
    } else if (p == kOwlEquivalentClass) {
      if (is_iri(t.object) && as_iri(t.object) != t.subject)
        g.equivalent_pairs_.insert(canonical(t.subject, as_iri(t.object)));
    } else if (p == kOwlSameAs) {
      if (is_iri(t.object) && as_iri(t.object) != t.subject)
        g.same_as_pairs_.insert(canonical(t.subject, as_iri(t.object)));
    }
  }

  for (const Iri& dt : datatypes_seen) {
    if (g.classes_.count(dt)) {
      if (strict)
        throw ModelError("IRI <" + dt.value() +
                         "> used as both a literal datatype and a class");
      issue(dt, "used as both a literal datatype and a class");
    }
  }

  return g;
}

}  // namespace onteval
