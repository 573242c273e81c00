// ontology.hpp : immutable indexed view over a triple set
#ifndef ONTEVAL_ONTOLOGY_HPP
#define ONTEVAL_ONTOLOGY_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "onteval/rdf.hpp"

namespace onteval {

using IriPair = std::pair<Iri, Iri>;

// A modelling defect noticed while indexing. Reported, not fatal, unless
// build_ontology runs in strict mode.
struct ModelIssue {
  Iri subject;
  std::string message;

  auto operator<=>(const ModelIssue&) const = default;
};

// Indexed, immutable view of a triple set. Everything here is derived from
// the source triples; the graph can be shared freely across threads.
class OntologyGraph {
 public:
  const TripleSet& triples() const { return triples_; }
  const std::set<Iri>& classes() const { return classes_; }
  const std::set<Iri>& declared_classes() const { return declared_classes_; }
  const std::set<Iri>& properties() const { return properties_; }
  const std::set<Iri>& instances() const { return instances_; }
  const std::set<IriPair>& subclass_edges() const { return subclass_edges_; }
  const std::set<IriPair>& disjoint_pairs() const { return disjoint_pairs_; }
  const std::set<IriPair>& equivalent_pairs() const {
    return equivalent_pairs_;
  }
  const std::set<IriPair>& same_as_pairs() const { return same_as_pairs_; }
  const std::map<Iri, std::set<Literal>>& labels() const { return labels_; }
  const std::map<Iri, std::set<Iri>>& domains() const { return domains_; }
  const std::map<Iri, std::set<Iri>>& ranges() const { return ranges_; }
  const std::set<IriPair>& type_assertions() const { return type_assertions_; }
  const std::set<std::string>& namespaces() const { return namespaces_; }
  const std::vector<ModelIssue>& model_issues() const { return model_issues_; }

  // child -> direct parents / parent -> direct children.
  const std::map<Iri, std::set<Iri>>& subclass_parents() const {
    return subclass_parents_;
  }
  const std::map<Iri, std::set<Iri>>& subclass_children() const {
    return subclass_children_;
  }
  // instance -> directly asserted classes.
  const std::map<Iri, std::set<Iri>>& asserted_types() const {
    return asserted_types_;
  }
  const std::map<Iri, std::vector<Triple>>& by_predicate() const {
    return by_predicate_;
  }

  // All labels of an entity, or its IRI local name when it has none.
  std::vector<std::string> lexical_forms(const Iri& entity) const;

  bool operator==(const OntologyGraph& other) const {
    return triples_ == other.triples_ && classes_ == other.classes_ &&
           properties_ == other.properties_ && instances_ == other.instances_ &&
           subclass_edges_ == other.subclass_edges_ &&
           disjoint_pairs_ == other.disjoint_pairs_ &&
           equivalent_pairs_ == other.equivalent_pairs_ &&
           same_as_pairs_ == other.same_as_pairs_ && labels_ == other.labels_ &&
           domains_ == other.domains_ && ranges_ == other.ranges_ &&
           type_assertions_ == other.type_assertions_ &&
           namespaces_ == other.namespaces_;
  }

 private:
  friend OntologyGraph build_ontology(const TripleSet&, bool);

  TripleSet triples_;
  std::set<Iri> classes_;
  std::set<Iri> declared_classes_;
  std::set<Iri> properties_;
  std::set<Iri> instances_;
  std::set<IriPair> subclass_edges_;
  std::set<IriPair> disjoint_pairs_;
  std::set<IriPair> equivalent_pairs_;
  std::set<IriPair> same_as_pairs_;
  std::map<Iri, std::set<Literal>> labels_;
  std::map<Iri, std::set<Iri>> domains_;
  std::map<Iri, std::set<Iri>> ranges_;
  std::set<IriPair> type_assertions_;
  std::set<std::string> namespaces_;
  std::vector<ModelIssue> model_issues_;

  std::map<Iri, std::set<Iri>> subclass_parents_;
  std::map<Iri, std::set<Iri>> subclass_children_;
  std::map<Iri, std::set<Iri>> asserted_types_;
  std::map<Iri, std::vector<Triple>> by_predicate_;
};

// Indexes a triple set. Entities in class position count as classes even
// without a declaration. In strict mode the datatype-vs-class clash raises
// ModelError; otherwise all defects land in model_issues().
OntologyGraph build_ontology(const TripleSet& ts, bool strict = false);

}  // namespace onteval

#endif  // ONTEVAL_ONTOLOGY_HPP
