#include "onteval/inference.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "onteval/errors.hpp"

namespace onteval {

namespace {

std::vector<Rule> builtin_rules() {
  Variable a{"a"}, b{"b"}, c{"c"}, i{"i"}, x{"x"}, y{"y"}, s{"s"}, p{"p"},
      o{"o"};
  const Iri& sub = vocab::kRdfsSubClassOf;
  const Iri& type = vocab::kRdfType;
  const Iri& same = vocab::kOwlSameAs;
  return {
      {"builtin:subclass-transitivity",
       {{a, sub, b}, {b, sub, c}},
       {a, sub, c}},
      {"builtin:type-inheritance", {{i, type, a}, {a, sub, b}}, {i, type, b}},
      {"builtin:sameas-symmetry", {{x, same, y}}, {y, same, x}},
      {"builtin:sameas-transitivity",
       {{x, same, y}, {y, same, c}},
       {x, same, c}},
      {"builtin:sameas-subject", {{x, same, y}, {x, p, o}}, {y, p, o}},
      {"builtin:sameas-predicate", {{x, same, y}, {s, x, o}}, {s, y, o}},
      {"builtin:sameas-object", {{x, same, y}, {s, p, x}}, {s, p, y}},
  };
}

void validate_rule(const Rule& r) {
  std::string label = r.name.empty() ? "rule" : "rule '" + r.name + "'";
  if (r.body.empty()) throw ValidationError(label + " has an empty body");
  std::set<std::string> body_vars;
  for (const TriplePattern& p : r.body)
    for (const PatternTerm* t : {&p.subject, &p.predicate, &p.object})
      if (const Variable* v = std::get_if<Variable>(t))
        body_vars.insert(v->name);
  for (const PatternTerm* t :
       {&r.head.subject, &r.head.predicate, &r.head.object})
    if (const Variable* v = std::get_if<Variable>(t))
      if (!body_vars.count(v->name))
        throw ValidationError(label + ": head variable ?" + v->name +
                              " is not bound in the body");
  if (std::holds_alternative<Literal>(r.head.subject))
    throw ValidationError(label + ": literal in head subject position");
  if (std::holds_alternative<Literal>(r.head.predicate))
    throw ValidationError(label + ": literal in head predicate position");
}

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

bool match_triple(const TriplePattern& p, const Triple& t, Binding& b) {
  return match_term(p.subject, Term(t.subject), b) &&
         match_term(p.predicate, Term(t.predicate), b) &&
         match_term(p.object, t.object, b);
}

std::optional<Term> resolve(const PatternTerm& t, const Binding& b) {
  if (const Variable* v = std::get_if<Variable>(&t)) {
    auto it = b.find(v->name);
    if (it == b.end()) return std::nullopt;
    return it->second;
  }
  if (const Iri* iri = std::get_if<Iri>(&t)) return Term(*iri);
  return Term(std::get<Literal>(t));
}

class Store {
 public:
  bool contains(const Triple& t) const { return all_.count(t) > 0; }
  bool insert(const Triple& t) {
    if (!all_.insert(t).second) return false;
    by_predicate_[t.predicate].push_back(t);
    return true;
  }

  // Triples matching the pattern under the binding, using the predicate
  // index when the predicate is fixed.
  void each_match(const TriplePattern& p, const Binding& b,
                  const std::function<void(const Triple&)>& fn) const {
    std::optional<Term> pred = resolve(p.predicate, b);
    if (pred) {
      if (!is_iri(*pred)) return;
      auto it = by_predicate_.find(as_iri(*pred));
      if (it == by_predicate_.end()) return;
      for (const Triple& t : it->second) fn(t);
      return;
    }
    for (const Triple& t : all_) fn(t);
  }

  const std::set<Triple>& all() const { return all_; }

 private:
  std::set<Triple> all_;
  std::map<Iri, std::vector<Triple>> by_predicate_;
};

// Extends `bindings` across the body atoms excluding `skip`, left to right.
void join_rest(const Store& store, const std::vector<TriplePattern>& body,
               std::size_t skip, std::vector<Binding>& bindings) {
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i == skip) continue;
    std::vector<Binding> next;
    for (const Binding& b : bindings) {
      store.each_match(body[i], b, [&](const Triple& t) {
        Binding attempt = b;
        if (match_triple(body[i], t, attempt))
          next.push_back(std::move(attempt));
      });
    }
    bindings = std::move(next);
    if (bindings.empty()) return;
  }
}

std::optional<Triple> instantiate_head(const TriplePattern& head,
                                       const Binding& b) {
  std::optional<Term> s = resolve(head.subject, b);
  std::optional<Term> p = resolve(head.predicate, b);
  std::optional<Term> o = resolve(head.object, b);
  if (!s || !p || !o) return std::nullopt;
  if (!is_iri(*s) || !is_iri(*p)) return std::nullopt;
  return Triple{as_iri(*s), as_iri(*p), *o};
}

}  // namespace

OntologyGraph materialize_inferences(const OntologyGraph& g,
                                     const std::vector<Rule>& rules,
                                     std::size_t triple_cap) {
  std::vector<Rule> program = builtin_rules();
  for (const Rule& r : rules) {
    validate_rule(r);
    program.push_back(r);
  }

  Store store;
  std::vector<Triple> delta;
  for (const Triple& t : g.triples().triples) {
    store.insert(t);
    delta.push_back(t);
  }

  std::size_t derived = 0;
  while (!delta.empty()) {
    std::set<Triple> fresh;
    for (const Rule& r : program) {
      for (std::size_t j = 0; j < r.body.size(); ++j) {
        std::vector<Binding> seeds;
        for (const Triple& t : delta) {
          Binding b;
          if (match_triple(r.body[j], t, b)) seeds.push_back(std::move(b));
        }
        if (seeds.empty()) continue;
        join_rest(store, r.body, j, seeds);
        for (const Binding& b : seeds) {
          std::optional<Triple> t = instantiate_head(r.head, b);
          if (!t || store.contains(*t)) continue;
          fresh.insert(*t);
        }
      }
    }
    delta.clear();
    for (const Triple& t : fresh) {
      if (store.insert(t)) {
        delta.push_back(t);
        if (++derived > triple_cap)
          throw FixpointOverflowError(
              "inference exceeded the cap of " + std::to_string(triple_cap) +
              " derived triples");
      }
    }
  }

  TripleSet expanded;
  expanded.source_name = g.triples().source_name;
  expanded.triples = store.all();
  return build_ontology(expanded);
}

}  // namespace onteval
