#include "onteval/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "closure.hpp"
#include "onteval/errors.hpp"
#include "onteval/text.hpp"

namespace onteval {

namespace {

std::string join_local_names(const std::vector<Iri>& iris) {
  std::string out;
  for (const Iri& iri : iris) {
    if (!out.empty()) out += ", ";
    out += iri.local_name();
  }
  return out;
}

detail::Closure subclass_closure(const OntologyGraph& g) {
  return detail::Closure(g.subclass_edges(), g.classes());
}

bool disjoint_star(const OntologyGraph& g, const detail::Closure& up,
                   const Iri& x, const Iri& y) {
  for (const auto& [b, c] : g.disjoint_pairs()) {
    if ((up.reaches(x, b) && up.reaches(y, c)) ||
        (up.reaches(x, c) && up.reaches(y, b)))
      return true;
  }
  return false;
}

}  // namespace

MetricResult circularity_errors(const OntologyGraph& g) {
  MetricResult r;
  r.name = "circularity_errors";
  r.level = Level::Hierarchy;
  r.method = Method::CriteriaBased;
  detail::Closure up = subclass_closure(g);
  for (const std::vector<Iri>& cycle : up.cycles()) {
    Finding f;
    f.kind = FindingKind::Circularity;
    f.subjects = cycle;
    f.detail = "subclass cycle: " + join_local_names(cycle);
    r.findings.push_back(std::move(f));
  }
  std::sort(r.findings.begin(), r.findings.end());
  r.value = static_cast<double>(r.findings.size());
  return r;
}

MetricResult partition_errors(const OntologyGraph& g) {
  MetricResult r;
  r.name = "partition_errors";
  r.level = Level::Hierarchy;
  r.method = Method::CriteriaBased;
  if (g.disjoint_pairs().empty()) {
    r.value = 0.0;
    return r;
  }
  detail::Closure up = subclass_closure(g);
  std::set<Finding> found;
  for (const auto& [b, c] : g.disjoint_pairs()) {
    for (const Iri& cls : g.classes()) {
      if (up.reaches(cls, b) && up.reaches(cls, c)) {
        Finding f;
        f.kind = FindingKind::PartitionError;
        f.subjects = {cls, b, c};
        f.detail = "class " + cls.local_name() + " falls under disjoint " +
                   b.local_name() + " and " + c.local_name();
        found.insert(std::move(f));
      }
    }
    for (const auto& [inst, types] : g.asserted_types()) {
      bool under_b = false, under_c = false;
      for (const Iri& t : types) {
        under_b = under_b || up.reaches(t, b);
        under_c = under_c || up.reaches(t, c);
      }
      if (under_b && under_c) {
        Finding f;
        f.kind = FindingKind::PartitionError;
        f.subjects = {inst, b, c};
        f.detail = "instance " + inst.local_name() +
                   " is typed under disjoint " + b.local_name() + " and " +
                   c.local_name();
        found.insert(std::move(f));
      }
    }
  }
  r.findings.assign(found.begin(), found.end());
  r.value = static_cast<double>(r.findings.size());
  return r;
}

MetricResult semantic_inconsistency_errors(const OntologyGraph& g) {
  MetricResult r;
  r.name = "semantic_inconsistency_errors";
  r.level = Level::SemanticRelations;
  r.method = Method::CriteriaBased;
  if (g.disjoint_pairs().empty()) {
    r.value = 0.0;
    return r;
  }
  detail::Closure up = subclass_closure(g);
  std::set<Finding> found;

  // Flags when some expected class is disjoint with every declared type of
  // the node; nodes without declared types pass.
  auto check_side = [&](const Triple& t, const Iri& node,
                        const std::set<Iri>& expected, const char* side) {
    auto types_it = g.asserted_types().find(node);
    if (types_it == g.asserted_types().end() || types_it->second.empty())
      return;
    for (const Iri& want : expected) {
      bool clashes_all = true;
      for (const Iri& have : types_it->second) {
        if (!disjoint_star(g, up, want, have)) {
          clashes_all = false;
          break;
        }
      }
      if (!clashes_all) continue;
      Finding f;
      f.kind = FindingKind::SemanticInconsistency;
      f.subjects = {node, t.predicate, want};
      f.detail = std::string(side) + " clash in " +
                 term_to_string(Term(t.subject)) + " " +
                 term_to_string(Term(t.predicate)) + " " +
                 term_to_string(t.object) + ": every declared type of " +
                 node.local_name() + " is disjoint with expected " +
                 want.local_name();
      found.insert(std::move(f));
      return;
    }
  };

  for (const auto& [property, domain_classes] : g.domains()) {
    auto it = g.by_predicate().find(property);
    if (it == g.by_predicate().end()) continue;
    for (const Triple& t : it->second)
      check_side(t, t.subject, domain_classes, "domain");
  }
  for (const auto& [property, range_classes] : g.ranges()) {
    auto it = g.by_predicate().find(property);
    if (it == g.by_predicate().end()) continue;
    for (const Triple& t : it->second)
      if (is_iri(t.object))
        check_side(t, as_iri(t.object), range_classes, "range");
  }
  r.findings.assign(found.begin(), found.end());
  r.value = static_cast<double>(r.findings.size());
  return r;
}

MetricResult redundancy_errors(const OntologyGraph& g) {
  MetricResult r;
  r.name = "redundancy_errors";
  r.level = Level::Hierarchy;
  r.method = Method::CriteriaBased;
  detail::Closure up = subclass_closure(g);
  if (up.has_cycle())
    throw CyclicGraphError(
        "redundancy analysis requires an acyclic subclass graph");

  for (const auto& [child, parent] : g.subclass_edges()) {
    auto parents_it = g.subclass_parents().find(child);
    if (parents_it == g.subclass_parents().end()) continue;
    for (const Iri& via : parents_it->second) {
      if (via == parent || !up.reaches(via, parent)) continue;
      Finding f;
      f.kind = FindingKind::Redundancy;
      f.subjects = {child, parent};
      f.detail = "subclass link " + child.local_name() + " -> " +
                 parent.local_name() + " already follows through " +
                 via.local_name();
      r.findings.push_back(std::move(f));
      break;
    }
  }
  for (const auto& [inst, types] : g.asserted_types()) {
    for (const Iri& direct : types) {
      for (const Iri& via : types) {
        if (via == direct || !up.reaches(via, direct)) continue;
        Finding f;
        f.kind = FindingKind::Redundancy;
        f.subjects = {inst, direct};
        f.detail = "type " + direct.local_name() + " on " + inst.local_name() +
                   " already follows from " + via.local_name();
        r.findings.push_back(std::move(f));
        break;
      }
    }
  }
  std::sort(r.findings.begin(), r.findings.end());
  r.value = static_cast<double>(r.findings.size());
  return r;
}

MetricResult identical_definitions(const OntologyGraph& g) {
  MetricResult r;
  r.name = "identical_definitions";
  r.level = Level::SemanticRelations;
  r.method = Method::CriteriaBased;

  using Signature = std::tuple<std::set<Iri>, std::set<Iri>, std::set<Iri>>;
  std::map<Iri, std::set<Iri>> domain_props;
  for (const auto& [prop, classes] : g.domains())
    for (const Iri& c : classes) domain_props[c].insert(prop);
  std::map<Iri, std::set<Iri>> partners;
  for (const auto& [a, b] : g.disjoint_pairs()) {
    partners[a].insert(b);
    partners[b].insert(a);
  }

  std::map<Signature, std::vector<Iri>> groups;
  for (const Iri& cls : g.classes()) {
    Signature sig;
    if (auto it = g.subclass_parents().find(cls);
        it != g.subclass_parents().end())
      std::get<0>(sig) = it->second;
    if (auto it = domain_props.find(cls); it != domain_props.end())
      std::get<1>(sig) = it->second;
    if (auto it = partners.find(cls); it != partners.end())
      std::get<2>(sig) = it->second;
    groups[sig].push_back(cls);
  }
  for (auto& [sig, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        Finding f;
        f.kind = FindingKind::IdenticalDefinition;
        f.subjects = {members[i], members[j]};
        f.detail = members[i].local_name() + " and " + members[j].local_name() +
                   " share one formal definition";
        r.findings.push_back(std::move(f));
      }
    }
  }
  std::sort(r.findings.begin(), r.findings.end());
  r.value = static_cast<double>(r.findings.size());
  return r;
}

MetricResult grammatical_redundancy_errors(const std::vector<TripleSet>& sources) {
  MetricResult r;
  r.name = "grammatical_redundancy_errors";
  r.level = Level::Lexical;
  r.method = Method::CriteriaBased;
  if (sources.empty()) {
    r.degenerate = true;
    r.note = "no sources given";
    return r;
  }

  std::map<Triple, std::vector<std::string>> where;
  TripleSet merged;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    std::string label = sources[i].source_name.empty()
                            ? "source " + std::to_string(i + 1)
                            : sources[i].source_name;
    for (const Triple& t : sources[i].triples) {
      where[t].push_back(label);
      merged.triples.insert(t);
    }
  }
  for (const auto& [t, labels] : where) {
    if (labels.size() < 2) continue;
    Finding f;
    f.kind = FindingKind::GrammaticalRedundancy;
    f.subjects = {t.subject, t.predicate};
    if (is_iri(t.object)) f.subjects.push_back(as_iri(t.object));
    std::string sources_text;
    for (const std::string& l : labels) {
      if (!sources_text.empty()) sources_text += ", ";
      sources_text += l;
    }
    f.detail = "triple " + term_to_string(Term(t.subject)) + " " +
               term_to_string(Term(t.predicate)) + " " +
               term_to_string(t.object) + " restated in: " + sources_text;
    r.findings.push_back(std::move(f));
  }

  OntologyGraph merged_graph = build_ontology(merged);
  for (const auto& [entity, labels] : merged_graph.labels()) {
    std::map<std::pair<std::string, std::string>, std::set<std::string>> forms;
    for (const Literal& l : labels) {
      forms[{l.language_tag.value_or(""), normalize_label(l.lexical)}].insert(
          l.lexical);
    }
    for (const auto& [key, raw] : forms) {
      if (raw.size() < 2) continue;
      Finding f;
      f.kind = FindingKind::GrammaticalRedundancy;
      f.subjects = {entity};
      std::string variants;
      for (const std::string& s : raw) {
        if (!variants.empty()) variants += "' / '";
        variants += s;
      }
      f.detail = "labels of " + entity.local_name() + " collapse to \"" +
                 key.second + "\": '" + variants + "'";
      r.findings.push_back(std::move(f));
    }
  }
  std::sort(r.findings.begin(), r.findings.end());
  r.value = static_cast<double>(r.findings.size());
  return r;
}

MetricResult completeness_coverage(
    const OntologyGraph& g, const std::vector<std::string>& expected_terms) {
  std::set<std::string> expected;
  for (const std::string& t : expected_terms) {
    std::string n = normalize_label(t);
    if (!n.empty()) expected.insert(n);
  }
  if (expected.empty())
    throw EmptyReferenceError("no usable expected terms after normalization");

  std::set<std::string> forms;
  auto add_entity = [&](const Iri& e) {
    for (const std::string& form : g.lexical_forms(e)) {
      std::string n = normalize_label(form);
      if (!n.empty()) forms.insert(n);
    }
  };
  for (const Iri& e : g.classes()) add_entity(e);
  for (const Iri& e : g.properties()) add_entity(e);
  for (const Iri& e : g.instances()) add_entity(e);

  MetricResult r;
  r.name = "completeness_coverage";
  r.level = Level::Lexical;
  r.method = Method::CriteriaBased;
  std::size_t matched = 0;
  for (const std::string& term : expected) {
    if (forms.count(term)) {
      ++matched;
      continue;
    }
    Finding f;
    f.kind = FindingKind::MissingTerm;
    f.detail = term;
    r.findings.push_back(std::move(f));
  }
  r.value = static_cast<double>(matched) / static_cast<double>(expected.size());
  return r;
}

std::string to_string(ExpertCriterion c) {
  switch (c) {
    case ExpertCriterion::Clarity:
      return "clarity";
    case ExpertCriterion::Coherence:
      return "coherence";
    case ExpertCriterion::Conciseness:
      return "conciseness";
    case ExpertCriterion::Completeness:
      return "completeness";
    case ExpertCriterion::Extendibility:
      return "extendibility";
    case ExpertCriterion::MinimalEncodingBias:
      return "minimal_encoding_bias";
    case ExpertCriterion::MinimalOntologicalCommitment:
      return "minimal_ontological_commitment";
    case ExpertCriterion::Sensitiveness:
      return "sensitiveness";
  }
  throw std::logic_error("unknown criterion");
}

std::optional<ExpertCriterion> criterion_from_string(const std::string& s) {
  static const ExpertCriterion kAll[] = {
      ExpertCriterion::Clarity,
      ExpertCriterion::Coherence,
      ExpertCriterion::Conciseness,
      ExpertCriterion::Completeness,
      ExpertCriterion::Extendibility,
      ExpertCriterion::MinimalEncodingBias,
      ExpertCriterion::MinimalOntologicalCommitment,
      ExpertCriterion::Sensitiveness,
  };
  for (ExpertCriterion c : kAll)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

Level level_for_criterion(ExpertCriterion c) {
  switch (c) {
    case ExpertCriterion::Extendibility:
    case ExpertCriterion::MinimalOntologicalCommitment:
      return Level::Context;
    default:
      return Level::SemanticRelations;
  }
}

std::vector<MetricResult> ingest_expert_scores(
    const std::vector<ExpertScore>& scores) {
  std::map<std::string, std::vector<const ExpertScore*>> by_criterion;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const ExpertScore& s = scores[i];
    std::string where = "score record " + std::to_string(i + 1);
    if (!criterion_from_string(s.criterion))
      throw ValidationError(where + ": unknown criterion '" + s.criterion +
                            "'");
    if (!(s.score >= 1.0 && s.score <= 5.0))
      throw ValidationError(where + ": score " + std::to_string(s.score) +
                            " outside [1,5]");
    if (s.score != static_cast<double>(static_cast<long long>(s.score)))
      throw ValidationError(where + ": score must be a whole number");
    if (s.assessor.empty())
      throw ValidationError(where + ": blank assessor");
    by_criterion[s.criterion].push_back(&s);
  }

  std::vector<MetricResult> out;
  for (const auto& [name, records] : by_criterion) {
    ExpertCriterion c = *criterion_from_string(name);
    MetricResult r;
    r.name = "expert_" + name;
    r.level = level_for_criterion(c);
    r.method = Method::CriteriaBased;
    double sum = 0.0;
    for (const ExpertScore* s : records) {
      sum += s->score;
      Finding f;
      f.kind = FindingKind::ExpertComment;
      f.detail = s->comment.empty() ? s->assessor
                                    : s->assessor + ": " + s->comment;
      r.findings.push_back(std::move(f));
    }
    r.value = sum / static_cast<double>(records.size());
    std::sort(r.findings.begin(), r.findings.end());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ExpertScore> load_expert_scores_json(const std::string& json_text) {
  using nlohmann::json;
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded())
    throw ValidationError("expert scores: not valid JSON");
  if (!root.is_array())
    throw ValidationError("expert scores: top level must be an array");
  std::vector<ExpertScore> out;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json& item = root[i];
    std::string where = "expert scores[" + std::to_string(i) + "]";
    if (!item.is_object()) throw ValidationError(where + ": must be an object");
    ExpertScore s;
    if (!item.contains("criterion") || !item["criterion"].is_string())
      throw ValidationError(where + ": missing criterion");
    s.criterion = item["criterion"].get<std::string>();
    if (!item.contains("score") || !item["score"].is_number())
      throw ValidationError(where + ": missing numeric score");
    s.score = item["score"].get<double>();
    if (!item.contains("assessor") || !item["assessor"].is_string())
      throw ValidationError(where + ": missing assessor");
    s.assessor = item["assessor"].get<std::string>();
    if (item.contains("comment")) {
      if (!item["comment"].is_string())
        throw ValidationError(where + ": comment must be a string");
      s.comment = item["comment"].get<std::string>();
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace onteval
