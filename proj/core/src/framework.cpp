#include "onteval/framework.hpp"

#include <algorithm>
#include <stdexcept>

#include "onteval/errors.hpp"

namespace onteval {

std::string to_string(Purpose p) {
  switch (p) {
    case Purpose::ShareVocabulariesIntegrateData:
      return "share_vocabularies_integrate_data";
    case Purpose::KnowledgeSearchExploration:
      return "knowledge_search_exploration";
    case Purpose::SystemInteroperability:
      return "system_interoperability";
    case Purpose::DecisionSupport:
      return "decision_support";
  }
  throw std::logic_error("unknown purpose");
}

std::string to_string(Level l) {
  switch (l) {
    case Level::Lexical:
      return "lexical";
    case Level::Hierarchy:
      return "hierarchy";
    case Level::SemanticRelations:
      return "semantic_relations";
    case Level::Context:
      return "context";
    case Level::Syntactic:
      return "syntactic";
    case Level::StructureArchitectureDesign:
      return "structure_architecture_design";
  }
  throw std::logic_error("unknown level");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::GoldStandard:
      return "gold_standard";
    case Method::ApplicationBased:
      return "application_based";
    case Method::CriteriaBased:
      return "criteria_based";
    case Method::DataDriven:
      return "data_driven";
  }
  throw std::logic_error("unknown method");
}

std::string to_string(Grade g) {
  switch (g) {
    case Grade::Unsuitable:
      return "unsuitable";
    case Grade::Suitable:
      return "suitable";
    case Grade::Preferred:
      return "preferred";
  }
  throw std::logic_error("unknown grade");
}

std::string to_string(Importance i) {
  return i == Importance::Primary ? "primary" : "universal";
}

std::string to_string(EntryStatus s) {
  return s == EntryStatus::Selected ? "selected" : "excluded";
}

std::optional<Purpose> purpose_from_string(const std::string& s) {
  for (Purpose p : kAllPurposes)
    if (to_string(p) == s) return p;
  return std::nullopt;
}

std::optional<Level> level_from_string(const std::string& s) {
  for (Level l : kAllLevels)
    if (to_string(l) == s) return l;
  return std::nullopt;
}

std::optional<Method> method_from_string(const std::string& s) {
  for (Method m : kAllMethods)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

std::optional<Grade> grade_from_string(const std::string& s) {
  if (s == "unsuitable") return Grade::Unsuitable;
  if (s == "suitable") return Grade::Suitable;
  if (s == "preferred") return Grade::Preferred;
  return std::nullopt;
}

SuitabilityMatrix::SuitabilityMatrix() {
  for (Method m : kAllMethods)
    for (Level l : kAllLevels) grades_[{m, l}] = Grade::Unsuitable;
}

Grade SuitabilityMatrix::grade(Method m, Level l) const {
  return grades_.at({m, l});
}

void SuitabilityMatrix::set_grade(Method m, Level l, Grade g) {
  Grade current = grades_.at({m, l});
  bool was_unsuitable = current == Grade::Unsuitable;
  bool becomes_unsuitable = g == Grade::Unsuitable;
  if (was_unsuitable != becomes_unsuitable)
    throw PlanError("suitability overlay may not change whether " +
                    to_string(m) + " applies at the " + to_string(l) +
                    " level");
  grades_[{m, l}] = g;
}

std::size_t SuitabilityMatrix::non_unsuitable_count() const {
  std::size_t n = 0;
  for (const auto& [key, g] : grades_)
    if (g != Grade::Unsuitable) ++n;
  return n;
}

SuitabilityMatrix default_matrix() {
  SuitabilityMatrix m;
  struct Cell {
    Method method;
    Level level;
    Grade grade;
  };
  static const Cell kDefaults[] = {
      {Method::GoldStandard, Level::Lexical, Grade::Suitable},
      {Method::ApplicationBased, Level::Lexical, Grade::Suitable},
      {Method::CriteriaBased, Level::Lexical, Grade::Suitable},
      {Method::DataDriven, Level::Lexical, Grade::Preferred},
      {Method::GoldStandard, Level::Hierarchy, Grade::Preferred},
      {Method::ApplicationBased, Level::Hierarchy, Grade::Suitable},
      {Method::CriteriaBased, Level::Hierarchy, Grade::Preferred},
      {Method::DataDriven, Level::Hierarchy, Grade::Suitable},
      {Method::GoldStandard, Level::SemanticRelations, Grade::Suitable},
      {Method::ApplicationBased, Level::SemanticRelations, Grade::Suitable},
      {Method::CriteriaBased, Level::SemanticRelations, Grade::Suitable},
      {Method::DataDriven, Level::SemanticRelations, Grade::Suitable},
      {Method::ApplicationBased, Level::Context, Grade::Preferred},
      {Method::CriteriaBased, Level::Context, Grade::Suitable},
      {Method::GoldStandard, Level::Syntactic, Grade::Suitable},
      {Method::CriteriaBased, Level::Syntactic, Grade::Suitable},
      {Method::CriteriaBased, Level::StructureArchitectureDesign,
       Grade::Suitable},
  };
  for (const Cell& c : kDefaults) m.seed(c.method, c.level, c.grade);
  return m;
}

std::set<Level> EvaluationPlan::selected_levels() const {
  std::set<Level> out;
  for (const PlanEntry& e : entries)
    if (e.status == EntryStatus::Selected) out.insert(e.level);
  return out;
}

std::vector<LevelImportance> levels_for_purpose(Purpose p) {
  std::set<Level> primary;
  switch (p) {
    case Purpose::ShareVocabulariesIntegrateData:
      primary = {Level::SemanticRelations, Level::Context};
      break;
    case Purpose::KnowledgeSearchExploration:
      primary = {Level::Hierarchy};
      break;
    case Purpose::SystemInteroperability:
      primary = {Level::SemanticRelations};
      break;
    case Purpose::DecisionSupport:
      primary = {Level::Context};
      break;
  }
  std::vector<LevelImportance> out;
  for (Level l : kAllLevels) {
    if (primary.count(l)) {
      out.push_back({l, Importance::Primary});
    } else if (l == Level::Lexical || l == Level::Syntactic) {
      out.push_back({l, Importance::Universal});
    }
  }
  return out;
}

namespace {

// Rank used for ties within one grade. The semantic-relations level keeps
// criteria-based first; elsewhere methods keep enumeration order.
int method_rank(Method m, Level l) {
  if (l == Level::SemanticRelations) {
    switch (m) {
      case Method::CriteriaBased:
        return 0;
      case Method::GoldStandard:
        return 1;
      case Method::ApplicationBased:
        return 2;
      case Method::DataDriven:
        return 3;
    }
  }
  return static_cast<int>(m);
}

std::vector<Method> methods_for(Level level, const ResourceFlags& flags,
                                const SuitabilityMatrix& matrix) {
  std::vector<Method> out;
  for (Method m : kAllMethods) {
    if (matrix.grade(m, level) == Grade::Unsuitable) continue;
    if (m == Method::GoldStandard && !flags.gold_standard_available) continue;
    if (m == Method::ApplicationBased && !flags.application_available) continue;
    out.push_back(m);
  }
  std::stable_sort(out.begin(), out.end(), [&](Method a, Method b) {
    Grade ga = matrix.grade(a, level);
    Grade gb = matrix.grade(b, level);
    if (ga != gb) return static_cast<int>(ga) > static_cast<int>(gb);
    return method_rank(a, level) < method_rank(b, level);
  });
  return out;
}

constexpr const char* kDataSourceRationale =
    "ontology was built from its own data sources; data-driven lexical "
    "evaluation against the same material would be circular";

}  // namespace

EvaluationPlan build_plan(const std::set<Purpose>& purposes,
                          const ResourceFlags& flags,
                          const std::vector<Exclusion>& exclusions,
                          const SuitabilityMatrix& matrix,
                          bool include_structure_level) {
  if (purposes.empty()) throw PlanError("plan requires at least one purpose");

  std::map<Level, std::string> excluded;
  for (const Exclusion& ex : exclusions) {
    if (ex.rationale.empty())
      throw PlanError("exclusion of the " + to_string(ex.level) +
                      " level has no rationale");
    if (!excluded.emplace(ex.level, ex.rationale).second)
      throw PlanError("level " + to_string(ex.level) +
                      " excluded more than once");
  }

  EvaluationPlan plan;
  plan.purposes = purposes;
  plan.resource_flags = flags;

  std::vector<Purpose> ordered;
  for (Purpose p : kAllPurposes)
    if (purposes.count(p)) ordered.push_back(p);

  for (std::size_t i = 0; i < ordered.size(); ++i) {
    Purpose p = ordered[i];
    std::vector<LevelImportance> levels = levels_for_purpose(p);
    if (include_structure_level)
      levels.push_back(
          {Level::StructureArchitectureDesign, Importance::Universal});
    if (i == 0) {
      // Exclusions naming levels no purpose selects still surface, attached
      // to the first purpose so the rationale is on record.
      std::set<Level> all_selected;
      for (Purpose q : ordered)
        for (const LevelImportance& li : levels_for_purpose(q))
          all_selected.insert(li.level);
      if (include_structure_level)
        all_selected.insert(Level::StructureArchitectureDesign);
      for (const auto& [lvl, rationale] : excluded)
        if (!all_selected.count(lvl))
          levels.push_back({lvl, Importance::Primary});
      std::sort(levels.begin(), levels.end(),
                [](const LevelImportance& a, const LevelImportance& b) {
                  return static_cast<int>(a.level) < static_cast<int>(b.level);
                });
    }
    for (const LevelImportance& li : levels) {
      PlanEntry entry;
      entry.purpose = p;
      entry.level = li.level;
      entry.importance = li.importance;
      if (auto it = excluded.find(li.level); it != excluded.end()) {
        entry.status = EntryStatus::Excluded;
        entry.rationale = it->second;
      } else if (flags.built_from_data_sources && li.level == Level::Lexical) {
        entry.status = EntryStatus::Excluded;
        entry.rationale = kDataSourceRationale;
      } else {
        entry.status = EntryStatus::Selected;
        entry.methods = methods_for(li.level, flags, matrix);
      }
      plan.entries.push_back(std::move(entry));
    }
  }
  return plan;
}

std::vector<std::string> validate_plan(const EvaluationPlan& plan,
                                       const SuitabilityMatrix& m) {
  std::vector<std::string> problems;
  if (plan.purposes.empty()) problems.push_back("plan has no purposes");

  std::set<std::pair<Purpose, Level>> seen;
  for (const PlanEntry& e : plan.entries) {
    std::string tag =
        "entry " + to_string(e.purpose) + "/" + to_string(e.level);
    if (!plan.purposes.count(e.purpose))
      problems.push_back(tag + ": purpose not in plan purposes");
    if (!seen.insert({e.purpose, e.level}).second)
      problems.push_back(tag + ": duplicate purpose/level pair");

    if (e.status == EntryStatus::Excluded) {
      if (e.rationale.empty())
        problems.push_back(tag + ": excluded without rationale");
      if (!e.methods.empty())
        problems.push_back(tag + ": excluded entry lists methods");
      continue;
    }

    if (e.methods.empty())
      problems.push_back(tag + ": selected entry has no methods");
    std::set<Method> dedup;
    for (Method mm : e.methods) {
      if (!dedup.insert(mm).second)
        problems.push_back(tag + ": duplicate method " + to_string(mm));
      if (m.grade(mm, e.level) == Grade::Unsuitable)
        problems.push_back(tag + ": method " + to_string(mm) +
                           " is unsuitable at this level");
      if (mm == Method::GoldStandard &&
          !plan.resource_flags.gold_standard_available)
        problems.push_back(tag + ": gold_standard without a gold standard");
      if (mm == Method::ApplicationBased &&
          !plan.resource_flags.application_available)
        problems.push_back(tag + ": application_based without an application");
    }
    for (std::size_t i = 1; i < e.methods.size(); ++i) {
      Grade prev = m.grade(e.methods[i - 1], e.level);
      Grade cur = m.grade(e.methods[i], e.level);
      if (static_cast<int>(prev) < static_cast<int>(cur))
        problems.push_back(tag + ": methods not ordered preferred-first");
    }
    if (plan.resource_flags.built_from_data_sources &&
        e.level == Level::Lexical)
      problems.push_back(tag +
                         ": lexical entry selected despite data-source build");
  }
  return problems;
}

}  // namespace onteval
