#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "onteval/errors.hpp"
#include "onteval/framework.hpp"

using namespace onteval;

namespace {

// Independent statement of the whole default grade table.
const std::map<std::pair<Method, Level>, Grade> kExpectedGrades = {
    {{Method::GoldStandard, Level::Lexical}, Grade::Suitable},
    {{Method::ApplicationBased, Level::Lexical}, Grade::Suitable},
    {{Method::CriteriaBased, Level::Lexical}, Grade::Suitable},
    {{Method::DataDriven, Level::Lexical}, Grade::Preferred},
    {{Method::GoldStandard, Level::Hierarchy}, Grade::Preferred},
    {{Method::ApplicationBased, Level::Hierarchy}, Grade::Suitable},
    {{Method::CriteriaBased, Level::Hierarchy}, Grade::Preferred},
    {{Method::DataDriven, Level::Hierarchy}, Grade::Suitable},
    {{Method::GoldStandard, Level::SemanticRelations}, Grade::Suitable},
    {{Method::ApplicationBased, Level::SemanticRelations}, Grade::Suitable},
    {{Method::CriteriaBased, Level::SemanticRelations}, Grade::Suitable},
    {{Method::DataDriven, Level::SemanticRelations}, Grade::Suitable},
    {{Method::GoldStandard, Level::Context}, Grade::Unsuitable},
    {{Method::ApplicationBased, Level::Context}, Grade::Preferred},
    {{Method::CriteriaBased, Level::Context}, Grade::Suitable},
    {{Method::DataDriven, Level::Context}, Grade::Unsuitable},
    {{Method::GoldStandard, Level::Syntactic}, Grade::Suitable},
    {{Method::ApplicationBased, Level::Syntactic}, Grade::Unsuitable},
    {{Method::CriteriaBased, Level::Syntactic}, Grade::Suitable},
    {{Method::DataDriven, Level::Syntactic}, Grade::Unsuitable},
    {{Method::GoldStandard, Level::StructureArchitectureDesign},
     Grade::Unsuitable},
    {{Method::ApplicationBased, Level::StructureArchitectureDesign},
     Grade::Unsuitable},
    {{Method::CriteriaBased, Level::StructureArchitectureDesign},
     Grade::Suitable},
    {{Method::DataDriven, Level::StructureArchitectureDesign},
     Grade::Unsuitable},
};

ResourceFlags all_resources() {
  return {true, true, true, false};
}

}  // namespace

TEST_CASE("default matrix matches the reference table cell by cell") {
  SuitabilityMatrix m = default_matrix();
  for (Method method : kAllMethods)
    for (Level level : kAllLevels)
      CHECK(m.grade(method, level) == kExpectedGrades.at({method, level}));
  CHECK(m.non_unsuitable_count() == 17);
  CHECK(m.overlay_source() == "paper-default");
}

TEST_CASE("overlay can reweight but not change applicability") {
  SuitabilityMatrix m = default_matrix();
  m.set_grade(Method::DataDriven, Level::Lexical, Grade::Suitable);
  CHECK(m.grade(Method::DataDriven, Level::Lexical) == Grade::Suitable);
  m.set_grade(Method::GoldStandard, Level::Lexical, Grade::Preferred);
  CHECK(m.grade(Method::GoldStandard, Level::Lexical) == Grade::Preferred);
  CHECK_THROWS_AS(
      m.set_grade(Method::GoldStandard, Level::Context, Grade::Suitable),
      PlanError);
  CHECK_THROWS_AS(m.set_grade(Method::CriteriaBased,
                              Level::StructureArchitectureDesign,
                              Grade::Unsuitable),
                  PlanError);
  CHECK(m.non_unsuitable_count() == 17);
}

TEST_CASE("enum round trips") {
  for (Purpose p : kAllPurposes)
    CHECK(purpose_from_string(to_string(p)) == p);
  for (Level l : kAllLevels) CHECK(level_from_string(to_string(l)) == l);
  for (Method m : kAllMethods) CHECK(method_from_string(to_string(m)) == m);
  CHECK(grade_from_string("preferred") == Grade::Preferred);
  CHECK_FALSE(purpose_from_string("nonsense").has_value());
}

TEST_CASE("levels for each purpose") {
  using LI = LevelImportance;
  CHECK(levels_for_purpose(Purpose::ShareVocabulariesIntegrateData) ==
        std::vector<LI>{{Level::Lexical, Importance::Universal},
                        {Level::SemanticRelations, Importance::Primary},
                        {Level::Context, Importance::Primary},
                        {Level::Syntactic, Importance::Universal}});
  CHECK(levels_for_purpose(Purpose::KnowledgeSearchExploration) ==
        std::vector<LI>{{Level::Lexical, Importance::Universal},
                        {Level::Hierarchy, Importance::Primary},
                        {Level::Syntactic, Importance::Universal}});
  CHECK(levels_for_purpose(Purpose::SystemInteroperability) ==
        std::vector<LI>{{Level::Lexical, Importance::Universal},
                        {Level::SemanticRelations, Importance::Primary},
                        {Level::Syntactic, Importance::Universal}});
  CHECK(levels_for_purpose(Purpose::DecisionSupport) ==
        std::vector<LI>{{Level::Lexical, Importance::Universal},
                        {Level::Context, Importance::Primary},
                        {Level::Syntactic, Importance::Universal}});
}

TEST_CASE("method ordering: grade first, criteria-based leads ties at "
          "semantic relations") {
  EvaluationPlan plan = build_plan({Purpose::KnowledgeSearchExploration},
                                   all_resources(), {});
  const PlanEntry* hierarchy = nullptr;
  const PlanEntry* lexical = nullptr;
  for (const PlanEntry& e : plan.entries) {
    if (e.level == Level::Hierarchy) hierarchy = &e;
    if (e.level == Level::Lexical) lexical = &e;
  }
  REQUIRE(hierarchy);
  CHECK(hierarchy->methods ==
        std::vector<Method>{Method::GoldStandard, Method::CriteriaBased,
                            Method::ApplicationBased, Method::DataDriven});
  REQUIRE(lexical);
  CHECK(lexical->methods ==
        std::vector<Method>{Method::DataDriven, Method::GoldStandard,
                            Method::ApplicationBased, Method::CriteriaBased});

  EvaluationPlan si = build_plan({Purpose::SystemInteroperability},
                                 all_resources(), {});
  for (const PlanEntry& e : si.entries)
    if (e.level == Level::SemanticRelations)
      CHECK(e.methods ==
            std::vector<Method>{Method::CriteriaBased, Method::GoldStandard,
                                Method::ApplicationBased, Method::DataDriven});
}

TEST_CASE("resource flags gate methods") {
  ResourceFlags flags;  // nothing available
  EvaluationPlan plan =
      build_plan({Purpose::KnowledgeSearchExploration}, flags, {});
  for (const PlanEntry& e : plan.entries) {
    for (Method m : e.methods) {
      CHECK(m != Method::GoldStandard);
      CHECK(m != Method::ApplicationBased);
    }
  }
  for (const PlanEntry& e : plan.entries)
    if (e.level == Level::Hierarchy)
      CHECK(e.methods ==
            std::vector<Method>{Method::CriteriaBased, Method::DataDriven});
}

TEST_CASE("data-source builds exclude the lexical level with a rationale") {
  ResourceFlags flags;
  flags.built_from_data_sources = true;
  EvaluationPlan plan = build_plan({Purpose::DecisionSupport}, flags, {});
  bool saw_lexical = false;
  for (const PlanEntry& e : plan.entries) {
    if (e.level != Level::Lexical) continue;
    saw_lexical = true;
    CHECK(e.status == EntryStatus::Excluded);
    CHECK_FALSE(e.rationale.empty());
    CHECK(e.methods.empty());
  }
  CHECK(saw_lexical);
  CHECK(plan.selected_levels() ==
        std::set<Level>{Level::Context, Level::Syntactic});
}

TEST_CASE("explicit exclusions win and may name unselected levels") {
  EvaluationPlan plan = build_plan(
      {Purpose::DecisionSupport}, all_resources(),
      {{Level::Context, "no runtime access"},
       {Level::Hierarchy, "taxonomy comes from an external scheme"}});
  std::map<Level, const PlanEntry*> by_level;
  for (const PlanEntry& e : plan.entries) by_level[e.level] = &e;
  REQUIRE(by_level.count(Level::Context));
  CHECK(by_level[Level::Context]->status == EntryStatus::Excluded);
  CHECK(by_level[Level::Context]->rationale == "no runtime access");
  // Hierarchy is not a decision-support level but the exclusion still lands.
  REQUIRE(by_level.count(Level::Hierarchy));
  CHECK(by_level[Level::Hierarchy]->status == EntryStatus::Excluded);
  CHECK(plan.selected_levels() ==
        std::set<Level>{Level::Lexical, Level::Syntactic});
}

TEST_CASE("plan construction errors") {
  CHECK_THROWS_AS(build_plan({}, all_resources(), {}), PlanError);
  CHECK_THROWS_AS(build_plan({Purpose::DecisionSupport}, all_resources(),
                             {{Level::Context, ""}}),
                  PlanError);
  CHECK_THROWS_AS(build_plan({Purpose::DecisionSupport}, all_resources(),
                             {{Level::Context, "a"}, {Level::Context, "b"}}),
                  PlanError);
}

TEST_CASE("structure level joins on request") {
  EvaluationPlan without =
      build_plan({Purpose::DecisionSupport}, all_resources(), {});
  CHECK_FALSE(without.selected_levels().count(
      Level::StructureArchitectureDesign));
  EvaluationPlan with = build_plan({Purpose::DecisionSupport}, all_resources(),
                                   {}, default_matrix(), true);
  CHECK(with.selected_levels().count(Level::StructureArchitectureDesign) == 1);
  for (const PlanEntry& e : with.entries)
    if (e.level == Level::StructureArchitectureDesign)
      CHECK(e.methods == std::vector<Method>{Method::CriteriaBased});
}

TEST_CASE("every generated plan validates clean") {
  for (int i = 0; i < 100; ++i) {
    std::set<Purpose> purposes;
    for (Purpose p : kAllPurposes)
      if (testutil::chance(0.5)) purposes.insert(p);
    if (purposes.empty()) purposes.insert(Purpose::DecisionSupport);
    ResourceFlags flags;
    flags.gold_standard_available = testutil::chance(0.5);
    flags.corpus_available = testutil::chance(0.5);
    flags.application_available = testutil::chance(0.5);
    flags.built_from_data_sources = testutil::chance(0.3);
    std::vector<Exclusion> exclusions;
    for (Level l : kAllLevels)
      if (testutil::chance(0.15))
        exclusions.push_back({l, "generated rationale"});
    bool structure = testutil::chance(0.3);

    SuitabilityMatrix m = default_matrix();
    if (testutil::chance(0.3))
      m.set_grade(Method::DataDriven, Level::Lexical, Grade::Suitable);

    EvaluationPlan plan = build_plan(purposes, flags, exclusions, m, structure);
    CHECK(validate_plan(plan, m).empty());

    // Purposes in ascending enum order, levels ascending within a purpose.
    for (std::size_t k = 1; k < plan.entries.size(); ++k) {
      const PlanEntry& prev = plan.entries[k - 1];
      const PlanEntry& cur = plan.entries[k];
      bool ordered = static_cast<int>(prev.purpose) <
                         static_cast<int>(cur.purpose) ||
                     (prev.purpose == cur.purpose &&
                      static_cast<int>(prev.level) <
                          static_cast<int>(cur.level));
      CHECK(ordered);
    }
  }
}
