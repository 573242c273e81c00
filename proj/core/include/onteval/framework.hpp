// framework.hpp : purpose -> level -> method selection
#ifndef ONTEVAL_FRAMEWORK_HPP
#define ONTEVAL_FRAMEWORK_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace onteval {

enum class Purpose {
  ShareVocabulariesIntegrateData,
  KnowledgeSearchExploration,
  SystemInteroperability,
  DecisionSupport,
};
inline constexpr std::array<Purpose, 4> kAllPurposes = {
    Purpose::ShareVocabulariesIntegrateData,
    Purpose::KnowledgeSearchExploration,
    Purpose::SystemInteroperability,
    Purpose::DecisionSupport,
};

enum class Level {
  Lexical,
  Hierarchy,
  SemanticRelations,
  Context,
  Syntactic,
  StructureArchitectureDesign,
};
inline constexpr std::array<Level, 6> kAllLevels = {
    Level::Lexical,
    Level::Hierarchy,
    Level::SemanticRelations,
    Level::Context,
    Level::Syntactic,
    Level::StructureArchitectureDesign,
};

enum class Method {
  GoldStandard,
  ApplicationBased,
  CriteriaBased,
  DataDriven,
};
inline constexpr std::array<Method, 4> kAllMethods = {
    Method::GoldStandard,
    Method::ApplicationBased,
    Method::CriteriaBased,
    Method::DataDriven,
};

enum class Grade { Unsuitable, Suitable, Preferred };
enum class Importance { Primary, Universal };
enum class EntryStatus { Selected, Excluded };

std::string to_string(Purpose p);
std::string to_string(Level l);
std::string to_string(Method m);
std::string to_string(Grade g);
std::string to_string(Importance i);
std::string to_string(EntryStatus s);
std::optional<Purpose> purpose_from_string(const std::string& s);
std::optional<Level> level_from_string(const std::string& s);
std::optional<Method> method_from_string(const std::string& s);
std::optional<Grade> grade_from_string(const std::string& s);

// Method-by-level suitability grades. The suitability pattern (which cells
// are non-Unsuitable) is fixed; an overlay may only move cells between
// Suitable and Preferred.
class SuitabilityMatrix {
 public:
  SuitabilityMatrix();

  Grade grade(Method m, Level l) const;
  // Throws PlanError when the cell is Unsuitable (the pattern is fixed).
  void set_grade(Method m, Level l, Grade g);

  const std::string& overlay_source() const { return overlay_source_; }
  void set_overlay_source(std::string src) { overlay_source_ = std::move(src); }

  std::size_t non_unsuitable_count() const;

 private:
  void seed(Method m, Level l, Grade g) { grades_[{m, l}] = g; }
  friend SuitabilityMatrix default_matrix();

  std::map<std::pair<Method, Level>, Grade> grades_;
  std::string overlay_source_ = "paper-default";
};

// The default matrix: all four methods apply at the lexical, hierarchy and
// semantic-relations levels; application-based and criteria-based at the
// context level; gold-standard and criteria-based at the syntactic level;
// criteria-based alone at structure/architecture/design. Preferences:
// data-driven at lexical, gold-standard and criteria-based at hierarchy,
// application-based at context.
SuitabilityMatrix default_matrix();

struct ResourceFlags {
  bool gold_standard_available = false;
  bool corpus_available = false;
  bool application_available = false;
  bool built_from_data_sources = false;

  bool operator==(const ResourceFlags&) const = default;
};

struct PlanEntry {
  Purpose purpose;
  Level level;
  Importance importance = Importance::Universal;
  std::vector<Method> methods;  // Preferred before Suitable
  EntryStatus status = EntryStatus::Selected;
  std::string rationale;  // non-empty when Excluded

  bool operator==(const PlanEntry&) const = default;
};

struct EvaluationPlan {
  std::set<Purpose> purposes;
  std::vector<PlanEntry> entries;
  ResourceFlags resource_flags;

  // Levels having at least one Selected entry.
  std::set<Level> selected_levels() const;

  bool operator==(const EvaluationPlan&) const = default;
};

struct LevelImportance {
  Level level;
  Importance importance;

  bool operator==(const LevelImportance&) const = default;
};

// Purpose-specific primary levels plus the universal lexical and syntactic
// levels, in level enumeration order.
std::vector<LevelImportance> levels_for_purpose(Purpose p);

struct Exclusion {
  Level level;
  std::string rationale;
};

// Builds the purpose-driven plan. Resource flags gate methods (no gold
// standard -> gold-standard dropped; no application -> application-based
// dropped); an ontology built from its own data sources turns lexical
// entries into justified exclusions. Explicit exclusions always win and may
// name levels no purpose selects; such levels appear as Excluded entries.
// Throws PlanError on an empty purpose set, an empty exclusion rationale, or
// duplicate exclusions of one level.
EvaluationPlan build_plan(const std::set<Purpose>& purposes,
                          const ResourceFlags& flags,
                          const std::vector<Exclusion>& exclusions,
                          const SuitabilityMatrix& matrix = default_matrix(),
                          bool include_structure_level = false);

// Re-checks every plan invariant against the matrix; empty means valid.
std::vector<std::string> validate_plan(const EvaluationPlan& plan,
                                       const SuitabilityMatrix& m);

}  // namespace onteval

#endif  // ONTEVAL_FRAMEWORK_HPP
