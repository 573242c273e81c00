// competency.hpp : competency-question harness
#ifndef ONTEVAL_COMPETENCY_HPP
#define ONTEVAL_COMPETENCY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "onteval/inference.hpp"
#include "onteval/ontology.hpp"
#include "onteval/query.hpp"

namespace onteval {

struct CompetencyTask {
  std::string task_id;
  std::string description;
  std::string query;
  bool require_inference = false;
  std::vector<Binding> expected;

  bool operator==(const CompetencyTask&) const = default;
};

struct TaskOutcome {
  std::string task_id;
  bool passed = false;
  std::string reason;  // empty when passed
  // The query's solutions, one serialized "?v=term ..." row each, sorted.
  std::vector<std::string> actual;
  // Wall time; informational only, never serialized or compared.
  double elapsed_ms = 0.0;

  friend bool operator==(const TaskOutcome& a, const TaskOutcome& b) {
    return a.task_id == b.task_id && a.passed == b.passed &&
           a.reason == b.reason && a.actual == b.actual;
  }
};

struct ContextReport {
  std::vector<TaskOutcome> outcomes;  // suite order
  double pass_rate = 1.0;
  bool degenerate = false;  // empty suite

  bool operator==(const ContextReport&) const = default;
};

// Runs every task; a task passes when its query's solutions equal the
// expected rows exactly. Tasks flagged require_inference run against the
// materialized graph (built once). Query errors fail the task and the suite
// carries on; duplicate task ids and malformed rules stop it with
// ValidationError.
ContextReport run_competency_suite(const OntologyGraph& g,
                                   const std::vector<CompetencyTask>& suite,
                                   const std::vector<Rule>& rules = {},
                                   std::size_t triple_cap = 1000000);

// Rule file: [{"name": ..., "body": [[s,p,o],...], "head": [s,p,o]}].
// Terms are "?var", "<iri>", quoted literals, or bare IRIs.
std::vector<Rule> load_rules_json(const std::string& json_text);

// Suite file: [{"task_id", "description", "query", "require_inference",
// "expected": [{"var": term, ...}, ...]}].
std::vector<CompetencyTask> load_suite_json(const std::string& json_text);

}  // namespace onteval

#endif  // ONTEVAL_COMPETENCY_HPP
