#include "onteval/competency.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>

#include <json.hpp>

#include "onteval/errors.hpp"

namespace onteval {

namespace {

using nlohmann::json;

PatternTerm parse_pattern_term(const std::string& text,
                               const std::string& where) {
  if (text.empty()) throw ValidationError(where + ": empty term");
  if (text[0] == '?') {
    if (text.size() == 1)
      throw ValidationError(where + ": empty variable name");
    return Variable{text.substr(1)};
  }
  if (text[0] == '<') {
    if (text.back() != '>')
      throw ValidationError(where + ": unterminated IRI '" + text + "'");
    return Iri(text.substr(1, text.size() - 2));
  }
  if (text[0] == '"') {
    std::string lexical;
    std::size_t i = 1;
    bool closed = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '"') {
        closed = true;
        ++i;
        break;
      }
      if (c == '\\') {
        if (i + 1 >= text.size())
          throw ValidationError(where + ": dangling escape");
        char e = text[++i];
        switch (e) {
          case 't': lexical += '\t'; break;
          case 'n': lexical += '\n'; break;
          case 'r': lexical += '\r'; break;
          case '"': lexical += '"'; break;
          case '\\': lexical += '\\'; break;
          default:
            throw ValidationError(where + ": unsupported escape '\\" +
                                  std::string(1, e) + "'");
        }
        continue;
      }
      lexical += c;
    }
    if (!closed) throw ValidationError(where + ": unterminated literal");
    Literal lit{lexical, std::nullopt, std::nullopt};
    if (i < text.size()) {
      if (text[i] == '@') {
        if (i + 1 >= text.size())
          throw ValidationError(where + ": empty language tag");
        lit.language_tag = text.substr(i + 1);
      } else if (text.compare(i, 2, "^^") == 0 && i + 2 < text.size() &&
                 text[i + 2] == '<' && text.back() == '>') {
        lit.datatype = Iri(text.substr(i + 3, text.size() - i - 4));
      } else {
        throw ValidationError(where + ": trailing content after literal");
      }
    }
    return lit;
  }
  return Iri(text);  // bare IRI
}

Term parse_ground_term(const std::string& text, const std::string& where) {
  PatternTerm t = parse_pattern_term(text, where);
  if (std::holds_alternative<Variable>(t))
    throw ValidationError(where + ": variable where a value was expected");
  if (const Iri* iri = std::get_if<Iri>(&t)) return Term(*iri);
  return Term(std::get<Literal>(t));
}

TriplePattern parse_pattern(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw ValidationError(where + ": pattern must be a [s, p, o] array");
  for (const json& part : j)
    if (!part.is_string())
      throw ValidationError(where + ": pattern terms must be strings");
  return {parse_pattern_term(j[0].get<std::string>(), where),
          parse_pattern_term(j[1].get<std::string>(), where),
          parse_pattern_term(j[2].get<std::string>(), where)};
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ValidationError(what + ": not valid JSON");
  return j;
}

}  // namespace

std::vector<Rule> load_rules_json(const std::string& json_text) {
  json root = parse_json(json_text, "rules");
  if (!root.is_array())
    throw ValidationError("rules: top level must be an array");
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json& item = root[i];
    std::string where = "rules[" + std::to_string(i) + "]";
    if (!item.is_object())
      throw ValidationError(where + ": must be an object");
    Rule r;
    if (item.contains("name")) {
      if (!item["name"].is_string())
        throw ValidationError(where + ": name must be a string");
      r.name = item["name"].get<std::string>();
    }
    if (!item.contains("body") || !item["body"].is_array())
      throw ValidationError(where + ": missing body array");
    for (const json& atom : item["body"])
      r.body.push_back(parse_pattern(atom, where + ".body"));
    if (!item.contains("head"))
      throw ValidationError(where + ": missing head");
    r.head = parse_pattern(item["head"], where + ".head");
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<CompetencyTask> load_suite_json(const std::string& json_text) {
  json root = parse_json(json_text, "suite");
  if (!root.is_array())
    throw ValidationError("suite: top level must be an array");
  std::vector<CompetencyTask> suite;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json& item = root[i];
    std::string where = "suite[" + std::to_string(i) + "]";
    if (!item.is_object())
      throw ValidationError(where + ": must be an object");
    CompetencyTask task;
    if (!item.contains("task_id") || !item["task_id"].is_string() ||
        item["task_id"].get<std::string>().empty())
      throw ValidationError(where + ": missing task_id");
    task.task_id = item["task_id"].get<std::string>();
    if (item.contains("description")) {
      if (!item["description"].is_string())
        throw ValidationError(where + ": description must be a string");
      task.description = item["description"].get<std::string>();
    }
    if (!item.contains("query") || !item["query"].is_string())
      throw ValidationError(where + ": missing query");
    task.query = item["query"].get<std::string>();
    if (item.contains("require_inference")) {
      if (!item["require_inference"].is_boolean())
        throw ValidationError(where + ": require_inference must be boolean");
      task.require_inference = item["require_inference"].get<bool>();
    }
    if (item.contains("expected")) {
      if (!item["expected"].is_array())
        throw ValidationError(where + ": expected must be an array");
      for (std::size_t k = 0; k < item["expected"].size(); ++k) {
        const json& row = item["expected"][k];
        std::string rw = where + ".expected[" + std::to_string(k) + "]";
        if (!row.is_object())
          throw ValidationError(rw + ": must be an object");
        Binding b;
        for (const auto& [key, value] : row.items()) {
          if (!value.is_string())
            throw ValidationError(rw + ": values must be term strings");
          std::string var = key;
          if (!var.empty() && var[0] == '?') var = var.substr(1);
          if (var.empty()) throw ValidationError(rw + ": empty variable name");
          b[var] = parse_ground_term(value.get<std::string>(), rw);
        }
        task.expected.push_back(std::move(b));
      }
    }
    suite.push_back(std::move(task));
  }
  return suite;
}

namespace {

// Rows a task expects, in the result's column order.
std::optional<std::set<std::vector<Term>>> expected_rows(
    const CompetencyTask& task, const std::vector<std::string>& variables,
    std::string* why) {
  std::set<std::vector<Term>> rows;
  for (const Binding& b : task.expected) {
    std::vector<Term> row;
    for (const std::string& v : variables) {
      auto it = b.find(v);
      if (it == b.end()) {
        *why = "expected row is missing variable ?" + v;
        return std::nullopt;
      }
      row.push_back(it->second);
    }
    if (b.size() != variables.size()) {
      for (const auto& [k, term] : b) {
        if (std::find(variables.begin(), variables.end(), k) ==
            variables.end()) {
          *why = "expected row binds ?" + k + ", which is not projected";
          return std::nullopt;
        }
      }
    }
    rows.insert(std::move(row));
  }
  return rows;
}

}  // namespace

ContextReport run_competency_suite(const OntologyGraph& g,
                                   const std::vector<CompetencyTask>& suite,
                                   const std::vector<Rule>& rules,
                                   std::size_t triple_cap) {
  std::set<std::string> ids;
  for (const CompetencyTask& t : suite)
    if (!ids.insert(t.task_id).second)
      throw ValidationError("duplicate task id '" + t.task_id + "'");

  ContextReport report;
  if (suite.empty()) {
    report.degenerate = true;
    return report;
  }

  std::optional<OntologyGraph> materialized;
  std::string materialize_failure;
  bool wants_inference = false;
  for (const CompetencyTask& t : suite)
    wants_inference = wants_inference || t.require_inference;
  if (wants_inference) {
    try {
      materialized = materialize_inferences(g, rules, triple_cap);
    } catch (const FixpointOverflowError& e) {
      materialize_failure = e.what();
    }
    // Malformed rules propagate: the suite input itself is broken.
  }

  std::size_t passed = 0;
  for (const CompetencyTask& task : suite) {
    TaskOutcome outcome;
    outcome.task_id = task.task_id;
    auto started = std::chrono::steady_clock::now();
    try {
      if (task.require_inference && !materialized) {
        outcome.reason = materialize_failure;
      } else {
        const OntologyGraph& target =
            task.require_inference ? *materialized : g;
        GraphPatternQuery q = parse_query(task.query);
        QueryResult got = evaluate_query(target, q);
        for (const std::vector<Term>& row : got.rows) {
          std::string line;
          for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += " ";
            line += "?" + got.variables[i] + "=" + term_to_string(row[i]);
          }
          outcome.actual.push_back(std::move(line));
        }
        std::string why;
        auto want = expected_rows(task, got.variables, &why);
        if (!want) {
          outcome.reason = why;
        } else if (*want != std::set<std::vector<Term>>(got.rows.begin(),
                                                        got.rows.end())) {
          outcome.reason = "solutions differ from expected (got " +
                           std::to_string(got.rows.size()) + " rows, expected " +
                           std::to_string(want->size()) + ")";
        } else {
          outcome.passed = true;
        }
      }
    } catch (const Error& e) {
      outcome.reason = e.what();
    }
    outcome.elapsed_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();
    if (outcome.passed) ++passed;
    report.outcomes.push_back(std::move(outcome));
  }
  report.pass_rate =
      static_cast<double>(passed) / static_cast<double>(suite.size());
  return report;
}

}  // namespace onteval
