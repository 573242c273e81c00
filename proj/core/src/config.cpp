#include "onteval/config.hpp"

#include <filesystem>

#include <json.hpp>

#include "onteval/errors.hpp"

namespace onteval {

namespace {

using nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj,
                         const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

std::string require_string(const ordered_json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + " must be a string");
  return j.get<std::string>();
}

bool require_bool(const ordered_json& j, const std::string& where) {
  if (!j.is_boolean()) throw ConfigError(where + " must be a boolean");
  return j.get<bool>();
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text,
                           const std::string& source_path) {
  ordered_json root = ordered_json::parse(json_text, nullptr, false);
  if (root.is_discarded())
    throw ConfigError(source_path.empty()
                          ? "configuration is not valid JSON"
                          : source_path + " is not valid JSON");
  if (!root.is_object())
    throw ConfigError("configuration must be a JSON object");
  reject_unknown_keys(root,
                      {"purposes", "resources", "exclusions", "inputs",
                       "thresholds", "matrix_overlay",
                       "include_structure_level"},
                      "configuration");

  RunConfig cfg;
  cfg.source_path = source_path;

  if (!root.contains("purposes") || !root["purposes"].is_array() ||
      root["purposes"].empty())
    throw ConfigError("configuration needs a non-empty purposes array");
  for (const ordered_json& p : root["purposes"]) {
    std::string name = require_string(p, "purposes entry");
    auto purpose = purpose_from_string(name);
    if (!purpose) throw ConfigError("unknown purpose '" + name + "'");
    if (!cfg.purposes.insert(*purpose).second)
      throw ConfigError("duplicate purpose '" + name + "'");
  }

  if (root.contains("resources")) {
    const ordered_json& r = root["resources"];
    if (!r.is_object()) throw ConfigError("resources must be an object");
    reject_unknown_keys(r,
                        {"gold_standard_available", "corpus_available",
                         "application_available", "built_from_data_sources"},
                        "resources");
    ResourceFlags flags;
    if (r.contains("gold_standard_available"))
      flags.gold_standard_available =
          require_bool(r["gold_standard_available"], "gold_standard_available");
    if (r.contains("corpus_available"))
      flags.corpus_available =
          require_bool(r["corpus_available"], "corpus_available");
    if (r.contains("application_available"))
      flags.application_available =
          require_bool(r["application_available"], "application_available");
    if (r.contains("built_from_data_sources"))
      flags.built_from_data_sources =
          require_bool(r["built_from_data_sources"], "built_from_data_sources");
    cfg.resources = flags;
  }

  if (root.contains("exclusions")) {
    if (!root["exclusions"].is_array())
      throw ConfigError("exclusions must be an array");
    for (const ordered_json& e : root["exclusions"]) {
      if (!e.is_object())
        throw ConfigError("exclusions entries must be objects");
      reject_unknown_keys(e, {"level", "rationale"}, "exclusions entry");
      if (!e.contains("level") || !e.contains("rationale"))
        throw ConfigError("exclusions entries need level and rationale");
      std::string level_name = require_string(e["level"], "exclusion level");
      auto level = level_from_string(level_name);
      if (!level) throw ConfigError("unknown level '" + level_name + "'");
      cfg.exclusions.push_back(
          {*level, require_string(e["rationale"], "exclusion rationale")});
    }
  }

  if (root.contains("inputs")) {
    const ordered_json& in = root["inputs"];
    if (!in.is_object()) throw ConfigError("inputs must be an object");
    reject_unknown_keys(in,
                        {"ontology", "gold_standard", "corpus_dir", "suite",
                         "rules", "expert_scores", "expected_terms"},
                        "inputs");
    if (in.contains("ontology")) {
      const ordered_json& o = in["ontology"];
      if (o.is_string()) {
        cfg.ontology_paths.push_back(o.get<std::string>());
      } else if (o.is_array()) {
        if (o.empty())
          throw ConfigError("inputs.ontology must name at least one file");
        for (const ordered_json& p : o)
          cfg.ontology_paths.push_back(require_string(p, "ontology entry"));
      } else {
        throw ConfigError("inputs.ontology must be a path or array of paths");
      }
    }
    auto take = [&](const char* key, std::optional<std::string>& slot) {
      if (in.contains(key)) slot = require_string(in[key], key);
    };
    take("gold_standard", cfg.gold_path);
    take("corpus_dir", cfg.corpus_dir);
    take("suite", cfg.suite_path);
    take("rules", cfg.rules_path);
    take("expert_scores", cfg.expert_scores_path);
    take("expected_terms", cfg.expected_terms_path);
  }

  if (root.contains("thresholds")) {
    const ordered_json& t = root["thresholds"];
    if (!t.is_object()) throw ConfigError("thresholds must be an object");
    reject_unknown_keys(t, {"similarity", "term_k", "window", "triple_cap"},
                        "thresholds");
    if (t.contains("similarity")) {
      if (!t["similarity"].is_number())
        throw ConfigError("similarity must be a number");
      cfg.thresholds.similarity = t["similarity"].get<double>();
      if (cfg.thresholds.similarity < 0.0 || cfg.thresholds.similarity > 1.0)
        throw ConfigError("similarity must lie in [0,1]");
    }
    auto take_count = [&](const char* key, std::size_t& slot,
                          std::size_t minimum) {
      if (!t.contains(key)) return;
      if (!t[key].is_number_unsigned())
        throw ConfigError(std::string(key) + " must be a non-negative integer");
      slot = t[key].get<std::size_t>();
      if (slot < minimum)
        throw ConfigError(std::string(key) + " must be at least " +
                          std::to_string(minimum));
    };
    take_count("term_k", cfg.thresholds.term_k, 1);
    take_count("window", cfg.thresholds.window, 2);
    take_count("triple_cap", cfg.thresholds.triple_cap, 1);
  }

  if (root.contains("matrix_overlay")) {
    if (!root["matrix_overlay"].is_array())
      throw ConfigError("matrix_overlay must be an array");
    for (const ordered_json& o : root["matrix_overlay"]) {
      if (!o.is_object())
        throw ConfigError("matrix_overlay entries must be objects");
      reject_unknown_keys(o, {"method", "level", "grade"},
                          "matrix_overlay entry");
      if (!o.contains("method") || !o.contains("level") ||
          !o.contains("grade"))
        throw ConfigError("matrix_overlay entries need method, level, grade");
      auto method = method_from_string(require_string(o["method"], "method"));
      if (!method)
        throw ConfigError("unknown method '" +
                          o["method"].get<std::string>() + "'");
      auto level = level_from_string(require_string(o["level"], "level"));
      if (!level)
        throw ConfigError("unknown level '" + o["level"].get<std::string>() +
                          "'");
      auto grade = grade_from_string(require_string(o["grade"], "grade"));
      if (!grade)
        throw ConfigError("unknown grade '" + o["grade"].get<std::string>() +
                          "'");
      cfg.matrix_overlay.push_back({*method, *level, *grade});
    }
  }

  if (root.contains("include_structure_level"))
    cfg.include_structure_level =
        require_bool(root["include_structure_level"], "include_structure_level");

  // Relative input paths are taken relative to the config file itself.
  if (!source_path.empty()) {
    namespace fs = std::filesystem;
    fs::path base = fs::path(source_path).parent_path();
    auto resolve = [&](std::string& p) {
      if (p.empty() || base.empty()) return;
      fs::path fp(p);
      if (fp.is_relative()) p = (base / fp).lexically_normal().string();
    };
    for (std::string& p : cfg.ontology_paths) resolve(p);
    for (auto* opt : {&cfg.gold_path, &cfg.corpus_dir, &cfg.suite_path,
                      &cfg.rules_path, &cfg.expert_scores_path,
                      &cfg.expected_terms_path})
      if (*opt) resolve(**opt);
  }

  return cfg;
}

ResourceFlags effective_flags(const RunConfig& cfg) {
  if (cfg.resources) return *cfg.resources;
  ResourceFlags flags;
  flags.gold_standard_available = cfg.gold_path.has_value();
  flags.corpus_available = cfg.corpus_dir.has_value();
  flags.application_available = cfg.suite_path.has_value();
  flags.built_from_data_sources = false;
  return flags;
}

std::string default_config_json() {
  ordered_json j;
  j["purposes"] = {"decision_support"};
  j["exclusions"] = ordered_json::array();
  j["inputs"] = ordered_json::object();
  j["thresholds"] = {{"similarity", 0.8},
                     {"term_k", 50},
                     {"window", 10},
                     {"triple_cap", 1000000}};
  j["matrix_overlay"] = ordered_json::array();
  j["include_structure_level"] = false;
  return j.dump(2) + "\n";
}

SuitabilityMatrix apply_overlay(const RunConfig& cfg) {
  SuitabilityMatrix m = default_matrix();
  if (cfg.matrix_overlay.empty()) return m;
  for (const MatrixOverride& o : cfg.matrix_overlay) {
    try {
      m.set_grade(o.method, o.level, o.grade);
    } catch (const PlanError& e) {
      throw ConfigError(e.what());
    }
  }
  m.set_overlay_source(cfg.source_path.empty() ? "config" : cfg.source_path);
  return m;
}

}  // namespace onteval
