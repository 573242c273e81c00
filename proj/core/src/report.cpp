#include "onteval/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "onteval/alignment.hpp"
#include "onteval/corpus.hpp"
#include "onteval/criteria.hpp"
#include "onteval/digest.hpp"
#include "onteval/errors.hpp"
#include "onteval/ntriples.hpp"
#include "onteval/turtle.hpp"

namespace onteval {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buffer.str();
}

TripleSet parse_rdf(const std::string& text, RdfFormat format,
                    const std::string& name) {
  return format == RdfFormat::Turtle ? parse_turtle_subset(text, name)
                                     : parse_ntriples(text, name);
}

std::vector<std::string> expected_terms_from_text(const std::string& text) {
  std::vector<std::string> terms;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string term = line.substr(start, end - start + 1);
    if (term.empty() || term[0] == '#') continue;
    terms.push_back(std::move(term));
  }
  return terms;
}

// Everything the pipeline loads at most once.
struct PipelineInputs {
  const RunConfig& cfg;
  std::map<std::string, std::string>& digests;
  std::vector<std::string>& notes;

  std::optional<OntologyGraph> gold;
  bool gold_tried = false;
  std::optional<Alignment> alignment;
  bool alignment_tried = false;
  std::optional<Corpus> corpus;
  bool corpus_tried = false;

  std::string read_and_digest(const std::string& path) {
    std::string bytes = read_file(path);
    digests[path] = "sha256:" + sha256_hex(bytes);
    return bytes;
  }

  void note_once(const std::string& text) {
    if (std::find(notes.begin(), notes.end(), text) == notes.end())
      notes.push_back(text);
  }

  const OntologyGraph* gold_graph() {
    if (!gold_tried) {
      gold_tried = true;
      if (cfg.gold_path) {
        std::string text = read_and_digest(*cfg.gold_path);
        gold = build_ontology(
            parse_rdf(text, detect_format(*cfg.gold_path), *cfg.gold_path));
      }
    }
    return gold ? &*gold : nullptr;
  }

  const Alignment* get_alignment(const OntologyGraph& g) {
    if (!alignment_tried) {
      alignment_tried = true;
      const OntologyGraph* gg = gold_graph();
      if (gg) alignment = align_lexicon(g, *gg, cfg.thresholds.similarity);
    }
    return alignment ? &*alignment : nullptr;
  }

  const Corpus* get_corpus() {
    if (!corpus_tried) {
      corpus_tried = true;
      if (cfg.corpus_dir) {
        namespace fs = std::filesystem;
        std::error_code ec;
        if (!fs::is_directory(*cfg.corpus_dir, ec))
          throw IoError("corpus directory " + *cfg.corpus_dir +
                        " does not exist");
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(*cfg.corpus_dir)) {
          if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        std::vector<DocumentText> docs;
        for (const fs::path& f : files)
          docs.push_back(
              {f.filename().string(), read_and_digest(f.string())});
        corpus = ingest_corpus(docs);
      }
    }
    return corpus ? &*corpus : nullptr;
  }
};

std::size_t count_by_name(const std::vector<MetricResult>& results,
                          const std::set<std::string>& names) {
  std::size_t total = 0;
  for (const MetricResult& r : results)
    if (names.count(r.name)) total += static_cast<std::size_t>(r.value + 0.5);
  return total;
}

}  // namespace

Report run_pipeline(const RunConfig& cfg) {
  if (cfg.ontology_paths.empty())
    throw ConfigError("no ontology input configured");

  Report rep;
  std::map<std::string, std::string> digests;
  std::vector<std::string> notes;
  PipelineInputs inputs{cfg, digests, notes};

  std::vector<std::string> onto_texts;
  for (const std::string& path : cfg.ontology_paths)
    onto_texts.push_back(inputs.read_and_digest(path));
  if (!cfg.source_path.empty()) inputs.read_and_digest(cfg.source_path);

  ResourceFlags flags = effective_flags(cfg);
  SuitabilityMatrix matrix = apply_overlay(cfg);
  rep.plan = build_plan(cfg.purposes, flags, cfg.exclusions, matrix,
                        cfg.include_structure_level);
  rep.thresholds = cfg.thresholds;
  rep.overlay_source = matrix.overlay_source();

  std::vector<TripleSet> sources;
  for (std::size_t i = 0; i < cfg.ontology_paths.size(); ++i) {
    sources.push_back(parse_rdf(onto_texts[i],
                                detect_format(cfg.ontology_paths[i]),
                                cfg.ontology_paths[i]));
  }
  TripleSet merged;
  merged.source_name = cfg.ontology_paths.front();
  for (const TripleSet& ts : sources)
    merged.triples.insert(ts.triples.begin(), ts.triples.end());
  OntologyGraph graph = build_ontology(merged);
  rep.triple_count = graph.triples().triples.size();

  std::set<std::pair<Level, Method>> cells;
  for (const PlanEntry& e : rep.plan.entries)
    if (e.status == EntryStatus::Selected)
      for (Method m : e.methods) cells.insert({e.level, m});

  auto skip = [&](Level l, Method m, const std::string& why) {
    inputs.note_once(to_string(l) + " " + to_string(m) + " skipped: " + why);
  };
  auto manual = [&](Level l, Method m, const std::string& what) {
    inputs.note_once(to_string(l) + " " + to_string(m) + ": " + what);
  };

  for (const auto& [level, method] : cells) {
    switch (level) {
      case Level::Lexical:
        if (method == Method::GoldStandard) {
          if (!cfg.gold_path) {
            skip(level, method, "no gold standard provided");
            break;
          }
          const Alignment* a = inputs.get_alignment(graph);
          if (!a) break;
          for (MetricResult& m : lexical_precision_recall(
                   *a, a->pairs.size() + a->unmatched_candidate.size(),
                   a->pairs.size() + a->unmatched_gold.size()))
            rep.results.push_back(std::move(m));
        } else if (method == Method::ApplicationBased) {
          manual(level, method,
                 "no dedicated automated procedure; the competency suite "
                 "covers applied use");
        } else if (method == Method::CriteriaBased) {
          rep.results.push_back(grammatical_redundancy_errors(sources));
          if (cfg.expected_terms_path) {
            std::string text = inputs.read_and_digest(*cfg.expected_terms_path);
            try {
              rep.results.push_back(completeness_coverage(
                  graph, expected_terms_from_text(text)));
            } catch (const EmptyReferenceError& e) {
              skip(level, method, e.what());
            }
          } else {
            skip(level, method,
                 "no expected-terms list for the completeness check");
          }
        } else {  // DataDriven
          const Corpus* c = inputs.get_corpus();
          if (!c) {
            skip(level, method, "no corpus provided");
            break;
          }
          try {
            CorpusFit fit = lexical_coverage(graph, *c, cfg.thresholds.term_k);
            rep.results.push_back(std::move(fit.coverage));
            rep.results.push_back(std::move(fit.focus));
          } catch (const EmptyCorpusError& e) {
            skip(level, method, e.what());
          }
        }
        break;

      case Level::Hierarchy:
        if (method == Method::GoldStandard) {
          if (!cfg.gold_path) {
            skip(level, method, "no gold standard provided");
            break;
          }
          const Alignment* a = inputs.get_alignment(graph);
          if (!a) break;
          try {
            rep.results.push_back(
                taxonomic_overlap(graph, *inputs.gold_graph(), *a));
          } catch (const CyclicGraphError& e) {
            skip(level, method, e.what());
          }
        } else if (method == Method::ApplicationBased) {
          manual(level, method,
                 "no dedicated automated procedure; the competency suite "
                 "covers applied use");
        } else if (method == Method::CriteriaBased) {
          rep.results.push_back(circularity_errors(graph));
          rep.results.push_back(partition_errors(graph));
          try {
            rep.results.push_back(redundancy_errors(graph));
          } catch (const CyclicGraphError&) {
            skip(level, method,
                 "redundancy check needs an acyclic subclass graph");
          }
        } else {  // DataDriven
          const Corpus* c = inputs.get_corpus();
          if (!c) {
            skip(level, method, "no corpus provided");
            break;
          }
          try {
            rep.results.push_back(
                structural_fit(graph, *c, cfg.thresholds.window));
          } catch (const CyclicGraphError& e) {
            skip(level, method, e.what());
          }
        }
        break;

      case Level::SemanticRelations:
        if (method == Method::CriteriaBased) {
          rep.results.push_back(semantic_inconsistency_errors(graph));
          rep.results.push_back(identical_definitions(graph));
        } else {
          manual(level, method, "no automated procedure for this cell");
        }
        break;

      case Level::Context:
        if (method == Method::ApplicationBased) {
          if (!cfg.suite_path) {
            skip(level, method, "no competency suite provided");
            break;
          }
          std::vector<Rule> rules;
          if (cfg.rules_path)
            rules =
                load_rules_json(inputs.read_and_digest(*cfg.rules_path));
          std::vector<CompetencyTask> suite =
              load_suite_json(inputs.read_and_digest(*cfg.suite_path));
          ContextReport context = run_competency_suite(
              graph, suite, rules, cfg.thresholds.triple_cap);
          MetricResult r{"competency_pass_rate", level, method,
                         context.pass_rate, context.degenerate};
          if (context.degenerate) r.note = "suite is empty";
          rep.results.push_back(std::move(r));
          rep.context = std::move(context);
        } else {  // CriteriaBased
          if (!cfg.expert_scores_path)
            skip(level, method, "no expert scores provided");
          // Scores themselves attach below, by criterion level.
        }
        break;

      case Level::Syntactic:
        if (method == Method::CriteriaBased) {
          SyntacticReport sr;
          sr.parse_ok = true;
          for (std::size_t i = 0; i < cfg.ontology_paths.size(); ++i) {
            SyntacticReport one = check_syntax(
                onto_texts[i], detect_format(cfg.ontology_paths[i]),
                cfg.ontology_paths[i]);
            sr.parse_ok = sr.parse_ok && one.parse_ok;
            sr.issues.insert(sr.issues.end(), one.issues.begin(),
                             one.issues.end());
          }
          std::sort(sr.issues.begin(), sr.issues.end());
          sr.issues.erase(std::unique(sr.issues.begin(), sr.issues.end()),
                          sr.issues.end());
          sr.error_count = 0;
          sr.warning_count = 0;
          for (const SyntacticIssue& i : sr.issues) {
            if (i.severity == IssueSeverity::Error)
              ++sr.error_count;
            else
              ++sr.warning_count;
          }
          MetricResult r{"syntactic_issues", level, method,
                         static_cast<double>(sr.error_count +
                                             sr.warning_count)};
          rep.results.push_back(std::move(r));
          rep.syntactic = std::move(sr);
        } else {
          manual(level, method,
                 "no automated procedure; the criteria-based checks cover "
                 "this level");
        }
        break;

      case Level::StructureArchitectureDesign:
        manual(level, method, "manual design review; nothing automated runs");
        break;
    }
  }

  if (cfg.expert_scores_path) {
    std::vector<ExpertScore> scores =
        load_expert_scores_json(inputs.read_and_digest(*cfg.expert_scores_path));
    for (MetricResult& r : ingest_expert_scores(scores)) {
      if (cells.count({r.level, Method::CriteriaBased})) {
        rep.results.push_back(std::move(r));
      } else {
        inputs.note_once("expert scores for the " + to_string(r.level) +
                         " level ignored: cell not selected");
      }
    }
  }

  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const MetricResult& a, const MetricResult& b) {
                     if (a.level != b.level)
                       return static_cast<int>(a.level) <
                              static_cast<int>(b.level);
                     if (a.method != b.method)
                       return static_cast<int>(a.method) <
                              static_cast<int>(b.method);
                     return a.name < b.name;
                   });

  rep.aggregates.consistency_errors = count_by_name(
      rep.results, {"circularity_errors", "partition_errors",
                    "semantic_inconsistency_errors"});
  rep.aggregates.conciseness_errors = count_by_name(
      rep.results, {"redundancy_errors", "grammatical_redundancy_errors",
                    "identical_definitions"});
  if (rep.triple_count > 0) {
    rep.aggregates.consistency_per_1000 =
        1000.0 * static_cast<double>(rep.aggregates.consistency_errors) /
        static_cast<double>(rep.triple_count);
    rep.aggregates.conciseness_per_1000 =
        1000.0 * static_cast<double>(rep.aggregates.conciseness_errors) /
        static_cast<double>(rep.triple_count);
  }

  for (Level level : kAllLevels) {
    if (!rep.plan.selected_levels().count(level)) continue;
    LevelSummary summary{level, "", ""};
    bool any = false, flagged = false;
    for (const MetricResult& r : rep.results) {
      if (r.level != level) continue;
      any = true;
      if (!r.findings.empty()) flagged = true;
    }
    if (level == Level::Context && rep.context &&
        rep.context->pass_rate < 1.0)
      flagged = true;
    if (level == Level::Syntactic && rep.syntactic &&
        !rep.syntactic->issues.empty())
      flagged = true;
    if (!any) {
      summary.status = "skipped";
      summary.reason = "no automated method produced results";
    } else {
      summary.status = flagged ? "findings" : "pass";
    }
    rep.level_summaries.push_back(std::move(summary));
  }

  rep.input_digests.assign(digests.begin(), digests.end());
  rep.notes = std::move(notes);
  return rep;
}

namespace {

ordered_json finding_to_json(const Finding& f) {
  ordered_json j;
  j["kind"] = to_string(f.kind);
  ordered_json subjects = ordered_json::array();
  for (const Iri& s : f.subjects) subjects.push_back(s.value());
  j["subjects"] = std::move(subjects);
  j["detail"] = f.detail;
  return j;
}

ordered_json result_to_json(const MetricResult& r) {
  ordered_json j;
  j["name"] = r.name;
  j["level"] = to_string(r.level);
  j["method"] = to_string(r.method);
  j["value"] = r.value;
  j["degenerate"] = r.degenerate;
  j["note"] = r.note;
  ordered_json findings = ordered_json::array();
  for (const Finding& f : r.findings) findings.push_back(finding_to_json(f));
  j["findings"] = std::move(findings);
  return j;
}

ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["tool_version"] = r.tool_version;

  ordered_json purposes = ordered_json::array();
  for (Purpose p : kAllPurposes)
    if (r.plan.purposes.count(p)) purposes.push_back(to_string(p));
  j["purposes"] = std::move(purposes);

  j["resource_flags"] = {
      {"gold_standard_available", r.plan.resource_flags.gold_standard_available},
      {"corpus_available", r.plan.resource_flags.corpus_available},
      {"application_available", r.plan.resource_flags.application_available},
      {"built_from_data_sources",
       r.plan.resource_flags.built_from_data_sources},
  };

  ordered_json plan = ordered_json::array();
  for (const PlanEntry& e : r.plan.entries) {
    ordered_json entry;
    entry["purpose"] = to_string(e.purpose);
    entry["level"] = to_string(e.level);
    entry["importance"] = to_string(e.importance);
    entry["status"] = to_string(e.status);
    ordered_json methods = ordered_json::array();
    for (Method m : e.methods) methods.push_back(to_string(m));
    entry["methods"] = std::move(methods);
    entry["rationale"] = e.rationale;
    plan.push_back(std::move(entry));
  }
  j["plan"] = std::move(plan);

  j["triple_count"] = r.triple_count;
  j["thresholds"] = {{"similarity", r.thresholds.similarity},
                     {"term_k", r.thresholds.term_k},
                     {"window", r.thresholds.window},
                     {"triple_cap", r.thresholds.triple_cap}};
  j["overlay_source"] = r.overlay_source;

  ordered_json results = ordered_json::array();
  for (const MetricResult& m : r.results) results.push_back(result_to_json(m));
  j["results"] = std::move(results);

  if (r.context) {
    ordered_json tasks = ordered_json::array();
    for (const TaskOutcome& t : r.context->outcomes) {
      tasks.push_back({{"task_id", t.task_id},
                       {"passed", t.passed},
                       {"reason", t.reason},
                       {"actual", t.actual}});
    }
    j["context"] = {{"pass_rate", r.context->pass_rate},
                    {"degenerate", r.context->degenerate},
                    {"tasks", std::move(tasks)}};
  } else {
    j["context"] = nullptr;
  }

  if (r.syntactic) {
    ordered_json issues = ordered_json::array();
    for (const SyntacticIssue& i : r.syntactic->issues) {
      issues.push_back({{"severity", to_string(i.severity)},
                        {"code", i.code},
                        {"subject", i.subject},
                        {"message", i.message}});
    }
    j["syntactic"] = {{"parse_ok", r.syntactic->parse_ok},
                      {"error_count", r.syntactic->error_count},
                      {"warning_count", r.syntactic->warning_count},
                      {"issues", std::move(issues)}};
  } else {
    j["syntactic"] = nullptr;
  }

  ordered_json summaries = ordered_json::array();
  for (const LevelSummary& s : r.level_summaries) {
    summaries.push_back({{"level", to_string(s.level)},
                         {"status", s.status},
                         {"reason", s.reason}});
  }
  j["level_summaries"] = std::move(summaries);

  j["aggregates"] = {
      {"consistency_errors", r.aggregates.consistency_errors},
      {"conciseness_errors", r.aggregates.conciseness_errors},
      {"consistency_per_1000", r.aggregates.consistency_per_1000},
      {"conciseness_per_1000", r.aggregates.conciseness_per_1000}};

  ordered_json digests = ordered_json::array();
  for (const auto& [path, digest] : r.input_digests)
    digests.push_back({{"path", path}, {"sha256", digest}});
  j["input_digests"] = std::move(digests);

  j["notes"] = r.notes;
  return j;
}

std::string render_markdown(const Report& r) {
  std::ostringstream out;
  out << "# Ontology evaluation report\n\n";
  out << "Tool version " << r.tool_version << ", " << r.triple_count
      << " triples.\n\n";

  out << "## Purposes\n\n";
  for (Purpose p : kAllPurposes)
    if (r.plan.purposes.count(p)) out << "- " << to_string(p) << "\n";
  out << "\n## Plan\n\n";
  out << "| purpose | level | importance | status | methods | rationale |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const PlanEntry& e : r.plan.entries) {
    out << "| " << to_string(e.purpose) << " | " << to_string(e.level)
        << " | " << to_string(e.importance) << " | " << to_string(e.status)
        << " | ";
    for (std::size_t i = 0; i < e.methods.size(); ++i)
      out << (i ? ", " : "") << to_string(e.methods[i]);
    out << " | " << e.rationale << " |\n";
  }

  for (const LevelSummary& s : r.level_summaries) {
    out << "\n## Level: " << to_string(s.level) << "\n\n";
    out << "Status: " << s.status;
    if (!s.reason.empty()) out << " (" << s.reason << ")";
    out << "\n";

    bool any_results = false, any_findings = false;
    for (const MetricResult& m : r.results) {
      if (m.level != s.level) continue;
      if (!any_results) {
        out << "\n| method | metric | value | findings |\n";
        out << "|---|---|---|---|\n";
        any_results = true;
      }
      out << "| " << to_string(m.method) << " | " << m.name << " | "
          << m.value;
      if (m.degenerate) out << " (degenerate)";
      out << " | " << m.findings.size() << " |\n";
      any_findings = any_findings || !m.findings.empty();
    }
    if (any_findings) {
      out << "\n";
      for (const MetricResult& m : r.results) {
        if (m.level != s.level) continue;
        for (const Finding& f : m.findings)
          out << "- [" << to_string(f.kind) << "] " << f.detail << "\n";
      }
    } else {
      out << "\nNo findings.\n";
    }
  }

  if (r.context) {
    out << "\n## Competency tasks\n\n";
    for (const TaskOutcome& t : r.context->outcomes) {
      out << "- " << t.task_id << ": " << (t.passed ? "pass" : "fail");
      if (!t.reason.empty()) out << " (" << t.reason << ")";
      out << "\n";
    }
    out << "\nPass rate: " << r.context->pass_rate << "\n";
  }

  if (r.syntactic) {
    out << "\n## Syntactic issues\n\n";
    if (r.syntactic->issues.empty()) {
      out << "None.\n";
    } else {
      for (const SyntacticIssue& i : r.syntactic->issues) {
        out << "- " << to_string(i.severity) << " " << i.code;
        if (!i.subject.empty()) out << " <" << i.subject << ">";
        out << ": " << i.message << "\n";
      }
    }
  }

  out << "\n## Aggregates\n\n";
  out << "- consistency errors: " << r.aggregates.consistency_errors
      << " (" << r.aggregates.consistency_per_1000 << " per 1000 triples)\n";
  out << "- conciseness errors: " << r.aggregates.conciseness_errors << " ("
      << r.aggregates.conciseness_per_1000 << " per 1000 triples)\n";

  if (!r.notes.empty()) {
    out << "\n## Notes\n\n";
    for (const std::string& n : r.notes) out << "- " << n << "\n";
  }

  out << "\n## Inputs\n\n";
  for (const auto& [path, digest] : r.input_digests)
    out << "- " << path << " " << digest << "\n";
  return out.str();
}

}  // namespace

std::string render_report(const Report& r, const std::string& format) {
  if (format == "json") return report_to_json(r).dump(2) + "\n";
  if (format == "markdown") return render_markdown(r);
  throw ConfigError("unknown report format '" + format + "'");
}

namespace {

const ordered_json& need(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string("report: missing key '") + key + "'");
  return *it;
}

template <typename T, typename Fn>
T parse_enum(const ordered_json& j, const char* what, Fn from_string_fn) {
  if (!j.is_string())
    throw ValidationError(std::string("report: ") + what + " must be a string");
  auto v = from_string_fn(j.get<std::string>());
  if (!v)
    throw ValidationError(std::string("report: bad ") + what + " '" +
                          j.get<std::string>() + "'");
  return *v;
}

Finding finding_from_json(const ordered_json& j) {
  Finding f;
  f.kind = parse_enum<FindingKind>(need(j, "kind"), "finding kind",
                                   finding_kind_from_string);
  for (const ordered_json& s : need(j, "subjects")) {
    if (!s.is_string())
      throw ValidationError("report: finding subjects must be strings");
    f.subjects.push_back(Iri(s.get<std::string>()));
  }
  f.detail = need(j, "detail").get<std::string>();
  return f;
}

MetricResult result_from_json(const ordered_json& j) {
  MetricResult r;
  r.name = need(j, "name").get<std::string>();
  r.level = parse_enum<Level>(need(j, "level"), "level", level_from_string);
  r.method =
      parse_enum<Method>(need(j, "method"), "method", method_from_string);
  r.value = need(j, "value").get<double>();
  r.degenerate = need(j, "degenerate").get<bool>();
  r.note = need(j, "note").get<std::string>();
  for (const ordered_json& f : need(j, "findings"))
    r.findings.push_back(finding_from_json(f));
  return r;
}

}  // namespace

Report parse_report(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("report: not valid JSON");
  if (!j.is_object()) throw ValidationError("report: must be a JSON object");

  Report r;
  r.tool_version = need(j, "tool_version").get<std::string>();

  for (const ordered_json& p : need(j, "purposes"))
    r.plan.purposes.insert(
        parse_enum<Purpose>(p, "purpose", purpose_from_string));

  const ordered_json& flags = need(j, "resource_flags");
  r.plan.resource_flags.gold_standard_available =
      need(flags, "gold_standard_available").get<bool>();
  r.plan.resource_flags.corpus_available =
      need(flags, "corpus_available").get<bool>();
  r.plan.resource_flags.application_available =
      need(flags, "application_available").get<bool>();
  r.plan.resource_flags.built_from_data_sources =
      need(flags, "built_from_data_sources").get<bool>();

  for (const ordered_json& e : need(j, "plan")) {
    PlanEntry entry;
    entry.purpose =
        parse_enum<Purpose>(need(e, "purpose"), "purpose", purpose_from_string);
    entry.level =
        parse_enum<Level>(need(e, "level"), "level", level_from_string);
    std::string importance = need(e, "importance").get<std::string>();
    if (importance != "primary" && importance != "universal")
      throw ValidationError("report: bad importance '" + importance + "'");
    entry.importance = importance == "primary" ? Importance::Primary
                                               : Importance::Universal;
    std::string status = need(e, "status").get<std::string>();
    if (status != "selected" && status != "excluded")
      throw ValidationError("report: bad status '" + status + "'");
    entry.status =
        status == "selected" ? EntryStatus::Selected : EntryStatus::Excluded;
    for (const ordered_json& m : need(e, "methods"))
      entry.methods.push_back(
          parse_enum<Method>(m, "method", method_from_string));
    entry.rationale = need(e, "rationale").get<std::string>();
    r.plan.entries.push_back(std::move(entry));
  }

  r.triple_count = need(j, "triple_count").get<std::size_t>();
  const ordered_json& thresholds = need(j, "thresholds");
  r.thresholds.similarity = need(thresholds, "similarity").get<double>();
  r.thresholds.term_k = need(thresholds, "term_k").get<std::size_t>();
  r.thresholds.window = need(thresholds, "window").get<std::size_t>();
  r.thresholds.triple_cap = need(thresholds, "triple_cap").get<std::size_t>();
  r.overlay_source = need(j, "overlay_source").get<std::string>();

  for (const ordered_json& m : need(j, "results"))
    r.results.push_back(result_from_json(m));

  const ordered_json& context = need(j, "context");
  if (!context.is_null()) {
    ContextReport c;
    c.pass_rate = need(context, "pass_rate").get<double>();
    c.degenerate = need(context, "degenerate").get<bool>();
    for (const ordered_json& t : need(context, "tasks")) {
      TaskOutcome outcome;
      outcome.task_id = need(t, "task_id").get<std::string>();
      outcome.passed = need(t, "passed").get<bool>();
      outcome.reason = need(t, "reason").get<std::string>();
      for (const ordered_json& row : need(t, "actual")) {
        if (!row.is_string())
          throw ValidationError("report: task rows must be strings");
        outcome.actual.push_back(row.get<std::string>());
      }
      c.outcomes.push_back(std::move(outcome));
    }
    r.context = std::move(c);
  }

  const ordered_json& syntactic = need(j, "syntactic");
  if (!syntactic.is_null()) {
    SyntacticReport s;
    s.parse_ok = need(syntactic, "parse_ok").get<bool>();
    s.error_count = need(syntactic, "error_count").get<std::size_t>();
    s.warning_count = need(syntactic, "warning_count").get<std::size_t>();
    for (const ordered_json& i : need(syntactic, "issues")) {
      SyntacticIssue issue;
      std::string severity = need(i, "severity").get<std::string>();
      if (severity != "error" && severity != "warning")
        throw ValidationError("report: bad severity '" + severity + "'");
      issue.severity = severity == "error" ? IssueSeverity::Error
                                           : IssueSeverity::Warning;
      issue.code = need(i, "code").get<std::string>();
      issue.subject = need(i, "subject").get<std::string>();
      issue.message = need(i, "message").get<std::string>();
      s.issues.push_back(std::move(issue));
    }
    r.syntactic = std::move(s);
  }

  for (const ordered_json& s : need(j, "level_summaries")) {
    LevelSummary summary;
    summary.level =
        parse_enum<Level>(need(s, "level"), "level", level_from_string);
    summary.status = need(s, "status").get<std::string>();
    summary.reason = need(s, "reason").get<std::string>();
    r.level_summaries.push_back(std::move(summary));
  }

  const ordered_json& aggregates = need(j, "aggregates");
  r.aggregates.consistency_errors =
      need(aggregates, "consistency_errors").get<std::size_t>();
  r.aggregates.conciseness_errors =
      need(aggregates, "conciseness_errors").get<std::size_t>();
  r.aggregates.consistency_per_1000 =
      need(aggregates, "consistency_per_1000").get<double>();
  r.aggregates.conciseness_per_1000 =
      need(aggregates, "conciseness_per_1000").get<double>();

  for (const ordered_json& d : need(j, "input_digests"))
    r.input_digests.emplace_back(need(d, "path").get<std::string>(),
                                 need(d, "sha256").get<std::string>());

  for (const ordered_json& n : need(j, "notes")) {
    if (!n.is_string())
      throw ValidationError("report: notes must be strings");
    r.notes.push_back(n.get<std::string>());
  }
  return r;
}

}  // namespace onteval
