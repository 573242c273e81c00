// onteval.cpp : command-line front end
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "onteval/alignment.hpp"
#include "onteval/competency.hpp"
#include "onteval/config.hpp"
#include "onteval/corpus.hpp"
#include "onteval/errors.hpp"
#include "onteval/framework.hpp"
#include "onteval/inference.hpp"
#include "onteval/ntriples.hpp"
#include "onteval/ontology.hpp"
#include "onteval/query.hpp"
#include "onteval/report.hpp"
#include "onteval/syntax_check.hpp"
#include "onteval/turtle.hpp"

namespace {

using namespace onteval;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw IoError("cannot write " + path);
}

TripleSet parse_file(const std::string& path, RdfFormat fmt) {
  std::string text = read_file(path);
  return fmt == RdfFormat::Turtle ? parse_turtle_subset(text, path)
                                  : parse_ntriples(text, path);
}

OntologyGraph load_graph(const std::string& path) {
  return build_ontology(parse_file(path, detect_format(path)));
}

Corpus load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw IoError("corpus directory " + dir + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<DocumentText> docs;
  for (const fs::path& f : files)
    docs.push_back({f.filename().string(), read_file(f.string())});
  return ingest_corpus(docs);
}

std::string fixed4(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << v;
  return out.str();
}

int run_validate(const std::string& path, const std::string& format) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  }
  RdfFormat fmt = format.empty()
                      ? detect_format(path)
                      : (format == "turtle" ? RdfFormat::Turtle
                                            : RdfFormat::NTriples);
  SyntacticReport rep = check_syntax(text, fmt, path);
  for (const SyntacticIssue& issue : rep.issues) {
    std::cout << to_string(issue.severity) << " " << issue.code;
    if (!issue.subject.empty()) std::cout << " " << issue.subject;
    std::cout << ": " << issue.message << "\n";
  }
  std::cout << path << ": " << rep.error_count << " errors, "
            << rep.warning_count << " warnings\n";
  return rep.error_count > 0 ? 1 : 0;
}

void print_plan(const EvaluationPlan& plan) {
  std::cout << "purposes:";
  for (Purpose p : plan.purposes) std::cout << " " << to_string(p);
  std::cout << "\n\n";
  std::cout << std::left << std::setw(36) << "PURPOSE" << std::setw(22)
            << "LEVEL" << std::setw(11) << "IMPORTANCE" << std::setw(10)
            << "STATUS"
            << "METHODS\n";
  for (const PlanEntry& e : plan.entries) {
    std::cout << std::left << std::setw(36) << to_string(e.purpose)
              << std::setw(22) << to_string(e.level) << std::setw(11)
              << to_string(e.importance) << std::setw(10)
              << to_string(e.status);
    if (e.status == EntryStatus::Excluded) {
      std::cout << e.rationale;
    } else {
      for (std::size_t i = 0; i < e.methods.size(); ++i)
        std::cout << (i ? ", " : "") << to_string(e.methods[i]);
    }
    std::cout << "\n";
  }
}

void print_plan_json(const EvaluationPlan& plan) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const PlanEntry& e : plan.entries) {
    nlohmann::ordered_json entry;
    entry["purpose"] = to_string(e.purpose);
    entry["level"] = to_string(e.level);
    entry["importance"] = to_string(e.importance);
    entry["status"] = to_string(e.status);
    entry["methods"] = nlohmann::ordered_json::array();
    for (Method m : e.methods) entry["methods"].push_back(to_string(m));
    entry["rationale"] = e.rationale;
    j.push_back(std::move(entry));
  }
  std::cout << j.dump(2) << "\n";
}

int run_plan(const std::string& config_path, bool as_json) {
  RunConfig cfg = parse_run_config(read_file(config_path), config_path);
  SuitabilityMatrix matrix = apply_overlay(cfg);
  EvaluationPlan plan;
  try {
    plan = build_plan(cfg.purposes, effective_flags(cfg), cfg.exclusions,
                      matrix, cfg.include_structure_level);
  } catch (const PlanError& e) {
    throw ConfigError(e.what());
  }
  if (as_json)
    print_plan_json(plan);
  else
    print_plan(plan);
  return 0;
}

int run_evaluate(const std::string& config_path, const std::string& out_path,
                 const std::string& md_path) {
  RunConfig cfg = parse_run_config(read_file(config_path), config_path);
  Report rep = run_pipeline(cfg);
  std::string json = render_report(rep, "json");
  if (out_path.empty()) {
    std::cout << json;
  } else {
    write_file(out_path, json);
    std::cout << "report written to " << out_path << "\n";
  }
  if (!md_path.empty()) {
    write_file(md_path, render_report(rep, "markdown"));
    std::cout << "markdown written to " << md_path << "\n";
  }
  bool has_errors = rep.syntactic && rep.syntactic->error_count > 0;
  return has_errors ? 1 : 0;
}

int run_compare(const std::string& candidate_path, const std::string& gold_path,
                double threshold) {
  OntologyGraph candidate = load_graph(candidate_path);
  OntologyGraph gold = load_graph(gold_path);
  Alignment a = align_lexicon(candidate, gold, threshold);

  std::cout << "pairs (" << a.pairs.size() << ", threshold "
            << fixed4(threshold) << "):\n";
  for (const MatchPair& p : a.pairs)
    std::cout << "  <" << p.candidate.value() << "> ~ <" << p.gold.value()
              << ">  " << fixed4(p.similarity) << "  [\"" << p.candidate_form
              << "\" ~ \"" << p.gold_form << "\"]\n";
  std::cout << "unmatched candidate (" << a.unmatched_candidate.size()
            << "):\n";
  for (const Iri& iri : a.unmatched_candidate)
    std::cout << "  <" << iri.value() << ">\n";
  std::cout << "unmatched gold (" << a.unmatched_gold.size() << "):\n";
  for (const Iri& iri : a.unmatched_gold)
    std::cout << "  <" << iri.value() << ">\n";

  std::size_t candidate_count = a.pairs.size() + a.unmatched_candidate.size();
  std::size_t gold_count = a.pairs.size() + a.unmatched_gold.size();
  for (const MetricResult& r :
       lexical_precision_recall(a, candidate_count, gold_count))
    std::cout << std::left << std::setw(20) << r.name << fixed4(r.value)
              << "\n";
  try {
    MetricResult overlap = taxonomic_overlap(candidate, gold, a);
    std::cout << std::left << std::setw(20) << overlap.name
              << fixed4(overlap.value)
              << (overlap.degenerate ? "  (" + overlap.note + ")" : "")
              << "\n";
  } catch (const CyclicGraphError& e) {
    std::cout << std::left << std::setw(20) << "taxonomic_overlap"
              << "unavailable: " << e.what() << "\n";
  }
  return 0;
}

int run_corpus_fit(const std::string& ontology_path,
                   const std::string& corpus_dir, std::size_t top_k,
                   std::size_t window) {
  OntologyGraph g = load_graph(ontology_path);
  Corpus c = load_corpus_dir(corpus_dir);

  std::cout << "documents          " << c.documents.size() << "\n";
  std::cout << "total_tokens       " << c.total_tokens << "\n";

  CorpusFit fit = lexical_coverage(g, c, top_k);
  auto show = [](const MetricResult& r) {
    std::cout << std::left << std::setw(19) << r.name << fixed4(r.value)
              << (r.degenerate ? "  (" + r.note + ")" : "") << "\n";
  };
  show(fit.coverage);
  show(fit.focus);
  show(structural_fit(g, c, window));

  std::cout << "top terms:\n";
  TermRanking terms = extract_terms(c, top_k);
  for (std::size_t i = 0; i < terms.size(); ++i)
    std::cout << "  " << std::right << std::setw(3) << i + 1 << ". "
              << std::left << std::setw(28) << terms[i].term << "tf "
              << std::setw(6) << terms[i].tf << "df " << std::setw(6)
              << terms[i].df << "score " << fixed4(terms[i].score) << "\n";
  return 0;
}

int run_query(const std::string& ontology_path, const std::string& query_path,
              const std::string& rules_path, bool materialize) {
  GraphPatternQuery q = parse_query(read_file(query_path));
  OntologyGraph g = load_graph(ontology_path);
  std::vector<Rule> rules;
  if (!rules_path.empty()) rules = load_rules_json(read_file(rules_path));
  // Rules only take effect through materialization, so --rules implies it.
  if (materialize || !rules.empty()) g = materialize_inferences(g, rules);

  QueryResult result = evaluate_query(g, q);
  for (std::size_t i = 0; i < result.variables.size(); ++i)
    std::cout << (i ? "\t" : "") << "?" << result.variables[i];
  std::cout << "\n";
  for (const std::vector<Term>& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? "\t" : "") << term_to_string(row[i]);
    std::cout << "\n";
  }
  std::cout << result.rows.size()
            << (result.rows.size() == 1 ? " row\n" : " rows\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontology evaluation toolkit"};
  app.require_subcommand(1);

  std::string v_file, v_format;
  auto* validate =
      app.add_subcommand("validate", "parse an RDF file and lint the graph");
  validate->add_option("file", v_file, "RDF file to check")->required();
  validate->add_option("--format", v_format, "input format")
      ->check(CLI::IsMember({"ntriples", "turtle"}));

  std::string p_config;
  bool p_json = false;
  auto* plan = app.add_subcommand(
      "plan", "show the evaluation plan a configuration produces");
  plan->add_option("--config", p_config, "run configuration")->required();
  plan->add_flag("--json", p_json, "emit the plan as JSON");

  std::string e_config, e_out, e_md;
  auto* evaluate =
      app.add_subcommand("evaluate", "run the evaluation pipeline");
  evaluate->add_option("--config", e_config, "run configuration")->required();
  evaluate->add_option("--out", e_out, "write the JSON report here");
  evaluate->add_option("--markdown", e_md, "write a markdown report here");

  std::string c_candidate, c_gold;
  double c_threshold = 0.8;
  auto* compare =
      app.add_subcommand("compare", "align an ontology against a gold one");
  compare->add_option("--candidate", c_candidate, "candidate ontology")
      ->required();
  compare->add_option("--gold", c_gold, "gold-standard ontology")->required();
  compare->add_option("--threshold", c_threshold, "similarity threshold")
      ->check(CLI::Range(0.0, 1.0));

  std::string f_ontology, f_corpus;
  std::size_t f_top_k = 50, f_window = 10;
  auto* corpus_fit = app.add_subcommand(
      "corpus-fit", "measure how well an ontology fits a text corpus");
  corpus_fit->add_option("--ontology", f_ontology, "ontology file")
      ->required();
  corpus_fit->add_option("--corpus", f_corpus, "directory of .txt documents")
      ->required();
  corpus_fit->add_option("--top-k", f_top_k, "corpus terms to rank")
      ->check(CLI::PositiveNumber);
  corpus_fit->add_option("--window", f_window, "co-occurrence window")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));

  std::string q_ontology, q_query, q_rules;
  bool q_materialize = false;
  auto* query =
      app.add_subcommand("query", "run a conjunctive query over an ontology");
  query->add_option("--ontology", q_ontology, "ontology file")->required();
  query->add_option("--query", q_query, "file holding the query text")
      ->required();
  query->add_option("--rules", q_rules, "inference rules (implies --materialize)");
  query->add_flag("--materialize", q_materialize,
                  "apply built-in entailments before querying");

  auto* init =
      app.add_subcommand("init", "print a starter configuration file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return run_validate(v_file, v_format);
    if (plan->parsed()) return run_plan(p_config, p_json);
    if (evaluate->parsed()) return run_evaluate(e_config, e_out, e_md);
    if (compare->parsed()) return run_compare(c_candidate, c_gold, c_threshold);
    if (corpus_fit->parsed())
      return run_corpus_fit(f_ontology, f_corpus, f_top_k, f_window);
    if (query->parsed())
      return run_query(q_ontology, q_query, q_rules, q_materialize);
    if (init->parsed()) {
      std::cout << onteval::default_config_json();
      return 0;
    }
  } catch (const onteval::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const onteval::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const onteval::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
