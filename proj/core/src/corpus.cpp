#include "onteval/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "closure.hpp"
#include "onteval/errors.hpp"
#include "onteval/text.hpp"

namespace onteval {

Corpus ingest_corpus(const std::vector<DocumentText>& docs) {
  Corpus c;
  std::set<std::string> ids;
  for (const DocumentText& d : docs) {
    if (!ids.insert(d.id).second)
      throw DuplicateDocIdError("duplicate document id '" + d.id + "'");
    Document doc;
    doc.id = d.id;
    doc.tokens = tokenize(d.text);
    c.total_tokens += doc.tokens.size();

    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      c.term_frequencies[doc.tokens[i]]++;
      seen.insert(doc.tokens[i]);
      if (i + 1 < doc.tokens.size()) {
        std::string bigram = doc.tokens[i] + " " + doc.tokens[i + 1];
        c.term_frequencies[bigram]++;
        seen.insert(std::move(bigram));
      }
    }
    for (const std::string& t : seen) c.document_frequencies[t]++;
    c.documents.push_back(std::move(doc));
  }
  return c;
}

TermRanking extract_terms(const Corpus& c, std::size_t top_k) {
  if (c.documents.empty())
    throw EmptyCorpusError("corpus has no documents");
  const double n_docs = static_cast<double>(c.documents.size());

  TermRanking ranking;
  for (const auto& [term, tf] : c.term_frequencies) {
    bool bigram = term.find(' ') != std::string::npos;
    if (!bigram && is_stop_word(term)) continue;
    std::size_t df = c.document_frequencies.at(term);
    double score = static_cast<double>(tf) *
                   std::log(1.0 + n_docs / static_cast<double>(df));
    ranking.push_back({term, score, tf, df});
  }
  std::sort(ranking.begin(), ranking.end(),
            [](const ScoredTerm& a, const ScoredTerm& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.term < b.term;
            });
  if (ranking.size() > top_k) ranking.resize(top_k);
  return ranking;
}

namespace {

// Normalized entity labels that can match corpus terms (one or two tokens,
// space-joined).
std::set<std::string> matchable_labels(const OntologyGraph& g) {
  std::set<std::string> out;
  auto add = [&](const Iri& e) {
    for (const std::string& form : g.lexical_forms(e)) {
      std::vector<std::string> toks = tokenize(form);
      if (toks.empty() || toks.size() > 2) continue;
      std::string key = toks[0];
      if (toks.size() == 2) key += " " + toks[1];
      out.insert(std::move(key));
    }
  };
  for (const Iri& e : g.classes()) add(e);
  for (const Iri& e : g.properties()) add(e);
  for (const Iri& e : g.instances()) add(e);
  return out;
}

}  // namespace

CorpusFit lexical_coverage(const OntologyGraph& g, const Corpus& c,
                           std::size_t top_k) {
  if (c.documents.empty())
    throw EmptyCorpusError("corpus has no documents");

  CorpusFit fit;
  fit.coverage.name = "lexical_coverage";
  fit.coverage.level = Level::Lexical;
  fit.coverage.method = Method::DataDriven;
  fit.focus.name = "corpus_focus";
  fit.focus.level = Level::Lexical;
  fit.focus.method = Method::DataDriven;

  std::set<std::string> labels = matchable_labels(g);
  if (labels.empty()) {
    fit.coverage.value = 1.0;
    fit.coverage.degenerate = true;
    fit.coverage.note = "no matchable labels";
  } else {
    std::size_t covered = 0;
    for (const std::string& l : labels) {
      if (c.term_frequencies.count(l)) {
        ++covered;
        continue;
      }
      Finding f;
      f.kind = FindingKind::MissingTerm;
      f.detail = l;
      fit.coverage.findings.push_back(std::move(f));
    }
    fit.coverage.value =
        static_cast<double>(covered) / static_cast<double>(labels.size());
  }

  TermRanking top = extract_terms(c, top_k);
  if (top.empty()) {
    fit.focus.value = 1.0;
    fit.focus.degenerate = true;
    fit.focus.note = "no ranked terms";
  } else {
    std::size_t hit = 0;
    for (const ScoredTerm& t : top) {
      if (labels.count(t.term)) {
        ++hit;
        continue;
      }
      Finding f;
      f.kind = FindingKind::MissingTerm;
      f.detail = t.term;
      fit.focus.findings.push_back(std::move(f));
    }
    std::sort(fit.focus.findings.begin(), fit.focus.findings.end());
    fit.focus.value = static_cast<double>(hit) / static_cast<double>(top.size());
  }
  return fit;
}

MetricResult structural_fit(const OntologyGraph& g, const Corpus& c,
                            std::size_t window) {
  if (window < 2) throw std::invalid_argument("window must be at least 2");
  if (detail::Closure(g.subclass_edges(), g.classes()).has_cycle())
    throw CyclicGraphError("subclass graph has a cycle");

  MetricResult r;
  r.name = "structural_fit";
  r.level = Level::Hierarchy;
  r.method = Method::DataDriven;

  // Start positions of every unigram and bigram, per document.
  std::vector<std::map<std::string, std::vector<std::size_t>>> positions;
  positions.reserve(c.documents.size());
  for (const Document& d : c.documents) {
    std::map<std::string, std::vector<std::size_t>> pos;
    for (std::size_t i = 0; i < d.tokens.size(); ++i) {
      pos[d.tokens[i]].push_back(i);
      if (i + 1 < d.tokens.size())
        pos[d.tokens[i] + " " + d.tokens[i + 1]].push_back(i);
    }
    positions.push_back(std::move(pos));
  }

  auto entity_terms = [&](const Iri& e) {
    std::set<std::string> out;
    for (const std::string& form : g.lexical_forms(e)) {
      std::vector<std::string> toks = tokenize(form);
      if (toks.empty() || toks.size() > 2) continue;
      std::string key = toks[0];
      if (toks.size() == 2) key += " " + toks[1];
      if (c.term_frequencies.count(key)) out.insert(std::move(key));
    }
    return out;
  };

  std::size_t measurable = 0, close = 0;
  for (const auto& [child, parent] : g.subclass_edges()) {
    std::set<std::string> child_terms = entity_terms(child);
    std::set<std::string> parent_terms = entity_terms(parent);
    if (child_terms.empty() || parent_terms.empty()) continue;
    ++measurable;

    bool found = false;
    for (const auto& pos : positions) {
      for (const std::string& ct : child_terms) {
        auto ci = pos.find(ct);
        if (ci == pos.end()) continue;
        for (const std::string& pt : parent_terms) {
          auto pi = pos.find(pt);
          if (pi == pos.end()) continue;
          for (std::size_t a : ci->second) {
            for (std::size_t b : pi->second) {
              if (ct == pt && a == b) continue;
              std::size_t gap = a > b ? a - b : b - a;
              if (gap <= window) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (found) ++close;
  }

  if (measurable == 0) {
    r.value = 1.0;
    r.degenerate = true;
    r.note = "no subclass links with corpus-attested labels";
  } else {
    r.value = static_cast<double>(close) / static_cast<double>(measurable);
    r.note = std::to_string(close) + " of " + std::to_string(measurable) +
             " measurable subclass links attested within the window";
  }
  return r;
}

}  // namespace onteval
