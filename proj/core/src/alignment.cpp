#include "onteval/alignment.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "closure.hpp"
#include "onteval/errors.hpp"
#include "onteval/text.hpp"

namespace onteval {

double string_similarity(const std::string& a, const std::string& b) {
  std::string na = normalize_label(a);
  std::string nb = normalize_label(b);
  if (na.empty() && nb.empty()) return 1.0;
  std::size_t longest = std::max(na.size(), nb.size());
  return 1.0 - static_cast<double>(edit_distance(na, nb)) /
                   static_cast<double>(longest);
}

namespace {

std::vector<Iri> all_entities(const OntologyGraph& g) {
  std::set<Iri> out;
  out.insert(g.classes().begin(), g.classes().end());
  out.insert(g.properties().begin(), g.properties().end());
  out.insert(g.instances().begin(), g.instances().end());
  return {out.begin(), out.end()};
}

struct ScoredPair {
  double similarity;
  Iri candidate;
  Iri gold;
  std::string candidate_form;
  std::string gold_form;
};

}  // namespace

Alignment align_lexicon(const OntologyGraph& candidate,
                        const OntologyGraph& gold, double threshold) {
  std::vector<Iri> cand_entities = all_entities(candidate);
  std::vector<Iri> gold_entities = all_entities(gold);

  std::vector<ScoredPair> scored;
  for (const Iri& ce : cand_entities) {
    std::vector<std::string> cforms = candidate.lexical_forms(ce);
    for (const Iri& ge : gold_entities) {
      std::vector<std::string> gforms = gold.lexical_forms(ge);
      ScoredPair best{-1.0, ce, ge, "", ""};
      for (const std::string& cf : cforms) {
        for (const std::string& gf : gforms) {
          double s = string_similarity(cf, gf);
          if (s > best.similarity) best = {s, ce, ge, cf, gf};
        }
      }
      if (best.similarity >= threshold) scored.push_back(std::move(best));
    }
  }
  std::sort(scored.begin(), scored.end(),
            [](const ScoredPair& a, const ScoredPair& b) {
              if (a.similarity != b.similarity)
                return a.similarity > b.similarity;
              if (a.candidate != b.candidate) return a.candidate < b.candidate;
              return a.gold < b.gold;
            });

  Alignment out;
  out.threshold = threshold;
  std::set<Iri> cand_taken, gold_taken;
  for (const ScoredPair& p : scored) {
    if (cand_taken.count(p.candidate) || gold_taken.count(p.gold)) continue;
    cand_taken.insert(p.candidate);
    gold_taken.insert(p.gold);
    out.pairs.push_back(
        {p.candidate, p.gold, p.similarity, p.candidate_form, p.gold_form});
  }
  for (const Iri& ce : cand_entities)
    if (!cand_taken.count(ce)) out.unmatched_candidate.push_back(ce);
  for (const Iri& ge : gold_entities)
    if (!gold_taken.count(ge)) out.unmatched_gold.push_back(ge);
  return out;
}

std::vector<MetricResult> lexical_precision_recall(const Alignment& a,
                                                   std::size_t candidate_count,
                                                   std::size_t gold_count) {
  std::size_t matched = a.pairs.size();
  if (candidate_count < matched || gold_count < matched)
    throw ValidationError(
        "entity count is smaller than the number of aligned pairs");
  double precision =
      candidate_count == 0
          ? 0.0
          : static_cast<double>(matched) / static_cast<double>(candidate_count);
  double recall = gold_count == 0 ? 0.0
                                  : static_cast<double>(matched) /
                                        static_cast<double>(gold_count);
  double f1 = (precision + recall) == 0.0
                  ? 0.0
                  : 2.0 * precision * recall / (precision + recall);
  return {
      {"lexical_precision", Level::Lexical, Method::GoldStandard, precision},
      {"lexical_recall", Level::Lexical, Method::GoldStandard, recall},
      {"lexical_f1", Level::Lexical, Method::GoldStandard, f1},
  };
}

MetricResult taxonomic_overlap(const OntologyGraph& candidate,
                               const OntologyGraph& gold, const Alignment& a) {
  detail::Closure cand_up(candidate.subclass_edges(), candidate.classes());
  if (cand_up.has_cycle())
    throw CyclicGraphError("candidate subclass graph has a cycle");
  detail::Closure gold_up(gold.subclass_edges(), gold.classes());
  if (gold_up.has_cycle())
    throw CyclicGraphError("gold subclass graph has a cycle");

  std::map<Iri, Iri> to_gold;
  for (const MatchPair& m : a.pairs) to_gold.emplace(m.candidate, m.gold);

  MetricResult r;
  r.name = "taxonomic_overlap";
  r.level = Level::Hierarchy;
  r.method = Method::GoldStandard;

  double sum = 0.0;
  for (const MatchPair& m : a.pairs) {
    std::set<Iri> cand_image;
    for (const Iri& anc : cand_up.reachable_from(m.candidate)) {
      if (anc == m.candidate) continue;
      if (auto it = to_gold.find(anc); it != to_gold.end())
        cand_image.insert(it->second);
    }
    std::set<Iri> gold_anc;
    for (const Iri& anc : gold_up.reachable_from(m.gold))
      if (anc != m.gold) gold_anc.insert(anc);

    if (cand_image.empty() && gold_anc.empty()) {
      sum += 1.0;
      continue;
    }
    std::vector<Iri> inter, uni;
    std::set_intersection(cand_image.begin(), cand_image.end(),
                          gold_anc.begin(), gold_anc.end(),
                          std::back_inserter(inter));
    std::set_union(cand_image.begin(), cand_image.end(), gold_anc.begin(),
                   gold_anc.end(), std::back_inserter(uni));
    sum += static_cast<double>(inter.size()) / static_cast<double>(uni.size());
  }
  if (a.pairs.empty()) {
    r.value = 1.0;
    r.degenerate = true;
    r.note = "no matched pairs";
  } else {
    r.value = sum / static_cast<double>(a.pairs.size());
  }
  return r;
}

}  // namespace onteval
