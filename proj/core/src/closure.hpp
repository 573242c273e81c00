// closure.hpp : reflexive-transitive reachability over IRI digraphs.
// Internal to the library; cycle-tolerant via SCC condensation.
#ifndef ONTEVAL_SRC_CLOSURE_HPP
#define ONTEVAL_SRC_CLOSURE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "onteval/rdf.hpp"

namespace onteval::detail {

class Closure {
 public:
  Closure(const std::set<std::pair<Iri, Iri>>& edges,
          const std::set<Iri>& extra_nodes = {}) {
    std::set<Iri> node_set = extra_nodes;
    for (const auto& [a, b] : edges) {
      node_set.insert(a);
      node_set.insert(b);
    }
    nodes_.assign(node_set.begin(), node_set.end());
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
      index_[nodes_[i]] = i;

    const int n = static_cast<int>(nodes_.size());
    std::vector<std::vector<int>> adj(n), radj(n);
    std::vector<bool> self_edge(n, false);
    for (const auto& [a, b] : edges) {
      int u = index_[a], v = index_[b];
      adj[u].push_back(v);
      radj[v].push_back(u);
      if (u == v) self_edge[u] = true;
    }

    // Kosaraju, iterative. Components come out in topological order of the
    // condensation, so every condensation edge goes forward in comp index.
    std::vector<int> order;
    order.reserve(n);
    {
      std::vector<int> state(n, 0);  // 0 unseen, 1 on stack
      std::vector<std::pair<int, std::size_t>> stack;
      for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
          auto& [u, next] = stack.back();
          if (next < adj[u].size()) {
            int v = adj[u][next++];
            if (!state[v]) {
              state[v] = 1;
              stack.push_back({v, 0});
            }
          } else {
            order.push_back(u);
            stack.pop_back();
          }
        }
      }
    }
    comp_.assign(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (comp_[*it] != -1) continue;
      int c = ncomp_++;
      std::vector<int> stack = {*it};
      comp_[*it] = c;
      comp_members_.emplace_back();
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp_members_[c].push_back(u);
        for (int v : radj[u]) {
          if (comp_[v] == -1) {
            comp_[v] = c;
            stack.push_back(v);
          }
        }
      }
    }

    for (int c = 0; c < ncomp_; ++c)
      if (comp_members_[c].size() > 1 ||
          self_edge[comp_members_[c].front()])
        cyclic_comps_.push_back(c);

    std::set<std::pair<int, int>> cedges;
    for (const auto& [a, b] : edges) {
      int cu = comp_[index_[a]], cv = comp_[index_[b]];
      if (cu != cv) cedges.insert({cu, cv});
    }

    words_ = (ncomp_ + 63) / 64;
    closure_.assign(static_cast<std::size_t>(ncomp_) * words_, 0);
    for (int c = ncomp_ - 1; c >= 0; --c) {
      set_bit(c, c);
    }
    // Condensation edges only go to higher comp indexes; sweep backwards.
    std::vector<std::vector<int>> csucc(ncomp_);
    for (const auto& [cu, cv] : cedges) csucc[cu].push_back(cv);
    for (int c = ncomp_ - 1; c >= 0; --c) {
      for (int d : csucc[c]) {
        const std::uint64_t* src = &closure_[static_cast<std::size_t>(d) * words_];
        std::uint64_t* dst = &closure_[static_cast<std::size_t>(c) * words_];
        for (int w = 0; w < words_; ++w) dst[w] |= src[w];
      }
    }
  }

  bool has_cycle() const { return !cyclic_comps_.empty(); }

  // Reflexive: every term reaches itself, known to the graph or not.
  bool reaches(const Iri& from, const Iri& to) const {
    if (from == to) return true;
    auto fi = index_.find(from);
    auto ti = index_.find(to);
    if (fi == index_.end() || ti == index_.end()) return false;
    return test_bit(comp_[fi->second], comp_[ti->second]);
  }

  // Everything reachable from `from`, itself included, sorted.
  std::vector<Iri> reachable_from(const Iri& from) const {
    std::vector<Iri> out;
    auto fi = index_.find(from);
    if (fi == index_.end()) {
      out.push_back(from);
      return out;
    }
    int c = comp_[fi->second];
    for (int d = 0; d < ncomp_; ++d) {
      if (!test_bit(c, d)) continue;
      for (int u : comp_members_[d]) out.push_back(nodes_[u]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Strongly connected pieces with a real cycle (size > 1 or a self edge),
  // members sorted, groups ordered by first member.
  std::vector<std::vector<Iri>> cycles() const {
    std::vector<std::vector<Iri>> out;
    for (int c : cyclic_comps_) {
      std::vector<Iri> group;
      for (int u : comp_members_[c]) group.push_back(nodes_[u]);
      std::sort(group.begin(), group.end());
      out.push_back(std::move(group));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void set_bit(int c, int d) {
    closure_[static_cast<std::size_t>(c) * words_ + d / 64] |=
        std::uint64_t{1} << (d % 64);
  }
  bool test_bit(int c, int d) const {
    return (closure_[static_cast<std::size_t>(c) * words_ + d / 64] >>
            (d % 64)) &
           1;
  }

  std::vector<Iri> nodes_;
  std::map<Iri, int> index_;
  std::vector<int> comp_;
  std::vector<std::vector<int>> comp_members_;
  std::vector<int> cyclic_comps_;
  int ncomp_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> closure_;
};

}  // namespace onteval::detail

#endif  // ONTEVAL_SRC_CLOSURE_HPP
