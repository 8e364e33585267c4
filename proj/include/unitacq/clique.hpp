#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "unitacq/graph.hpp"

namespace unitacq {

namespace detail {

// Candidate vertices are kept in ascending id order. The first maximum found
// is kept, which makes ties resolve toward lexicographically small cliques.
inline void clique_expand(const Graph& g, std::vector<Vertex>& current,
                          const std::vector<Vertex>& candidates, std::vector<Vertex>& best) {
  if (candidates.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  // Greedy colouring of the candidates gives an upper bound on the extension.
  std::vector<std::vector<Vertex>> classes;
  for (auto v : candidates) {
    bool placed = false;
    for (auto& cls : classes) {
      bool clash = std::any_of(cls.begin(), cls.end(), [&](Vertex u) { return g.adjacent(u, v); });
      if (!clash) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({v});
  }
  if (current.size() + classes.size() <= best.size()) return;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (current.size() + (candidates.size() - i) <= best.size()) return;
    auto v = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    }
    current.push_back(v);
    clique_expand(g, current, next, best);
    current.pop_back();
  }
}

}  // namespace detail

// Maximum clique by branch and bound; result sorted ascending.
inline std::vector<Vertex> max_clique(const Graph& g) {
  std::vector<Vertex> best, current, all(g.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  detail::clique_expand(g, current, all, best);
  return best;
}

}  // namespace unitacq
