#pragma once

// Deliberately naive reference implementations used as oracles. None of them
// share code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "unitacq/graph.hpp"

namespace oracle {

using unitacq::Edge;
using unitacq::Graph;
using unitacq::Vertex;

constexpr int kInf = 1 << 20;

// Floyd-Warshall distance matrix.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::optional<unsigned> diameter(const Graph& g) {
  auto d = distances(g);
  int best = 0;
  for (auto& row : d)
    for (int x : row) best = std::max(best, x);
  if (best >= kInf) return std::nullopt;
  return static_cast<unsigned>(best);
}

// Shortest cycle: for every edge uv, the shortest u-v path avoiding that edge.
inline std::optional<unsigned> girth(const Graph& g) {
  std::optional<unsigned> best;
  for (auto e : g.edges()) {
    auto h = g.without_edge(e.u, e.v);
    auto d = distances(h)[e.u][e.v];
    if (d < kInf && (!best || static_cast<unsigned>(d + 1) < *best)) best = d + 1;
  }
  return best;
}

// Minimum maximal matching by trying every edge subset.
inline std::size_t min_maximal_matching(const Graph& g) {
  auto es = g.edges();
  std::size_t best = es.size() + 1;
  for (std::uint32_t mask = 0; mask < (1u << es.size()); ++mask) {
    std::vector<char> used(g.order(), 0);
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < es.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (used[es[i].u] || used[es[i].v]) ok = false;
      used[es[i].u] = used[es[i].v] = 1;
      ++size;
    }
    if (!ok || size >= best) continue;
    bool maximal = std::all_of(es.begin(), es.end(), [&](Edge e) { return used[e.u] || used[e.v]; });
    if (maximal) best = size;
  }
  return best;
}

// Minimum support reachable from all-ones, by plain recursive search with
// the whole weight vector as the memo key.
inline std::size_t unit_acquisition(const Graph& g) {
  std::set<std::vector<std::uint32_t>> seen;
  std::size_t best = g.order();
  std::function<void(std::vector<std::uint32_t>&)> go = [&](std::vector<std::uint32_t>& w) {
    if (!seen.insert(w).second) return;
    best = std::min<std::size_t>(best, std::count_if(w.begin(), w.end(), [](auto x) { return x > 0; }));
    for (auto e : g.edges()) {
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (w[a] >= 1 && w[b] >= w[a]) {
          --w[a];
          ++w[b];
          go(w);
          ++w[a];
          --w[b];
        }
      }
    }
  };
  std::vector<std::uint32_t> w(g.order(), 1);
  go(w);
  return best;
}

// All labelled trees on n vertices via Pruefer sequences.
inline std::vector<Graph> labelled_trees(std::size_t n) {
  std::vector<Graph> out;
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::vector<Vertex> seq(n - 2, 0);
  for (;;) {
    std::vector<std::size_t> deg(n, 1);
    for (auto x : seq) ++deg[x];
    std::vector<Edge> es;
    for (auto x : seq) {
      Vertex leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      es.push_back({leaf, x});
      --deg[leaf];
      --deg[x];
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (deg[v] == 1) rest.push_back(v);
    es.push_back({rest[0], rest[1]});
    out.emplace_back(n, es);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

// AHU canonical string of a tree rooted at r.
inline std::string ahu(const Graph& t, Vertex r, Vertex parent) {
  std::vector<std::string> kids;
  for (auto c : t.neighbors(r))
    if (c != parent) kids.push_back(ahu(t, c, r));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

// Canonical form of an unrooted tree: the smallest AHU string over centres.
inline std::string tree_canon(const Graph& t) {
  const auto n = t.order();
  if (n == 1) return "()";
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (auto v : layer)
      for (auto u : t.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = next;
  }
  std::string best;
  for (auto c : layer) {
    auto s = ahu(t, c, c);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Caterpillar test: removing all leaves leaves a path (or nothing).
inline bool is_caterpillar(const Graph& t) {
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) > 1) inner.push_back(v);
  for (auto v : inner) {
    std::size_t inner_nbrs = 0;
    for (auto u : t.neighbors(v)) inner_nbrs += t.degree(u) > 1;
    if (inner_nbrs > 2) return false;
  }
  return true;
}

}  // namespace oracle
