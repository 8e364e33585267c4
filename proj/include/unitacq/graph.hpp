#pragma once

// Graph and weight-configuration data model with the structural queries the
// rest of the library needs (distances, diameter, girth, isomorphism).

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitacq/error.hpp"

namespace unitacq {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
// stored normalized (u < v) and sorted, neighbor lists ascending.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(n) {}

  Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    edges_.reserve(edges.size());
    for (auto e : edges) {
      if (e.u >= n || e.v >= n) {
        throw StructuralError("edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") out of range for n=" +
                              std::to_string(n));
      }
      if (e.u == e.v) {
        throw StructuralError("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw StructuralError("duplicate edge (" + std::to_string(dup->u) + "," +
                            std::to_string(dup->v) + ")");
    }
    for (auto e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::size_t min_degree() const {
    std::size_t d = adjacency_.empty() ? 0 : adjacency_[0].size();
    for (const auto& nb : adjacency_) d = std::min(d, nb.size());
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adjacency_) d = std::max(d, nb.size());
    return d;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    auto es = edges_;
    es.push_back({u, v});
    return Graph(order(), es);
  }

  Graph without_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto es = edges_;
    auto it = std::find(es.begin(), es.end(), Edge{u, v});
    if (it == es.end()) {
      throw StructuralError("no edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    }
    es.erase(it);
    return Graph(order(), es);
  }

  void check(Vertex v) const {
    if (v >= adjacency_.size()) {
      throw StructuralError("vertex " + std::to_string(v) +
                            " out of range for n=" +
                            std::to_string(adjacency_.size()));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # order 5        optional; otherwise n = 1 + max id
//   0 1
//   1 2              blank lines and '#' comments ignored
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::optional<std::size_t> declared_order;
  std::size_t line_no = 0;
  constexpr std::uint64_t kMaxId = 1u << 24;

  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      auto comment = detail::split_ws(detail::trim(line.substr(hash + 1)));
      if (comment.size() == 2 && comment[0] == "order") {
        auto n = detail::parse_uint(comment[1]);
        if (!n || *n > kMaxId) throw ParseError(line_no, "malformed order directive");
        declared_order = static_cast<std::size_t>(*n);
      }
      line = line.substr(0, hash);
    }
    auto tokens = detail::split_ws(detail::trim(line));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex ids, got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    auto u = detail::parse_uint(tokens[0]);
    auto v = detail::parse_uint(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "malformed vertex id");
    if (*u > kMaxId || *v > kMaxId) throw ParseError(line_no, "vertex id too large");
    if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
    Edge e{static_cast<Vertex>(std::min(*u, *v)), static_cast<Vertex>(std::max(*u, *v))};
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == e) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " +
                                      std::to_string(e.v) + " (first on line " +
                                      std::to_string(edge_lines[i]) + ")");
      }
    }
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }

  std::size_t n = 0;
  for (auto e : edges) n = std::max<std::size_t>(n, e.v + 1);
  if (declared_order) {
    if (*declared_order < n) {
      throw ParseError(line_no, "order directive " + std::to_string(*declared_order) +
                                    " smaller than 1 + max id");
    }
    n = *declared_order;
  }
  return Graph(n, edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# order " << g.order() << '\n';
  for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

inline constexpr int kUnreachable = -1;

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  g.check(source);
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (auto y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

// Largest eccentricity; nullopt when the graph is disconnected.
inline std::optional<unsigned> diameter(const Graph& g) {
  unsigned best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int x : bfs_distances(g, v)) {
      if (x == kUnreachable) return std::nullopt;
      best = std::max(best, static_cast<unsigned>(x));
    }
  }
  return best;
}

inline std::optional<unsigned> eccentricity(const Graph& g, Vertex v) {
  unsigned best = 0;
  for (int x : bfs_distances(g, v)) {
    if (x == kUnreachable) return std::nullopt;
    best = std::max(best, static_cast<unsigned>(x));
  }
  return best;
}

// Shortest cycle length; nullopt for forests. A BFS from every root sees each
// shortest cycle through that root as a non-tree edge closing two branches.
inline std::optional<unsigned> girth(const Graph& g) {
  std::optional<unsigned> best;
  const auto n = g.order();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::queue<Vertex> q;
    dist[r] = 0;
    parent[r] = r;
    q.push(r);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      if (best && static_cast<unsigned>(2 * dist[x] + 1) >= *best) break;
      for (auto y : g.neighbors(x)) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          auto len = static_cast<unsigned>(dist[x] + dist[y] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

// Vertex sets of all cycles of the given length, as vertex sequences starting
// at their smallest vertex with the smaller neighbor second. Sorted.
inline std::vector<std::vector<Vertex>> cycles_of_length(const Graph& g, unsigned len) {
  std::vector<std::vector<Vertex>> out;
  if (len < 3) return out;
  std::vector<Vertex> path;
  std::vector<char> on_path(g.order(), 0);
  auto extend = [&](auto&& self, Vertex start) -> void {
    auto last = path.back();
    if (path.size() == len) {
      if (g.adjacent(last, start) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (auto y : g.neighbors(last)) {
      if (y <= start || on_path[y]) continue;
      on_path[y] = 1;
      path.push_back(y);
      self(self, start);
      path.pop_back();
      on_path[y] = 0;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    on_path[s] = 1;
    extend(extend, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Induced subgraph on `vertices` (relabelled 0..k-1 in the given order).
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check(vertices[i]);
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (auto e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      es.push_back({static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v])});
    }
  }
  return Graph(vertices.size(), es);
}

// Backtracking isomorphism test; intended for small templates.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  const auto n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  auto degree_sequence = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_sequence(a) != degree_sequence(b)) return false;

  std::vector<int> map_ab(n, -1), map_ba(n, -1);
  auto assign = [&](auto&& self, Vertex x) -> bool {
    if (x == n) return true;
    for (Vertex y = 0; y < n; ++y) {
      if (map_ba[y] >= 0 || a.degree(x) != b.degree(y)) continue;
      bool ok = true;
      for (Vertex p = 0; p < x && ok; ++p) {
        ok = a.adjacent(x, p) == b.adjacent(y, static_cast<Vertex>(map_ab[p]));
      }
      if (!ok) continue;
      map_ab[x] = static_cast<int>(y);
      map_ba[y] = static_cast<int>(x);
      if (self(self, x + 1)) return true;
      map_ab[x] = -1;
      map_ba[y] = -1;
    }
    return false;
  };
  return assign(assign, 0);
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

class WeightConfig {
 public:
  WeightConfig() = default;
  explicit WeightConfig(std::vector<std::uint32_t> weights) : w_(std::move(weights)) {}

  static WeightConfig ones(std::size_t n) { return WeightConfig(std::vector<std::uint32_t>(n, 1)); }

  std::size_t size() const noexcept { return w_.size(); }
  std::uint32_t operator[](Vertex v) const { return w_.at(v); }
  std::uint32_t& operator[](Vertex v) { return w_.at(v); }
  const std::vector<std::uint32_t>& values() const noexcept { return w_; }

  std::uint64_t total() const { return std::accumulate(w_.begin(), w_.end(), std::uint64_t{0}); }

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;

 private:
  std::vector<std::uint32_t> w_;
};

// ---------------------------------------------------------------------------
// Rooted trees inside a graph
// ---------------------------------------------------------------------------

struct RootedTreeView {
  Vertex root = 0;
  std::vector<std::optional<Vertex>> parent;  // per vertex of the host graph
  std::vector<int> depth;                      // -1 outside the tree

  bool contains(Vertex v) const { return v < depth.size() && depth[v] >= 0; }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < depth.size(); ++v) {
      if (depth[v] >= 0) out.push_back(v);
    }
    return out;
  }

  std::vector<std::vector<Vertex>> children() const {
    std::vector<std::vector<Vertex>> out(depth.size());
    for (Vertex v = 0; v < depth.size(); ++v) {
      if (depth[v] > 0) out[*parent[v]].push_back(v);
    }
    return out;
  }

  // BFS tree from `root` restricted to `allowed` (root implicitly allowed).
  // Vertices of `allowed` unreachable inside the restriction are left out.
  static RootedTreeView bfs(const Graph& g, Vertex root, std::span<const Vertex> allowed) {
    g.check(root);
    std::vector<char> ok(g.order(), 0);
    for (auto v : allowed) {
      g.check(v);
      ok[v] = 1;
    }
    ok[root] = 1;
    RootedTreeView t;
    t.root = root;
    t.parent.assign(g.order(), std::nullopt);
    t.depth.assign(g.order(), -1);
    t.depth[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : g.neighbors(x)) {
        if (ok[y] && t.depth[y] < 0) {
          t.depth[y] = t.depth[x] + 1;
          t.parent[y] = x;
          q.push(y);
        }
      }
    }
    return t;
  }

  static RootedTreeView from_parents(const Graph& g, Vertex root,
                                     std::span<const std::pair<Vertex, Vertex>> child_parent) {
    g.check(root);
    RootedTreeView t;
    t.root = root;
    t.parent.assign(g.order(), std::nullopt);
    t.depth.assign(g.order(), -1);
    t.depth[root] = 0;
    for (auto [c, p] : child_parent) {
      g.check(c);
      g.check(p);
      if (c == root || t.parent[c]) {
        throw StructuralError("vertex " + std::to_string(c) + " given two parents");
      }
      t.parent[c] = p;
    }
    // Resolve depths by walking to the root; reject cycles and dangling links.
    for (auto [c, p] : child_parent) {
      std::vector<Vertex> chain;
      Vertex x = c;
      while (t.depth[x] < 0) {
        if (chain.size() > child_parent.size()) {
          throw StructuralError("parent links contain a cycle");
        }
        chain.push_back(x);
        if (!t.parent[x]) {
          throw StructuralError("vertex " + std::to_string(x) + " does not reach the root");
        }
        x = *t.parent[x];
      }
      int d = t.depth[x];
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) t.depth[*it] = ++d;
    }
    return t;
  }

  // Throws StructuralError unless the view is a tree of `g` rooted at `root`.
  void validate(const Graph& g) const {
    if (parent.size() != g.order() || depth.size() != g.order()) {
      throw StructuralError("tree view sized for a different graph");
    }
    g.check(root);
    if (depth[root] != 0 || parent[root]) throw StructuralError("root must have depth 0 and no parent");
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == root) continue;
      if (depth[v] < 0) {
        if (parent[v]) throw StructuralError("non-member " + std::to_string(v) + " has a parent");
        continue;
      }
      if (!parent[v]) throw StructuralError("member " + std::to_string(v) + " lacks a parent");
      auto p = *parent[v];
      if (!g.adjacent(v, p)) {
        throw StructuralError("tree edge " + std::to_string(v) + "-" + std::to_string(p) +
                              " is not an edge of the graph");
      }
      if (depth[p] < 0 || depth[v] != depth[p] + 1) {
        throw StructuralError("depth of " + std::to_string(v) + " inconsistent with its parent");
      }
    }
  }
};

// Every leaf weighs at most its parent and every other non-root vertex weighs
// strictly less than its parent. Vertices outside the view are not examined.
inline bool is_ascending_tree(const Graph& g, const RootedTreeView& view, const WeightConfig& w) {
  view.validate(g);
  if (w.size() != g.order()) throw StructuralError("weight vector length differs from graph order");
  auto kids = view.children();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!view.contains(v) || v == view.root) continue;
    auto p = *view.parent[v];
    bool leaf = kids[v].empty();
    if (leaf ? w[v] > w[p] : w[v] >= w[p]) return false;
  }
  return true;
}

}  // namespace unitacq
