#pragma once

// Constructive upper-bound protocols: level-2 spanning trees, radius-2 and
// maximal-matching partitions, and the diameter-2 procedure.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "unitacq/clique.hpp"
#include "unitacq/engine.hpp"
#include "unitacq/generators.hpp"
#include "unitacq/graph.hpp"
#include "unitacq/solver.hpp"

namespace unitacq {

struct SynthesisOutcome {
  Protocol protocol;
  std::size_t final_support = 0;
  std::string method;
  std::string note;
};

namespace detail {

inline SynthesisOutcome finish(ProtocolBuilder& b, std::string method, std::string note = {}) {
  SynthesisOutcome out;
  out.final_support = support(b.weights());
  out.protocol = b.take();
  out.method = std::move(method);
  out.note = std::move(note);
  return out;
}

inline void require_connected(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("graph must be connected");
}

}  // namespace detail

// Root v with every vertex within distance 2 and an edge zw inside level 2:
// w's chip goes to z, z collects the other children of its parent x_1 in two
// steps each, x_1 gives its chip to v, and the rest drains to v.
inline std::optional<SynthesisOutcome> level2_protocol(const Graph& g, Vertex root) {
  detail::require_connected(g);
  g.check(root);
  auto dist = bfs_distances(g, root);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d > 2; })) return std::nullopt;
  std::optional<Edge> inner;
  for (auto e : g.edges()) {
    if (dist[e.u] == 2 && dist[e.v] == 2) {
      inner = e;
      break;
    }
  }
  if (!inner) return std::nullopt;
  const Vertex z = inner->u, w = inner->v;
  Vertex x1 = 0;
  for (auto y : g.neighbors(z)) {
    if (dist[y] == 1) {
      x1 = y;
      break;
    }
  }
  // Tree parents: level-2 neighbours of x_1 hang from x_1, every other
  // level-2 vertex from its smallest level-1 neighbour.
  std::vector<std::optional<Vertex>> parent(g.order());
  for (Vertex y = 0; y < g.order(); ++y) {
    if (dist[y] == 1) parent[y] = root;
    if (dist[y] != 2) continue;
    if (g.adjacent(y, x1)) {
      parent[y] = x1;
      continue;
    }
    for (auto p : g.neighbors(y)) {
      if (dist[p] == 1) {
        parent[y] = p;
        break;
      }
    }
  }
  ProtocolBuilder b(g);
  b.move(w, z);
  for (Vertex y = 0; y < g.order(); ++y) {
    if (y == z || y == w || parent[y] != x1 || dist[y] != 2) continue;
    b.move(y, x1);
    b.move(x1, z);
  }
  b.move(x1, root);
  std::vector<std::pair<Vertex, Vertex>> links;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (y != root && y != z && b.weights()[y] > 0) links.push_back({y, *parent[y]});
  }
  b.drain(RootedTreeView::from_parents(g, root, links));
  return detail::finish(b, "level2", "root " + std::to_string(root) + ", level-2 edge " + std::to_string(z) +
                                         "-" + std::to_string(w));
}

// Centres pairwise at distance >= 3, each vertex joins a nearest centre, and
// each part gives up the children of the centre's least-branching neighbour.
inline SynthesisOutcome radius2_partition_protocol(const Graph& g) {
  detail::require_connected(g);
  const auto n = g.order();
  if (n < 2) throw PreconditionError("graph needs at least two vertices");
  auto dist = all_pairs_distances(g);
  std::vector<Edge> far;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      if (dist[a][c] >= 3) far.push_back({a, c});
    }
  }
  auto centres = max_clique(Graph(n, far));
  std::vector<Vertex> owner(n);
  for (Vertex x = 0; x < n; ++x) {
    owner[x] = centres[0];
    for (auto c : centres) {
      if (dist[x][c] < dist[x][owner[x]]) owner[x] = c;
    }
  }
  ProtocolBuilder b(g);
  for (auto v : centres) {
    // Level-2 members hang from their smallest neighbour adjacent to v.
    std::vector<std::optional<Vertex>> parent(n);
    std::vector<std::size_t> kids(n, 0);
    for (Vertex y = 0; y < n; ++y) {
      if (owner[y] != v || y == v) continue;
      if (dist[y][v] == 1) {
        parent[y] = v;
        continue;
      }
      for (auto p : g.neighbors(y)) {
        if (dist[p][v] == 1) {
          parent[y] = p;
          ++kids[p];
          break;
        }
      }
      if (!parent[y]) throw InternalError("vertex " + std::to_string(y) + " is not within distance 2 of its centre");
    }
    Vertex x = g.neighbors(v).front();
    for (auto y : g.neighbors(v)) {
      if (kids[y] < kids[x]) x = y;
    }
    b.move(x, v);
    std::vector<std::pair<Vertex, Vertex>> links;
    for (Vertex y = 0; y < n; ++y) {
      if (parent[y] && y != x && *parent[y] != x) links.push_back({y, *parent[y]});
    }
    b.drain(RootedTreeView::from_parents(g, v, links));
  }
  std::string note = "centres";
  for (auto c : centres) note += " " + std::to_string(c);
  return detail::finish(b, "radius2-partition", note);
}

// Each edge of a minimum maximal matching gathers the unmatched vertices next
// to it, giving a double star that collapses onto one vertex.
inline SynthesisOutcome matching_partition_protocol(const Graph& g) {
  detail::require_connected(g);
  auto matching = min_maximal_matching(g);
  const auto n = g.order();
  std::vector<int> part(n, -1);
  for (std::size_t i = 0; i < matching.edges.size(); ++i) {
    part[matching.edges[i].u] = part[matching.edges[i].v] = static_cast<int>(i);
  }
  std::vector<std::vector<Vertex>> attached(matching.edges.size());
  for (Vertex x = 0; x < n; ++x) {
    if (part[x] >= 0) continue;
    int best = -1;
    for (auto y : g.neighbors(x)) {
      if (part[y] >= 0 && (best < 0 || part[y] < best)) best = part[y];
    }
    if (best < 0) throw InternalError("matching is not maximal");
    attached[best].push_back(x);
  }
  ProtocolBuilder b(g);
  for (std::size_t i = 0; i < matching.edges.size(); ++i) {
    b.collect_double_star(matching.edges[i].u, matching.edges[i].v, attached[i]);
  }
  return detail::finish(b, "matching-partition", "matching size " + std::to_string(matching.size));
}

// ---------------------------------------------------------------------------
// Diameter 2
// ---------------------------------------------------------------------------

inline bool is_c5(const Graph& g) {
  return g.order() == 5 && g.size() == 5 && are_isomorphic(g, make_cycle(5));
}

inline bool is_petersen(const Graph& g) {
  if (g.order() != 10 || g.size() != 15 || g.min_degree() != 3 || g.max_degree() != 3) return false;
  return are_isomorphic(g, make_petersen());
}

namespace detail {

inline SynthesisOutcome diam2_girth3(const Graph& g) {
  const auto n = g.order();
  auto Q = max_clique(g);
  std::vector<char> in_q(n, 0);
  for (auto q : Q) in_q[q] = 1;
  std::vector<std::size_t> q_neighbours(n, 0);
  std::vector<Vertex> solo_of(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    if (in_q[x]) continue;
    for (auto y : g.neighbors(x)) {
      if (in_q[y]) {
        ++q_neighbours[x];
        solo_of[x] = y;
      }
    }
  }
  auto solos = [&](Vertex q) {
    std::vector<Vertex> out;
    for (Vertex x = 0; x < n; ++x) {
      if (!in_q[x] && q_neighbours[x] == 1 && solo_of[x] == q) out.push_back(x);
    }
    return out;
  };
  std::vector<Vertex> U;
  for (Vertex x = 0; x < n; ++x) {
    if (!in_q[x] && q_neighbours[x] == 0) U.push_back(x);
  }

  if (U.empty()) {
    ProtocolBuilder b(g);
    Vertex root = Q[0];
    for (auto q : Q) {
      auto nb = std::find_if(g.neighbors(q).begin(), g.neighbors(q).end(), [&](Vertex y) { return !in_q[y]; });
      if (nb != g.neighbors(q).end()) {
        root = q;
        b.move(*nb, q);
        break;
      }
    }
    if (!b.drain_forest({root})) throw InternalError("girth-3 case without far vertices left no ascending tree");
    return finish(b, "diam2-girth3", "every vertex touches the maximum clique");
  }

  for (auto u : Q) {
    if (!solos(u).empty()) continue;
    Vertex v = u == Q[0] ? Q[1] : Q[0];
    ProtocolBuilder b(g);
    b.move(u, v);
    if (!b.drain_forest({v})) throw InternalError("clique vertex without solo-neighbour left no ascending tree");
    return finish(b, "diam2-girth3", "clique vertex " + std::to_string(u) + " has no solo-neighbour");
  }

  for (auto u : Q) {
    for (auto v : Q) {
      for (auto w : Q) {
        if (u == v || v == w || u == w) continue;
        std::vector<char> s_prime(n, 0);
        for (auto q : Q) {
          if (q == w) continue;
          for (auto s : solos(q)) s_prime[s] = 1;
        }
        bool bad = std::any_of(U.begin(), U.end(), [&](Vertex z) {
          const auto& nb = g.neighbors(z);
          return std::all_of(nb.begin(), nb.end(), [&](Vertex y) { return s_prime[y] != 0; });
        });
        if (bad) continue;
        ProtocolBuilder b(g);
        for (auto s : solos(v)) b.move(s, v);
        for (auto s : solos(u)) {
          b.move(s, u);
          b.move(u, v);
        }
        b.move(u, w);
        for (auto q : Q) {
          if (q == u || q == v || q == w) continue;
          b.move(solos(q).front(), q);
        }
        if (!b.drain_forest({v})) {
          throw InternalError("girth-3 procedure with u=" + std::to_string(u) + " v=" + std::to_string(v) +
                              " w=" + std::to_string(w) + " left no ascending tree");
        }
        return finish(b, "diam2-girth3",
                      "u=" + std::to_string(u) + " v=" + std::to_string(v) + " w=" + std::to_string(w));
      }
    }
  }
  throw InternalError("every clique triple has a bad vertex");
}

inline SynthesisOutcome diam2_girth4(const Graph& g) {
  auto c = cycles_of_length(g, 4).front();
  const Vertex w = c[0], x = c[1], y = c[2], z = c[3];
  ProtocolBuilder b(g);
  b.move(w, x);
  b.move(z, y);
  if (!b.drain_forest({x, y})) throw InternalError("girth-4 procedure left no ascending trees");
  b.merge(x, y);
  return finish(b, "diam2-girth4",
                "4-cycle " + std::to_string(w) + " " + std::to_string(x) + " " + std::to_string(y) + " " +
                    std::to_string(z));
}

inline SynthesisOutcome diam2_girth5(const Graph& g) {
  if (g.min_degree() < 4) throw InternalError("girth-5 diameter-2 graph with minimum degree below 4");
  auto c = cycles_of_length(g, 5).front();
  const Vertex w = c[1], x = c[2], y = c[3];
  auto off_cycle = [&](Vertex a) {
    std::vector<Vertex> out;
    for (auto t : g.neighbors(a)) {
      if (std::find(c.begin(), c.end(), t) == c.end()) out.push_back(t);
    }
    return out;
  };
  auto X = off_cycle(x), W = off_cycle(w), Y = off_cycle(y);
  ProtocolBuilder b(g);
  b.move(X[0], x);
  b.move(X[1], x);
  std::optional<Edge> bridge;
  for (auto e : g.edges()) {
    bool uw = std::binary_search(W.begin(), W.end(), e.u), vy = std::binary_search(Y.begin(), Y.end(), e.v);
    bool uy = std::binary_search(Y.begin(), Y.end(), e.u), vw = std::binary_search(W.begin(), W.end(), e.v);
    if (uw && vy) bridge = e;
    if (uy && vw) bridge = Edge{e.v, e.u};
    if (bridge) break;
  }
  if (!bridge) throw InternalError("no edge between the outer neighbourhoods of w and y");
  b.move(bridge->u, w);
  b.move(bridge->v, y);
  if (!b.drain_forest({x})) throw InternalError("girth-5 procedure left no ascending tree");
  return finish(b, "diam2-girth5", "5-cycle starting at " + std::to_string(c[0]));
}

}  // namespace detail

inline SynthesisOutcome diam2_protocol(const Graph& g) {
  auto d = diameter(g);
  if (!d || *d != 2) throw PreconditionError("graph does not have diameter 2");
  const auto n = g.order();

  if (g.size() == n - 1) {
    Vertex centre = 0;
    while (g.degree(centre) != n - 1) ++centre;
    ProtocolBuilder b(g);
    for (auto y : g.neighbors(centre)) b.move(y, centre);
    return detail::finish(b, "star");
  }
  if (is_c5(g)) {
    auto c = cycles_of_length(g, 5).front();
    ProtocolBuilder b(g);
    b.move(c[0], c[1]);
    b.move(c[2], c[1]);
    b.move(c[3], c[4]);
    return detail::finish(b, "special-C5");
  }
  if (is_petersen(g)) {
    auto c = cycles_of_length(g, 5).front();
    ProtocolBuilder b(g);
    for (Vertex o = 0; o < n; ++o) {
      if (std::find(c.begin(), c.end(), o) != c.end()) continue;
      for (auto t : g.neighbors(o)) {
        if (std::find(c.begin(), c.end(), t) != c.end()) b.move(o, t);
      }
    }
    for (int rep = 0; rep < 2; ++rep) b.move(c[0], c[1]);
    for (int rep = 0; rep < 2; ++rep) b.move(c[2], c[1]);
    for (int rep = 0; rep < 2; ++rep) b.move(c[3], c[4]);
    return detail::finish(b, "special-petersen");
  }
  switch (*girth(g)) {
    case 3: return detail::diam2_girth3(g);
    case 4: return detail::diam2_girth4(g);
    case 5: return detail::diam2_girth5(g);
    default: throw InternalError("diameter-2 graph that is not a star has girth above 5");
  }
}

}  // namespace unitacq
