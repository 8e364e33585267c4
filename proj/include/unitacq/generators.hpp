#pragma once

// Deterministic constructors for the named graph families, the T_d trees with
// their protocols, caterpillar enumeration, and seeded random graphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unitacq/engine.hpp"
#include "unitacq/graph.hpp"

namespace unitacq {

// Path 0-1-...-(n-1).
inline Graph make_path(std::size_t n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, es);
}

inline Graph make_complete(std::size_t n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) es.push_back({i, j});
  }
  return Graph(n, es);
}

// Centre 0, leaves 1..m.
inline Graph make_star(std::size_t leaves) {
  if (leaves < 1) throw PreconditionError("star needs at least one leaf");
  std::vector<Edge> es;
  for (Vertex i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Graph(leaves + 1, es);
}

// Spine 0..L-1, then the leaves of spine position 0, 1, ... in order.
inline Graph make_caterpillar(const std::vector<std::size_t>& leaf_counts) {
  if (leaf_counts.empty()) throw PreconditionError("caterpillar needs a spine");
  const auto L = leaf_counts.size();
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < L; ++i) es.push_back({i, i + 1});
  Vertex next = static_cast<Vertex>(L);
  for (Vertex i = 0; i < L; ++i) {
    for (std::size_t c = 0; c < leaf_counts[i]; ++c) es.push_back({i, next++});
  }
  return Graph(next, es);
}

// Path 0-1-2-3-4 with leaf 5 on the centre.
inline Graph make_J() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}); }

// K_{1,3} with every edge subdivided; centre 0, legs 0-1-2, 0-3-4, 0-5-6.
inline Graph make_spider() { return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

// Bottom row 0..4 left to right, 5 above between 1 and 2, 6 on top of 5.
inline Graph make_triangle_tail() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {5, 6}});
}

// Top row (spine) 0..3 left to right; leaves 4,5 under 0, 6 under 1, 7 under
// 2, and 8,9 under 3.
inline Graph make_caterpillar10() { return make_caterpillar({2, 1, 1, 2}); }

// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram (i+5)-((i+2)%5+5).
inline Graph make_petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({i, i + 5});
    es.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, es);
}

// Robertson's construction: pentagons P_h (ids 5h+i) and pentagrams Q_k (ids
// 25+5k+j), with P_{h,i} ~ Q_{k,j} iff j = hk + i mod 5.
inline Graph make_hoffman_singleton() {
  std::vector<Edge> es;
  auto P = [](Vertex h, Vertex i) { return 5 * h + i % 5; };
  auto Q = [](Vertex k, Vertex j) { return 25 + 5 * k + j % 5; };
  for (Vertex h = 0; h < 5; ++h) {
    for (Vertex i = 0; i < 5; ++i) {
      es.push_back({P(h, i), P(h, i + 1)});
      es.push_back({Q(h, i), Q(h, i + 2)});
      for (Vertex k = 0; k < 5; ++k) es.push_back({P(h, i), Q(k, (h * k + i) % 5)});
    }
  }
  return Graph(50, es);
}

// Double star: centres 0 and 1, leaves 2..k of 0 and k+1..2k-1 of 1.
inline Graph make_Hk(std::size_t k) {
  if (k < 2) throw PreconditionError("H_k needs k >= 2");
  std::vector<Edge> es{{0, 1}};
  Vertex next = 2;
  for (Vertex c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i + 1 < k; ++i) es.push_back({c, next++});
  }
  return Graph(2 * k, es);
}

struct GmkGraph {
  Graph graph;
  std::vector<std::pair<Vertex, Vertex>> cut_pairs;  // merged degree-2 vertices
  std::vector<Edge> centre_matching;
  std::vector<std::string> warnings;
};

// m copies of H_k chained by merging leaves. Copy i has centres a_i = 2i and
// b_i = 2i+1; the merged vertices x_i = 2m+2i and y_i = 2m+2i+1 join a_i to
// a_{i+1} and b_i to b_{i+1}; the remaining leaves follow copy by copy.
inline GmkGraph make_Gmk(std::size_t m, std::size_t k) {
  if (m < 1) throw PreconditionError("G_{m,k} needs m >= 1");
  if (k < 2) throw PreconditionError("G_{m,k} needs k >= 2");
  if (m >= 3 && k < 3) throw PreconditionError("G_{m,k} with m >= 3 needs k >= 3");
  GmkGraph out;
  if (k < 4) out.warnings.push_back("k < 4: the construction is not claimed sharp");
  std::vector<Edge> es;
  const auto M = static_cast<Vertex>(m);
  for (Vertex i = 0; i < M; ++i) {
    es.push_back({2 * i, 2 * i + 1});
    out.centre_matching.push_back({2 * i, 2 * i + 1});
  }
  for (Vertex i = 0; i + 1 < M; ++i) {
    Vertex x = 2 * M + 2 * i, y = x + 1;
    es.push_back({2 * i, x});
    es.push_back({2 * (i + 1), x});
    es.push_back({2 * i + 1, y});
    es.push_back({2 * (i + 1) + 1, y});
    out.cut_pairs.push_back({x, y});
  }
  Vertex next = 2 * M + 2 * (M - 1);
  for (Vertex i = 0; i < M; ++i) {
    std::size_t merges = (i > 0) + (i + 1 < M);
    for (Vertex c = 2 * i; c <= 2 * i + 1; ++c) {
      for (std::size_t l = 0; l + 1 + merges < k; ++l) es.push_back({c, next++});
    }
  }
  out.graph = Graph(next, es);
  return out;
}

// Diameter-4 tree with centre 0, children 1..k, and k-1 leaves under each
// child; n = 1 + k^2.
inline Graph make_diameter4_tree(std::size_t n) {
  std::size_t k = 0;
  while ((k + 1) * (k + 1) <= n - 1) ++k;
  if (n < 5 || k * k != n - 1) throw PreconditionError("diameter-4 tree needs n - 1 to be a square >= 4");
  std::vector<Edge> es;
  Vertex next = static_cast<Vertex>(k + 1);
  for (Vertex c = 1; c <= k; ++c) {
    es.push_back({0, c});
    for (std::size_t l = 0; l + 1 < k; ++l) es.push_back({c, next++});
  }
  return Graph(n, es);
}

// ---------------------------------------------------------------------------
// T_d
// ---------------------------------------------------------------------------

// Active leaves per level: a_1 = 1, a_2 = b-1, then
// a_t = (b-1) a_{t-1} - (a_1 + ... + a_{t-1}).
inline std::vector<long long> td_active_recurrence(std::size_t d, std::size_t branching) {
  std::vector<long long> a;
  long long sum = 0;
  for (std::size_t t = 1; t <= d; ++t) {
    long long next = t == 1 ? 1 : t == 2 ? static_cast<long long>(branching) - 1
                                         : static_cast<long long>(branching - 1) * a.back() - sum;
    a.push_back(next);
    sum += next;
  }
  return a;
}

// Closed form for branching 5, valid for d >= 2: (3d+2) 2^(d-3).
inline long long td_closed_form(std::size_t d) {
  return static_cast<long long>(3 * d + 2) * (1ll << d) / 8;
}

// The form (3d+5) 2^(d-2) sometimes quoted for the same sequence.
inline long long td_printed_closed_form(std::size_t d) {
  return static_cast<long long>(3 * d + 5) * (1ll << d) / 4;
}

struct TdResult {
  Graph graph;
  Protocol protocol;
  std::size_t ascend_prefix_len = 0;   // moves before the final drain
  std::vector<long long> active_counts;  // levels 1..d
  std::vector<std::size_t> level;        // per vertex, root at level 1
  std::size_t order_with_next_level = 0;
};

inline TdResult make_Td(std::size_t d, std::size_t branching) {
  if (d < 1) throw PreconditionError("T_d needs d >= 1");
  if (branching != 4 && branching != 5) throw PreconditionError("T_d branching must be 4 or 5");
  auto expected = td_active_recurrence(d + 1, branching);
  for (std::size_t t = 0; t < d; ++t) {
    if (expected[t] <= 0) {
      throw PreconditionError("branching " + std::to_string(branching) + " construction stops at level " +
                              std::to_string(t + 1) + ": a_" + std::to_string(t + 1) + " = " +
                              std::to_string(expected[t]));
    }
  }

  std::vector<std::optional<Vertex>> parent{std::nullopt};
  std::vector<std::size_t> level{1};
  std::vector<char> active{1};
  std::vector<std::uint32_t> weight{1};
  std::vector<long long> counts{1};
  Protocol protocol;

  auto move = [&](Vertex from, Vertex to) {
    if (weight[from] == 0 || weight[to] < weight[from]) throw InternalError("T_d construction made an illegal move");
    --weight[from];
    ++weight[to];
    protocol.push(from, to);
  };

  for (std::size_t t = 2; t <= d; ++t) {
    const auto before = static_cast<Vertex>(parent.size());
    for (Vertex u = 0; u < before; ++u) {
      if (!active[u] || level[u] != t - 1) continue;
      std::size_t kids = t == 2 ? branching : branching - 1;
      for (std::size_t c = 0; c < kids; ++c) {
        parent.push_back(u);
        level.push_back(t);
        active.push_back(1);
        weight.push_back(1);
      }
    }
    const auto total = static_cast<Vertex>(parent.size());
    auto ancestor_at = [&](Vertex x, std::size_t lvl) {
      while (level[x] > lvl) x = *parent[x];
      return x;
    };
    for (std::size_t i = 1; i < t; ++i) {
      for (Vertex u = 0; u < before; ++u) {
        if (!active[u] || level[u] != i) continue;
        std::optional<Vertex> chosen;
        for (Vertex x = before; x < total; ++x) {
          if (active[x] && ancestor_at(x, i) == u) {
            chosen = x;
            break;
          }
        }
        if (chosen) {
          for (Vertex x = *chosen; x != u; x = *parent[x]) move(x, *parent[x]);
          active[*chosen] = 0;
          continue;
        }
        for (Vertex x = before; x < total; ++x) {
          if (active[x]) {
            chosen = x;
            break;
          }
        }
        if (!chosen) throw InternalError("T_d ran out of leaves at level " + std::to_string(t));
        active[*chosen] = 0;
      }
    }
    long long remaining = 0;
    for (Vertex x = before; x < total; ++x) remaining += active[x];
    counts.push_back(remaining);
  }

  TdResult out;
  std::vector<Edge> es;
  for (Vertex v = 1; v < parent.size(); ++v) es.push_back({*parent[v], v});
  out.graph = Graph(parent.size(), es);
  out.level = level;
  out.active_counts = counts;
  out.ascend_prefix_len = protocol.size();
  out.order_with_next_level = parent.size() + (d == 1 ? branching : (branching - 1) * counts.back());

  std::vector<std::pair<Vertex, Vertex>> links;
  for (Vertex v = 1; v < parent.size(); ++v) {
    if (weight[v] > 0) links.push_back({v, *parent[v]});
  }
  auto view = RootedTreeView::from_parents(out.graph, 0, links);
  auto drain = drain_ascending(out.graph, view, WeightConfig(weight));
  protocol.append(drain);
  out.protocol = std::move(protocol);
  return out;
}

// ---------------------------------------------------------------------------
// Caterpillar enumeration
// ---------------------------------------------------------------------------

// One representative per isomorphism class of caterpillars with at most
// max_n vertices: K_1, K_2, stars, then spines of length >= 2 whose end
// vertices carry leaves, keeping a leaf-count sequence only if it is not
// larger than its reverse.
inline std::vector<Graph> enumerate_caterpillars(std::size_t max_n) {
  std::vector<Graph> out;
  if (max_n >= 1) out.push_back(make_path(1));
  if (max_n >= 2) out.push_back(make_path(2));
  for (std::size_t m = 2; m + 1 <= max_n; ++m) out.push_back(make_star(m));
  for (std::size_t L = 2; L + 2 <= max_n; ++L) {
    std::vector<std::size_t> seq(L, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t budget) -> void {
      if (pos == L) {
        auto rev = seq;
        std::reverse(rev.begin(), rev.end());
        if (seq <= rev) out.push_back(make_caterpillar(seq));
        return;
      }
      std::size_t lo = (pos == 0 || pos + 1 == L) ? 1 : 0;
      for (std::size_t c = lo; c <= budget; ++c) {
        seq[pos] = c;
        self(self, pos + 1, budget - c);
      }
    };
    rec(rec, 0, max_n - L);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random graphs
// ---------------------------------------------------------------------------

namespace detail {
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
}  // namespace detail

// G(n,p): each pair in lexicographic order is an edge with probability p.
inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (detail::unit_draw(rng) < p) es.push_back({i, j});
    }
  }
  return Graph(n, es);
}

inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_gnp(n, p, rng);
}

// Redraws G(n,p) until the diameter is exactly 2.
inline Graph random_diameter2(std::size_t n, double p, std::mt19937_64& rng, std::size_t max_tries = 100000) {
  for (std::size_t t = 0; t < max_tries; ++t) {
    auto g = random_gnp(n, p, rng);
    auto d = diameter(g);
    if (d && *d == 2) return g;
  }
  throw PreconditionError("no diameter-2 graph found within " + std::to_string(max_tries) + " draws");
}

inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng, std::size_t max_tries = 100000) {
  for (std::size_t t = 0; t < max_tries; ++t) {
    auto g = random_gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
  throw PreconditionError("no connected graph found within " + std::to_string(max_tries) + " draws");
}

// Random maximal triangle-free graph: vertex pairs in random order, each kept
// unless it closes a triangle. Maximality forces diameter at most 2.
inline Graph random_maximal_triangle_free(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> es;
  for (auto e : pairs) {
    bool closes = false;
    for (Vertex x = 0; x < n && !closes; ++x) closes = adj[e.u][x] && adj[e.v][x];
    if (closes) continue;
    adj[e.u][e.v] = adj[e.v][e.u] = 1;
    es.push_back(e);
  }
  return Graph(n, es);
}

// Uniform labelled tree from a random Pruefer sequence.
inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 2) return make_path(n == 0 ? 1 : n);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);
  std::vector<std::size_t> deg(n, 1);
  for (auto c : code) ++deg[c];
  std::vector<Edge> es;
  for (auto c : code) {
    Vertex leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    es.push_back({leaf, c});
    --deg[leaf];
    --deg[c];
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) rest.push_back(v);
  }
  es.push_back({rest[0], rest[1]});
  return Graph(n, es);
}

}  // namespace unitacq
