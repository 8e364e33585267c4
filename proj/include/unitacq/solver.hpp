#pragma once

// Exhaustive search over the configurations reachable from all-ones, plus the
// exact bound quantities used to sandwich a_u.

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitacq/clique.hpp"
#include "unitacq/engine.hpp"
#include "unitacq/graph.hpp"

namespace unitacq {

inline constexpr std::uint64_t kDefaultStateBudget = 50'000'000;
inline constexpr std::size_t kMaxSolverOrder = 15;

// ---------------------------------------------------------------------------
// Cut certificates
// ---------------------------------------------------------------------------

struct CutCertificate {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> cut;
};

namespace detail {

// Component id of every vertex of g - removed (removed vertices get -1).
inline std::vector<int> components_without(const Graph& g, const std::vector<char>& removed) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : g.neighbors(x)) {
        if (!removed[y] && comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

// S must be a minimal u,v-separator of degree-2 vertices, none adjacent to u
// or v. A separator is minimal iff each member touches both sides.
inline bool verify_certificate(const Graph& g, const CutCertificate& c) {
  const auto n = g.order();
  if (c.u >= n || c.v >= n || c.u == c.v || c.cut.empty()) return false;
  std::vector<char> removed(n, 0);
  for (auto s : c.cut) {
    if (s >= n || s == c.u || s == c.v || removed[s]) return false;
    if (g.degree(s) != 2 || g.adjacent(s, c.u) || g.adjacent(s, c.v)) return false;
    removed[s] = 1;
  }
  auto comp = detail::components_without(g, removed);
  if (comp[c.u] == comp[c.v]) return false;
  for (auto s : c.cut) {
    bool sees_u = false, sees_v = false;
    for (auto y : g.neighbors(s)) {
      sees_u |= comp[y] == comp[c.u] && comp[y] >= 0;
      sees_v |= comp[y] == comp[c.v] && comp[y] >= 0;
    }
    if (!sees_u || !sees_v) return false;
  }
  return true;
}

struct CutBound {
  std::size_t value = 1;
  std::vector<Vertex> vertices;  // pairwise separated by certificates
  std::vector<CutCertificate> certificates;
};

// Largest vertex set whose members are pairwise separated by a certificate.
// Cuts of one or two degree-2 vertices are tried by default; `exhaustive`
// tries every subset of the degree-2 vertices (at most 20 of them).
inline CutBound cut_lower_bound(const Graph& g, bool exhaustive = false) {
  const auto n = g.order();
  CutBound out;
  if (n == 0) return out;
  out.vertices = {0};

  std::vector<Vertex> deg2;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 2) deg2.push_back(v);
  }
  std::vector<std::vector<Vertex>> cuts;
  if (exhaustive) {
    if (deg2.size() > 20) throw PreconditionError("too many degree-2 vertices for exhaustive cuts");
    for (std::uint32_t mask = 1; mask < (1u << deg2.size()); ++mask) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < deg2.size(); ++i) {
        if (mask >> i & 1) s.push_back(deg2[i]);
      }
      cuts.push_back(std::move(s));
    }
  } else {
    for (std::size_t i = 0; i < deg2.size(); ++i) {
      cuts.push_back({deg2[i]});
      for (std::size_t j = i + 1; j < deg2.size(); ++j) cuts.push_back({deg2[i], deg2[j]});
    }
  }

  // witness[a*n+b] = index of the first cut certifying (a,b).
  std::vector<int> witness(n * n, -1);
  for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
    const auto& s = cuts[ci];
    std::vector<char> removed(n, 0), near(n, 0);
    for (auto x : s) removed[x] = 1;
    for (auto x : s) {
      for (auto y : g.neighbors(x)) near[y] = 1;
    }
    auto comp = detail::components_without(g, removed);
    // Every member of S must join the same two components.
    std::optional<std::pair<int, int>> sides;
    bool ok = true;
    for (auto x : s) {
      const auto& nb = g.neighbors(x);
      int c0 = comp[nb[0]], c1 = comp[nb[1]];
      if (c0 < 0 || c1 < 0 || c0 == c1) {
        ok = false;
        break;
      }
      auto p = std::minmax(c0, c1);
      if (sides && *sides != std::pair<int, int>(p.first, p.second)) {
        ok = false;
        break;
      }
      sides = std::pair<int, int>(p.first, p.second);
    }
    if (!ok || !sides) continue;
    for (Vertex a = 0; a < n; ++a) {
      if (removed[a] || near[a] || comp[a] != sides->first) continue;
      for (Vertex b = 0; b < n; ++b) {
        if (removed[b] || near[b] || comp[b] != sides->second) continue;
        auto lo = std::min(a, b), hi = std::max(a, b);
        if (witness[lo * n + hi] < 0) witness[lo * n + hi] = static_cast<int>(ci);
      }
    }
  }

  std::vector<Edge> compat;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (witness[a * n + b] >= 0) compat.push_back({a, b});
    }
  }
  if (compat.empty()) return out;
  auto clique = max_clique(Graph(n, compat));
  out.value = clique.size();
  out.vertices = clique;
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      auto a = clique[i], b = clique[j];
      out.certificates.push_back({a, b, cuts[witness[a * n + b]]});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimum maximal matching
// ---------------------------------------------------------------------------

struct MatchingResult {
  std::size_t size = 0;
  std::vector<Edge> edges;
};

inline bool is_maximal_matching(const Graph& g, const std::vector<Edge>& m) {
  std::vector<char> used(g.order(), 0);
  for (auto e : m) {
    if (!g.adjacent(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  for (auto e : g.edges()) {
    if (!used[e.u] && !used[e.v]) return false;
  }
  return true;
}

// Branch on the first edge with both ends free: some matching edge must cover
// one of its ends.
inline MatchingResult min_maximal_matching(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("graph has no edges");
  const auto n = g.order();
  const auto& edges = g.edges();
  std::vector<char> used(n, 0);
  std::vector<Edge> current, best;

  for (auto e : edges) {
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      best.push_back(e);
    }
  }
  std::fill(used.begin(), used.end(), 0);
  const std::size_t span = 2 * g.max_degree() - 1;

  auto search = [&](auto&& self) -> void {
    std::size_t free_edges = 0;
    std::optional<Edge> first;
    for (auto e : edges) {
      if (!used[e.u] && !used[e.v]) {
        ++free_edges;
        if (!first) first = e;
      }
    }
    if (!first) {
      if (current.size() < best.size()) best = current;
      return;
    }
    // Each further matching edge covers at most 2*Delta-1 free edges.
    if (current.size() + (free_edges + span - 1) / span >= best.size()) return;
    auto [u, v] = *first;
    auto take = [&](Vertex a, Vertex b) {
      used[a] = used[b] = 1;
      current.push_back({std::min(a, b), std::max(a, b)});
      self(self);
      current.pop_back();
      used[a] = used[b] = 0;
    };
    for (auto x : g.neighbors(u)) {
      if (!used[x]) take(u, x);
    }
    for (auto x : g.neighbors(v)) {
      if (!used[x] && x != u) take(v, x);
    }
  };
  search(search);
  std::sort(best.begin(), best.end());
  return {best.size(), best};
}

// floor((n-1)/delta); n for graphs without edges.
inline std::size_t min_degree_bound(const Graph& g) {
  auto d = g.min_degree();
  if (d == 0) return g.order();
  return (g.order() - 1) / d;
}

// ---------------------------------------------------------------------------
// Exhaustive search
// ---------------------------------------------------------------------------

enum class SolveStatus { Exact, Inconclusive };

inline const char* to_string(SolveStatus s) {
  return s == SolveStatus::Exact ? "exact" : "inconclusive";
}

struct SolveOptions {
  std::uint64_t budget = kDefaultStateBudget;
  bool stop_at_one = true;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Exact;
  std::size_t value = 0;        // best support found (exact when status is Exact)
  std::size_t lower_bound = 1;  // proven lower bound
  Protocol witness;
  std::uint64_t states_explored = 0;
  std::chrono::duration<double> elapsed{};
};

struct MaxWeightResult {
  SolveStatus status = SolveStatus::Exact;
  std::vector<std::uint32_t> per_vertex;
  std::uint32_t global = 0;
  std::uint64_t states_explored = 0;
};

namespace detail {

inline void check_solvable(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  if (g.order() > kMaxSolverOrder) {
    throw PreconditionError("exhaustive search supports at most " + std::to_string(kMaxSolverOrder) +
                            " vertices, got " + std::to_string(g.order()));
  }
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

// Depth-first walk over reachable configurations. Weights fit in 4 bits
// because no vertex can exceed n <= 15. `visit` sees the live weights, the
// move path from all-ones, and returns false to stop the walk. Returns false
// when the budget ran out.
template <typename Visit>
bool walk_configurations(const Graph& g, std::uint64_t budget, std::uint64_t& explored, Visit&& visit) {
  const auto n = g.order();
  std::vector<UnitMove> arcs;
  for (auto e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  std::uint32_t w[kMaxSolverOrder] = {};
  std::uint64_t state = 0;
  for (Vertex v = 0; v < n; ++v) {
    w[v] = 1;
    state |= std::uint64_t{1} << (4 * v);
  }
  absl::flat_hash_set<std::uint64_t> seen;
  seen.insert(state);
  explored = 1;
  std::vector<UnitMove> path;
  std::vector<std::size_t> next_arc{0};
  if (!visit(w, path)) return true;

  while (!next_arc.empty()) {
    auto& i = next_arc.back();
    bool descended = false;
    while (i < arcs.size()) {
      auto m = arcs[i++];
      if (w[m.from] == 0 || w[m.to] < w[m.from]) continue;
      auto next = state - (std::uint64_t{1} << (4 * m.from)) + (std::uint64_t{1} << (4 * m.to));
      if (!seen.insert(next).second) continue;
      if (++explored > budget) return false;
      --w[m.from];
      ++w[m.to];
      state = next;
      path.push_back(m);
      next_arc.push_back(0);
      descended = true;
      if (!visit(w, path)) return true;
      break;
    }
    if (descended) continue;
    next_arc.pop_back();
    if (path.empty()) break;
    auto m = path.back();
    path.pop_back();
    ++w[m.from];
    --w[m.to];
    state = state + (std::uint64_t{1} << (4 * m.from)) - (std::uint64_t{1} << (4 * m.to));
  }
  return true;
}

}  // namespace detail

inline SolveResult unit_acquisition_number(const Graph& g, SolveOptions opt = {}) {
  detail::check_solvable(g);
  const auto start = std::chrono::steady_clock::now();
  const auto n = g.order();
  SolveResult r;
  r.value = n;
  bool finished = detail::walk_configurations(
      g, opt.budget, r.states_explored, [&](const std::uint32_t* w, const std::vector<UnitMove>& path) {
        std::size_t s = 0;
        for (std::size_t v = 0; v < n; ++v) s += w[v] > 0;
        if (s < r.value) {
          r.value = s;
          r.witness.moves = path;
        }
        return !(opt.stop_at_one && r.value == 1);
      });
  if (finished) {
    r.lower_bound = r.value;
  } else {
    r.lower_bound = cut_lower_bound(g).value;
    r.status = r.lower_bound >= r.value ? SolveStatus::Exact : SolveStatus::Inconclusive;
    if (r.status == SolveStatus::Exact) r.lower_bound = r.value;
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline MaxWeightResult max_acquirable_weight(const Graph& g, std::uint64_t budget = kDefaultStateBudget) {
  detail::check_solvable(g);
  const auto n = g.order();
  MaxWeightResult r;
  r.per_vertex.assign(n, 1);
  bool finished = detail::walk_configurations(
      g, budget, r.states_explored, [&](const std::uint32_t* w, const std::vector<UnitMove>&) {
        for (std::size_t v = 0; v < n; ++v) r.per_vertex[v] = std::max(r.per_vertex[v], w[v]);
        return true;
      });
  if (!finished) r.status = SolveStatus::Inconclusive;
  r.global = *std::max_element(r.per_vertex.begin(), r.per_vertex.end());
  return r;
}

}  // namespace unitacq
