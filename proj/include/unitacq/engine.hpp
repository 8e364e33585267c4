#pragma once

// Unit acquisition move semantics: legality, application, replay, draining
// of ascending trees, and the protocol JSON format.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <json.hpp>

#include "unitacq/error.hpp"
#include "unitacq/graph.hpp"

namespace unitacq {

struct UnitMove {
  Vertex from;
  Vertex to;

  friend bool operator==(const UnitMove&, const UnitMove&) = default;
};

struct Protocol {
  std::vector<UnitMove> moves;

  std::size_t size() const noexcept { return moves.size(); }
  bool empty() const noexcept { return moves.empty(); }
  void push(Vertex from, Vertex to) { moves.push_back({from, to}); }
  void append(const Protocol& other) {
    moves.insert(moves.end(), other.moves.begin(), other.moves.end());
  }

  friend bool operator==(const Protocol&, const Protocol&) = default;
};

enum class IllegalReason { NonAdjacent, EmptySource, TargetLighter };

inline const char* to_string(IllegalReason r) {
  switch (r) {
    case IllegalReason::NonAdjacent: return "non-adjacent";
    case IllegalReason::EmptySource: return "empty source";
    case IllegalReason::TargetLighter: return "target lighter";
  }
  return "?";
}

class IllegalMoveError : public Error {
 public:
  IllegalMoveError(UnitMove m, IllegalReason reason)
      : Error("illegal move " + std::to_string(m.from) + "->" + std::to_string(m.to) + ": " +
              to_string(reason)),
        move_(m),
        reason_(reason) {}

  UnitMove move() const noexcept { return move_; }
  IllegalReason reason() const noexcept { return reason_; }

 private:
  UnitMove move_;
  IllegalReason reason_;
};

class ReplayError : public Error {
 public:
  ReplayError(std::size_t index, UnitMove m, IllegalReason reason)
      : Error("move " + std::to_string(index) + " (" + std::to_string(m.from) + "->" +
              std::to_string(m.to) + ") is illegal: " + to_string(reason)),
        index_(index),
        reason_(reason) {}

  std::size_t index() const noexcept { return index_; }
  IllegalReason reason() const noexcept { return reason_; }

 private:
  std::size_t index_;
  IllegalReason reason_;
};

inline void check_weights(const Graph& g, const WeightConfig& w) {
  if (w.size() != g.order()) {
    throw StructuralError("weight vector has length " + std::to_string(w.size()) +
                          ", graph has " + std::to_string(g.order()) + " vertices");
  }
}

// nullopt when legal.
inline std::optional<IllegalReason> illegal_reason(const Graph& g, const WeightConfig& w,
                                                   UnitMove m) {
  check_weights(g, w);
  g.check(m.from);
  g.check(m.to);
  if (m.from == m.to || !g.adjacent(m.from, m.to)) return IllegalReason::NonAdjacent;
  if (w[m.from] == 0) return IllegalReason::EmptySource;
  if (w[m.to] < w[m.from]) return IllegalReason::TargetLighter;
  return std::nullopt;
}

inline bool is_legal(const Graph& g, const WeightConfig& w, UnitMove m) {
  return !illegal_reason(g, w, m);
}

inline void apply_in_place(const Graph& g, WeightConfig& w, UnitMove m) {
  if (auto r = illegal_reason(g, w, m)) throw IllegalMoveError(m, *r);
  --w[m.from];
  ++w[m.to];
}

inline WeightConfig apply(const Graph& g, WeightConfig w, UnitMove m) {
  apply_in_place(g, w, m);
  return w;
}

inline std::uint64_t potential(const WeightConfig& w) {
  std::uint64_t p = 0;
  for (auto x : w.values()) p += std::uint64_t{x} * x;
  return p;
}

inline std::size_t support(const WeightConfig& w) {
  const auto& v = w.values();
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x > 0; }));
}

inline std::vector<Vertex> support_set(const WeightConfig& w) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < w.size(); ++v) {
    if (w[v] > 0) out.push_back(v);
  }
  return out;
}

inline WeightConfig replay_from(const Graph& g, WeightConfig w, const Protocol& p) {
  check_weights(g, w);
  for (std::size_t i = 0; i < p.moves.size(); ++i) {
    auto m = p.moves[i];
    g.check(m.from);
    g.check(m.to);
    if (auto r = illegal_reason(g, w, m)) throw ReplayError(i, m, *r);
    --w[m.from];
    ++w[m.to];
  }
  return w;
}

inline WeightConfig replay(const Graph& g, const Protocol& p) {
  return replay_from(g, WeightConfig::ones(g.order()), p);
}

// Moves every unit of the tree to the root, one unit at a time along the full
// path, deepest vertices first (ties by id). Units in transit never meet a
// lighter vertex because each ancestor strictly outweighs its child.
// Positive vertices outside the view are left alone.
inline Protocol drain_ascending(const Graph& g, const RootedTreeView& view, const WeightConfig& w) {
  check_weights(g, w);
  if (!is_ascending_tree(g, view, w)) {
    throw PreconditionError("weights are not ascending on the given tree");
  }
  auto members = view.members();
  for (auto v : members) {
    if (w[v] == 0) {
      throw PreconditionError("tree member " + std::to_string(v) + " has weight 0");
    }
  }
  std::stable_sort(members.begin(), members.end(),
                   [&](Vertex a, Vertex b) { return view.depth[a] > view.depth[b]; });
  Protocol p;
  for (auto v : members) {
    if (v == view.root) continue;
    for (std::uint32_t unit = 0; unit < w[v]; ++unit) {
      for (Vertex x = v; x != view.root; x = *view.parent[x]) p.push(x, *view.parent[x]);
    }
  }
  return p;
}

// Ascending forest covering every positive, non-blocked vertex with one tree
// per root. Internal vertices are exactly those reachable from a root by a
// strictly descending path of positive vertices; everything else must hang as
// a leaf off such a vertex. nullopt when some vertex cannot be covered.
inline std::optional<std::vector<RootedTreeView>> find_ascending_forest(
    const Graph& g, const WeightConfig& w, const std::vector<Vertex>& roots,
    const std::vector<Vertex>& blocked = {}) {
  check_weights(g, w);
  const auto n = g.order();
  std::vector<char> is_blocked(n, 0);
  for (auto b : blocked) {
    g.check(b);
    is_blocked[b] = 1;
  }
  std::vector<int> owner(n, -1);
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<char> capable(n, 0);
  std::queue<Vertex> q;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    auto v = roots[r];
    g.check(v);
    if (w[v] == 0 || is_blocked[v] || owner[v] >= 0) return std::nullopt;
    owner[v] = static_cast<int>(r);
    capable[v] = 1;
    q.push(v);
  }
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (auto y : g.neighbors(x)) {
      if (owner[y] >= 0 || is_blocked[y] || w[y] == 0 || w[y] >= w[x]) continue;
      owner[y] = owner[x];
      parent[y] = x;
      capable[y] = 1;
      q.push(y);
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (owner[x] >= 0 || is_blocked[x] || w[x] == 0) continue;
    for (auto p : g.neighbors(x)) {
      if (capable[p] && w[x] <= w[p]) {
        owner[x] = owner[p];
        parent[x] = p;
        break;
      }
    }
    if (owner[x] < 0) return std::nullopt;
  }
  std::vector<RootedTreeView> forest;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    std::vector<std::pair<Vertex, Vertex>> links;
    for (Vertex x = 0; x < n; ++x) {
      if (owner[x] == static_cast<int>(r) && parent[x]) links.push_back({x, *parent[x]});
    }
    forest.push_back(RootedTreeView::from_parents(g, roots[r], links));
  }
  return forest;
}

// Accumulates a protocol while tracking the live configuration. Every step is
// checked; construction code that relies on a proof argument fails loudly.
class ProtocolBuilder {
 public:
  explicit ProtocolBuilder(const Graph& g) : g_(&g), w_(WeightConfig::ones(g.order())) {}
  explicit ProtocolBuilder(const Graph&&) = delete;  // keeps a pointer to the graph

  const WeightConfig& weights() const noexcept { return w_; }
  const Protocol& protocol() const noexcept { return p_; }
  Protocol take() { return std::move(p_); }

  void move(Vertex from, Vertex to) {
    UnitMove m{from, to};
    if (auto r = illegal_reason(*g_, w_, m)) {
      throw InternalError("construction produced illegal move " + std::to_string(from) + "->" +
                          std::to_string(to) + " (" + to_string(*r) + ") at step " +
                          std::to_string(p_.size()));
    }
    apply_in_place(*g_, w_, m);
    p_.moves.push_back(m);
  }

  // One unit along a path given as consecutive vertices.
  void move_along(const std::vector<Vertex>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) move(path[i], path[i + 1]);
  }

  void run(const Protocol& p) {
    for (auto m : p.moves) move(m.from, m.to);
  }

  void drain(const RootedTreeView& view) { run(drain_ascending(*g_, view, w_)); }

  // Drains an ascending forest found by find_ascending_forest.
  bool drain_forest(const std::vector<Vertex>& roots, const std::vector<Vertex>& blocked = {}) {
    auto forest = find_ascending_forest(*g_, w_, roots, blocked);
    if (!forest) return false;
    for (const auto& t : *forest) drain(t);
    return true;
  }

  // Empties the lighter of two adjacent vertices into the heavier.
  void merge(Vertex a, Vertex b) {
    if (w_[a] > w_[b]) std::swap(a, b);
    while (w_[a] > 0) move(a, b);
  }

  // Star or double star: leaves into their centre, then the lighter centre
  // into the heavier one.
  void collect_double_star(Vertex a, std::optional<Vertex> b, const std::vector<Vertex>& leaves) {
    for (auto x : leaves) {
      if (g_->adjacent(x, a)) {
        move(x, a);
      } else if (b && g_->adjacent(x, *b)) {
        move(x, *b);
      } else {
        throw InternalError("vertex " + std::to_string(x) + " not adjacent to a centre");
      }
    }
    if (b) merge(a, *b);
  }

 private:
  const Graph* g_;
  WeightConfig w_;
  Protocol p_;
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : to_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline nlohmann::json protocol_to_json(const Graph& g, const Protocol& p) {
  nlohmann::json moves = nlohmann::json::array();
  for (auto m : p.moves) moves.push_back({m.from, m.to});
  return {{"graph_hash", graph_hash(g)}, {"moves", moves}};
}

// Rejects a protocol whose hash does not match `g`.
inline Protocol protocol_from_json(const Graph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("moves") || !j["moves"].is_array()) {
    throw StructuralError("protocol JSON needs a \"moves\" array");
  }
  if (j.contains("graph_hash") && j["graph_hash"].get<std::string>() != graph_hash(g)) {
    throw StructuralError("protocol was recorded for a different graph");
  }
  Protocol p;
  for (const auto& m : j["moves"]) {
    if (!m.is_array() || m.size() != 2 || !m[0].is_number_unsigned() || !m[1].is_number_unsigned()) {
      throw StructuralError("each move must be a pair of vertex ids");
    }
    p.push(m[0].get<Vertex>(), m[1].get<Vertex>());
  }
  return p;
}

}  // namespace unitacq
