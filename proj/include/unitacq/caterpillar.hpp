#pragma once

// Caterpillar recognition, the pyramid condition for a_u = 1, the
// assignment-based protocol, and the left-to-right greedy for a_u.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "unitacq/assignment.hpp"
#include "unitacq/engine.hpp"
#include "unitacq/graph.hpp"

namespace unitacq {

// Spine v_0..v_{k+1} after deleting the leaves of the tree. A single-vertex
// spine stands for K_1, K_2 (spine {0}, leaf 1) and stars.
struct CaterpillarView {
  std::vector<Vertex> spine;
  std::vector<std::vector<Vertex>> leaves;  // per spine position, ascending

  std::size_t k() const { return spine.size() >= 2 ? spine.size() - 2 : 0; }
  std::size_t leaf_count(std::size_t i) const { return leaves.at(i).size(); }
  std::vector<std::size_t> leaf_counts() const {
    std::vector<std::size_t> d;
    for (const auto& l : leaves) d.push_back(l.size());
    return d;
  }
  std::size_t order() const {
    std::size_t n = spine.size();
    for (const auto& l : leaves) n += l.size();
    return n;
  }

  CaterpillarView reversed() const {
    CaterpillarView r{spine, leaves};
    std::reverse(r.spine.begin(), r.spine.end());
    std::reverse(r.leaves.begin(), r.leaves.end());
    return r;
  }
};

struct NotCaterpillar {
  std::string reason;
  std::optional<Edge> cycle_edge;         // set when the graph has a cycle
  std::optional<Vertex> branch_vertex;    // non-leaf with three non-leaf neighbours
};

using RecognizeResult = std::variant<CaterpillarView, NotCaterpillar>;

inline RecognizeResult recognize(const Graph& g) {
  const auto n = g.order();
  if (n == 0) return NotCaterpillar{"empty graph", {}, {}};
  if (!is_connected(g)) return NotCaterpillar{"graph is disconnected", {}, {}};
  if (g.size() != n - 1) {
    // First edge closing a cycle in a DFS spanning forest.
    std::vector<Vertex> root(n);
    std::iota(root.begin(), root.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (auto e : g.edges()) {
      auto a = find(e.u), b = find(e.v);
      if (a == b) return NotCaterpillar{"graph has a cycle", e, {}};
      root[a] = b;
    }
  }
  if (n == 1) return CaterpillarView{{0}, {{}}};
  if (n == 2) return CaterpillarView{{0}, {{1}}};

  std::vector<char> inner(n, 0);
  std::vector<Vertex> spine_set;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 1) {
      inner[v] = 1;
      spine_set.push_back(v);
    }
  }
  std::vector<std::vector<Vertex>> inner_nb(n);
  for (auto v : spine_set) {
    for (auto y : g.neighbors(v)) {
      if (inner[y]) inner_nb[v].push_back(y);
    }
    if (inner_nb[v].size() > 2) {
      return NotCaterpillar{"vertex " + std::to_string(v) + " branches off the spine", {}, v};
    }
  }
  std::vector<Vertex> spine;
  if (spine_set.size() == 1) {
    spine = spine_set;
  } else {
    Vertex start = *std::find_if(spine_set.begin(), spine_set.end(),
                                 [&](Vertex v) { return inner_nb[v].size() == 1; });
    spine.push_back(start);
    Vertex prev = start, cur = inner_nb[start][0];
    while (true) {
      spine.push_back(cur);
      if (inner_nb[cur].size() == 1) break;
      Vertex nxt = inner_nb[cur][0] == prev ? inner_nb[cur][1] : inner_nb[cur][0];
      prev = cur;
      cur = nxt;
    }
  }
  CaterpillarView view;
  view.spine = spine;
  for (auto v : spine) {
    std::vector<Vertex> l;
    for (auto y : g.neighbors(v)) {
      if (!inner[y]) l.push_back(y);
    }
    view.leaves.push_back(std::move(l));
  }
  // Orientation: lexicographically smaller leaf-count sequence, then the
  // smaller first spine id.
  auto rev = view.reversed();
  auto d = view.leaf_counts(), dr = rev.leaf_counts();
  if (dr < d || (dr == d && rev.spine.front() < view.spine.front())) return rev;
  return view;
}

inline std::size_t ell(long long s) {
  if (s < 1) throw PreconditionError("segment length must be positive");
  auto a = static_cast<std::size_t>((s + 2) / 2), b = static_cast<std::size_t>((s + 1) / 2);
  return a * b;
}

struct Segment {
  std::size_t first = 0;   // spine position of the first internal vertex
  std::size_t length = 0;
  std::size_t leaf_sum = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct ConditionResult {
  bool holds = true;
  std::optional<Segment> violation;  // shortest, then leftmost
  std::size_t sums_evaluated = 0;
};

namespace detail {

// Checks segments of positions [lo, hi] (inclusive, 1-based internal range)
// that end at `end`, shortest first. Returns the failing segment if any.
inline std::optional<Segment> check_segments_ending(const std::vector<std::size_t>& prefix,
                                                    std::size_t lo, std::size_t end,
                                                    std::size_t& sums) {
  for (std::size_t start = end + 1; start-- > lo;) {
    ++sums;
    auto sum = prefix[end + 1] - prefix[start];
    auto len = end - start + 1;
    if (sum < ell(static_cast<long long>(len))) return Segment{start, len, sum};
  }
  return std::nullopt;
}

inline std::vector<std::size_t> prefix_sums(const std::vector<std::size_t>& d) {
  std::vector<std::size_t> p(d.size() + 1, 0);
  for (std::size_t i = 0; i < d.size(); ++i) p[i + 1] = p[i] + d[i];
  return p;
}

}  // namespace detail

inline ConditionResult condition_check(const CaterpillarView& view) {
  ConditionResult r;
  if (view.spine.size() < 3) return r;
  const auto d = view.leaf_counts();
  const auto prefix = detail::prefix_sums(d);
  const std::size_t k = view.k();
  bool failed = false;
  for (std::size_t end = 1; end <= k && !failed; ++end) {
    failed = detail::check_segments_ending(prefix, 1, end, r.sums_evaluated).has_value();
  }
  if (!failed) return r;
  r.holds = false;
  for (std::size_t len = 1; len <= k && !r.violation; ++len) {
    for (std::size_t start = 1; start + len - 1 <= k; ++start) {
      auto sum = prefix[start + len] - prefix[start];
      if (sum < ell(static_cast<long long>(len))) {
        r.violation = Segment{start, len, sum};
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Pyramid assignment
// ---------------------------------------------------------------------------

struct Cell {
  std::size_t column = 0;  // spine position i, 1..k
  std::size_t height = 0;  // 1..mu_i

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct AssignedLeaf {
  Vertex leaf = 0;
  std::size_t source = 0;  // spine position of the leaf's neighbour
  Cell cell;

  std::size_t cost() const {
    return source > cell.column ? source - cell.column : cell.column - source;
  }
};

struct Assignment {
  std::vector<AssignedLeaf> pairs;  // one per pyramid cell, cell order
  std::vector<Vertex> unmatched;
  std::size_t cost = 0;
};

inline std::vector<Cell> pyramid_cells(std::size_t k) {
  std::vector<Cell> cells;
  for (std::size_t i = 1; i <= k; ++i) {
    auto mu = std::min(i, k + 1 - i);
    for (std::size_t h = 1; h <= mu; ++h) cells.push_back({i, h});
  }
  return cells;
}

// Minimum-cost matching of pyramid cells over all internal vertices to leaves
// of internal vertices; a leaf at position j may fill (i,h) only if h > |i-j|.
inline std::optional<Assignment> build_assignment(const CaterpillarView& view) {
  const auto k = view.k();
  if (view.spine.size() < 3) throw PreconditionError("caterpillar needs at least one internal spine vertex");
  auto cells = pyramid_cells(k);
  std::vector<std::pair<Vertex, std::size_t>> pool;  // (leaf, position)
  for (std::size_t j = 1; j <= k; ++j) {
    for (auto x : view.leaves[j]) pool.push_back({x, j});
  }
  if (pool.size() < cells.size()) return std::nullopt;
  CostMatrix cost(cells.size(), std::vector<std::optional<std::int64_t>>(pool.size()));
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < pool.size(); ++c) {
      auto i = cells[r].column, j = pool[c].second;
      auto dist = i > j ? i - j : j - i;
      if (cells[r].height > dist) cost[r][c] = static_cast<std::int64_t>(dist);
    }
  }
  auto sol = solve_assignment(cost);
  if (!sol) return std::nullopt;
  Assignment a;
  std::vector<char> taken(pool.size(), 0);
  for (std::size_t r = 0; r < cells.size(); ++r) {
    auto c = sol->row_to_col[r];
    taken[c] = 1;
    a.pairs.push_back({pool[c].first, pool[c].second, cells[r]});
  }
  for (std::size_t c = 0; c < pool.size(); ++c) {
    if (!taken[c]) a.unmatched.push_back(pool[c].first);
  }
  a.cost = static_cast<std::size_t>(sol->cost);
  return a;
}

namespace detail {

struct GridSegment {
  long long x0, y0;  // start point
  long long dir;     // -1, 0, +1 horizontal step per unit of height
  long long len;
  long long x(long long t) const { return x0 + dir * t; }
  long long y(long long t) const { return y0 + t; }
};

inline GridSegment grid_segment(const AssignedLeaf& p) {
  auto i = static_cast<long long>(p.cell.column), j = static_cast<long long>(p.source);
  auto h = static_cast<long long>(p.cell.height);
  auto len = i > j ? i - j : j - i;
  return {j, h - len, i > j ? 1 : (i < j ? -1 : 0), len};
}

// Two non-collinear segments may not share a point that is interior-top for
// one and interior-bottom for the other.
inline void check_no_crossing(const std::vector<GridSegment>& segs) {
  std::map<std::pair<long long, long long>, std::vector<std::pair<std::size_t, long long>>> at;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    for (long long t = 0; t <= segs[s].len; ++t) at[{segs[s].x(t), segs[s].y(t)}].push_back({s, t});
  }
  auto collinear = [&](const GridSegment& a, const GridSegment& b) {
    if (a.len == 0 || b.len == 0) return true;
    return a.dir == b.dir && a.x0 - a.dir * a.y0 == b.x0 - b.dir * b.y0;
  };
  for (const auto& [pt, list] : at) {
    for (auto [a, ta] : list) {
      for (auto [b, tb] : list) {
        if (a == b || collinear(segs[a], segs[b])) continue;
        bool a_above = ta < segs[a].len;
        bool b_below = tb > 0;
        if (a_above && b_below) {
          throw InternalError("assignment segments cross at (" + std::to_string(pt.first) + "," +
                              std::to_string(pt.second) + ")");
        }
      }
    }
  }
}

}  // namespace detail

// Fills the pyramid in an order where every leaf chip can walk to its cell,
// then drains the resulting ascending tree (two trees when k is even, joined
// along the middle spine edge).
inline Protocol assignment_to_protocol(const Graph& g, const CaterpillarView& view, const Assignment& a) {
  const auto k = view.k();
  const auto m = a.pairs.size();
  std::vector<detail::GridSegment> segs;
  for (const auto& p : a.pairs) {
    if (p.cell.height <= p.cost()) throw PreconditionError("assignment uses a forbidden pair");
    segs.push_back(detail::grid_segment(p));
  }
  detail::check_no_crossing(segs);

  // Column occupancy: cells by (column, height) -> pair index.
  std::map<std::pair<long long, long long>, std::size_t> cell_owner;
  for (std::size_t e = 0; e < m; ++e) {
    cell_owner[{static_cast<long long>(a.pairs[e].cell.column),
                static_cast<long long>(a.pairs[e].cell.height)}] = e;
  }
  // A chip standing at (x,y) needs column x to hold exactly the cells below
  // y, and the next column at least those below y+1. Turn that into order
  // constraints between fills.
  std::vector<std::vector<std::size_t>> after(m);
  std::vector<std::size_t> indegree(m, 0);
  auto require = [&](std::size_t first, std::size_t second) {
    if (first == second) return;
    after[first].push_back(second);
    ++indegree[second];
  };
  for (std::size_t e = 0; e < m; ++e) {
    const auto& s = segs[e];
    for (long long t = 0; t < s.len; ++t) {
      auto x = s.x(t), y = s.y(t);
      for (auto it = cell_owner.lower_bound({x, 0}); it != cell_owner.end() && it->first.first == x; ++it) {
        if (it->first.second < y) {
          require(it->second, e);
        } else {
          require(e, it->second);
        }
      }
    }
    auto top_x = s.x(s.len), top_y = s.y(s.len);
    for (auto it = cell_owner.lower_bound({top_x, 0});
         it != cell_owner.end() && it->first.first == top_x && it->first.second < top_y; ++it) {
      require(it->second, e);
    }
  }
  // Kahn's algorithm, lowest cell first.
  auto key = [&](std::size_t e) { return std::make_pair(a.pairs[e].cell.height, a.pairs[e].cell.column); };
  std::vector<std::size_t> ready, order;
  for (std::size_t e = 0; e < m; ++e) {
    if (indegree[e] == 0) ready.push_back(e);
  }
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end(), [&](auto x, auto y) { return key(x) < key(y); });
    auto e = *it;
    ready.erase(it);
    order.push_back(e);
    for (auto f : after[e]) {
      if (--indegree[f] == 0) ready.push_back(f);
    }
  }
  if (order.size() != m) throw InternalError("fill order has a cycle");

  ProtocolBuilder b(g);
  for (auto e : order) {
    const auto& p = a.pairs[e];
    std::vector<Vertex> path{p.leaf};
    auto j = static_cast<long long>(p.source), i = static_cast<long long>(p.cell.column);
    for (long long x = j;; x += (i > j ? 1 : -1)) {
      path.push_back(view.spine[static_cast<std::size_t>(x)]);
      if (x == i) break;
    }
    b.move_along(path);
  }
  std::vector<Vertex> roots;
  if (k % 2 == 1) {
    roots = {view.spine[(k + 1) / 2]};
  } else {
    roots = {view.spine[k / 2], view.spine[k / 2 + 1]};
  }
  if (!b.drain_forest(roots)) throw InternalError("filled pyramid is not an ascending tree");
  if (roots.size() == 2) b.merge(roots[0], roots[1]);
  if (support(b.weights()) != 1) throw InternalError("pyramid protocol left more than one vertex");
  return b.take();
}

// ---------------------------------------------------------------------------
// a_u of an arbitrary caterpillar
// ---------------------------------------------------------------------------

struct Piece {
  std::size_t first = 0;  // spine positions, inclusive
  std::size_t last = 0;

  friend bool operator==(const Piece&, const Piece&) = default;
};

struct CaterpillarValue {
  std::size_t value = 1;
  std::vector<Piece> pieces;
  std::size_t sums_evaluated = 0;
};

// Greedy from the left: each piece is the longest spine interval (with its
// leaves) whose induced caterpillar passes the pyramid condition. A leafless
// spine vertex at either end of a piece is a leaf of that piece, and so is
// the last one of two leafless vertices at the right end; the piece's own
// internal vertices are what is left between.
inline CaterpillarValue a_u_caterpillar(const CaterpillarView& view) {
  CaterpillarValue r;
  const auto L = view.spine.size();
  if (L <= 2) {
    r.pieces = {{0, L - 1}};
    return r;
  }
  const auto d = view.leaf_counts();
  const auto prefix = detail::prefix_sums(d);
  auto left_end = [&](std::size_t a, std::size_t b) { return d[a] >= 1 || a == b ? a : a + 1; };
  auto right_end = [&](std::size_t b) { return d[b] >= 1 ? b : b - 1; };

  r.pieces.clear();
  std::size_t a = 0;
  while (a < L) {
    // Internal positions of the piece start at lo; checked records the last
    // internal position whose ending segments all pass.
    std::size_t b = a;
    const std::size_t lo_if_long = left_end(a, a + 1) + 1;
    long long checked = static_cast<long long>(lo_if_long) - 1;
    while (b + 1 < L) {
      auto nb = b + 1;
      long long upper = static_cast<long long>(right_end(nb)) - 1;
      bool ok = true;
      while (checked < upper) {
        auto end = static_cast<std::size_t>(checked + 1);
        if (detail::check_segments_ending(prefix, lo_if_long, end, r.sums_evaluated)) {
          ok = false;
          break;
        }
        ++checked;
      }
      if (!ok) break;
      b = nb;
    }
    r.pieces.push_back({a, b});
    a = b + 1;
  }
  r.value = r.pieces.size();
  return r;
}

inline std::vector<Vertex> piece_vertices(const CaterpillarView& view, const Piece& p) {
  std::vector<Vertex> vs;
  for (auto i = p.first; i <= p.last; ++i) {
    vs.push_back(view.spine[i]);
    vs.insert(vs.end(), view.leaves[i].begin(), view.leaves[i].end());
  }
  std::sort(vs.begin(), vs.end());
  return vs;
}

// Protocol gathering a caterpillar with a_u = 1 onto one vertex.
inline Protocol unit_caterpillar_protocol(const Graph& g, const CaterpillarView& view) {
  if (view.spine.size() >= 3) {
    auto a = build_assignment(view);
    if (!a) throw PreconditionError("caterpillar fails the pyramid condition");
    return assignment_to_protocol(g, view, *a);
  }
  ProtocolBuilder b(g);
  std::optional<Vertex> second;
  std::vector<Vertex> leaves = view.leaves[0];
  if (view.spine.size() == 2) {
    second = view.spine[1];
    leaves.insert(leaves.end(), view.leaves[1].begin(), view.leaves[1].end());
  }
  b.collect_double_star(view.spine[0], second, leaves);
  return b.take();
}

// Protocol realising a_u_caterpillar: every piece is gathered independently.
inline Protocol caterpillar_protocol(const Graph& g, const CaterpillarView& view, const CaterpillarValue& value) {
  Protocol out;
  for (const auto& piece : value.pieces) {
    auto vs = piece_vertices(view, piece);
    auto sub = induced_subgraph(g, vs);
    auto rec = recognize(sub);
    if (!std::holds_alternative<CaterpillarView>(rec)) throw InternalError("piece is not a caterpillar");
    auto local = unit_caterpillar_protocol(sub, std::get<CaterpillarView>(rec));
    for (auto m : local.moves) out.push(vs[m.from], vs[m.to]);
  }
  return out;
}

}  // namespace unitacq
