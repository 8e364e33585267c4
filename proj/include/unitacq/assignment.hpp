#pragma once

// Rectangular min-cost assignment (Hungarian method with potentials).

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace unitacq {

// cost[r][c]; nullopt entries are forbidden. Requires rows <= cols.
using CostMatrix = std::vector<std::vector<std::optional<std::int64_t>>>;

struct AssignmentSolution {
  std::vector<std::size_t> row_to_col;
  std::int64_t cost = 0;
};

// Every row gets a distinct column at minimum total cost; nullopt when no
// assignment avoids forbidden entries. Among equal reductions the smaller
// column index wins, so results are deterministic.
inline std::optional<AssignmentSolution> solve_assignment(const CostMatrix& cost) {
  const std::size_t rows = cost.size();
  if (rows == 0) return AssignmentSolution{};
  const std::size_t cols = cost[0].size();
  if (rows > cols) return std::nullopt;

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t {
    const auto& x = cost[r - 1][c - 1];
    return x ? *x : kInf;
  };

  // 1-based arrays; column 0 is the virtual start.
  std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<std::size_t> match(cols + 1, 0), way(cols + 1, 0);
  for (std::size_t r = 1; r <= rows; ++r) {
    match[0] = r;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(cols + 1, kInf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = match[j0], j1 = 0;
      std::int64_t delta = kInf;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        std::int64_t a = at(i0, j);
        std::int64_t cur = a >= kInf ? kInf : a - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 == 0 || delta >= kInf / 2) return std::nullopt;
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] < kInf) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  AssignmentSolution out;
  out.row_to_col.assign(rows, 0);
  for (std::size_t j = 1; j <= cols; ++j) {
    if (match[j] != 0) out.row_to_col[match[j] - 1] = j - 1;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& x = cost[r][out.row_to_col[r]];
    if (!x) return std::nullopt;
    out.cost += *x;
  }
  return out;
}

}  // namespace unitacq
