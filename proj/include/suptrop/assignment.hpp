#pragma once

// Min-cost perfect assignment (Kuhn-Munkres, shortest augmenting path form)
// over an exact ordered cost type. Entries flagged non-finite are forbidden.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace suptrop {

template <class Cost>
struct Assignment {
  bool feasible = false;
  Cost value{};
  std::vector<std::size_t> row_to_col;
  // Dual certificate: cost(i,j) - row_potential[i] - col_potential[j] >= 0
  // on every finite entry, with equality on the assignment.
  std::vector<Cost> row_potential;
  std::vector<Cost> col_potential;
};

template <class Cost>
Assignment<Cost> solve_min_assignment(std::size_t n, std::span<const Cost> cost,
                                      std::span<const std::uint8_t> finite) {
  Assignment<Cost> out;
  if (n == 0) {
    out.feasible = true;
    return out;
  }

  bool any = false;
  Cost lo{}, hi{};
  for (std::size_t k = 0; k < n * n; ++k) {
    if (!finite[k]) continue;
    if (!any || cost[k] < lo) lo = cost[k];
    if (!any || hi < cost[k]) hi = cost[k];
    any = true;
  }
  if (!any) return out;

  // Shift to [0, R] and give forbidden entries a cost no all-finite
  // assignment can reach.
  const Cost range = hi - lo;
  const Cost big = range * static_cast<Cost>(static_cast<long>(n)) + Cost(1);
  std::vector<Cost> c(n * n);
  for (std::size_t k = 0; k < n * n; ++k) c[k] = finite[k] ? cost[k] - lo : big;

  std::vector<Cost> u(n + 1, Cost(0)), v(n + 1, Cost(0)), minv(n + 1, Cost(0));
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<std::uint8_t> used(n + 1), has(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(has.begin(), has.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      bool have_delta = false;
      Cost delta{};
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Cost cur = c[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (!has[j] || cur < minv[j]) {
          minv[j] = std::move(cur);
          has[j] = 1;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  out.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.row_to_col[p[j] - 1] = j - 1;

  Cost total(0);
  for (std::size_t i = 0; i < n; ++i) total += c[i * n + out.row_to_col[i]];
  if (!(total < big)) return out;

  out.feasible = true;
  out.value = total + lo * static_cast<Cost>(static_cast<long>(n));
  out.row_potential.resize(n);
  out.col_potential.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.row_potential[i] = u[i + 1] + lo;
  for (std::size_t j = 0; j < n; ++j) out.col_potential[j] = v[j + 1];
  return out;
}

}  // namespace suptrop
