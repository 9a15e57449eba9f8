#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "suptrop/assignment.hpp"
#include "suptrop/matrix.hpp"

namespace suptrop::detail {

enum class PermanentKind { infinite, ghost, tangible };

template <class Cost>
struct PermanentResult {
  PermanentKind kind = PermanentKind::infinite;
  Cost value{};
};

// Evaluates the permanent of an n x n block through the assignment problem.
// `finite` is scratch and is restored before returning.
template <class Cost>
PermanentResult<Cost> assignment_permanent(std::size_t n, std::span<const Cost> cost,
                                           std::vector<std::uint8_t>& finite,
                                           std::span<const Kind> kind) {
  PermanentResult<Cost> out;
  const auto best = solve_min_assignment<Cost>(n, cost, finite);
  if (!best.feasible) return out;
  out.value = best.value;
  out.kind = PermanentKind::ghost;
  for (std::size_t i = 0; i < n; ++i) {
    if (kind[i * n + best.row_to_col[i]] != Kind::tangible) return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = i * n + best.row_to_col[i];
    finite[k] = 0;
    const auto alt = solve_min_assignment<Cost>(n, cost, finite);
    finite[k] = 1;
    if (alt.feasible && alt.value == best.value) return out;
  }
  out.kind = PermanentKind::tangible;
  return out;
}

// ν-values of a whole matrix brought to a common denominator so that
// submatrix permanents can be evaluated in 64-bit integers. Falls back to
// exact rationals when the scaled values do not fit comfortably.
class ScaledView {
 public:
  explicit ScaledView(const Matrix& m);

  Scalar permanent(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  bool nonsingular(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  bool uses_integers() const { return use_int_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::int64_t>& ints() const { return ints_; }
  const std::vector<Rat>& rats() const { return rats_; }
  const std::vector<Kind>& kinds() const { return kinds_; }

 private:
  template <class Cost>
  PermanentResult<Cost> evaluate(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols,
                                 const std::vector<Cost>& source) const;

  std::size_t cols_ = 0;
  bool use_int_ = false;
  mpz_class scale_ = 1;
  std::vector<std::int64_t> ints_;
  std::vector<Rat> rats_;
  std::vector<Kind> kinds_;
};

}  // namespace suptrop::detail
