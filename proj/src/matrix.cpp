#include "suptrop/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "detail/scaled_view.hpp"
#include "suptrop/assignment.hpp"
#include "suptrop/error.hpp"

namespace suptrop {

Matrix::Matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               std::vector<Scalar> entries)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(entries)) {
  if (entries_.size() != row_labels_.size() * col_labels_.size()) {
    fail(ErrorKind::dimension_mismatch,
         "matrix has " + std::to_string(entries_.size()) + " entries, expected " +
             std::to_string(row_labels_.size()) + "x" + std::to_string(col_labels_.size()));
  }
  index_labels();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
    : Matrix(default_labels(rows), default_labels(cols),
             std::vector<Scalar>(rows * cols, fill)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * c);
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorKind::dimension_mismatch, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(default_labels(rows.size()), default_labels(c), std::move(entries));
}

void Matrix::index_labels() {
  row_lookup_.clear();
  col_lookup_.clear();
  for (std::size_t i = 0; i < row_labels_.size(); ++i) {
    if (!row_lookup_.emplace(row_labels_[i], i).second) {
      fail(ErrorKind::label_clash, "duplicate row label '" + row_labels_[i] + "'");
    }
  }
  for (std::size_t j = 0; j < col_labels_.size(); ++j) {
    if (!col_lookup_.emplace(col_labels_[j], j).second) {
      fail(ErrorKind::label_clash, "duplicate column label '" + col_labels_[j] + "'");
    }
  }
}

std::optional<std::size_t> Matrix::row_index(std::string_view label) const {
  const auto it = row_lookup_.find(std::string(label));
  if (it == row_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Matrix::col_index(std::string_view label) const {
  const auto it = col_lookup_.find(std::string(label));
  if (it == col_lookup_.end()) return std::nullopt;
  return it->second;
}

const Scalar& Matrix::at(std::string_view row, std::string_view col) const {
  const auto i = row_index(row);
  const auto j = col_index(col);
  if (!i || !j) {
    fail(ErrorKind::invalid_argument,
         "no entry (" + std::string(row) + "|" + std::string(col) + ")");
  }
  return (*this)(*i, *j);
}

Scalar& Matrix::at(std::string_view row, std::string_view col) {
  const auto& self = *this;
  return const_cast<Scalar&>(self.at(row, col));
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) const {
  std::vector<std::string> rl, cl;
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols.size());
  for (std::size_t i : rows) rl.push_back(row_labels_.at(i));
  for (std::size_t j : cols) cl.push_back(col_labels_.at(j));
  for (std::size_t i : rows) {
    for (std::size_t j : cols) entries.push_back((*this)(i, j));
  }
  return Matrix(std::move(rl), std::move(cl), std::move(entries));
}

bool Matrix::is_tropical() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const Scalar& s) { return s.is_ghost(); });
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

Matrix unit_matrix(std::size_t n) {
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = Scalar::tangible(0);
  return u;
}

namespace {

void require_square(const Matrix& a, std::string_view op) {
  if (!a.is_square()) {
    fail(ErrorKind::not_square, std::string(op) + ": matrix is " + std::to_string(a.rows()) +
                                    "x" + std::to_string(a.cols()) + ", not square");
  }
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// Depth-first sum over permutations; `partial` is the product so far.
void permanent_rec(const Matrix& a, std::size_t row, std::vector<std::uint8_t>& used,
                   const Scalar& partial, Scalar& acc) {
  const std::size_t n = a.rows();
  if (row == n) {
    acc = oplus(acc, partial);
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    const Scalar next = otimes(partial, a(row, j));
    if (next.is_infinite()) continue;
    used[j] = 1;
    permanent_rec(a, row + 1, used, next, acc);
    used[j] = 0;
  }
}

}  // namespace

Scalar permanent(const Matrix& a, std::size_t limit) {
  require_square(a, "permanent");
  if (a.rows() > limit) {
    fail(ErrorKind::size_limit_exceeded,
         "permanent: size " + std::to_string(a.rows()) + " exceeds brute-force limit " +
             std::to_string(limit) + "; use the assignment-based test");
  }
  std::vector<std::uint8_t> used(a.rows(), 0);
  Scalar acc = Scalar::infinity();
  permanent_rec(a, 0, used, Scalar::tangible(0), acc);
  return acc;
}

Scalar permanent_by_assignment(const Matrix& a) {
  require_square(a, "permanent_by_assignment");
  const auto idx = iota_indices(a.rows());
  return detail::ScaledView(a).permanent(idx, idx);
}

bool is_nonsingular(const Matrix& a) { return permanent(a).is_tangible(); }

bool is_nonsingular_fast(const Matrix& a) {
  require_square(a, "is_nonsingular_fast");
  const auto idx = iota_indices(a.rows());
  return detail::ScaledView(a).nonsingular(idx, idx);
}

Matrix expand_first_column(const Matrix& a) {
  require_square(a, "expand_first_column");
  const std::size_t n = a.rows();
  const Scalar zero = Scalar::tangible(0);
  bool ok = n >= 2 && a(0, 0) == zero && a(1, 0) == zero;
  for (std::size_t i = 2; ok && i < n; ++i) ok = a(i, 0).is_infinite();
  if (!ok) {
    fail(ErrorKind::precondition_violated,
         "expand_first_column: first column must be (0^t, 0^t, inf, ..., inf)");
  }
  std::vector<std::string> rows{a.row_labels()[0]};
  for (std::size_t i = 2; i < n; ++i) rows.push_back(a.row_labels()[i]);
  std::vector<std::string> cols(a.col_labels().begin() + 1, a.col_labels().end());
  std::vector<Scalar> entries;
  entries.reserve((n - 1) * (n - 1));
  for (std::size_t j = 1; j < n; ++j) entries.push_back(oplus(a(0, j), a(1, j)));
  for (std::size_t i = 2; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) entries.push_back(a(i, j));
  }
  return Matrix(std::move(rows), std::move(cols), std::move(entries));
}

Matrix with_replaced_column(const Matrix& a, std::size_t col, const Rat& first,
                            const Rat& second) {
  Matrix out = a;
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, col) = Scalar::infinity();
  if (out.rows() > 0) out(0, col) = Scalar::tangible(first);
  if (out.rows() > 1) out(1, col) = Scalar::tangible(second);
  return out;
}

std::string replace_column_keep_nonsingular(const Matrix& a, const Rat& first,
                                            const Rat& second) {
  require_square(a, "replace_column_keep_nonsingular");
  const std::size_t n = a.rows();
  if (n < 2) fail(ErrorKind::precondition_violated, "replace_column_keep_nonsingular: n < 2");
  if (!is_nonsingular_fast(a)) {
    fail(ErrorKind::precondition_violated, "replace_column_keep_nonsingular: A is singular");
  }
  const auto works = [&](std::size_t j) {
    return is_nonsingular_fast(with_replaced_column(a, j, first, second));
  };

  // In normal form (0^t optimal diagonal, off-diagonal >= 0) the column
  // matched to the row holding the smaller scaled entry of v works.
  const Normalization norm = hungarian_normalize(a);
  const Rat scaled_first = first + norm.row_scale[0];
  const Rat scaled_second = second + norm.row_scale[1];
  const std::size_t pick = scaled_first < scaled_second ? norm.permutation[0] : norm.permutation[1];
  if (works(pick)) return a.col_labels()[pick];

  // Ties in normal form: fall back to trying columns, preferred ones first.
  for (const bool preferred : {true, false}) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool tangible_top = a(0, j).is_tangible() || a(1, j).is_tangible();
      if (tangible_top == preferred && works(j)) return a.col_labels()[j];
    }
  }
  fail(ErrorKind::lemma_violation, "replace_column_keep_nonsingular: no column keeps A non-singular");
}

Normalization hungarian_normalize(const Matrix& a) {
  require_square(a, "hungarian_normalize");
  const std::size_t n = a.rows();
  std::vector<Rat> cost(n * n);
  std::vector<std::uint8_t> finite(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const Scalar& s = a.entries()[k];
    finite[k] = !s.is_infinite();
    if (finite[k]) cost[k] = s.value();
  }
  const auto sol = solve_min_assignment<Rat>(n, cost, finite);
  if (!sol.feasible) fail(ErrorKind::no_finite_assignment, "hungarian_normalize: no finite assignment");
  Normalization out;
  out.permutation = sol.row_to_col;
  out.row_scale.reserve(n);
  out.col_scale.reserve(n);
  for (const Rat& u : sol.row_potential) out.row_scale.push_back(-u);
  for (const Rat& v : sol.col_potential) out.col_scale.push_back(-v);
  return out;
}

Matrix apply_normalization(const Matrix& a, const Normalization& norm) {
  const std::size_t n = a.rows();
  Matrix out = a.submatrix(iota_indices(n), norm.permutation);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& s = out(i, j);
      if (s.is_infinite()) continue;
      const Rat v = s.value() + norm.row_scale[i] + norm.col_scale[norm.permutation[j]];
      out(i, j) = s.is_tangible() ? Scalar::tangible(v) : Scalar::ghost(v);
    }
  }
  return out;
}

Matrix trop_matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorKind::dimension_mismatch,
         "trop_matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::vector<Scalar> entries;
  entries.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::infinity();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, otimes(a(i, k), b(k, j)));
      entries.push_back(std::move(acc));
    }
  }
  return Matrix(a.row_labels(), b.col_labels(), std::move(entries));
}

}  // namespace suptrop
