#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "suptrop/semiring.hpp"

namespace suptrop {

/// Rectangular supertropical matrix with distinct row and column labels.
/// Entries are stored row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
         std::vector<Scalar> entries);
  /// rows x cols matrix filled with `fill`, labelled "1".."rows" and "1".."cols".
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar::infinity());
  /// Square matrix from nested initializers, default labels.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  bool is_square() const { return rows() == cols(); }
  bool empty() const { return rows() == 0 || cols() == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }

  const Scalar& at(std::string_view row, std::string_view col) const;
  Scalar& at(std::string_view row, std::string_view col);

  std::optional<std::size_t> row_index(std::string_view label) const;
  std::optional<std::size_t> col_index(std::string_view label) const;

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  /// No ghost entries (a conventional tropical matrix).
  bool is_tropical() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_ &&
           a.entries_ == b.entries_;
  }

 private:
  void index_labels();

  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<Scalar> entries_;
  std::unordered_map<std::string, std::size_t> row_lookup_;
  std::unordered_map<std::string, std::size_t> col_lookup_;
};

std::vector<std::string> default_labels(std::size_t n);

/// Tropical unit matrix: Tangible(0) on the diagonal, ∞ elsewhere.
Matrix unit_matrix(std::size_t n);

inline constexpr std::size_t kPermanentLimit = 10;

/// Supertropical permanent by summing all n! permutation products.
/// Throws NotSquare, or SizeLimitExceeded above `limit`.
Scalar permanent(const Matrix& a, std::size_t limit = kPermanentLimit);

/// Permanent evaluated through the assignment problem on ν(A): the optimum
/// value, tangible iff a unique optimal permutation uses tangible entries only.
Scalar permanent_by_assignment(const Matrix& a);

/// per A is tangible (brute force; bounded by the permanent limit).
bool is_nonsingular(const Matrix& a);

/// Assignment-based non-singularity test for any size. Uniqueness of the
/// optimum is decided by re-solving with each optimal edge forbidden.
bool is_nonsingular_fast(const Matrix& a);

/// Removes the first column and replaces the first two rows by their ⊕-sum.
/// Requires A(1|1) = A(2|1) = 0^τ and ∞ below; per A = per B.
Matrix expand_first_column(const Matrix& a);

/// Returns the label of a column that can be replaced by (a^τ, b^τ, ∞, ..., ∞)ᵀ
/// keeping A non-singular. The chosen column has a tangible entry in one of
/// its first two rows.
std::string replace_column_keep_nonsingular(const Matrix& a, const Rat& first, const Rat& second);

/// Copy of `a` with column `col` replaced by (first^τ, second^τ, ∞, ..., ∞)ᵀ.
Matrix with_replaced_column(const Matrix& a, std::size_t col, const Rat& first, const Rat& second);

/// Tropical scaling bringing A to normal form: ν(A(i|j)) + row_scale[i] +
/// col_scale[j] is >= 0 everywhere and 0 on (i, permutation[i]).
struct Normalization {
  std::vector<Rat> row_scale;
  std::vector<Rat> col_scale;
  std::vector<std::size_t> permutation;
};

Normalization hungarian_normalize(const Matrix& a);

/// Scaled matrix with columns reordered so the optimal assignment sits on
/// the diagonal.
Matrix apply_normalization(const Matrix& a, const Normalization& norm);

/// Supertropical matrix product (A⊙B)(i|j) = ⊕_k A(i|k) ⊙ B(k|j).
Matrix trop_matmul(const Matrix& a, const Matrix& b);

}  // namespace suptrop
