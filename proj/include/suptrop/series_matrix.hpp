#pragma once

#include <string>
#include <vector>

#include "suptrop/matrix.hpp"
#include "suptrop/puiseux.hpp"
#include "suptrop/symmetrize.hpp"

namespace suptrop {

/// Labelled rectangular matrix of finite Puiseux series over one field.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(Field field, std::vector<std::string> row_labels,
               std::vector<std::string> col_labels, std::vector<PuiseuxPoly> entries);
  /// Zero matrix with default labels.
  SeriesMatrix(Field field, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::vector<PuiseuxPoly>& entries() const { return entries_; }

  const PuiseuxPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  PuiseuxPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }

  friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

 private:
  Field field_ = Field::rationals();
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<PuiseuxPoly> entries_;
};

/// Entrywise degrees as a tropical matrix (tangible values, ∞ for zero).
Matrix degree_matrix(const SeriesMatrix& l);

/// Rank over the fraction field of the series ring. Exponents are brought
/// to a common denominator D and shifted so that t = s^D turns every entry
/// into a polynomial in s; the rank is then found by fraction-free
/// (Bareiss) elimination with complete pivoting.
std::size_t series_rank(const SeriesMatrix& l);

/// A ⊨ deg L entrywise. Throws ShapeMismatch on differing shapes or labels.
bool lifting_check(const Matrix& a, const SeriesMatrix& l);

/// Builds a lifting of T from a lifting L of Σ(T), one row pair per index
/// i in I:
///  - anchor columns: 1 at (i#c | i), 0 at (i#c | i') for i' ≠ i;
///  - T(i#1|j) = T(i#2|j) = s: (ζ t^s, L(i|j) + ζ t^s), with ζ the first
///    nonzero field element (1, -1, 2, ... or 1..p-1) keeping the t^s
///    coefficient of L(i|j) + ζ t^s nonzero;
///  - T(i#1|j) = s > T(i#2|j): (t^s, L(i|j) + t^s);
///  - T(i#1|j) < T(i#2|j) = s: (t^s - L(i|j), t^s);
/// where t^∞ = 0. The result has rank rank(L) + |I|.
/// Throws FieldTooSmall over F_2, NotALifting if L does not lift Σ(T).
SeriesMatrix lift_transform(const SymmetrizedMatrix& t, const SeriesMatrix& l);

/// Inverse direction: from a lifting 𝓛 of T, eliminates each i#1 row from
/// its i#2 partner and returns the I x J block, a lifting of Σ(T) with
/// rank(𝓛) - |I|. Rows are combined fraction-free as a·𝓛(i#2) - b·𝓛(i#1),
/// a = 𝓛(i#1|i), b = 𝓛(i#2|i), and divided by ab when both are constants.
SeriesMatrix row_reduce_symmetrized(const SymmetrizedMatrix& t, const SeriesMatrix& lifted);

}  // namespace suptrop
