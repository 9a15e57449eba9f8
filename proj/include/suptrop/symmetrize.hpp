#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "suptrop/matrix.hpp"
#include "suptrop/rank.hpp"

namespace suptrop {

/// Tropical matrix whose rows come in pairs i#1, i#2 (i in I) and whose
/// columns are I followed by J, with T(i#c | i) = 0 and T(i#c | i') = ∞ for
/// i' ≠ i. The row and column order of the underlying matrix is free.
class SymmetrizedMatrix {
 public:
  /// Validates the structure; throws MalformedSymmetrized naming the
  /// offending entry.
  SymmetrizedMatrix(Matrix base, std::vector<std::string> index_rows,
                    std::vector<std::string> other_cols);

  const Matrix& base() const { return base_; }
  const std::vector<std::string>& I() const { return I_; }
  const std::vector<std::string>& J() const { return J_; }

  std::size_t row_of(std::size_t i, int copy) const;  // i indexes I, copy in {1, 2}
  std::size_t anchor_col(std::size_t i) const;        // column of I[i]
  std::size_t other_col(std::size_t j) const;         // column of J[j]

  static std::string row_label(std::string_view i, int copy);

 private:
  Matrix base_;
  std::vector<std::string> I_;
  std::vector<std::string> J_;
  std::vector<std::size_t> rows1_, rows2_, anchor_, other_;
};

/// Collapses each row pair by ⊕ and drops the anchor columns: an I x J
/// supertropical matrix.
Matrix sigma(const SymmetrizedMatrix& t);

/// Canonical preimage under sigma using S's own row and column labels as I
/// and J: a^τ -> (a, ∞), a^γ -> (a, a), ∞ -> (∞, ∞). Rows are ordered
/// I#1 then I#2, columns I then J.
SymmetrizedMatrix symmetrize(const Matrix& s);

/// As above after relabelling S's rows by `I` and columns by `J`.
SymmetrizedMatrix symmetrize(const Matrix& s, std::vector<std::string> I,
                             std::vector<std::string> J);

struct AdditivityReport {
  std::size_t trop_T = 0;
  std::size_t trop_sigma = 0;
  std::size_t index_count = 0;  // |I|
  bool holds = false;
};

/// Computes both tropical ranks exactly and checks rank T = rank Σ(T) + |I|.
AdditivityReport verify_rank_additivity(const SymmetrizedMatrix& t, const RankOptions& options = {});

}  // namespace suptrop
