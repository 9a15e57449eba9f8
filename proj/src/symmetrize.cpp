#include "suptrop/symmetrize.hpp"

#include <unordered_set>

#include "suptrop/error.hpp"

namespace suptrop {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  fail(ErrorKind::malformed_symmetrized, "malformed symmetrized matrix: " + what);
}

}  // namespace

std::string SymmetrizedMatrix::row_label(std::string_view i, int copy) {
  return std::string(i) + "#" + std::to_string(copy);
}

SymmetrizedMatrix::SymmetrizedMatrix(Matrix base, std::vector<std::string> index_rows,
                                     std::vector<std::string> other_cols)
    : base_(std::move(base)), I_(std::move(index_rows)), J_(std::move(other_cols)) {
  std::unordered_set<std::string> seen;
  for (const auto& i : I_) {
    if (!seen.insert(i).second) malformed("label '" + i + "' repeated in I");
  }
  for (const auto& j : J_) {
    if (!seen.insert(j).second) malformed("label '" + j + "' repeated or shared by I and J");
  }
  if (base_.rows() != 2 * I_.size()) {
    malformed("expected " + std::to_string(2 * I_.size()) + " rows, found " +
              std::to_string(base_.rows()));
  }
  if (base_.cols() != I_.size() + J_.size()) {
    malformed("expected " + std::to_string(I_.size() + J_.size()) + " columns, found " +
              std::to_string(base_.cols()));
  }
  for (const auto& i : I_) {
    for (int copy : {1, 2}) {
      const auto r = base_.row_index(row_label(i, copy));
      if (!r) malformed("missing row '" + row_label(i, copy) + "'");
      (copy == 1 ? rows1_ : rows2_).push_back(*r);
    }
    const auto c = base_.col_index(i);
    if (!c) malformed("missing column '" + i + "'");
    anchor_.push_back(*c);
  }
  for (const auto& j : J_) {
    const auto c = base_.col_index(j);
    if (!c) malformed("missing column '" + j + "'");
    other_.push_back(*c);
  }
  for (std::size_t r = 0; r < base_.rows(); ++r) {
    for (std::size_t c = 0; c < base_.cols(); ++c) {
      if (base_(r, c).is_ghost()) {
        malformed("ghost entry " + base_(r, c).str() + " at (" + base_.row_labels()[r] + "|" +
                  base_.col_labels()[c] + ")");
      }
    }
  }
  for (std::size_t a = 0; a < I_.size(); ++a) {
    for (std::size_t b = 0; b < I_.size(); ++b) {
      const Scalar expected = a == b ? Scalar::tangible(0) : Scalar::infinity();
      for (std::size_t r : {rows1_[a], rows2_[a]}) {
        const Scalar& got = base_(r, anchor_[b]);
        if (!(got == expected)) {
          malformed("entry (" + base_.row_labels()[r] + "|" + I_[b] + ") must be " +
                    expected.str() + ", found " + got.str());
        }
      }
    }
  }
}

std::size_t SymmetrizedMatrix::row_of(std::size_t i, int copy) const {
  return copy == 1 ? rows1_.at(i) : rows2_.at(i);
}
std::size_t SymmetrizedMatrix::anchor_col(std::size_t i) const { return anchor_.at(i); }
std::size_t SymmetrizedMatrix::other_col(std::size_t j) const { return other_.at(j); }

Matrix sigma(const SymmetrizedMatrix& t) {
  const Matrix& b = t.base();
  std::vector<Scalar> entries;
  entries.reserve(t.I().size() * t.J().size());
  for (std::size_t i = 0; i < t.I().size(); ++i) {
    for (std::size_t j = 0; j < t.J().size(); ++j) {
      const std::size_t c = t.other_col(j);
      entries.push_back(oplus(b(t.row_of(i, 1), c), b(t.row_of(i, 2), c)));
    }
  }
  return Matrix(t.I(), t.J(), std::move(entries));
}

SymmetrizedMatrix symmetrize(const Matrix& s) {
  return symmetrize(s, s.row_labels(), s.col_labels());
}

SymmetrizedMatrix symmetrize(const Matrix& s, std::vector<std::string> I,
                             std::vector<std::string> J) {
  if (I.size() != s.rows() || J.size() != s.cols()) {
    fail(ErrorKind::label_clash, "symmetrize: expected " + std::to_string(s.rows()) +
                                     " I labels and " + std::to_string(s.cols()) + " J labels");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : I) {
    if (!seen.insert(l).second) fail(ErrorKind::label_clash, "symmetrize: repeated label '" + l + "'");
  }
  for (const auto& l : J) {
    if (!seen.insert(l).second) {
      fail(ErrorKind::label_clash, "symmetrize: label '" + l + "' repeated or shared by I and J");
    }
  }

  const std::size_t n = I.size();
  const std::size_t m = J.size();
  std::vector<std::string> rows, cols(I);
  cols.insert(cols.end(), J.begin(), J.end());
  for (int copy : {1, 2}) {
    for (const auto& i : I) rows.push_back(SymmetrizedMatrix::row_label(i, copy));
  }
  std::vector<Scalar> entries(2 * n * (n + m), Scalar::infinity());
  const auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return entries[r * (n + m) + c]; };
  for (std::size_t i = 0; i < n; ++i) {
    at(i, i) = Scalar::tangible(0);
    at(n + i, i) = Scalar::tangible(0);
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar& e = s(i, j);
      if (e.is_infinite()) continue;
      at(i, n + j) = Scalar::tangible(e.value());
      if (e.is_ghost()) at(n + i, n + j) = Scalar::tangible(e.value());
    }
  }
  return SymmetrizedMatrix(Matrix(std::move(rows), std::move(cols), std::move(entries)),
                           std::move(I), std::move(J));
}

AdditivityReport verify_rank_additivity(const SymmetrizedMatrix& t, const RankOptions& options) {
  RankOptions exact = options;
  exact.mode = RankMode::exhaustive;
  AdditivityReport r;
  r.trop_T = tropical_rank(t.base(), exact).rank;
  r.trop_sigma = tropical_rank(sigma(t), exact).rank;
  r.index_count = t.I().size();
  r.holds = r.trop_T == r.trop_sigma + r.index_count;
  return r;
}

}  // namespace suptrop
