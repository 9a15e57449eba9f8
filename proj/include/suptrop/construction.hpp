#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "suptrop/matrix.hpp"
#include "suptrop/rank.hpp"

namespace suptrop {

/// d x width matrix of zeros and ones; rows are the index set I, columns J.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  ZeroOneMatrix(std::size_t d, std::size_t width, std::vector<std::uint8_t> bits);
  ZeroOneMatrix(std::size_t d, std::size_t width);  // all zeros
  static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t d() const { return d_; }
  std::size_t width() const { return width_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * width_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * width_ + j] = v ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t ones() const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t d_ = 0;
  std::size_t width_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct GoodnessReport {
  std::size_t ones_count = 0;
  std::size_t block = 0;  // side of the forbidden all-ones square, ⌈r⌉
  bool cond1 = false;     // ones_count >= u
  bool cond2 = false;     // no block x block all-ones submatrix
  bool cond2_vacuous = false;
};

/// Checks both conditions of a good tuple. The all-ones search picks rows
/// depth-first, intersecting their column supports, and prunes as soon as
/// fewer than ⌈r⌉ common columns remain.
GoodnessReport verify_good(const ZeroOneMatrix& m, std::size_t k, const Rat& r, const Rat& u);

/// (d, k, r, u) with a witness matrix; construction verifies both conditions.
class GoodTuple {
 public:
  GoodTuple(std::size_t k, Rat r, Rat u, ZeroOneMatrix matrix);

  std::size_t d() const { return matrix_.d(); }
  std::size_t k() const { return k_; }
  const Rat& r() const { return r_; }
  const Rat& u() const { return u_; }
  const ZeroOneMatrix& matrix() const { return matrix_; }

 private:
  std::size_t k_;
  Rat r_;
  Rat u_;
  ZeroOneMatrix matrix_;
};

/// Tropical matrix with rows {1..k} x I and columns I ∪ J:
/// (α,i | i) = 0, (α,i | i') = ∞, (α,i | j) = 0 where M(i|j) = 0 and
/// a_{ijα} where M(i|j) = 1.
struct PhiMatrix {
  Matrix base;
  std::size_t d = 0;
  std::size_t k = 0;
  // Keyed (i, j, α), all 1-based.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rat> coeffs;

  std::size_t n() const { return d * k; }
};

/// Builds Φ(M). The coefficients are 1 + m / ((N + 1) k d) for m = 1..N
/// over the triples (i, j, α) with M(i|j) = 1 in lexicographic order: all
/// distinct and inside [1, 1 + 1/(kd)].
PhiMatrix build_phi(const ZeroOneMatrix& m, std::size_t k);

/// Row and column labels used by build_phi.
std::string index_label(std::size_t i);         // "i<i>", 1-based
std::string other_label(std::size_t j);         // "j<j>", 1-based
std::string phi_row_label(std::size_t alpha, std::size_t i);  // "<alpha>:i<i>"

/// n - s with s the least integer such that s^2 >= n^2 - ku; never above
/// n - sqrt(n^2 - ku). The underlying bound assumes Q-linearly independent
/// coefficients, which rational coefficients cannot satisfy, so the value
/// is a theoretical figure only.
std::size_t kapranov_lower_bound(std::size_t n, std::size_t k, const Rat& u);

/// d + k r, exactly.
Rat tropical_upper_bound(std::size_t d, std::size_t k, const Rat& r);

/// Every ∞ replaced by 2^τ; equals D ⊙ Φ for D with 0 on the diagonal and 2
/// elsewhere.
Matrix finite_entries(const Matrix& phi);

/// The matrix D above, n x n, labelled like Φ's rows.
Matrix offset_matrix(const Matrix& phi);

struct PhiBoundsReport {
  Rat bound;                  // d + k r
  std::size_t threshold = 0;  // smallest size that must be singular: ⌊d + kr⌋ + 1
  std::uint64_t checked = 0;  // submatrices tested at sizes >= threshold
  bool exhaustive = true;
  bool all_singular = true;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> counterexample;
  std::optional<std::size_t> exact_rank;  // when the search finished in budget
  std::size_t kapranov_bound = 0;
  std::string kapranov_caveat;
};

struct PhiBoundsOptions {
  bool randomized = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  // Exhaustive sweep above the threshold refuses beyond this many checks.
  std::uint64_t max_checks = 50'000'000;
  // Check budget for the exact tropical rank; 0 skips it.
  std::uint64_t exact_rank_budget = 200'000'000;
};

/// Confirms that every square submatrix of size > d + kr is singular.
PhiBoundsReport verify_phi_bounds(const PhiMatrix& phi, const GoodTuple& good,
                                  const PhiBoundsOptions& options = {});

inline constexpr const char* kKapranovCaveat =
    "theoretical (hypothesis not realizable in exact rational mode)";

}  // namespace suptrop
