#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suptrop/matrix.hpp"

namespace suptrop {

enum class RankMode { exhaustive, randomized };

struct RankOptions {
  RankMode mode = RankMode::exhaustive;
  // Randomized mode: submatrices drawn per size when a size is too large
  // to enumerate.
  std::uint64_t samples_per_size = 10000;
  std::uint64_t seed = 0;
  // Total non-singularity tests allowed; 0 means unlimited. Exceeding the
  // budget raises SizeLimitExceeded.
  std::uint64_t max_checks = 0;
  // Worker threads for the sweep; 0 reads TROP_THREADS (default 1).
  unsigned threads = 0;
};

struct RankResult {
  // Exact tropical rank when `certified`, otherwise a certified lower bound.
  std::size_t rank = 0;
  // rank <= upper_bound; the sizes in between were only sampled.
  std::size_t upper_bound = 0;
  bool certified = true;
  // Witness: indices of a non-singular rank x rank submatrix.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::uint64_t checks = 0;
};

/// Largest size of a non-singular square submatrix.
///
/// Exhaustive mode grows non-singular submatrices one matched (row, column)
/// pair at a time and visits each non-singular submatrix once, so its cost
/// follows the number of non-singular submatrices rather than all of them.
/// The witness is the first maximal one in that order.
///
/// Randomized mode walks sizes from min(rows, cols) downward, enumerating a
/// size when it has at most `samples_per_size` submatrices and sampling it
/// otherwise; the witness found is always genuine.
RankResult tropical_rank(const Matrix& a, const RankOptions& options = {});

struct SizeSweep {
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witness;
  std::uint64_t checks = 0;
};

/// Exhaustive search for a non-singular size x size submatrix.
SizeSweep find_nonsingular(const Matrix& a, std::size_t size, const RankOptions& options = {});

/// C(rows, size) * C(cols, size), saturating at UINT64_MAX.
std::uint64_t count_square_submatrices(std::size_t rows, std::size_t cols, std::size_t size);

/// Thread count from TROP_THREADS, at least 1.
unsigned default_thread_count();

}  // namespace suptrop
