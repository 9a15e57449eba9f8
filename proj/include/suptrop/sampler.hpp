#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suptrop/construction.hpp"
#include "suptrop/interval.hpp"

namespace suptrop {

/// Sampling parameters. q must lie in (0, 1/10) unless allow_out_of_range
/// is set, in which case any q in (0, 1) is accepted. A q whose denominator
/// exceeds 2^62 is rounded down to a multiple of 2^-32 by validate().
struct SamplerParams {
  std::size_t d = 2;
  Rat q{1, 20};
  std::uint64_t seed = 0;
  bool allow_out_of_range = false;
};

SamplerParams validate(SamplerParams p);

/// 64-bit seed of attempt `attempt` derived from the base seed.
std::uint64_t attempt_seed(std::uint64_t seed, std::uint64_t attempt);

/// d x (d^2 - d) matrix with independent entries, 0 with probability q.
/// Generator: std::mt19937_64 seeded with attempt_seed(seed, attempt);
/// each entry consumes draws until one is accepted for an exact uniform
/// residue modulo den(q), and is 0 iff that residue is < num(q).
ZeroOneMatrix sample_candidate(const SamplerParams& p, std::uint64_t attempt = 0);

struct LemmaParams {
  std::size_t k = 0;
  Interval r;  // 4 ln d / q
  Interval u;  // (1 - q - d^{-3/2})(d^3 - d^2)
  // Values handed to verify_good: the lower end of r and the upper end of u.
  const Rat& r_check() const { return r.lo; }
  const Rat& u_check() const { return u.hi; }
};

LemmaParams lemma_params(std::size_t d, const Rat& q);

/// Enclosure of exp(-2(1 - 1/d)); the upper end is the bound.
Interval hoeffding_bound(std::size_t d);

struct UnionBound {
  Interval log_value;        // (3r + 3) ln d + r^2 ln(1 - q)
  Interval value;            // d^{3r+3} (1 - q)^{r^2}
  Interval log_intermediate;  // (ln d)^2 / q * (15 + 16 ln(1 - q) / q)
  Interval intermediate;
  Interval log_ratio;        // ln(1 - q) / q
  bool ratio_below_minus_one = false;
  bool degenerate = false;   // r = 0
};

UnionBound union_bound(std::size_t d, const Rat& q, const Interval& r);
UnionBound union_bound(std::size_t d, const Rat& q, const Rat& r);

struct SampledTuple {
  GoodTuple tuple;
  LemmaParams params;
  GoodnessReport report;
  std::size_t attempts = 0;
};

inline constexpr std::size_t kDefaultMaxAttempts = 64;

/// Rejection sampling until verify_good accepts; throws AttemptsExhausted
/// with the observed failure rates of both conditions.
SampledTuple sample_good_tuple(const SamplerParams& p, std::size_t max_attempts = kDefaultMaxAttempts);

/// Repeats rows cyclically from index 0 up to n rows, then columns likewise.
/// Copies are labelled "<label>~<copy index>".
Matrix pad_cyclic(const Matrix& m, std::size_t n);

struct SeparateOptions {
  std::size_t max_attempts = kDefaultMaxAttempts;
  // Exact ranks are attempted only for n up to this size.
  std::size_t exact_rank_limit = 16;
  std::uint64_t exact_rank_budget = 500'000'000;
};

struct SeparationReport {
  std::size_t n = 0;
  Rat alpha;
  std::size_t d = 0;
  std::size_t k = 0;
  Interval q_enclosure;  // (α - 2 n^{-1/4})^2
  Rat q;                 // value used for sampling
  LemmaParams lemma;
  std::size_t attempts = 0;
  GoodnessReport goodness;

  ZeroOneMatrix m;
  PhiMatrix phi;
  Matrix phi0;

  Interval trop_rank_bound;  // 4 sqrt(n) ln n / α^2
  Rat lemma_trop_bound;      // d + k r for the verified tuple
  Rat kapranov_bound;        // n (1 - α)
  std::size_t lemma_kapranov_bound = 0;
  std::optional<std::size_t> exact_trop_rank_phi;
  std::optional<std::size_t> exact_trop_rank_phi0;

  Interval alpha_threshold;  // 2 n^{-1/4} sqrt(ln n)
  bool alpha_above_threshold = false;
  bool bounds_guaranteed = false;
  std::vector<std::string> hypothesis_caveats;
};

SeparationReport separate(std::size_t n, const Rat& alpha, std::uint64_t seed,
                          const SeparateOptions& options = {});

}  // namespace suptrop
