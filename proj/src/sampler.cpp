#include "suptrop/sampler.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "suptrop/error.hpp"

namespace suptrop {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform residue modulo m (m >= 1) by rejection of the biased low range.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t threshold = (0 - m) % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % m;
}

Rat grid_floor(const Rat& q, unsigned bits) {
  const mpz_class scale = mpz_class(1) << bits;
  return Rat((q * Rat(scale)).floor(), scale);
}

std::string rate(std::size_t failures, std::size_t attempts) {
  std::ostringstream os;
  os << failures << "/" << attempts;
  return os.str();
}

}  // namespace

SamplerParams validate(SamplerParams p) {
  if (p.d < 2) fail(ErrorKind::invalid_argument, "d must be at least 2");
  if (p.q.sign() <= 0 || p.q >= Rat(1)) fail(ErrorKind::invalid_argument, "q must lie in (0, 1)");
  if (!p.allow_out_of_range && p.q >= Rat(1, 10)) {
    fail(ErrorKind::invalid_argument, "q must lie in (0, 1/10); pass the out-of-range flag to override");
  }
  if (mpz_sizeinbase(p.q.den().get_mpz_t(), 2) > 62) {
    p.q = grid_floor(p.q, 32);
    if (p.q.is_zero()) fail(ErrorKind::invalid_argument, "q is below 2^-32");
  }
  return p;
}

std::uint64_t attempt_seed(std::uint64_t seed, std::uint64_t attempt) {
  return splitmix64(seed ^ splitmix64(attempt));
}

ZeroOneMatrix sample_candidate(const SamplerParams& params, std::uint64_t attempt) {
  const SamplerParams p = validate(params);
  const std::uint64_t den = p.q.den().get_ui();
  const std::uint64_t num = p.q.num().get_ui();
  std::mt19937_64 rng(attempt_seed(p.seed, attempt));
  ZeroOneMatrix m(p.d, p.d * p.d - p.d);
  for (std::size_t i = 0; i < m.d(); ++i) {
    for (std::size_t j = 0; j < m.width(); ++j) {
      m.set(i, j, bounded(rng, den) >= num);
    }
  }
  return m;
}

LemmaParams lemma_params(std::size_t d, const Rat& q) {
  if (d < 2) fail(ErrorKind::invalid_argument, "d must be at least 2");
  if (q.sign() <= 0 || q >= Rat(1)) fail(ErrorKind::invalid_argument, "q must lie in (0, 1)");
  LemmaParams out;
  out.k = d;
  const Rat dr(static_cast<long>(d));
  out.r = Interval::point(Rat(4)) * ln_enclosure(dr) / Interval::point(q);
  // d^{-3/2} (d^3 - d^2) = sqrt(d) (d - 1)
  const Rat base = (Rat(1) - q) * (dr * dr * dr - dr * dr);
  out.u = Interval::point(base) - sqrt_enclosure(dr) * Interval::point(dr - Rat(1));
  return out;
}

Interval hoeffding_bound(std::size_t d) {
  if (d < 2) fail(ErrorKind::invalid_argument, "d must be at least 2");
  const Rat dr(static_cast<long>(d));
  Interval e = exp_enclosure(Rat(-2) * (dr - Rat(1)) / dr);
  if (e.hi >= Rat(1, 2)) fail(ErrorKind::internal, "Hoeffding enclosure is not below 1/2");
  return e;
}

UnionBound union_bound(std::size_t d, const Rat& q, const Interval& r) {
  if (d < 2) fail(ErrorKind::invalid_argument, "d must be at least 2");
  if (q.sign() <= 0 || q >= Rat(1)) fail(ErrorKind::invalid_argument, "q must lie in (0, 1)");
  if (r.lo.sign() < 0) fail(ErrorKind::invalid_argument, "r must be non-negative");
  UnionBound out;
  const Interval ln_d = ln_enclosure(Rat(static_cast<long>(d)));
  const Interval ln_1q = ln_enclosure(Rat(1) - q);
  const Interval qi = Interval::point(q);
  out.log_value = (Interval::point(Rat(3)) * r + Interval::point(Rat(3))) * ln_d + square(r) * ln_1q;
  out.value = exp_enclosure(out.log_value);
  out.log_ratio = ln_1q / qi;
  out.ratio_below_minus_one = out.log_ratio.hi < Rat(-1);
  out.log_intermediate =
      square(ln_d) / qi * (Interval::point(Rat(15)) + Interval::point(Rat(16)) * out.log_ratio);
  out.intermediate = exp_enclosure(out.log_intermediate);
  out.degenerate = r.hi.is_zero();
  return out;
}

UnionBound union_bound(std::size_t d, const Rat& q, const Rat& r) {
  return union_bound(d, q, Interval::point(r));
}

SampledTuple sample_good_tuple(const SamplerParams& params, std::size_t max_attempts) {
  const SamplerParams p = validate(params);
  const LemmaParams lp = lemma_params(p.d, p.q);
  std::size_t cond1_failures = 0;
  std::size_t cond2_failures = 0;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    ZeroOneMatrix m = sample_candidate(p, attempt);
    GoodnessReport rep = verify_good(m, lp.k, lp.r_check(), lp.u_check());
    if (rep.cond1 && rep.cond2) {
      return SampledTuple{GoodTuple(lp.k, lp.r_check(), lp.u_check(), std::move(m)), lp, rep, attempt + 1};
    }
    if (!rep.cond1) ++cond1_failures;
    if (!rep.cond2) ++cond2_failures;
  }
  std::ostringstream os;
  os << "no good tuple in " << max_attempts << " attempts (d=" << p.d << ", q=" << p.q
     << "): condition 1 failed " << rate(cond1_failures, max_attempts)
     << " (Hoeffding bound " << hoeffding_bound(p.d).hi.to_double() << "), condition 2 failed "
     << rate(cond2_failures, max_attempts) << " (union bound "
     << union_bound(p.d, p.q, lp.r).value.hi.to_double() << ")";
  fail(ErrorKind::attempts_exhausted, os.str());
}

Matrix pad_cyclic(const Matrix& m, std::size_t n) {
  if (m.rows() > n || m.cols() > n) fail(ErrorKind::invalid_argument, "matrix is larger than the padded size");
  if (m.empty()) fail(ErrorKind::invalid_argument, "cannot pad an empty matrix");
  auto extend = [n](const std::vector<std::string>& labels) {
    std::vector<std::size_t> source(n);
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      source[i] = i % labels.size();
      out[i] = i < labels.size() ? labels[i] : labels[source[i]] + "~" + std::to_string(i / labels.size());
    }
    return std::pair{source, out};
  };
  auto [rs, rl] = extend(m.row_labels());
  auto [cs, cl] = extend(m.col_labels());
  std::vector<Scalar> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) entries.push_back(m(rs[i], cs[j]));
  }
  return Matrix(std::move(rl), std::move(cl), std::move(entries));
}

SeparationReport separate(std::size_t n, const Rat& alpha, std::uint64_t seed, const SeparateOptions& options) {
  if (n < 4) fail(ErrorKind::invalid_argument, "n must be at least 4");
  SeparationReport rep;
  rep.n = n;
  rep.alpha = alpha;
  const Rat nr(static_cast<long>(n));

  mpz_class root;
  mpz_class nz(static_cast<unsigned long>(n));
  mpz_sqrt(root.get_mpz_t(), nz.get_mpz_t());
  rep.d = root.get_ui();
  rep.k = rep.d;

  // 2 n^{-1/4}
  const Interval fourth_root = sqrt_enclosure(sqrt_enclosure(nr));
  const Interval two_t = Interval::point(Rat(2)) / fourth_root;
  const Interval diff = Interval::point(alpha) - two_t;
  if (diff.contains_zero()) {
    fail(ErrorKind::invalid_alpha, "alpha is too close to 2 n^(-1/4) to certify q > 0");
  }
  rep.q_enclosure = square(diff);
  rep.q = grid_floor(rep.q_enclosure.lo, 32);
  if (rep.q.is_zero() || rep.q >= Rat(1)) {
    fail(ErrorKind::invalid_alpha, "q = (alpha - 2 n^(-1/4))^2 is not a probability in (0, 1)");
  }

  const Interval ln_n = ln_enclosure(nr);
  rep.alpha_threshold = two_t * sqrt_enclosure(ln_n);
  rep.alpha_above_threshold = alpha > rep.alpha_threshold.hi;
  rep.bounds_guaranteed = n > 1000 && alpha.sign() > 0 && alpha < Rat(1, 10);

  auto& caveats = rep.hypothesis_caveats;
  if (diff.hi.sign() < 0) caveats.push_back("alpha < 2 n^(-1/4): q taken as the square of a negative number");
  if (n <= 1000) caveats.push_back("n <= 1000: outside the range where the rank bounds are proved");
  if (!(alpha.sign() > 0 && alpha < Rat(1, 10))) caveats.push_back("alpha outside (0, 1/10)");
  if (rep.q >= Rat(1, 10)) caveats.push_back("q outside (0, 1/10): sampled with the out-of-range override");
  if (!rep.alpha_above_threshold) {
    caveats.push_back("alpha does not exceed 2 n^(-1/4) sqrt(ln n), which the bound derivation needs");
  }

  SamplerParams sp{rep.d, rep.q, seed, true};
  SampledTuple sampled = sample_good_tuple(sp, options.max_attempts);
  rep.lemma = sampled.params;
  rep.attempts = sampled.attempts;
  rep.goodness = sampled.report;
  if (rep.goodness.cond2_vacuous) caveats.push_back("condition 2 is vacuous: ceil(r) exceeds the matrix dimensions");
  rep.m = sampled.tuple.matrix();
  rep.phi = build_phi(rep.m, rep.k);
  rep.phi0 = pad_cyclic(rep.phi.base, n);

  rep.trop_rank_bound = Interval::point(Rat(4)) * sqrt_enclosure(nr) * ln_n / Interval::point(alpha * alpha);
  rep.lemma_trop_bound = tropical_upper_bound(rep.d, rep.k, sampled.tuple.r());
  if (rep.lemma_trop_bound >= Rat(static_cast<long>(rep.phi.n()))) {
    caveats.push_back("tropical bound d + kr is not below the size of Phi");
  }
  rep.kapranov_bound = nr * (Rat(1) - alpha);
  rep.lemma_kapranov_bound =
      kapranov_lower_bound(rep.phi.n(), rep.k, std::max(sampled.tuple.u(), Rat(0)));
  caveats.push_back(std::string("Kapranov bound is ") + kKapranovCaveat);

  if (n <= options.exact_rank_limit) {
    RankOptions ro;
    ro.max_checks = options.exact_rank_budget;
    try {
      rep.exact_trop_rank_phi = tropical_rank(rep.phi.base, ro).rank;
      rep.exact_trop_rank_phi0 = tropical_rank(rep.phi0, ro).rank;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::size_limit_exceeded) throw;
      rep.exact_trop_rank_phi.reset();
      rep.exact_trop_rank_phi0.reset();
      caveats.push_back("exact tropical rank skipped: check budget exceeded");
    }
  }
  return rep;
}

}  // namespace suptrop
