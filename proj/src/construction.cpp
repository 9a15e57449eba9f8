#include "suptrop/construction.hpp"

#include <algorithm>
#include <random>

#include "suptrop/error.hpp"

namespace suptrop {

ZeroOneMatrix::ZeroOneMatrix(std::size_t d, std::size_t width, std::vector<std::uint8_t> bits)
    : d_(d), width_(width), bits_(std::move(bits)) {
  if (bits_.size() != d_ * width_) fail(ErrorKind::dimension_mismatch, "0-1 matrix has the wrong number of bits");
  for (auto& b : bits_) {
    if (b > 1) fail(ErrorKind::invalid_argument, "0-1 matrix entry other than 0 or 1");
  }
}

ZeroOneMatrix::ZeroOneMatrix(std::size_t d, std::size_t width)
    : ZeroOneMatrix(d, width, std::vector<std::uint8_t>(d * width, 0)) {}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t w = rows.empty() ? 0 : rows.front().size();
  std::vector<std::uint8_t> bits;
  for (const auto& r : rows) {
    if (r.size() != w) fail(ErrorKind::dimension_mismatch, "ragged 0-1 matrix");
    for (int v : r) {
      if (v != 0 && v != 1) fail(ErrorKind::invalid_argument, "0-1 matrix entry other than 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return ZeroOneMatrix(rows.size(), w, std::move(bits));
}

std::size_t ZeroOneMatrix::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

namespace {

using Bitset = std::vector<std::uint64_t>;

std::size_t popcount(const Bitset& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

// Extends a partial row choice; true if `need` more rows can be added while
// keeping at least `block` common one-columns.
bool all_ones_search(const std::vector<Bitset>& rows, std::size_t next, std::size_t need,
                     std::size_t block, const Bitset& common) {
  if (need == 0) return true;
  for (std::size_t i = next; i + need <= rows.size(); ++i) {
    Bitset meet(common.size());
    for (std::size_t w = 0; w < common.size(); ++w) meet[w] = common[w] & rows[i][w];
    if (popcount(meet) < block) continue;
    if (all_ones_search(rows, i + 1, need - 1, block, meet)) return true;
  }
  return false;
}

}  // namespace

GoodnessReport verify_good(const ZeroOneMatrix& m, std::size_t k, const Rat& r, const Rat& u) {
  if (k < 1 || m.width() != (k - 1) * m.d()) {
    fail(ErrorKind::dimension_mismatch, "verify_good: width must be kd - d = " +
                                            std::to_string(k >= 1 ? (k - 1) * m.d() : 0));
  }
  GoodnessReport rep;
  rep.ones_count = m.ones();
  rep.cond1 = Rat(static_cast<long>(rep.ones_count)) >= u;
  const mpz_class block = r.ceil();
  if (block <= 0) {
    // Every ρ >= 1 must avoid all-ones squares, and the 0x0 square has no zero.
    rep.block = 0;
    rep.cond2 = false;
    return rep;
  }
  if (block > static_cast<long>(std::min(m.d(), m.width()))) {
    rep.block = block.fits_ulong_p() ? block.get_ui() : SIZE_MAX;
    rep.cond2 = true;
    rep.cond2_vacuous = true;
    return rep;
  }
  rep.block = block.get_ui();
  const std::size_t words = (m.width() + 63) / 64;
  std::vector<Bitset> rows(m.d(), Bitset(words, 0));
  for (std::size_t i = 0; i < m.d(); ++i) {
    for (std::size_t j = 0; j < m.width(); ++j) {
      if (m(i, j)) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  Bitset all(words, ~std::uint64_t{0});
  rep.cond2 = !all_ones_search(rows, 0, rep.block, rep.block, all);
  return rep;
}

GoodTuple::GoodTuple(std::size_t k, Rat r, Rat u, ZeroOneMatrix matrix)
    : k_(k), r_(std::move(r)), u_(std::move(u)), matrix_(std::move(matrix)) {
  const GoodnessReport rep = verify_good(matrix_, k_, r_, u_);
  if (!rep.cond1 || !rep.cond2) {
    fail(ErrorKind::precondition_violated,
         std::string("not a good tuple: ") + (rep.cond1 ? "" : "too few ones; ") +
             (rep.cond2 ? "" : "all-ones " + std::to_string(rep.block) + "x" +
                                   std::to_string(rep.block) + " submatrix present"));
  }
}

std::string index_label(std::size_t i) { return "i" + std::to_string(i); }
std::string other_label(std::size_t j) { return "j" + std::to_string(j); }
std::string phi_row_label(std::size_t alpha, std::size_t i) {
  return std::to_string(alpha) + ":" + index_label(i);
}

PhiMatrix build_phi(const ZeroOneMatrix& m, std::size_t k) {
  const std::size_t d = m.d();
  if (k < 2 || d == 0 || m.width() != (k - 1) * d) {
    fail(ErrorKind::dimension_mismatch, "build_phi: need k >= 2 and a d x (kd - d) matrix");
  }
  PhiMatrix phi;
  phi.d = d;
  phi.k = k;
  const std::size_t n = k * d;
  const std::size_t w = m.width();

  const long ones = static_cast<long>(m.ones() * k);
  const Rat step = Rat(1) / Rat(static_cast<long>((ones + 1) * static_cast<long>(n)));
  long counter = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= w; ++j) {
      if (!m(i - 1, j - 1)) continue;
      for (std::size_t alpha = 1; alpha <= k; ++alpha) {
        phi.coeffs.emplace(std::make_tuple(i, j, alpha), Rat(1) + Rat(++counter) * step);
      }
    }
  }

  std::vector<std::string> rows, cols;
  for (std::size_t alpha = 1; alpha <= k; ++alpha) {
    for (std::size_t i = 1; i <= d; ++i) rows.push_back(phi_row_label(alpha, i));
  }
  for (std::size_t i = 1; i <= d; ++i) cols.push_back(index_label(i));
  for (std::size_t j = 1; j <= w; ++j) cols.push_back(other_label(j));

  std::vector<Scalar> entries(n * n, Scalar::infinity());
  for (std::size_t alpha = 1; alpha <= k; ++alpha) {
    for (std::size_t i = 1; i <= d; ++i) {
      const std::size_t r = (alpha - 1) * d + (i - 1);
      entries[r * n + (i - 1)] = Scalar::tangible(0);
      for (std::size_t j = 1; j <= w; ++j) {
        entries[r * n + d + (j - 1)] = m(i - 1, j - 1)
                                           ? Scalar::tangible(phi.coeffs.at({i, j, alpha}))
                                           : Scalar::tangible(0);
      }
    }
  }
  phi.base = Matrix(std::move(rows), std::move(cols), std::move(entries));

  const Rat upper = Rat(1) + Rat(1) / Rat(static_cast<long>(n));
  for (const auto& [key, v] : phi.coeffs) {
    if (v < Rat(1) || v > upper) fail(ErrorKind::internal, "build_phi: coefficient out of range");
  }
  std::vector<Rat> values;
  for (const auto& [key, v] : phi.coeffs) values.push_back(v);
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    fail(ErrorKind::internal, "build_phi: repeated coefficient");
  }
  return phi;
}

std::size_t kapranov_lower_bound(std::size_t n, std::size_t k, const Rat& u) {
  const mpz_class n2 = mpz_class(static_cast<unsigned long>(n)) * n;
  const Rat ku = Rat(static_cast<long>(k)) * u;
  if (ku.sign() < 0 || Rat(n2) < ku) {
    fail(ErrorKind::negative_radicand, "kapranov_lower_bound: need n^2 >= ku >= 0");
  }
  // s^2 is an integer, so s^2 >= n^2 - ku iff s^2 >= n^2 - floor(ku).
  const mpz_class radicand = n2 - ku.floor();
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  if (s * s < radicand) s += 1;
  return n - s.get_ui();
}

Rat tropical_upper_bound(std::size_t d, std::size_t k, const Rat& r) {
  return Rat(static_cast<long>(d)) + Rat(static_cast<long>(k)) * r;
}

Matrix finite_entries(const Matrix& phi) {
  Matrix out = phi;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (out(i, j).is_infinite()) out(i, j) = Scalar::tangible(2);
    }
  }
  return out;
}

Matrix offset_matrix(const Matrix& phi) {
  const std::size_t n = phi.rows();
  std::vector<Scalar> entries(n * n, Scalar::tangible(2));
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Scalar::tangible(0);
  return Matrix(phi.row_labels(), phi.row_labels(), std::move(entries));
}

PhiBoundsReport verify_phi_bounds(const PhiMatrix& phi, const GoodTuple& good,
                                  const PhiBoundsOptions& options) {
  if (phi.d != good.d() || phi.k != good.k()) {
    fail(ErrorKind::dimension_mismatch, "verify_phi_bounds: tuple and matrix disagree on d or k");
  }
  PhiBoundsReport rep;
  const std::size_t n = phi.base.rows();
  rep.bound = tropical_upper_bound(good.d(), good.k(), good.r());
  const mpz_class floor_bound = rep.bound.floor();
  rep.threshold = floor_bound < 0 ? 0 : floor_bound.get_ui() + 1;
  rep.kapranov_bound = kapranov_lower_bound(n, good.k(), std::max(good.u(), Rat(0)));
  rep.kapranov_caveat = kKapranovCaveat;

  std::uint64_t total = 0;
  for (std::size_t s = std::max<std::size_t>(rep.threshold, 1); s <= n; ++s) {
    const std::uint64_t c = count_square_submatrices(n, n, s);
    total = c > UINT64_MAX - total ? UINT64_MAX : total + c;
  }

  RankOptions ro;
  ro.max_checks = 0;
  if (!options.randomized) {
    if (total > options.max_checks) {
      fail(ErrorKind::size_limit_exceeded,
           "verify_phi_bounds: " + std::to_string(total) + " submatrices exceed the exhaustive budget; use randomized mode");
    }
    for (std::size_t s = n; s >= std::max<std::size_t>(rep.threshold, 1) && s >= 1; --s) {
      const SizeSweep sweep = find_nonsingular(phi.base, s, ro);
      if (sweep.witness) {
        rep.all_singular = false;
        rep.counterexample = sweep.witness;
        rep.checked += sweep.checks;
        break;
      }
      rep.checked += count_square_submatrices(n, n, s);
      if (s == 1) break;
    }
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t t = 0; t < options.samples && rep.all_singular; ++t) {
      if (rep.threshold > n) break;
      std::uniform_int_distribution<std::size_t> size_pick(std::max<std::size_t>(rep.threshold, 1), n);
      const std::size_t s = size_pick(rng);
      std::vector<std::size_t> pool(n);
      auto draw = [&] {
        for (std::size_t q = 0; q < n; ++q) pool[q] = q;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::size_t> pick(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
        std::sort(pick.begin(), pick.end());
        return pick;
      };
      const auto rows = draw();
      const auto cols = draw();
      ++rep.checked;
      if (is_nonsingular_fast(phi.base.submatrix(rows, cols))) {
        rep.all_singular = false;
        rep.counterexample = std::make_pair(rows, cols);
      }
    }
  }

  if (options.exact_rank_budget > 0) {
    RankOptions budgeted;
    budgeted.max_checks = options.exact_rank_budget;
    try {
      const RankResult exact = tropical_rank(phi.base, budgeted);
      rep.exact_rank = exact.rank;
      if (rep.exhaustive && rep.all_singular && exact.rank >= rep.threshold) {
        fail(ErrorKind::internal, "exact rank contradicts the singularity sweep");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::size_limit_exceeded) throw;
    }
  }
  return rep;
}

}  // namespace suptrop
