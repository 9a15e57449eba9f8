#include "detail/scaled_view.hpp"

#include <algorithm>

namespace suptrop::detail {

namespace {

constexpr std::int64_t kIntLimit = std::int64_t{1} << 40;

}  // namespace

ScaledView::ScaledView(const Matrix& m) : cols_(m.cols()) {
  const std::size_t count = m.rows() * m.cols();
  kinds_.reserve(count);
  mpz_class lcm = 1;
  for (const Scalar& s : m.entries()) {
    kinds_.push_back(s.kind());
    if (!s.is_infinite()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.value().raw().get_den_mpz_t());
  }

  const std::size_t n = std::max<std::size_t>(1, std::min(m.rows(), m.cols()));
  // 4 n^2 (2B + 1) must stay below 2^62 for sums and potentials.
  const __int128 budget = (static_cast<__int128>(1) << 62) / (4 * static_cast<__int128>(n) * n);
  use_int_ = true;
  ints_.assign(count, 0);
  for (std::size_t k = 0; k < count && use_int_; ++k) {
    const Scalar& s = m.entries()[k];
    if (s.is_infinite()) continue;
    const mpz_class scaled = s.value().num() * (lcm / s.value().den());
    const mpz_class magnitude = abs(scaled);
    if (!magnitude.fits_slong_p() || magnitude > kIntLimit ||
        2 * static_cast<__int128>(magnitude.get_si()) + 1 >= budget) {
      use_int_ = false;
      break;
    }
    ints_[k] = scaled.get_si();
  }
  if (use_int_) {
    scale_ = lcm;
  } else {
    ints_.clear();
    rats_.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      if (!m.entries()[k].is_infinite()) rats_[k] = m.entries()[k].value();
    }
  }
}

template <class Cost>
PermanentResult<Cost> ScaledView::evaluate(std::span<const std::size_t> rows,
                                           std::span<const std::size_t> cols,
                                           const std::vector<Cost>& source) const {
  const std::size_t n = rows.size();
  std::vector<Cost> cost(n * n);
  std::vector<std::uint8_t> finite(n * n);
  std::vector<Kind> kind(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = rows[i] * cols_ + cols[j];
      kind[i * n + j] = kinds_[k];
      finite[i * n + j] = kinds_[k] != Kind::infinity;
      if (finite[i * n + j]) cost[i * n + j] = source[k];
    }
  }
  return assignment_permanent<Cost>(n, cost, finite, kind);
}

Scalar ScaledView::permanent(std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) const {
  if (use_int_) {
    const auto r = evaluate<std::int64_t>(rows, cols, ints_);
    if (r.kind == PermanentKind::infinite) return Scalar::infinity();
    const Rat value(mpz_class(static_cast<long>(r.value)), scale_);
    return r.kind == PermanentKind::tangible ? Scalar::tangible(value) : Scalar::ghost(value);
  }
  const auto r = evaluate<Rat>(rows, cols, rats_);
  if (r.kind == PermanentKind::infinite) return Scalar::infinity();
  return r.kind == PermanentKind::tangible ? Scalar::tangible(r.value) : Scalar::ghost(r.value);
}

bool ScaledView::nonsingular(std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) const {
  if (use_int_) return evaluate<std::int64_t>(rows, cols, ints_).kind == PermanentKind::tangible;
  return evaluate<Rat>(rows, cols, rats_).kind == PermanentKind::tangible;
}

}  // namespace suptrop::detail
