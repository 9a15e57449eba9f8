#include "suptrop/series_matrix.hpp"

#include <algorithm>

#include "suptrop/error.hpp"

namespace suptrop {

SeriesMatrix::SeriesMatrix(Field field, std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels, std::vector<PuiseuxPoly> entries)
    : field_(field),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(entries)) {
  if (entries_.size() != row_labels_.size() * col_labels_.size()) {
    fail(ErrorKind::dimension_mismatch, "series matrix entry count does not match its labels");
  }
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) {
      fail(ErrorKind::invalid_argument, "series entry over " + e.field().str() + " in a " + field_.str() + " matrix");
    }
  }
}

SeriesMatrix::SeriesMatrix(Field field, std::size_t rows, std::size_t cols)
    : SeriesMatrix(field, default_labels(rows), default_labels(cols),
                   std::vector<PuiseuxPoly>(rows * cols, PuiseuxPoly(field))) {}

Matrix degree_matrix(const SeriesMatrix& l) {
  std::vector<Scalar> entries;
  entries.reserve(l.entries().size());
  for (const auto& e : l.entries()) entries.push_back(tangible_of(e.degree()));
  return Matrix(l.row_labels(), l.col_labels(), std::move(entries));
}

namespace {

// Dense polynomial in s over a field, index = power of s. No trailing zeros.
struct DensePoly {
  std::vector<Coeff> c;

  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

DensePoly mul(const DensePoly& a, const DensePoly& b, const Field& f) {
  DensePoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Coeff::from_int(f, 0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

DensePoly sub(const DensePoly& a, const DensePoly& b, const Field& f) {
  DensePoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Coeff::from_int(f, 0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

// a / b where b divides a exactly.
DensePoly exact_div(DensePoly a, const DensePoly& b, const Field& f) {
  if (b.is_zero()) fail(ErrorKind::internal, "series_rank: division by zero polynomial");
  DensePoly q;
  if (a.is_zero()) return q;
  if (a.c.size() < b.c.size()) fail(ErrorKind::internal, "series_rank: inexact division");
  q.c.assign(a.c.size() - b.c.size() + 1, Coeff::from_int(f, 0));
  const Coeff& lead = b.c.back();
  for (std::size_t k = q.c.size(); k-- > 0;) {
    const Coeff factor = a.c[k + b.c.size() - 1] / lead;
    q.c[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) a.c[k + j] -= factor * b.c[j];
  }
  a.trim();
  if (!a.is_zero()) fail(ErrorKind::internal, "series_rank: inexact division");
  q.trim();
  return q;
}

}  // namespace

std::size_t series_rank(const SeriesMatrix& l) {
  const Field& f = l.field();
  const std::size_t rows = l.rows();
  const std::size_t cols = l.cols();

  mpz_class den = 1;
  bool any = false;
  Rat lowest;
  for (const auto& e : l.entries()) {
    for (const auto& t : e.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.exponent.raw().get_den_mpz_t());
      if (!any || t.exponent < lowest) lowest = t.exponent;
      any = true;
    }
  }
  if (!any) return 0;

  // t = s^D, then divide the whole matrix by s^(D * lowest).
  const Rat scale{den};
  std::vector<DensePoly> m(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) {
    for (const auto& t : l.entries()[k].terms()) {
      const Rat power = (t.exponent - lowest) * scale;
      const auto p = power.to_int64();
      if (!p || *p > (std::int64_t{1} << 24)) {
        fail(ErrorKind::size_limit_exceeded, "series_rank: exponent lattice too fine for dense elimination");
      }
      auto& poly = m[k].c;
      if (poly.size() <= static_cast<std::size_t>(*p)) poly.resize(*p + 1, Coeff::from_int(f, 0));
      poly[*p] += t.coeff;
    }
    m[k].trim();
  }

  const auto at = [&](std::size_t i, std::size_t j) -> DensePoly& { return m[i * cols + j]; };
  std::vector<std::size_t> col_order(cols);
  for (std::size_t j = 0; j < cols; ++j) col_order[j] = j;

  DensePoly prev;
  prev.c.push_back(Coeff::from_int(f, 1));
  std::size_t rank = 0;
  while (rank < std::min(rows, cols)) {
    // Complete pivoting: any nonzero entry of the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = rank; i < rows && pi == rows; ++i) {
      for (std::size_t j = rank; j < cols; ++j) {
        if (!at(i, col_order[j]).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == rows) break;
    if (pi != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pi, j), at(rank, j));
    }
    std::swap(col_order[pj], col_order[rank]);

    const DensePoly pivot = at(rank, col_order[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const DensePoly lead = at(i, col_order[rank]);
      for (std::size_t jj = rank + 1; jj < cols; ++jj) {
        const std::size_t j = col_order[jj];
        DensePoly num = sub(mul(pivot, at(i, j), f), mul(lead, at(rank, j), f), f);
        at(i, j) = exact_div(std::move(num), prev, f);
      }
      at(i, col_order[rank]) = DensePoly{};
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

bool lifting_check(const Matrix& a, const SeriesMatrix& l) {
  if (a.rows() != l.rows() || a.cols() != l.cols()) {
    fail(ErrorKind::shape_mismatch, "lifting_check: " + std::to_string(a.rows()) + "x" +
                                        std::to_string(a.cols()) + " matrix against " +
                                        std::to_string(l.rows()) + "x" + std::to_string(l.cols()) +
                                        " series matrix");
  }
  if (a.row_labels() != l.row_labels() || a.col_labels() != l.col_labels()) {
    fail(ErrorKind::shape_mismatch, "lifting_check: row or column labels differ");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!ghost_surpasses(a(i, j), tangible_of(l(i, j).degree()))) return false;
    }
  }
  return true;
}

namespace {

PuiseuxPoly t_power(const Field& f, const ExtRat& s) {
  if (s.is_infinite()) return PuiseuxPoly(f);
  return PuiseuxPoly::monomial(Coeff::from_int(f, 1), s.value());
}

}  // namespace

SeriesMatrix lift_transform(const SymmetrizedMatrix& t, const SeriesMatrix& l) {
  const Field& f = l.field();
  if (f.size() == 2) fail(ErrorKind::field_too_small, "lift_transform: needs a field with at least 3 elements");
  if (!lifting_check(sigma(t), l)) fail(ErrorKind::not_a_lifting, "lift_transform: L is not a lifting of sigma(T)");

  const Matrix& base = t.base();
  SeriesMatrix out(f, base.row_labels(), base.col_labels(),
                   std::vector<PuiseuxPoly>(base.rows() * base.cols(), PuiseuxPoly(f)));
  const PuiseuxPoly one = PuiseuxPoly::constant(Coeff::from_int(f, 1));

  for (std::size_t i = 0; i < t.I().size(); ++i) {
    const std::size_t r1 = t.row_of(i, 1);
    const std::size_t r2 = t.row_of(i, 2);
    out(r1, t.anchor_col(i)) = one;
    out(r2, t.anchor_col(i)) = one;
    for (std::size_t j = 0; j < t.J().size(); ++j) {
      const std::size_t c = t.other_col(j);
      const ExtRat s1 = nu(base(r1, c));
      const ExtRat s2 = nu(base(r2, c));
      const PuiseuxPoly& lij = l(i, j);
      if (s1 == s2) {
        PuiseuxPoly zeta_t = t_power(f, s1);
        if (s1.is_finite()) {
          const Coeff existing = lij.coeff_at(s1.value());
          for (std::uint64_t k = 0;; ++k) {
            const Coeff zeta = enumerate_nonzero(f, k);
            if (!(existing + zeta).is_zero()) {
              zeta_t = PuiseuxPoly::monomial(zeta, s1.value());
              break;
            }
          }
        }
        out(r1, c) = zeta_t;
        out(r2, c) = lij + zeta_t;
      } else if (s2 < s1) {
        const PuiseuxPoly ts = t_power(f, s1);
        out(r1, c) = ts;
        out(r2, c) = lij + ts;
      } else {
        const PuiseuxPoly ts = t_power(f, s2);
        out(r1, c) = ts - lij;
        out(r2, c) = ts;
      }
    }
  }
  if (!lifting_check(base, out)) fail(ErrorKind::internal, "lift_transform produced a non-lifting");
  return out;
}

SeriesMatrix row_reduce_symmetrized(const SymmetrizedMatrix& t, const SeriesMatrix& lifted) {
  const Field& f = lifted.field();
  if (!lifting_check(t.base(), lifted)) {
    fail(ErrorKind::not_a_lifting, "row_reduce_symmetrized: input is not a lifting of T");
  }
  const std::size_t n = t.I().size();
  const std::size_t m = t.J().size();
  std::vector<PuiseuxPoly> entries;
  entries.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r1 = t.row_of(i, 1);
    const std::size_t r2 = t.row_of(i, 2);
    const PuiseuxPoly& a = lifted(r1, t.anchor_col(i));
    const PuiseuxPoly& b = lifted(r2, t.anchor_col(i));
    const bool constants = a.terms().size() == 1 && b.terms().size() == 1;
    PuiseuxPoly normalizer(f);
    if (constants) {
      normalizer = PuiseuxPoly::constant(Coeff::from_int(f, 1) / (a.terms()[0].coeff * b.terms()[0].coeff));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t c = t.other_col(j);
      PuiseuxPoly e = a * lifted(r2, c) - b * lifted(r1, c);
      if (constants) e = e * normalizer;
      entries.push_back(std::move(e));
    }
  }
  SeriesMatrix out(f, t.I(), t.J(), std::move(entries));
  if (!lifting_check(sigma(t), out)) fail(ErrorKind::internal, "row_reduce_symmetrized produced a non-lifting");
  return out;
}

}  // namespace suptrop
