#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "suptrop/error.hpp"

using namespace suptrop;
using oracle::g;
using oracle::inf;
using oracle::t;

namespace {

PuiseuxPoly mono(const Field& f, long c, const Rat& e) { return PuiseuxPoly::monomial(Coeff::from_int(f, c), e); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

}  // namespace

TEST_CASE("fields and coefficients") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("Fp:7").characteristic() == 7);
  CHECK(kind_of([] { Field::prime(9); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { Field::parse("R"); }) == ErrorKind::parse);
  const Field f5 = Field::prime(5);
  CHECK((Coeff::from_int(f5, 2) * Coeff::from_int(f5, 3)).is_one());
  CHECK(Coeff::from_int(f5, -1).residue() == 4);
  CHECK(Coeff(f5, Rat(1, 2)).residue() == 3);
  CHECK(Coeff::parse("3 mod 5", f5).residue() == 3);
  CHECK(kind_of([&] { Coeff(f5, Rat(1, 5)); }) == ErrorKind::invalid_argument);
  CHECK(enumerate_nonzero(Field::rationals(), 0).is_one());
  CHECK(enumerate_nonzero(Field::rationals(), 1).rational() == Rat(-1));
  CHECK(enumerate_nonzero(Field::rationals(), 2).rational() == Rat(2));
  CHECK(enumerate_nonzero(Field::prime(3), 1).residue() == 2);
  CHECK(kind_of([] { enumerate_nonzero(Field::prime(3), 2); }) == ErrorKind::invalid_argument);
}

TEST_CASE("degree") {
  const Field q = Field::rationals();
  const PuiseuxPoly p = mono(q, 1, Rat(1, 2)) + mono(q, 3, Rat(2));
  CHECK(deg(p) == ExtRat(Rat(1, 2)));
  CHECK(deg(PuiseuxPoly(q)).is_infinite());
  CHECK(deg(PuiseuxPoly::constant(Coeff::from_int(q, 5))) == ExtRat(Rat(0)));
}

TEST_CASE("series arithmetic") {
  const Field q = Field::rationals();
  const PuiseuxPoly tp1 = mono(q, 1, Rat(1)) + mono(q, 1, Rat(0));
  const PuiseuxPoly tm1 = mono(q, 1, Rat(1)) - mono(q, 1, Rat(0));
  CHECK(tp1 * tm1 == mono(q, 1, Rat(2)) - mono(q, 1, Rat(0)));
  CHECK((mono(q, 1, Rat(1, 2)) + mono(q, -1, Rat(1, 2))).is_zero());
  const Field f5 = Field::prime(5);
  CHECK(mono(f5, 2, Rat(1)) * mono(f5, 3, Rat(1)) == mono(f5, 1, Rat(2)));
  CHECK((-mono(f5, 2, Rat(1))).coeff_at(Rat(1)).residue() == 3);
  const PuiseuxPoly merged = PuiseuxPoly::from_terms(
      q, {Term{Coeff::from_int(q, 2), Rat(1)}, Term{Coeff::from_int(q, 0), Rat(0)}, Term{Coeff::from_int(q, 3), Rat(1)}});
  CHECK(merged.terms().size() == 1);
  CHECK(merged.coeff_at(Rat(1)).rational() == Rat(5));
  CHECK(kind_of([&] { (void)(mono(q, 1, Rat(0)) + mono(f5, 1, Rat(0))); }) == ErrorKind::invalid_argument);
}

TEST_CASE("degree is a min-plus homomorphism") {
  std::mt19937_64 rng(41);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(7)}) {
    for (int it = 0; it < 400; ++it) {
      const PuiseuxPoly p = oracle::random_series(rng, f, 3, 2);
      const PuiseuxPoly r = oracle::random_series(rng, f, 3, 3);
      if (!p.is_zero() && !r.is_zero()) CHECK(deg(p * r) == ExtRat(p.degree().value() + r.degree().value()));
      const ExtRat lo = std::min(deg(p), deg(r));
      CHECK(deg(p + r) >= lo);
      if (deg(p) != deg(r)) CHECK(deg(p + r) == lo);
    }
  }
}

TEST_CASE("series rank examples") {
  const Field q = Field::rationals();
  const SeriesMatrix a(q, {"1", "2"}, {"1", "2"},
                       {mono(q, 1, Rat(0)), mono(q, 1, Rat(1)), mono(q, 1, Rat(1)), mono(q, 1, Rat(2))});
  CHECK(series_rank(a) == 1);
  for (std::size_t k = 1; k <= 5; ++k) {
    SeriesMatrix id(q, k, k);
    for (std::size_t i = 0; i < k; ++i) id(i, i) = mono(q, 1, Rat(0));
    CHECK(series_rank(id) == k);
  }
  CHECK(series_rank(SeriesMatrix(q, 3, 2)) == 0);
  CHECK(series_rank(oracle::frozen_lifting(q)) == 2);
  CHECK(series_rank(oracle::frozen_lifting(Field::prime(3))) == 2);
}

TEST_CASE("series rank of a sum of two outer products") {
  std::mt19937_64 rng(42);
  const Field q = Field::rationals();
  for (int it = 0; it < 40; ++it) {
    std::vector<PuiseuxPoly> u, v, w, x;
    for (int i = 0; i < 3; ++i) {
      u.push_back(oracle::random_series(rng, q, 2, 2) + mono(q, 1, Rat(i)));
      w.push_back(oracle::random_series(rng, q, 2, 2) + mono(q, 1, Rat(2 * i + 5)));
      v.push_back(oracle::random_series(rng, q, 2, 1) + mono(q, 1, Rat(i, 3)));
      x.push_back(oracle::random_series(rng, q, 2, 1) + mono(q, 2, Rat(7 + i)));
    }
    SeriesMatrix m(q, 3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m(i, j) = u[i] * v[j] + w[i] * x[j];
    }
    CHECK(series_rank(m) == oracle::rank_by_minors(m));
    CHECK(series_rank(m) <= 2);
  }
}

TEST_CASE("series rank agrees with minor expansion") {
  std::mt19937_64 rng(43);
  int count = 0;
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)}) {
    for (int it = 0; it < 80; ++it) {
      const std::size_t r = 1 + rng() % 4;
      const std::size_t c = 1 + rng() % 4;
      SeriesMatrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = oracle::random_series(rng, f, 2, 1 + static_cast<long>(rng() % 3));
      }
      // Low-rank structure now and then: copy a row scaled by a monomial.
      if (r > 1 && rng() % 3 == 0) {
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * mono(f, 1, Rat(1, 2));
      }
      CHECK(series_rank(m) == oracle::rank_by_minors(m));
      ++count;
    }
  }
  CHECK(count >= 200);
}

TEST_CASE("lifting check") {
  const Field q = Field::rationals();
  auto one = [&](const Scalar& a, const PuiseuxPoly& p) {
    return lifting_check(Matrix({"1"}, {"1"}, {a}), SeriesMatrix(q, {"1"}, {"1"}, {p}));
  };
  CHECK(one(t(1), mono(q, 1, Rat(1))));
  CHECK(one(g(0), mono(q, 1, Rat(3))));
  CHECK_FALSE(one(t(1), mono(q, 1, Rat(2))));
  CHECK(one(inf(), PuiseuxPoly(q)));
  CHECK_FALSE(one(inf(), mono(q, 1, Rat(3))));
  CHECK(one(g(2), PuiseuxPoly(q)));
  CHECK_FALSE(one(g(2), mono(q, 1, Rat(1))));
  CHECK(lifting_check(oracle::example_sigma(), oracle::frozen_lifting(q)));
  CHECK(kind_of([&] { lifting_check(Matrix(2, 2), SeriesMatrix(q, 2, 3)); }) == ErrorKind::shape_mismatch);
  CHECK(kind_of([&] { lifting_check(Matrix({"a"}, {"b"}, {t(0)}), SeriesMatrix(q, 1, 1)); }) ==
        ErrorKind::shape_mismatch);
}

TEST_CASE("least-rank monomial liftings of the worked example") {
  // Enumerating every ±t^e lifting shows no rank-1 lifting of that shape
  // exists and that the frozen lifting attains the least rank, 2.
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    std::size_t least = 0;
    const auto best = oracle::monomial_liftings_of_least_rank(oracle::example_sigma(), f, least);
    CHECK(least == 2);
    CHECK(std::find(best.begin(), best.end(), oracle::frozen_lifting(f)) != best.end());
  }
}

TEST_CASE("lift_transform on the worked example") {
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    const SymmetrizedMatrix sym = symmetrize(oracle::example_sigma());
    const SeriesMatrix l = oracle::frozen_lifting(f);
    const SeriesMatrix big = lift_transform(sym, l);
    CHECK(big.rows() == 6);
    CHECK(big.cols() == 6);
    CHECK(lifting_check(sym.base(), big));
    CHECK(series_rank(big) == 5);
    CHECK(oracle::rank_by_minors(big) == 5);
    const SeriesMatrix back = row_reduce_symmetrized(sym, big);
    CHECK(lifting_check(oracle::example_sigma(), back));
    CHECK(series_rank(back) == 2);

    // The same lifting also lifts the example's own symmetrized matrix.
    const SymmetrizedMatrix given = oracle::example_symmetrized();
    const SeriesMatrix big2 = lift_transform(given, l);
    CHECK(lifting_check(given.base(), big2));
    CHECK(series_rank(big2) == 5);
  }
}

TEST_CASE("lift_transform on 1x1 inputs") {
  const Field q = Field::rationals();
  const PuiseuxPoly one = mono(q, 1, Rat(0));

  const SymmetrizedMatrix a = symmetrize(Matrix({"1"}, {"4"}, {t(0)}));
  const SeriesMatrix la = lift_transform(a, SeriesMatrix(q, {"1"}, {"4"}, {one}));
  CHECK(la.rows() == 2);
  CHECK(la.cols() == 2);
  CHECK(series_rank(la) == 2);
  CHECK(oracle::rank_by_minors(la) == 2);

  // Ghost entry: (ζ, 1 + ζ) with ζ = 1 over Q; over F_3 ζ = 1 too (1 + 1 ≠ 0).
  const SymmetrizedMatrix b = symmetrize(Matrix({"1"}, {"4"}, {g(0)}));
  const SeriesMatrix lb = lift_transform(b, SeriesMatrix(q, {"1"}, {"4"}, {one}));
  CHECK(lb(0, 1) == mono(q, 1, Rat(0)));
  CHECK(lb(1, 1) == mono(q, 2, Rat(0)));
  CHECK(series_rank(lb) == 2);

  // With L = -1 the first candidate ζ = 1 would cancel; ζ = -1 is next.
  const SeriesMatrix lc = lift_transform(b, SeriesMatrix(q, {"1"}, {"4"}, {mono(q, -1, Rat(0))}));
  CHECK(lc(0, 1) == mono(q, -1, Rat(0)));
  CHECK(lc(1, 1) == mono(q, -2, Rat(0)));
  CHECK(lifting_check(b.base(), lc));

  const Field f3 = Field::prime(3);
  const SeriesMatrix ld = lift_transform(b, SeriesMatrix(f3, {"1"}, {"4"}, {mono(f3, 2, Rat(0))}));
  CHECK(ld(0, 1) == mono(f3, 2, Rat(0)));  // ζ = 1 gives 2 + 1 = 0
  CHECK(lifting_check(b.base(), ld));
  CHECK(series_rank(ld) == 2);

  const Field f2 = Field::prime(2);
  CHECK(kind_of([&] { lift_transform(b, SeriesMatrix(f2, {"1"}, {"4"}, {mono(f2, 1, Rat(0))})); }) ==
        ErrorKind::field_too_small);
  CHECK(kind_of([&] { lift_transform(a, SeriesMatrix(q, {"1"}, {"4"}, {mono(q, 1, Rat(1))})); }) ==
        ErrorKind::not_a_lifting);
}

TEST_CASE("row_reduce on an infinite entry") {
  const Field q = Field::rationals();
  const SymmetrizedMatrix s = symmetrize(Matrix({"1"}, {"4"}, {inf()}));
  const SeriesMatrix lifted(q, s.base().row_labels(), s.base().col_labels(),
                            {mono(q, 3, Rat(0)), PuiseuxPoly(q), mono(q, 1, Rat(0)), PuiseuxPoly(q)});
  const SeriesMatrix l = row_reduce_symmetrized(s, lifted);
  CHECK(l.rows() == 1);
  CHECK(l.cols() == 1);
  CHECK(l(0, 0).is_zero());
  CHECK(series_rank(lifted) - series_rank(l) == 1);
  const SeriesMatrix wrong(q, s.base().row_labels(), s.base().col_labels(),
                           {mono(q, 1, Rat(0)), mono(q, 1, Rat(0)), mono(q, 1, Rat(0)), PuiseuxPoly(q)});
  CHECK(kind_of([&] { row_reduce_symmetrized(s, wrong); }) == ErrorKind::not_a_lifting);
}

TEST_CASE("rank identity both ways on random small instances") {
  std::mt19937_64 rng(44);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(5)}) {
    for (int it = 0; it < 60; ++it) {
      const std::size_t ni = 1 + rng() % 2;
      const std::size_t nj = 1 + rng() % 3;
      Matrix s = oracle::random_matrix(rng, ni, nj, 25, 30, 3);
      std::vector<std::string> I, J;
      for (std::size_t i = 0; i < ni; ++i) I.push_back("a" + std::to_string(i));
      for (std::size_t j = 0; j < nj; ++j) J.push_back("b" + std::to_string(j));
      const SymmetrizedMatrix sym = symmetrize(s, I, J);
      const Matrix sg = sigma(sym);
      const SeriesMatrix l = oracle::random_lifting(rng, sg, f);
      REQUIRE(lifting_check(sg, l));
      const SeriesMatrix big = lift_transform(sym, l);
      CHECK(lifting_check(sym.base(), big));
      const std::size_t rl = oracle::rank_by_minors(l);
      CHECK(oracle::rank_by_minors(big) == rl + ni);
      CHECK(series_rank(big) == rl + ni);
      const SeriesMatrix back = row_reduce_symmetrized(sym, big);
      CHECK(lifting_check(sg, back));
      CHECK(series_rank(back) == rl);
    }
  }
}

TEST_CASE("row_reduce on liftings not produced by lift_transform") {
  // Random liftings of random symmetrized matrices, anchor entries scaled.
  std::mt19937_64 rng(45);
  for (int it = 0; it < 80; ++it) {
    const Field f = it % 2 ? Field::rationals() : Field::prime(5);
    const auto sym = oracle::random_symmetrized(rng, 1 + rng() % 2, 1 + rng() % 3, 2);
    const SeriesMatrix lifted = oracle::random_lifting(rng, sym.base(), f);
    const SeriesMatrix l = row_reduce_symmetrized(sym, lifted);
    CHECK(lifting_check(sigma(sym), l));
    CHECK(oracle::rank_by_minors(lifted) == oracle::rank_by_minors(l) + sym.I().size());
  }
}
