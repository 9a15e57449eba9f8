#include "suptrop/interval.hpp"

#include <algorithm>

#include "suptrop/error.hpp"

namespace suptrop {

namespace {

long bit_length(const mpz_class& v) {
  if (v == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

mpz_class shifted(const mpz_class& v, long k) {
  mpz_class r;
  if (k >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return r;
}

Rat from_scaled(const mpz_class& m, long k) {
  // m / 2^k
  if (k >= 0) return Rat(m, shifted(mpz_class(1), k));
  return Rat(shifted(m, -k));
}

Rat round_dir(const Rat& x, unsigned bits, bool up) {
  if (x.is_zero()) return x;
  const mpz_class num = x.num();
  const mpz_class den = x.den();
  if (bit_length(num) + bit_length(den) <= 2 * static_cast<long>(bits)) return x;
  const long k = static_cast<long>(bits) - (bit_length(num) - bit_length(den));
  // floor or ceil of x * 2^k
  mpz_class n2 = k >= 0 ? shifted(num, k) : num;
  mpz_class d2 = k >= 0 ? den : shifted(den, -k);
  mpz_class q;
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  }
  return from_scaled(q, k);
}

Interval outward(const Rat& lo, const Rat& hi) { return Interval{round_down(lo), round_up(hi)}; }

Rat two_pow(long k) { return from_scaled(mpz_class(1), -k); }

// Enclosure of atanh(z) for |z| <= 1/2 from the odd power series.
Interval atanh_series(const Rat& z) {
  const Rat z2 = z * z;
  const Rat tolerance = two_pow(-static_cast<long>(kPrecisionBits) - 8);
  Rat sum(0);
  Rat power = z;  // z^(2k+1)
  long k = 0;
  while (abs(power) >= tolerance * Rat(2 * k + 1)) {
    sum += power / Rat(2 * k + 1);
    power *= z2;
    ++k;
  }
  // Tail: sign of z, magnitude below |z|^(2k+1) / ((2k+1)(1 - z^2)).
  const Rat tail = abs(power) / (Rat(2 * k + 1) * (Rat(1) - z2));
  if (z.sign() >= 0) return outward(sum, sum + tail);
  return outward(sum - tail, sum);
}

const Interval& ln2() {
  static const Interval value = [] {
    const Interval a = atanh_series(Rat(1, 3));
    return outward(a.lo * Rat(2), a.hi * Rat(2));
  }();
  return value;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << "[" << x.lo.to_double() << ", " << x.hi.to_double() << "]";
}

Rat round_down(const Rat& x, unsigned bits) { return round_dir(x, bits, false); }
Rat round_up(const Rat& x, unsigned bits) { return round_dir(x, bits, true); }

Interval operator+(const Interval& a, const Interval& b) { return outward(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return outward(a.lo - b.hi, a.hi - b.lo); }
Interval operator-(const Interval& a) { return Interval{-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rat p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return outward(*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p)));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) fail(ErrorKind::invalid_argument, "interval division by an interval containing zero");
  const Rat p[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return outward(*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p)));
}

Interval square(const Interval& a) {
  if (a.lo.sign() >= 0) return outward(a.lo * a.lo, a.hi * a.hi);
  if (a.hi.sign() <= 0) return outward(a.hi * a.hi, a.lo * a.lo);
  return outward(Rat(0), std::max(a.lo * a.lo, a.hi * a.hi));
}

Interval sqrt_enclosure(const Rat& x) {
  if (x.sign() < 0) fail(ErrorKind::invalid_argument, "sqrt of negative number");
  if (x.is_zero()) return Interval::point(x);
  const long k = std::max<long>(kPrecisionBits, static_cast<long>(kPrecisionBits) -
                                                    (bit_length(x.num()) - bit_length(x.den())) / 2);
  // s = floor(sqrt(floor(x 4^k))) so s / 2^k <= sqrt(x) < (s + 1) / 2^k.
  mpz_class scaled;
  const mpz_class n2 = shifted(x.num(), 2 * k);
  mpz_fdiv_q(scaled.get_mpz_t(), n2.get_mpz_t(), x.den().get_mpz_t());
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Rat lo = from_scaled(s, k);
  if (lo * lo == x) return Interval::point(lo);
  return outward(lo, from_scaled(s + 1, k));
}

Interval sqrt_enclosure(const Interval& x) {
  return Interval{sqrt_enclosure(x.lo).lo, sqrt_enclosure(x.hi).hi};
}

Interval ln_enclosure(const Rat& x) {
  if (x.sign() <= 0) fail(ErrorKind::invalid_argument, "ln of non-positive number");
  if (x == Rat(1)) return Interval::point(Rat(0));
  // x = 2^m y with y in (1/2, 2); ln y = 2 atanh((y - 1)/(y + 1)), |z| < 1/3.
  const long m = bit_length(x.num()) - bit_length(x.den());
  const Rat y = x * two_pow(-m);
  const Rat z = (y - Rat(1)) / (y + Rat(1));
  const Interval a = atanh_series(z);
  const Interval ln_y = outward(a.lo * Rat(2), a.hi * Rat(2));
  return Interval::point(Rat(m)) * ln2() + ln_y;
}

Interval ln_enclosure(const Interval& x) {
  return Interval{ln_enclosure(x.lo).lo, ln_enclosure(x.hi).hi};
}

Interval exp_enclosure(const Rat& x) {
  if (x.is_zero()) return Interval::point(Rat(1));
  if (x.sign() < 0) {
    const Interval e = exp_enclosure(-x);
    return outward(Rat(1) / e.hi, Rat(1) / e.lo);
  }
  // y = x / 2^m <= 1/2, then square m times.
  const long m = std::max<long>(0, bit_length(x.num()) - bit_length(x.den()) + 2);
  const Rat y = round_down(x * two_pow(-m), kPrecisionBits + 32);
  const Rat y_hi = round_up(x * two_pow(-m), kPrecisionBits + 32);
  const Rat tolerance = two_pow(-static_cast<long>(kPrecisionBits) - 8);

  auto taylor = [&](const Rat& v, bool upper) {
    Rat sum(0);
    Rat term(1);
    long k = 0;
    while (term >= tolerance) {
      sum += term;
      ++k;
      term = round_up(term * v / Rat(k), kPrecisionBits + 32);
    }
    // Remaining terms sum to less than 2 * term since v <= 1/2.
    return upper ? round_up(sum + Rat(2) * term) : round_down(sum);
  };
  // Truncation only lowers the sum; exact terms are >= the rounded-up ones
  // only in the upper pass, so recompute the lower pass from exact powers.
  Rat lower_sum(0);
  {
    Rat term(1);
    long k = 0;
    while (term >= tolerance) {
      lower_sum += term;
      ++k;
      term = round_down(term * y / Rat(k), kPrecisionBits + 32);
    }
    lower_sum = round_down(lower_sum);
  }
  Interval r{lower_sum, taylor(y_hi, true)};
  for (long i = 0; i < m; ++i) r = r * r;
  return r;
}

Interval exp_enclosure(const Interval& x) {
  return Interval{exp_enclosure(x.lo).lo, exp_enclosure(x.hi).hi};
}

}  // namespace suptrop
