#pragma once

// Rational interval enclosures for the transcendental quantities used by
// the sampler bounds. Every result satisfies lo <= true value <= hi; the
// endpoints are rounded outward to `kPrecisionBits` significant bits.

#include <ostream>

#include "suptrop/rational.hpp"

namespace suptrop {

inline constexpr unsigned kPrecisionBits = 128;

struct Interval {
  Rat lo;
  Rat hi;

  static Interval point(const Rat& v) { return Interval{v, v}; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  Rat width() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& x);

/// x unchanged when its numerator and denominator together fit in 2*bits
/// bits; otherwise the largest (smallest) dyadic number with about `bits`
/// significant binary digits that is <= x (>= x).
Rat round_down(const Rat& x, unsigned bits = kPrecisionBits);
Rat round_up(const Rat& x, unsigned bits = kPrecisionBits);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws InvalidArgument when b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval square(const Interval& a);

Interval sqrt_enclosure(const Rat& x);
Interval sqrt_enclosure(const Interval& x);
/// x > 0.
Interval ln_enclosure(const Rat& x);
Interval ln_enclosure(const Interval& x);
Interval exp_enclosure(const Rat& x);
Interval exp_enclosure(const Interval& x);

}  // namespace suptrop
