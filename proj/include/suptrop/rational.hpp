#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace suptrop {

/// Exact rational number, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : v_(v) {}                    // NOLINT(google-explicit-constructor)
  Rat(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(const mpz_class& v) : v_(v) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class v);

  /// Accepts "p/q" or "p" with optional sign; rejects q = 0.
  static Rat parse(std::string_view text);
  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  mpz_class floor() const;
  mpz_class ceil() const;
  std::optional<std::int64_t> to_int64() const;
  double to_double() const { return v_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Rat abs(const Rat& r);
Rat pow(const Rat& base, unsigned exponent);

/// Element of Q ∪ {+∞}; the carrier of the min-plus semiring and the
/// codomain of the degree map. Default-constructed value is +∞.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(Rat v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static ExtRat infinity() { return ExtRat(); }

  bool is_infinite() const { return !v_.has_value(); }
  bool is_finite() const { return v_.has_value(); }
  const Rat& value() const;

  std::string str() const { return v_ ? v_->str() : "inf"; }

  friend bool operator==(const ExtRat&, const ExtRat&) = default;
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.v_ <=> *b.v_;
  }
  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtRat(*a.v_ + *b.v_);
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

 private:
  std::optional<Rat> v_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

}  // namespace suptrop
