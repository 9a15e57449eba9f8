#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "suptrop/rational.hpp"

namespace suptrop {

/// Coefficient field of the series: the rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// F_p; throws InvalidArgument unless p is prime (p = 2 allowed).
  static Field prime(std::uint64_t p);
  /// "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  /// Number of elements; 0 stands for infinitely many.
  std::uint64_t size() const { return p_; }
  std::string str() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Element of a Field. Residues are kept in [0, p).
class Coeff {
 public:
  Coeff() = default;  // rational zero
  Coeff(const Field& f, const Rat& v);
  static Coeff from_int(const Field& f, long v) { return Coeff(f, Rat(v)); }

  /// "p/q" (any field with p coprime to the characteristic) or "k mod p".
  static Coeff parse(std::string_view text, const Field& f);
  /// "p/q" over Q, "k mod p" over F_p.
  std::string str() const;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  const Rat& rational() const { return q_; }
  std::uint64_t residue() const { return m_; }

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.field_ == b.field_ && a.q_ == b.q_ && a.m_ == b.m_;
  }

 private:
  void require_same(const Coeff& o) const;

  Field field_ = Field::rationals();
  Rat q_;
  std::uint64_t m_ = 0;
};

/// Nonzero field elements in a fixed order: 1, -1, 2, -2, ... over Q and
/// 1, 2, ..., p-1 over F_p. Returns the `index`-th (0-based).
Coeff enumerate_nonzero(const Field& f, std::uint64_t index);

}  // namespace suptrop
