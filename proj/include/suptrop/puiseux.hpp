#pragma once

#include <string>
#include <vector>

#include "suptrop/field.hpp"
#include "suptrop/rational.hpp"

namespace suptrop {

struct Term {
  Coeff coeff;
  Rat exponent;
};

/// Finite generalized Puiseux series Σ c_e t^e with rational exponents.
/// Normalized: nonzero coefficients, strictly increasing exponents. The
/// empty term list is the zero series.
class PuiseuxPoly {
 public:
  explicit PuiseuxPoly(Field field = Field::rationals()) : field_(field) {}

  /// Normalizes: merges equal exponents, drops zeros, sorts.
  static PuiseuxPoly from_terms(const Field& field, std::vector<Term> terms);
  static PuiseuxPoly monomial(const Coeff& c, const Rat& exponent);
  static PuiseuxPoly constant(const Coeff& c) { return monomial(c, Rat(0)); }

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Leading exponent min Supp; ∞ for the zero series.
  ExtRat degree() const;
  /// Coefficient of t^e (zero when e is not in the support).
  Coeff coeff_at(const Rat& e) const;

  PuiseuxPoly operator-() const;
  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b);

  std::string str() const;

 private:
  Field field_;
  std::vector<Term> terms_;
};

inline ExtRat deg(const PuiseuxPoly& p) { return p.degree(); }

}  // namespace suptrop
