#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "suptrop/rational.hpp"

namespace suptrop {

enum class Kind : std::uint8_t { tangible, ghost, infinity };

/// Element of the supertropical semiring over the rationals: a tangible
/// value a^τ, a ghost value a^γ, or the additive neutral ∞.
class Scalar {
 public:
  /// Default value is ∞ (the additive neutral).
  Scalar() = default;

  static Scalar tangible(Rat v) { return Scalar(Kind::tangible, std::move(v)); }
  static Scalar ghost(Rat v) { return Scalar(Kind::ghost, std::move(v)); }
  static Scalar infinity() { return Scalar(); }

  /// "t:<p>/<q>", "g:<p>/<q>", "inf"; "t:3" is shorthand for "t:3/1".
  static Scalar parse(std::string_view text);
  std::string str() const;

  Kind kind() const { return kind_; }
  bool is_tangible() const { return kind_ == Kind::tangible; }
  bool is_ghost() const { return kind_ == Kind::ghost; }
  bool is_infinite() const { return kind_ == Kind::infinity; }

  /// Value of a tangible or ghost element; throws on ∞.
  const Rat& value() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.kind_ == b.kind_ && (a.kind_ == Kind::infinity || a.value_ == b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  Scalar(Kind kind, Rat v) : kind_(kind), value_(std::move(v)) {}

  Kind kind_ = Kind::infinity;
  Rat value_;
};

/// Supertropical sum: the smaller ν-value wins, equal finite values give a ghost.
Scalar oplus(const Scalar& a, const Scalar& b);

/// Supertropical product: values add, tangible iff both factors are.
Scalar otimes(const Scalar& a, const Scalar& b);

/// Projection to the min-plus semiring forgetting the tangible/ghost flag.
ExtRat nu(const Scalar& a);

/// Ghost surpassing c ⊨ d: c = d, or c = d ⊕ g for some ghost g.
/// Closed form: c = d, or c is a ghost with ν(c) ≤ ν(d).
bool ghost_surpasses(const Scalar& c, const Scalar& d);

/// Embeds a min-plus value as a tangible element (∞ stays ∞).
Scalar tangible_of(const ExtRat& v);

}  // namespace suptrop
