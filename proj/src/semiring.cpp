#include "suptrop/semiring.hpp"

#include "suptrop/error.hpp"

namespace suptrop {

Scalar Scalar::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (text.size() > 2 && text[1] == ':') {
    const Rat v = Rat::parse(text.substr(2));
    if (text[0] == 't') return tangible(v);
    if (text[0] == 'g') return ghost(v);
  }
  fail(ErrorKind::parse, "malformed scalar '" + std::string(text) +
                             "' (expected t:<p>/<q>, g:<p>/<q> or inf)");
}

std::string Scalar::str() const {
  switch (kind_) {
    case Kind::tangible: return "t:" + value_.str();
    case Kind::ghost: return "g:" + value_.str();
    case Kind::infinity: break;
  }
  return "inf";
}

const Rat& Scalar::value() const {
  if (kind_ == Kind::infinity) fail(ErrorKind::invalid_argument, "value() of inf");
  return value_;
}

Scalar oplus(const Scalar& a, const Scalar& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  const auto c = a.value() <=> b.value();
  if (c < 0) return a;
  if (c > 0) return b;
  return Scalar::ghost(a.value());
}

Scalar otimes(const Scalar& a, const Scalar& b) {
  if (a.is_infinite() || b.is_infinite()) return Scalar::infinity();
  Rat v = a.value() + b.value();
  if (a.is_tangible() && b.is_tangible()) return Scalar::tangible(std::move(v));
  return Scalar::ghost(std::move(v));
}

ExtRat nu(const Scalar& a) {
  if (a.is_infinite()) return ExtRat::infinity();
  return ExtRat(a.value());
}

bool ghost_surpasses(const Scalar& c, const Scalar& d) {
  if (c == d) return true;
  return c.is_ghost() && nu(c) <= nu(d);
}

Scalar tangible_of(const ExtRat& v) {
  if (v.is_infinite()) return Scalar::infinity();
  return Scalar::tangible(v.value());
}

}  // namespace suptrop
