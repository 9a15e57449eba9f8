#include "suptrop/field.hpp"

#include "suptrop/error.hpp"

namespace suptrop {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::invalid_argument, "field characteristic " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 62)) fail(ErrorKind::invalid_argument, "field characteristic too large");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    const Rat p = Rat::parse(text.substr(3));
    const auto v = p.to_int64();
    if (!v || *v < 2) fail(ErrorKind::parse, "bad field '" + std::string(text) + "'");
    return prime(static_cast<std::uint64_t>(*v));
  }
  fail(ErrorKind::parse, "unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::str() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p_); }

Coeff::Coeff(const Field& f, const Rat& v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
    return;
  }
  const std::uint64_t p = f.characteristic();
  const std::uint64_t den = reduce(v.den(), p);
  if (den == 0) {
    fail(ErrorKind::invalid_argument, "denominator of " + v.str() + " vanishes in " + f.str());
  }
  m_ = mulmod(reduce(v.num(), p), powmod(den, p - 2, p), p);
}

Coeff Coeff::parse(std::string_view text, const Field& f) {
  const auto pos = text.find(" mod ");
  if (pos == std::string_view::npos) return Coeff(f, Rat::parse(text));
  const Rat modulus = Rat::parse(text.substr(pos + 5));
  if (f.is_rational() || modulus != Rat(static_cast<long>(f.characteristic()))) {
    fail(ErrorKind::parse, "coefficient '" + std::string(text) + "' does not belong to field " + f.str());
  }
  return Coeff(f, Rat::parse(text.substr(0, pos)));
}

std::string Coeff::str() const {
  if (field_.is_rational()) return q_.str();
  return std::to_string(m_) + " mod " + std::to_string(field_.characteristic());
}

bool Coeff::is_zero() const { return field_.is_rational() ? q_.is_zero() : m_ == 0; }
bool Coeff::is_one() const { return field_.is_rational() ? q_ == Rat(1) : m_ == 1; }

void Coeff::require_same(const Coeff& o) const {
  if (!(field_ == o.field_)) {
    fail(ErrorKind::invalid_argument, "mixing coefficients of " + field_.str() + " and " + o.field_.str());
  }
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  if (field_.is_rational()) {
    r.q_ = -q_;
  } else if (m_ != 0) {
    r.m_ = field_.characteristic() - m_;
  }
  return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  require_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    m_ = (m_ + o.m_) % p;
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
  require_same(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    m_ = mulmod(m_, o.m_, field_.characteristic());
  }
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  require_same(o);
  if (o.is_zero()) fail(ErrorKind::invalid_argument, "coefficient division by zero");
  if (field_.is_rational()) {
    q_ /= o.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    m_ = mulmod(m_, powmod(o.m_, p - 2, p), p);
  }
  return *this;
}

Coeff enumerate_nonzero(const Field& f, std::uint64_t index) {
  if (f.is_rational()) {
    const long magnitude = static_cast<long>(index / 2 + 1);
    return Coeff::from_int(f, index % 2 == 0 ? magnitude : -magnitude);
  }
  if (index + 1 >= f.characteristic()) {
    fail(ErrorKind::invalid_argument, "field " + f.str() + " has no nonzero element #" + std::to_string(index));
  }
  return Coeff::from_int(f, static_cast<long>(index + 1));
}

}  // namespace suptrop
