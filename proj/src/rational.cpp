#include "suptrop/rational.hpp"

#include <cctype>

#include "suptrop/error.hpp"

namespace suptrop {

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) {
    fail(ErrorKind::parse, "malformed integer '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::invalid_argument, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    fail(ErrorKind::parse, "denominator must be unsigned in '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::optional<std::int64_t> Rat::to_int64() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v_.get_num().get_si());
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) fail(ErrorKind::invalid_argument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rat(n, d);
}

const Rat& ExtRat::value() const {
  if (!v_) fail(ErrorKind::invalid_argument, "value() of infinity");
  return *v_;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::not_square: return "NotSquare";
    case ErrorKind::size_limit_exceeded: return "SizeLimitExceeded";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::lemma_violation: return "LemmaViolation";
    case ErrorKind::no_finite_assignment: return "NoFiniteAssignment";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::malformed_symmetrized: return "MalformedSymmetrized";
    case ErrorKind::label_clash: return "LabelClash";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::field_too_small: return "FieldTooSmall";
    case ErrorKind::not_a_lifting: return "NotALifting";
    case ErrorKind::negative_radicand: return "NegativeRadicand";
    case ErrorKind::attempts_exhausted: return "AttemptsExhausted";
    case ErrorKind::invalid_alpha: return "InvalidAlpha";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace suptrop
