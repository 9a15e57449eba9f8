#include "suptrop/puiseux.hpp"

#include <algorithm>
#include <map>

#include "suptrop/error.hpp"

namespace suptrop {

PuiseuxPoly PuiseuxPoly::from_terms(const Field& field, std::vector<Term> terms) {
  std::map<Rat, Coeff> merged;
  for (auto& t : terms) {
    if (!(t.coeff.field() == field)) {
      fail(ErrorKind::invalid_argument, "series term over " + t.coeff.field().str() + " in a " + field.str() + " series");
    }
    auto [it, inserted] = merged.try_emplace(t.exponent, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  PuiseuxPoly out(field);
  for (auto& [e, c] : merged) {
    if (!c.is_zero()) out.terms_.push_back(Term{c, e});
  }
  return out;
}

PuiseuxPoly PuiseuxPoly::monomial(const Coeff& c, const Rat& exponent) {
  PuiseuxPoly out(c.field());
  if (!c.is_zero()) out.terms_.push_back(Term{c, exponent});
  return out;
}

ExtRat PuiseuxPoly::degree() const {
  if (terms_.empty()) return ExtRat::infinity();
  return ExtRat(terms_.front().exponent);
}

Coeff PuiseuxPoly::coeff_at(const Rat& e) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Rat& x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return Coeff::from_int(field_, 0);
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (!(a.field_ == b.field_)) fail(ErrorKind::invalid_argument, "adding series over different fields");
  PuiseuxPoly out(a.field_);
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->exponent < i->exponent) {
      out.terms_.push_back(*j++);
    } else {
      Coeff c = i->coeff + j->coeff;
      if (!c.is_zero()) out.terms_.push_back(Term{std::move(c), i->exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (!(a.field_ == b.field_)) fail(ErrorKind::invalid_argument, "multiplying series over different fields");
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back(Term{x.coeff * y.coeff, x.exponent + y.exponent});
  }
  return PuiseuxPoly::from_terms(a.field_, std::move(prod));
}

bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].coeff == b.terms_[k].coeff) || a.terms_[k].exponent != b.terms_[k].exponent) {
      return false;
    }
  }
  return true;
}

std::string PuiseuxPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.str() + ")t^" + t.exponent.str();
  }
  return out;
}

}  // namespace suptrop
