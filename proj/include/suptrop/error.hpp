#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace suptrop {

enum class ErrorKind {
  parse,
  not_square,
  size_limit_exceeded,
  precondition_violated,
  lemma_violation,
  no_finite_assignment,
  dimension_mismatch,
  malformed_symmetrized,
  label_clash,
  shape_mismatch,
  field_too_small,
  not_a_lifting,
  negative_radicand,
  attempts_exhausted,
  invalid_alpha,
  invalid_argument,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` lets front-ends map
/// failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace suptrop
