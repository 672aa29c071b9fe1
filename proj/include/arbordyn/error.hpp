#pragma once

#include <stdexcept>
#include <string>

namespace arbordyn {

enum class ErrorKind {
  invalid_argument,
  parse,
  degenerate_map,
  degree_too_small,
  growth_cap,
  not_bicritical,
  not_rational,
  precondition,
  invariant_violation,
  hypotheses_unmet,
  budget_exhausted,
};

/// Single exception type for the library; `kind()` lets callers (the CLI in
/// particular) map failures onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

}  // namespace arbordyn
