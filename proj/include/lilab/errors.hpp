#pragma once

#include <stdexcept>
#include <string>

namespace lilab {

enum class ErrorCode {
  pole,
  precision_infeasible,
  near_zero,
  insufficient_precision,
  parse,
  monotonicity,
  density,
  first_zero,
  not_found,
  precondition,
  domain,
  degenerate_zero,
  non_convergence,
  out_of_strip,
  table_too_short,
  sieve_capacity,
  no_interior_minimum,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code lets callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lilab
