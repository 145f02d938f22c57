#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcell {

/// Failure categories raised by the library. Each maps to one named
/// error of the public contract; the CLI turns them into exit code 2.
enum class ErrorCode {
  dimension_mismatch,
  field_mismatch,
  algebra_mismatch,
  division_by_zero,
  non_associative,
  no_identity,
  not_graded,
  bad_involution,
  not_homogeneous,
  zero_trace,
  not_central,
  degenerate,
  inconsistent_phi,
  not_scalar_multiple,
  non_homogeneous_trace,
  inconsistent_verdicts,
  bad_characteristic,
  mixed_fields,
  mixed_trace_degrees,
  infinite_dimensional,
  inhomogeneous_relation,
  non_confluent,
  syntax_error,
  validation_error,
  unknown_claim,
  missing_data,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gcell
