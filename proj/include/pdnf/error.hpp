#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdnf {

enum class ErrorCode {
  dimension_mismatch,
  not_diagonal,
  order_too_small,
  order_exceeds_input,
  degenerate_input,
  singular_linear_part,
  not_normal_form,
  not_commuting,
  budget_exceeded,
  too_few_coefficients,
  not_representable,
  non_unique,
  invalid_family,
  repeated_eigenvalues,
  invalid_argument,
  parse_error,
  io_error,
};

std::string_view error_code_name(ErrorCode code);

/// Every contract violation in the library is reported as an Error carrying
/// one of the codes above.  The CLI maps parse/contract codes to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pdnf
