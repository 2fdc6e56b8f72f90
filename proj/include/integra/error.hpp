#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace integra {

enum class ErrorCode {
  ring_mismatch,
  no_canonical_map,
  dimension_mismatch,
  malformed_certificate,
  degree_too_small,
  unverified_input,
  coefficient_degree_too_high,
  relation_failed,
  bad_index,
  hypothesis_failed,
  not_monic_after_extraction,
  bad_lambda,
  index_out_of_range,
  invalid_argument,
  parse_error,
  paranoid_check_failed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code selects the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace integra
