#pragma once

#include <stdexcept>
#include <string>

namespace busekit {

enum class Errc {
  dimension_mismatch,
  invalid_point,
  invalid_parameter,
  invalid_space,
  invalid_direction,
  not_parallel,
  bracket_failure,
  limit_not_converged,
  not_in_x_omega,
  unverified_isometry,
  not_an_isometry,
  not_hyperbolic,
  axis_check_failed,
  foliation_not_preserved,
  precondition_failed,
  inconsistent_tolerance,
  parse_error,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace busekit
