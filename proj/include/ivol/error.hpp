#pragma once

#include <stdexcept>
#include <string>

namespace ivol {

enum class ErrorCode {
  invalid_input,
  dangling_reference,
  malformed_gluing,
  degree_out_of_range,
  non_orientable,
  not_a_cycle,
  undefined_generator,
  invalid_flow_data,
  missing_label,
  unknown_cell,
  invalid_gradient,
  parse_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ivol
