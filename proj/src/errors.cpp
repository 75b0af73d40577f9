#include "ivol/error.hpp"
#include "ivol/integer.hpp"

namespace ivol {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::dangling_reference: return "dangling_reference";
    case ErrorCode::malformed_gluing: return "malformed_gluing";
    case ErrorCode::degree_out_of_range: return "degree_out_of_range";
    case ErrorCode::non_orientable: return "non_orientable";
    case ErrorCode::not_a_cycle: return "not_a_cycle";
    case ErrorCode::undefined_generator: return "undefined_generator";
    case ErrorCode::invalid_flow_data: return "invalid_flow_data";
    case ErrorCode::missing_label: return "missing_label";
    case ErrorCode::unknown_cell: return "unknown_cell";
    case ErrorCode::invalid_gradient: return "invalid_gradient";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ivol
