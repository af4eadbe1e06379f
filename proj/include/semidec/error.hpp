#ifndef SEMIDEC_ERROR_HPP_
#define SEMIDEC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace semidec {

  // Numeric values are part of the C API (see semidec.h) and must not change.
  enum class ErrorCode : int {
    ok                  = 0,
    not_prime           = 1,
    bound_exceeded      = 2,
    axiom_violation     = 3,
    dimension_mismatch  = 4,
    ring_mismatch       = 5,
    illegal_direction   = 6,
    dimension_too_small = 7,
    size_limit_exceeded = 8,
    not_idempotent      = 9,
    not_central         = 10,
    field_required      = 11,
    action_not_faithful = 12,
    context_mismatch    = 13,
    not_closed          = 14,
    not_functional      = 15,
    not_surjective      = 16,
    preimage_missing    = 17,
    not_found           = 18,
    census_mismatch     = 19,
    unsupported_format  = 20,
    invalid_argument    = 21,
    parse_error         = 22,
    precondition        = 23,
    io_error            = 24,
  };

  char const* error_code_name(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

  [[noreturn]] inline void fail(ErrorCode code, std::string const& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
  }

}  // namespace semidec

#endif  // SEMIDEC_ERROR_HPP_
