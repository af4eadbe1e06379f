#include "semidec/error.hpp"

namespace semidec {

  char const* error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::ok: return "Ok";
      case ErrorCode::not_prime: return "NotPrime";
      case ErrorCode::bound_exceeded: return "BoundExceeded";
      case ErrorCode::axiom_violation: return "AxiomViolation";
      case ErrorCode::dimension_mismatch: return "DimensionMismatch";
      case ErrorCode::ring_mismatch: return "RingMismatch";
      case ErrorCode::illegal_direction: return "IllegalDirection";
      case ErrorCode::dimension_too_small: return "DimensionTooSmall";
      case ErrorCode::size_limit_exceeded: return "SizeLimitExceeded";
      case ErrorCode::not_idempotent: return "NotIdempotent";
      case ErrorCode::not_central: return "NotCentral";
      case ErrorCode::field_required: return "FieldRequired";
      case ErrorCode::action_not_faithful: return "ActionNotFaithful";
      case ErrorCode::context_mismatch: return "ContextMismatch";
      case ErrorCode::not_closed: return "NotClosed";
      case ErrorCode::not_functional: return "NotFunctional";
      case ErrorCode::not_surjective: return "NotSurjective";
      case ErrorCode::preimage_missing: return "PreimageMissing";
      case ErrorCode::not_found: return "NotFound";
      case ErrorCode::census_mismatch: return "CensusMismatch";
      case ErrorCode::unsupported_format: return "UnsupportedFormat";
      case ErrorCode::invalid_argument: return "InvalidArgument";
      case ErrorCode::parse_error: return "ParseError";
      case ErrorCode::precondition: return "PreconditionFailed";
      case ErrorCode::io_error: return "IoError";
    }
    return "Unknown";
  }

}  // namespace semidec
