#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezout {

enum class ErrorCode {
    ring_mismatch,
    not_divisible,
    zero_modulus,
    unit_modulus,
    too_large,
    search_exhausted,
    unit_or_zero_input,
    zero_input,
    factorization_budget_exceeded,
    precondition_failed,
    not_comaximal,
    unsupported_ring,
    trace_invariant_violation,
    parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto its exit-code contract.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::zero_modulus: return "ZeroModulus";
    case ErrorCode::unit_modulus: return "UnitModulus";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::search_exhausted: return "SearchExhausted";
    case ErrorCode::unit_or_zero_input: return "UnitOrZeroInput";
    case ErrorCode::zero_input: return "ZeroInput";
    case ErrorCode::factorization_budget_exceeded: return "FactorizationBudgetExceeded";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::not_comaximal: return "NotComaximal";
    case ErrorCode::unsupported_ring: return "UnsupportedRing";
    case ErrorCode::trace_invariant_violation: return "TraceInvariantViolation";
    case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

} // namespace bezout
