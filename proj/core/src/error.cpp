#include "orderflow/error.hpp"

namespace orderflow {

std::string_view to_string(ErrorCode code) {
    switch(code) {
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::domain_escape: return "DomainEscape";
        case ErrorCode::arity_mismatch: return "ArityMismatch";
        case ErrorCode::not_a_linear_order: return "NotALinearOrder";
        case ErrorCode::out_of_window: return "OutOfWindow";
        case ErrorCode::degenerate_window: return "DegenerateWindow";
        case ErrorCode::window_too_large: return "WindowTooLarge";
        case ErrorCode::window_too_small: return "WindowTooSmall";
        case ErrorCode::degenerate_input: return "DegenerateInput";
        case ErrorCode::ground_too_small: return "GroundTooSmall";
        case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(to_string(code)) + ": " + what);
}

} // namespace orderflow
