#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orderflow {

enum class ErrorCode {
    invalid_argument,
    domain_escape,
    arity_mismatch,
    not_a_linear_order,
    out_of_window,
    degenerate_window,
    window_too_large,
    window_too_small,
    degenerate_input,
    ground_too_small,
    parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) { }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what),
          line_(line) { }

    /// 1-based line of the offending input.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

} // namespace orderflow
