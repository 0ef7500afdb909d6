#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace annmul {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorCode {
    InvalidModulus,
    InfiniteQuotient,
    CapExceeded,
    RingMismatch,
    ModuleMismatch,
    NotSemisimple,
    DegreeOverflow,
    HypothesisFailed,
    UnknownProperty,
    SyntaxError,
    ResolutionError,
    Degenerate,
    InvalidStructure,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ModuleMismatch: return "ModuleMismatch";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ResolutionError: return "ResolutionError";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace annmul
