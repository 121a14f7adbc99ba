#pragma once

#include <stdexcept>
#include <string>

namespace alres {

enum class ErrorCode {
    ZeroDivide,
    SingularMatrix,
    PoleAtOrigin,
    NearSingularEvaluation,
    UnsupportedDenominator,
    ExponentGuard,
    EmptyInterval,
    InvalidRange,
    BoundarySurface,
    SingularTransition,
    WindowTooSmall,
    InvalidResidueIndex,
    NotABoundaryPair,
    ParseError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg)
{
    throw Error(code, msg);
}

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ZeroDivide: return "ZeroDivide";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorCode::NearSingularEvaluation: return "NearSingularEvaluation";
    case ErrorCode::UnsupportedDenominator: return "UnsupportedDenominator";
    case ErrorCode::ExponentGuard: return "ExponentGuard";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::BoundarySurface: return "BoundarySurface";
    case ErrorCode::SingularTransition: return "SingularTransition";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::InvalidResidueIndex: return "InvalidResidueIndex";
    case ErrorCode::NotABoundaryPair: return "NotABoundaryPair";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

} // namespace alres
