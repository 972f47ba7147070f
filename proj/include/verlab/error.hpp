#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace verlab {

enum class ErrorCode {
    InvalidArgument,
    NotPrime,
    NegativeCoefficient,
    IndexOutOfRange,
    DigitOutOfRange,
    NumericalInstability,
    NonConvergence,
    Overflow,
    EvenPrime,
    InsufficientPrecision,
    NotAPurePower,
    NotPPower,
    BadTopDim,
    MissingHomDim,
    ParseError,
};

constexpr std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorCode::NumericalInstability: return "NumericalInstability";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::NotAPurePower: return "NotAPurePower";
    case ErrorCode::NotPPower: return "NotPPower";
    case ErrorCode::BadTopDim: return "BadTopDim";
    case ErrorCode::MissingHomDim: return "MissingHomDim";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library. The code maps one-to-one onto the
/// error names reported by the command-line tool.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

} // namespace verlab
