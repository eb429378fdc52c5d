#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sturmian {

enum class ErrorKind {
    InsufficientCoefficients,
    PrecisionExhausted,
    NotProlongable,
    BeyondCertifiedDepth,
    FactorNotInLanguage,
    NotTwoReturnWords,
    NotSturmianSpec,
    NotAperiodic,
    InvalidParameter,
    ExponentTooSmall,
    ParseError,
    // A theorem-level check failed. Never expected; indicates an implementation bug.
    Mismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sturmian
