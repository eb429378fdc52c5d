#include "sturmian/error.hpp"

namespace sturmian {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::NotProlongable: return "NotProlongable";
        case ErrorKind::BeyondCertifiedDepth: return "BeyondCertifiedDepth";
        case ErrorKind::FactorNotInLanguage: return "FactorNotInLanguage";
        case ErrorKind::NotTwoReturnWords: return "NotTwoReturnWords";
        case ErrorKind::NotSturmianSpec: return "NotSturmianSpec";
        case ErrorKind::NotAperiodic: return "NotAperiodic";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::ExponentTooSmall: return "ExponentTooSmall";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Mismatch: return "Mismatch";
    }
    return "Unknown";
}

}  // namespace sturmian
