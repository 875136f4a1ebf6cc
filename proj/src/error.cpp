#include "pdell/error.hpp"

namespace pdell {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::UnsupportedPairing: return "UnsupportedPairing";
    case ErrorCode::OutOfScope: return "OutOfScope";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace pdell
