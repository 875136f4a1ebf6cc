#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdell {

enum class ErrorCode {
    InvalidModulus,
    ModulusMismatch,
    NotAnIsomorphism,
    NotAGraph,
    InvalidWitness,
    Inconsistent,
    UnsupportedPairing,
    OutOfScope,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace pdell
