#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace delone {

enum class ErrorCode {
    InvalidElement,
    EmptySet,
    NotSymmetric,
    MissingWitness,
    SingularBasis,
    NotCovering,
    EmptyRegion,
    NoWindowFound,
    InvalidPeriod,
    EmptyFamily,
    NoCertificate,
    Unsupported,
    Parse,
    Overflow,
};

inline std::string_view to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidElement: return "InvalidElement";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::MissingWitness: return "MissingWitness";
        case ErrorCode::SingularBasis: return "SingularBasis";
        case ErrorCode::NotCovering: return "NotCovering";
        case ErrorCode::EmptyRegion: return "EmptyRegion";
        case ErrorCode::NoWindowFound: return "NoWindowFound";
        case ErrorCode::InvalidPeriod: return "InvalidPeriod";
        case ErrorCode::EmptyFamily: return "EmptyFamily";
        case ErrorCode::NoCertificate: return "NoCertificate";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

/// All library failures are reported through this exception; `code()` identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace delone
