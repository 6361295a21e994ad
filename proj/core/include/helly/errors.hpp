#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace helly {

enum class ErrorKind {
    ZeroVector,
    DegenerateInput,
    CollinearInput,
    UnboundedUnsupported,
    NoConvergence,
    TheoremViolation,
    IdenticalPlacement,
    PreconditionFailed,
    SubsetExplosion,
    MixedRatios,
    InvalidCurve,
    MalformedInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::CollinearInput: return "CollinearInput";
        case ErrorKind::UnboundedUnsupported: return "UnboundedUnsupported";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::TheoremViolation: return "TheoremViolation";
        case ErrorKind::IdenticalPlacement: return "IdenticalPlacement";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::SubsetExplosion: return "SubsetExplosion";
        case ErrorKind::MixedRatios: return "MixedRatios";
        case ErrorKind::InvalidCurve: return "InvalidCurve";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

/// Every failure raised by the kernel carries one of the kinds above so
/// callers (and the CLI's error JSON) can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace helly
