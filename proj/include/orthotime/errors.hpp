#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthotime {

enum class ErrorCode {
    NonHermitian,
    NonUnitary,
    NoConvergence,
    CutProximity,
    DimensionMismatch,
    IndexOutOfRange,
    NotNormalized,
    BadAxis,
    BadFrequency,
    ZeroUncertainty,
    BothFlat,
    ZeroEnergy,
    ZeroSpan,
    IdenticalOperators,
    BadK,
    BadRange,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can branch on the kind without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonHermitian: return "NonHermitian";
        case ErrorCode::NonUnitary: return "NonUnitary";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::CutProximity: return "CutProximity";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::BadAxis: return "BadAxis";
        case ErrorCode::BadFrequency: return "BadFrequency";
        case ErrorCode::ZeroUncertainty: return "ZeroUncertainty";
        case ErrorCode::BothFlat: return "BothFlat";
        case ErrorCode::ZeroEnergy: return "ZeroEnergy";
        case ErrorCode::ZeroSpan: return "ZeroSpan";
        case ErrorCode::IdenticalOperators: return "IdenticalOperators";
        case ErrorCode::BadK: return "BadK";
        case ErrorCode::BadRange: return "BadRange";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace orthotime
