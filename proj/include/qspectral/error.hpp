#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qspectral {

enum class ErrorKind {
    NotNormal,
    Singular,
    OnSpectrum,
    SameSphere,
    SideMismatch,
    OutOfBall,
    OnSphere,
    ContourNotAdmissible,
    NotIntrinsic,
    BadExponent,
    NotBlockTriangular,
    ProbeHitsSpectrum,
    NumericalFailure,
    BadArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::OnSpectrum: return "OnSpectrum";
        case ErrorKind::SameSphere: return "SameSphere";
        case ErrorKind::SideMismatch: return "SideMismatch";
        case ErrorKind::OutOfBall: return "OutOfBall";
        case ErrorKind::OnSphere: return "OnSphere";
        case ErrorKind::ContourNotAdmissible: return "ContourNotAdmissible";
        case ErrorKind::NotIntrinsic: return "NotIntrinsic";
        case ErrorKind::BadExponent: return "BadExponent";
        case ErrorKind::NotBlockTriangular: return "NotBlockTriangular";
        case ErrorKind::ProbeHitsSpectrum: return "ProbeHitsSpectrum";
        case ErrorKind::NumericalFailure: return "NumericalFailure";
        case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qspectral
