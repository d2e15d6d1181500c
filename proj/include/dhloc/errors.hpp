#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dhloc {

enum class Errc {
    UnsupportedType,
    DimensionMismatch,
    IndexOutOfRange,
    ZeroVector,
    DependentBasis,
    NotAbsolutelyContinuous,
    NonGenericPoint,
    NotPointed,
    DirectionOutsideSpan,
    IncompatibleSubspaces,
    LowerDimensionalTerm,
    ZeroPairing,
    MissingChernEntry,
    NonGenericGamma,
    InvalidWindow,
    AmbiguousCount,
    UnknownBeta,
    InvalidModel,
    Parse,
};

inline std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::NotAbsolutelyContinuous: return "NotAbsolutelyContinuous";
    case Errc::NonGenericPoint: return "NonGenericPoint";
    case Errc::NotPointed: return "NotPointed";
    case Errc::DirectionOutsideSpan: return "DirectionOutsideSpan";
    case Errc::IncompatibleSubspaces: return "IncompatibleSubspaces";
    case Errc::LowerDimensionalTerm: return "LowerDimensionalTerm";
    case Errc::ZeroPairing: return "ZeroPairing";
    case Errc::MissingChernEntry: return "MissingChernEntry";
    case Errc::NonGenericGamma: return "NonGenericGamma";
    case Errc::InvalidWindow: return "InvalidWindow";
    case Errc::AmbiguousCount: return "AmbiguousCount";
    case Errc::UnknownBeta: return "UnknownBeta";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace dhloc
