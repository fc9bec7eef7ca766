#include "colorlie/core/error.hpp"

namespace colorlie {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::UndefinedAtQ: return "UndefinedAtQ";
    case Errc::EmptyAlgebra: return "EmptyAlgebra";
    case Errc::NoMatrixRealization: return "NoMatrixRealization";
    case Errc::NeedsExtension: return "NeedsExtension";
    case Errc::NotZeroDegree: return "NotZeroDegree";
    case Errc::NotStandard: return "NotStandard";
    case Errc::MixedSpecs: return "MixedSpecs";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotWeightZero: return "NotWeightZero";
    case Errc::NoOrderingFound: return "NoOrderingFound";
    case Errc::BadWeight: return "BadWeight";
    case Errc::ChiOnDelta: return "ChiOnDelta";
    case Errc::ChiOnNplus: return "ChiOnNplus";
    case Errc::DoubledRoot: return "DoubledRoot";
    case Errc::OddElement: return "OddElement";
    case Errc::NotUnipotent: return "NotUnipotent";
    case Errc::NotRestricted: return "NotRestricted";
    case Errc::BadCharacter: return "BadCharacter";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace colorlie
