#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colorlie {

/// Machine-readable failure codes. The CLI prints these verbatim.
enum class Errc {
  NonPrime,
  BadCharacteristic,
  ReducibleModulus,
  FieldTooLarge,
  ZeroEntry,
  UndefinedAtQ,
  EmptyAlgebra,
  NoMatrixRealization,
  NeedsExtension,
  NotZeroDegree,
  NotStandard,
  MixedSpecs,
  TooLarge,
  NotWeightZero,
  NoOrderingFound,
  BadWeight,
  ChiOnDelta,
  ChiOnNplus,
  DoubledRoot,
  OddElement,
  NotUnipotent,
  NotRestricted,
  BadCharacter,
  DimensionMismatch,
  InvalidInput,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, long detail = 0)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }

  /// Extra integer payload; for NeedsExtension it is the required degree.
  long detail() const noexcept { return detail_; }

 private:
  Errc code_;
  long detail_;
};

}  // namespace colorlie
