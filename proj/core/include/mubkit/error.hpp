#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mubkit {

enum class Errc {
  NotPrime,
  Reducible,
  DegreeMismatch,
  Unsupported,
  FieldMismatch,
  DivisionByZero,
  IndexOutOfRange,
  DimMismatch,
  NotOrderP,
  DegenerateProjector,
  NotHermitian,
  NoConvergence,
  EvenPrime,
  CharacteristicTwo,
  EmptyInput,
  WrongCount,
  OutOfRange,
  NotProjective,
  DegenerateSpectrum,
  NotOrthonormal,
  InvalidConfig,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception type thrown by every mubkit operation. The code identifies the
/// failure class; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mubkit
