#include "mubkit/error.hpp"

namespace mubkit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::Reducible: return "Reducible";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::Unsupported: return "Unsupported";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::NotOrderP: return "NotOrderP";
    case Errc::DegenerateProjector: return "DegenerateProjector";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::CharacteristicTwo: return "CharacteristicTwo";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::WrongCount: return "WrongCount";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotProjective: return "NotProjective";
    case Errc::DegenerateSpectrum: return "DegenerateSpectrum";
    case Errc::NotOrthonormal: return "NotOrthonormal";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace mubkit
