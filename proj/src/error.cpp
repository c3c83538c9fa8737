#include "magmaforge/error.hpp"

namespace magmaforge {

std::string_view name(Errc code) noexcept {
  switch (code) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotEssentiallyPolyadic: return "NotEssentiallyPolyadic";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::DomainError: return "DomainError";
    case Errc::FormulaMismatch: return "FormulaMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::InvalidGroup: return "InvalidGroup";
    case Errc::BadMultiplier: return "BadMultiplier";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::ContainsIdentity: return "ContainsIdentity";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidSignFunction: return "InvalidSignFunction";
    case Errc::InvalidChirality: return "InvalidChirality";
    case Errc::ArityTooLarge: return "ArityTooLarge";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoInvariantSignFunction: return "NoInvariantSignFunction";
    case Errc::NotHypertournamentMagma: return "NotHypertournamentMagma";
    case Errc::BadArity: return "BadArity";
    case Errc::ArityNot2: return "ArityNot2";
    case Errc::BadModulus: return "BadModulus";
    case Errc::ConflictingConstraints: return "ConflictingConstraints";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NotALattice: return "NotALattice";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace magmaforge
