#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magmaforge {

/// Domain error kinds. The CLI prints `name(code)` so callers can match on it.
enum class Errc {
  LengthMismatch,
  EntryOutOfRange,
  CapExceeded,
  NotEssentiallyPolyadic,
  ArityMismatch,
  NotClosed,
  NotPermutation,
  DomainError,
  FormulaMismatch,
  NotDivisible,
  InvalidGroup,
  BadMultiplier,
  NotAdmissible,
  ContainsIdentity,
  TooLarge,
  InvalidSignFunction,
  InvalidChirality,
  ArityTooLarge,
  NotPrime,
  NoInvariantSignFunction,
  NotHypertournamentMagma,
  BadArity,
  ArityNot2,
  BadModulus,
  ConflictingConstraints,
  NotAChain,
  NotALattice,
  ParseError,
};

std::string_view name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace magmaforge
