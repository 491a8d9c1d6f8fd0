#pragma once

#include <stdexcept>
#include <string>

namespace rauzy {

enum class Errc {
  ParseError,
  InvalidPermutation,
  NotIrreducible,
  ForbiddenPosition,
  SizeExceeded,
  ProfileInconsistent,
  NotStandard,
  NoSuchSingularity,
  BadSplit,
  IllegalInsertion,
  OutOfRange,
  Tie,
  DimensionTooLarge,
  DimensionMismatch,
  NotSymplectic,
  SingularVector,
  SingularSeed,
  CapExceeded,
  DegenerateForm,
  BadPairing,
  WrongPairingPattern,
  BoundsExceeded,
  NotSymplecticBasis,
  NotComposable,
  ClassSearchFailed,
  KernelNotFixed,
  GenusNotPreserved,
  Overflow,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

// True for errors meaning a search or enumeration ran out of budget.
bool is_budget_error(Errc code);

}  // namespace rauzy
