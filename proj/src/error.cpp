#include "rauzy/error.hpp"

namespace rauzy {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::ForbiddenPosition: return "ForbiddenPosition";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::ProfileInconsistent: return "ProfileInconsistent";
    case Errc::NotStandard: return "NotStandard";
    case Errc::NoSuchSingularity: return "NoSuchSingularity";
    case Errc::BadSplit: return "BadSplit";
    case Errc::IllegalInsertion: return "IllegalInsertion";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Tie: return "Tie";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::SingularVector: return "SingularVector";
    case Errc::SingularSeed: return "SingularSeed";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::BadPairing: return "BadPairing";
    case Errc::WrongPairingPattern: return "WrongPairingPattern";
    case Errc::BoundsExceeded: return "BoundsExceeded";
    case Errc::NotSymplecticBasis: return "NotSymplecticBasis";
    case Errc::NotComposable: return "NotComposable";
    case Errc::ClassSearchFailed: return "ClassSearchFailed";
    case Errc::KernelNotFixed: return "KernelNotFixed";
    case Errc::GenusNotPreserved: return "GenusNotPreserved";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

bool is_budget_error(Errc code) {
  return code == Errc::SizeExceeded || code == Errc::CapExceeded ||
         code == Errc::BoundsExceeded;
}

}  // namespace rauzy
