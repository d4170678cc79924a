#include "crystal/error.hpp"

namespace crystal {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::UnsupportedPair: return "UnsupportedPair";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::NonTerminating: return "NonTerminating";
    case Errc::UndefinedStep: return "UndefinedStep";
    case Errc::InconsistentWeight: return "InconsistentWeight";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::MembershipMismatch: return "MembershipMismatch";
    case Errc::SynthesisInconsistency: return "SynthesisInconsistency";
    case Errc::NotIsomorphic: return "NotIsomorphic";
    case Errc::PrereqFailed: return "PrereqFailed";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace crystal
