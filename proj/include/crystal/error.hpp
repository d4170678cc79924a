#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crystal {

enum class Errc {
  InvalidInput,
  UnsupportedPair,
  DuplicateEdge,
  NonTerminating,
  UndefinedStep,
  InconsistentWeight,
  BudgetExceeded,
  HypothesisNotMet,
  MembershipMismatch,
  SynthesisInconsistency,
  NotIsomorphic,
  PrereqFailed,
  NotFiniteType,
  ParseError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above; callers
/// that care about the category switch on code() instead of the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace crystal
