#pragma once

// Brute-force verifiers and dimension oracles. Every report names the finite
// domain it scanned.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/pbw.hpp"

namespace crystal {

/// Dimension of the irreducible B2 module with pairings (a, b).
std::int64_t weyl_dim_b2(int a, int b);

/// Weyl's product over positive roots of <lambda+rho, h_alpha>/<rho, h_alpha>,
/// with the roots (and their coroots) found by closing the simple roots under
/// simple reflections. Throws NotFiniteType past root_budget roots.
std::int64_t weyl_dim_general(const Gcm& a, const PairingVector& lambda, std::size_t root_budget = 10'000);

struct VerificationReport {
  std::string claim;
  std::size_t domain_size = 0;
  /// Domain elements satisfying the claim's hypotheses.
  std::size_t hits = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

/// Elements with Delta = (1,2): the three-way split by Delta'' and its
/// conclusions, matched against the parametrized families X1, X2, X3.
VerificationReport verify_kakunin1(const pbw::HighestWeightB2& lambda);
/// Elements with eps_1 >= 2 and Delta = (1,1): the parametrized family and
/// the common endpoint of the three 5-letter e-words.
VerificationReport verify_kakunin2(const pbw::HighestWeightB2& lambda);
/// Elements with Delta = (0,2) and Delta^e_eps(2,1,e_1^2 x) = 0: the
/// parametrized family and the common endpoint of the three e-words.
VerificationReport verify_kakunin3(const pbw::HighestWeightB2& lambda);

/// Replaceable branches of the closed forms, so the harness can be fed a
/// deliberately broken formula.
struct LemmaHooks {
  std::function<pbw::DualDatum(const pbw::LusztigDatum&)> r_upper = pbw::closed_form_r_upper;
  std::function<pbw::DualDatum(const pbw::LusztigDatum&)> r_lower = pbw::closed_form_r_lower;
  std::function<pbw::LusztigDatum(const pbw::DualDatum&)> rinv_upper = pbw::closed_form_rinv_upper;
  std::function<pbw::LusztigDatum(const pbw::DualDatum&)> rinv_lower = pbw::closed_form_rinv_lower;
};

/// Upper branch of R with min and max exchanged; used by the harness self-test.
pbw::DualDatum broken_r_upper(const pbw::LusztigDatum& a);

/// Scans [0,n]^4: R and R^{-1} are mutually inverse, the weight identities
/// hold, every closed-form branch agrees with R (resp. R^{-1}) on its domain,
/// both Delta corollaries agree with PBW navigation, and the product of the
/// two Delta values vanishes when a1 > a3 and x1 > x3.
VerificationReport verify_lemmas(int n, const LemmaHooks& hooks = {});

struct MembershipPin {
  pbw::MembershipRule rule;
  bool matches_dimensions = false;
  std::string detail;
};

/// For each membership rule: does generate() succeed with it and does the
/// filtered B(infinity) enumeration match weyl_dim_b2 on [0,max_hw]^2?
std::vector<MembershipPin> pin_membership_rule(int max_hw);

}  // namespace crystal
