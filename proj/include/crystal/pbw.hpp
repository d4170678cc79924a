#pragma once

// B2 crystals in Lusztig's PBW coordinates.
//
// An element is a pair (a, x) of 4-tuples of naturals with x = R(a): `a` is
// read along the reduced word s1 s2 s1 s2, `x` along s2 s1 s2 s1. Colors are
// 1 (short root, acts on a_1) and 2 (long root, acts on x_1); the Cartan
// matrix is [[2,-2],[-1,2]].

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"

namespace crystal::pbw {

using Quad = std::array<int, 4>;

/// Coordinates along s1 s2 s1 s2 (roots a1 < 2a1+a2 < a1+a2 < a2).
struct LusztigDatum {
  Quad c{};
  int operator[](std::size_t k) const { return c[k]; }
  auto operator<=>(const LusztigDatum&) const = default;
};

/// Coordinates along s2 s1 s2 s1.
struct DualDatum {
  Quad c{};
  int operator[](std::size_t k) const { return c[k]; }
  auto operator<=>(const DualDatum&) const = default;
};

struct PbwElement {
  LusztigDatum a;
  DualDatum x;

  static PbwElement from_a(const Quad& a);
  static PbwElement zero() { return {}; }
  auto operator<=>(const PbwElement&) const = default;
};

std::string to_string(const PbwElement& m);

/// Dominant weight lambda through its pairings (<h_1,lambda>, <h_2,lambda>).
struct HighestWeightB2 {
  int l1 = 0;
  int l2 = 0;
  auto operator<=>(const HighestWeightB2&) const = default;
};

/// nullopt stands for B(infinity).
using Level = std::optional<HighestWeightB2>;
inline constexpr std::nullopt_t kInfinity = std::nullopt;

DualDatum r_transfer(const LusztigDatum& a);
LusztigDatum r_inverse(const DualDatum& x);

/// Piecewise-linear closed forms of R and R^{-1} (split on a3 vs a1, resp.
/// x3 vs x1). They must agree with r_transfer / r_inverse everywhere.
DualDatum closed_form_r(const LusztigDatum& a);
LusztigDatum closed_form_rinv(const DualDatum& x);

/// The individual branches, exposed for the overlap checks. The "upper"
/// form assumes a3 >= a1 (resp. x3 >= x1), the "lower" form a3 <= a1
/// (resp. x3 <= x1); they throw HypothesisNotMet outside their domain.
DualDatum closed_form_r_upper(const LusztigDatum& a);
DualDatum closed_form_r_lower(const LusztigDatum& a);
LusztigDatum closed_form_rinv_upper(const DualDatum& x);
LusztigDatum closed_form_rinv_lower(const DualDatum& x);

/// True iff x = R(a) and both weight identities hold.
bool is_valid(const PbwElement& m);

struct ElemStats {
  std::array<int, 2> eps{};
  std::array<int, 2> phi{};
  /// Pairings <h_i, wt(m)>.
  std::array<int, 2> wt{};
};

ElemStats elem_stats(const PbwElement& m, const Level& lam);

/// (epsilon*_1, epsilon*_2) = (x4, a4).
std::array<int, 2> epsilon_star(const PbwElement& m);

/// Root multiplicities (alpha_1 count, alpha_2 count) of lambda - wt(m).
RootCount root_count(const PbwElement& m);

/// e_i or f_i for color i in {1, 2}. In B(lambda) the step is guarded by
/// epsilon_i > 0 (e) or phi_i > 0 (f); in B(infinity) f is unguarded.
std::optional<PbwElement> kashiwara_step(const PbwElement& m, Dir d, Color i, const Level& lam);

/// The two candidate cutoffs describing B(lambda) inside B(infinity).
enum class MembershipRule {
  EpsilonStar,      // x4 <= <h_1,lambda>, a4 <= <h_2,lambda>
  ThirdCoordinate,  // x3 <= <h_1,lambda>, a3 <= <h_2,lambda>
};
inline constexpr MembershipRule kDefaultMembershipRule = MembershipRule::EpsilonStar;

std::string to_string(MembershipRule rule);

bool is_member(const PbwElement& m, const HighestWeightB2& lam, MembershipRule rule);

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

struct GenerateOptions {
  std::size_t budget = kDefaultVertexBudget;
  MembershipRule rule = kDefaultMembershipRule;
};

/// A generated B(lambda): the graph plus the PBW label of every vertex.
struct PbwCrystal {
  HighestWeightB2 lambda;
  ColoredGraph graph{Gcm::b2()};
  std::vector<PbwElement> elements;
  std::map<PbwElement, VertexId> index;

  std::optional<VertexId> find(const PbwElement& m) const;
};

/// BFS closure of the zero element under phi-guarded f_1, f_2 (f_1 expanded
/// first, FIFO). Every generated vertex is asserted to satisfy the membership
/// rule; a failure throws MembershipMismatch. Throws BudgetExceeded past
/// options.budget vertices.
PbwCrystal generate(const HighestWeightB2& lam, const GenerateOptions& options = {});

/// Size of the closure of zero under unguarded f in B(infinity), keeping only
/// elements that satisfy `rule`. Throws BudgetExceeded past `budget`.
std::size_t enumerate_by_membership(const HighestWeightB2& lam, MembershipRule rule,
                                    std::size_t budget = kDefaultVertexBudget);

/// Closed form of Delta^e_eps(2,1,m); needs a3 >= a1 >= 1 and x1 >= 1.
int corollary_delta_2_1(const PbwElement& m);
/// Closed form of Delta^e_eps(1,2,m); needs x3 >= x1 >= 1 and a1 >= 1.
int corollary_delta_1_2(const PbwElement& m);

/// Delta^e_eps(i,j,m) by PBW navigation (no graph needed).
std::optional<int> navigated_delta_e_eps(const PbwElement& m, Color i, Color j);

}  // namespace crystal::pbw
