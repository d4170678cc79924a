#pragma once

// Local axiom checker for colored graphs: Stembridge's (S1)-(S5) with
// (A+-)/(B+-), the B2 axioms (S6)-(S9) with their sub-conditions, the variant
// set (S8'), (P-), (Q-), and a bounded homogeneous local confluence search.
//
// Existential conclusions such as "exists z = e_i e_j^2 e_i x = e_j e_i^2 e_j x"
// require every intermediate step along both words to be defined and the two
// endpoints to coincide.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"

namespace crystal {

enum class AxiomId {
  S1, S2, S3, S4, S5, S6, S7, S8, S9,
  A_MINUS, A_PLUS, B_MINUS, B_PLUS, D_MINUS, D_PLUS,
  C1_PLUS, P1_MINUS, Q1_MINUS, R_MINUS,
  S8_PRIME, P_MINUS, Q_MINUS,
  CONFLUENCE,
  MAXIMUM,         // no unique maximum element
  HIGHEST_WEIGHT,  // phi at the maximum differs from the expected weight
};

std::string_view to_string(AxiomId id);

struct Violation {
  AxiomId axiom = AxiomId::S1;
  /// Ordered color pair the condition was evaluated for, when it has one.
  std::optional<std::pair<Color, Color>> pair;
  VertexId witness = kNoVertex;
  std::string detail;
  /// Optional (color, vertex) steps illustrating the failure.
  std::vector<std::pair<Color, VertexId>> path;
};

/// Deterministic order: witness, then axiom, then pair.
void sort_violations(std::vector<Violation>& v);

/// (S2) and (S3) at every x and i with e_i x defined, for all j != i.
/// With include_diagonal, (S2) is also evaluated for j = i.
std::vector<Violation> check_s2_s3(const ColoredGraph& g, const Gcm& a, bool include_diagonal = false);

/// (S4) with (A-_{i,j}), (A-_{j,i}), (B-) and (S5) with the f-side duals.
std::vector<Violation> check_s4_s5(const ColoredGraph& g, const Gcm& a);

/// (S6)-(S9) on every pair whose restriction is B2 (transpose-B2 pairs are
/// swapped so that (a_ij, a_ji) = (-2, -1)).
std::vector<Violation> check_s6_s9(const ColoredGraph& g, const Gcm& a);

/// (S8'), (P-), (Q-) and the follow-up of (Q1-) on the two vertices below z,
/// on every B2 pair.
std::vector<Violation> check_variants(const ColoredGraph& g, const Gcm& a);

inline constexpr int kDefaultConfluenceDepth = 7;

/// Bounded homogeneous local confluence: for each x with e_i x and e_j x
/// defined (i != j), look for upward paths of equal length s <= s_max whose
/// first steps are i and j, with equal color multisets and a common endpoint.
/// A violation means no such pair was found within the bound.
std::vector<Violation> check_confluence(const ColoredGraph& g, int s_max = kDefaultConfluenceDepth);

/// Counts of Delta(x) = (Delta^e_eps(i,j,x), Delta^e_eps(j,i,x)) over the
/// vertices with e_i x and e_j x defined, per oriented B2 pair.
using DeltaHistogram = std::map<std::pair<int, int>, std::size_t>;
std::map<std::pair<Color, Color>, DeltaHistogram> delta_histogram(const ColoredGraph& g, const Gcm& a);

struct CheckReport {
  bool pass = false;
  std::optional<VertexId> maximum;
  std::optional<PairingVector> phi_at_maximum;
  std::vector<Violation> violations;
};

/// Goodness, a unique maximum element, consistent WT, (S2)-(S5), and (S6)-(S9)
/// on B2 pairs; optionally phi at the maximum against expected_phi0 (indexed
/// by color position). A passing graph is isomorphic to B(lambda).
CheckReport check_all(const ColoredGraph& g, const Gcm& a,
                      const std::optional<PairingVector>& expected_phi0 = std::nullopt);

/// Oriented B2 pairs (i, j) by color position with (a_ij, a_ji) = (-2, -1).
std::vector<std::pair<std::size_t, std::size_t>> b2_pairs(const Gcm& a);

}  // namespace crystal
