#pragma once

// Crystal synthesis from a highest weight using only the local axioms, and
// isomorphisms between crystals that pass check_all.

#include <cstddef>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"
#include "crystal/pbw.hpp"

namespace crystal {

struct SynthesisOptions {
  std::size_t budget = 1'000'000;
  /// Candidates allowed in a single layer.
  std::size_t layer_budget = 10'000;
};

/// Builds B(lambda) layer by layer from a single vertex with phi = phi0.
///
/// Layer k is formed from the candidates (w, i), w in layer k-1 with phi_i(w) > 0.
/// Candidates are glued by union-find whenever (A+), (B+), the (C1+)
/// conclusions of (S8)/(S9), or (D+) forces two f-words from an earlier vertex
/// to meet. phi of a new vertex comes from its weight, eps from its strings.
///
/// Throws SynthesisInconsistency if the construction contradicts itself or
/// the result fails check_all, BudgetExceeded past the budgets, and
/// UnsupportedPair / InvalidInput for bad input.
ColoredGraph synthesize(const Gcm& a, const PairingVector& phi0, const SynthesisOptions& options = {});

struct IsoMap {
  /// forward[x] is the image of vertex x.
  std::vector<VertexId> forward;
};

/// The unique crystal isomorphism X -> Y. Both graphs must carry equal cartan
/// data, pass check_all and have the same phi at their maxima (else
/// PrereqFailed). Throws NotIsomorphic if the layer-by-layer map breaks down.
IsoMap build_isomorphism(const ColoredGraph& x, const ColoredGraph& y);

struct InvolutionReport {
  bool ok = false;
  std::string detail;
  /// The map b -> w(b) on vertices of generate(lambda).
  std::vector<VertexId> map;
};

/// Checks that arrow reversal of B(lambda) is again B(lambda) and that the
/// induced bijection w satisfies eps(b) = phi(w(b)) and w(w(b)) = b.
InvolutionReport verify_reversal_involution(const pbw::HighestWeightB2& lambda);

}  // namespace crystal
