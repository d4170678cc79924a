#pragma once

// JSON and DOT formats for graphs, check reports, isomorphisms and
// verification reports.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crystal/axioms.hpp"
#include "crystal/builder.hpp"
#include "crystal/graph.hpp"
#include "crystal/oracle.hpp"
#include "crystal/pbw.hpp"

namespace crystal {

/// A graph as stored on disk. Vertex ids are 0..n-1.
struct GraphDocument {
  ColoredGraph graph;
  /// PBW labels, either empty or one per vertex.
  std::vector<pbw::PbwElement> labels;
  std::optional<VertexId> max;
};

/// Document for a generated B2 crystal, labels and maximum included.
GraphDocument make_document(const pbw::PbwCrystal& crystal);
/// Document for an unlabeled graph; max is filled in when it is unique.
GraphDocument make_document(ColoredGraph graph);

/// Serializes to JSON. eps, phi and wt (as pairings, phi - eps) are added per
/// vertex when the graph is good.
std::string to_json(const GraphDocument& doc);

/// Parses a document. Stored eps/phi/wt are ignored. Arrows that conflict are
/// kept on the side list so that bad graphs can be diagnosed. Throws ParseError
/// on malformed JSON and InvalidInput on inconsistent content.
GraphDocument document_from_json(std::string_view text);

/// Parses either a bare matrix or {"index_set": [...], "cartan": [[...]]}.
Gcm gcm_from_json(std::string_view text);

std::string to_json(const CheckReport& report);
std::string to_json(const IsoMap& map);
std::string to_json(const std::vector<VerificationReport>& reports);

/// DOT digraph: color-1 arrows drawn thick, other colors labeled.
std::string to_dot(const GraphDocument& doc);

}  // namespace crystal
