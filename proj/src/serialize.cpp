#include "crystal/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace crystal {

using nlohmann::json;

namespace {

json quad_json(const pbw::Quad& q) { return json::array({q[0], q[1], q[2], q[3]}); }

pbw::Quad quad_from(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::InvalidInput, std::string(field) + " must have 4 entries");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

std::vector<std::vector<int>> matrix_from(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "cartan must be a matrix");
  return j.get<std::vector<std::vector<int>>>();
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

GraphDocument make_document(const pbw::PbwCrystal& crystal) {
  return GraphDocument{crystal.graph, crystal.elements, VertexId{0}};
}

GraphDocument make_document(ColoredGraph graph) {
  GraphDocument doc{std::move(graph), {}, std::nullopt};
  const auto maxima = maximum_elements(doc.graph);
  if (maxima.size() == 1) doc.max = maxima.front();
  return doc;
}

std::string to_json(const GraphDocument& doc) {
  const ColoredGraph& g = doc.graph;
  json out;
  out["index_set"] = g.index_set().labels();
  out["cartan"] = g.cartan() ? json(g.cartan()->rows()) : json(nullptr);

  std::optional<CrystalView> view;
  if (is_good(g).empty()) view.emplace(g);
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    json vj;
    vj["id"] = v;
    if (!doc.labels.empty()) {
      vj["a"] = quad_json(doc.labels[v].a.c);
      vj["x"] = quad_json(doc.labels[v].x.c);
    }
    if (view) {
      std::vector<int> eps, phi, wt;
      for (std::size_t c = 0; c < g.rank(); ++c) {
        eps.push_back(view->eps(c, static_cast<VertexId>(v)));
        phi.push_back(view->phi(c, static_cast<VertexId>(v)));
        wt.push_back(phi.back() - eps.back());
      }
      vj["wt"] = wt;
      vj["eps"] = eps;
      vj["phi"] = phi;
    }
    vertices.push_back(std::move(vj));
  }
  out["vertices"] = std::move(vertices);

  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({{"from", e.from}, {"to", e.to}, {"color", e.color}});
  out["edges"] = std::move(edges);
  out["max"] = doc.max ? json(*doc.max) : json(nullptr);
  return out.dump(2) + "\n";
}

GraphDocument document_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    if (!j.is_object()) throw Error(Errc::InvalidInput, "graph document must be an object");
    IndexSet colors(j.at("index_set").get<std::vector<Color>>());
    std::optional<Gcm> cartan;
    if (j.contains("cartan") && !j["cartan"].is_null()) cartan.emplace(colors, matrix_from(j["cartan"]));
    ColoredGraph g(colors, cartan);

    const json& vertices = j.at("vertices");
    if (!vertices.is_array()) throw Error(Errc::InvalidInput, "vertices must be a list");
    const std::size_t n = vertices.size();
    g.add_vertices(n);
    std::vector<char> seen(n, 0);
    std::vector<pbw::PbwElement> labels(n);
    std::size_t labelled = 0;
    for (const json& vj : vertices) {
      const auto id = vj.at("id").get<long long>();
      if (id < 0 || static_cast<std::size_t>(id) >= n || seen[id])
        throw Error(Errc::InvalidInput, "vertex ids must be 0..n-1, each once; bad id " + std::to_string(id));
      seen[id] = 1;
      if (vj.contains("a") || vj.contains("x")) {
        labels[id] = pbw::PbwElement{pbw::LusztigDatum{quad_from(vj.at("a"), "a")},
                                     pbw::DualDatum{quad_from(vj.at("x"), "x")}};
        ++labelled;
      }
    }
    if (labelled != 0 && labelled != n) throw Error(Errc::InvalidInput, "either every vertex or none carries a label");

    for (const json& ej : j.at("edges")) {
      const auto from = ej.at("from").get<VertexId>();
      const auto to = ej.at("to").get<VertexId>();
      const auto color = ej.at("color").get<Color>();
      if (!colors.find(color)) throw Error(Errc::InvalidInput, "edge color " + std::to_string(color) + " not in index set");
      g.insert_edge(from, to, color);
    }

    GraphDocument doc{std::move(g), labelled ? std::move(labels) : std::vector<pbw::PbwElement>{}, std::nullopt};
    if (j.contains("max") && !j["max"].is_null()) {
      const auto m = j["max"].get<VertexId>();
      if (!doc.graph.has_vertex(m)) throw Error(Errc::InvalidInput, "max refers to a missing vertex");
      doc.max = m;
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, e.what());
  }
}

Gcm gcm_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    if (j.is_array()) {
      const auto rows = matrix_from(j);
      return Gcm(IndexSet::first_n(rows.size()), rows);
    }
    return Gcm(IndexSet(j.at("index_set").get<std::vector<Color>>()), matrix_from(j.at("cartan")));
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, e.what());
  }
}

std::string to_json(const CheckReport& report) {
  json out;
  out["pass"] = report.pass;
  out["maximum"] = report.maximum ? json(*report.maximum) : json(nullptr);
  out["phi_at_maximum"] = report.phi_at_maximum ? json(*report.phi_at_maximum) : json(nullptr);
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json vj;
    vj["axiom"] = std::string(to_string(v.axiom));
    vj["pair"] = v.pair ? json::array({v.pair->first, v.pair->second}) : json(nullptr);
    vj["witness"] = v.witness;
    vj["detail"] = v.detail;
    violations.push_back(std::move(vj));
  }
  out["violations"] = std::move(violations);
  return out.dump(2) + "\n";
}

std::string to_json(const IsoMap& map) {
  json out = json::array();
  for (std::size_t x = 0; x < map.forward.size(); ++x) out.push_back(json::array({x, map.forward[x]}));
  return out.dump() + "\n";
}

std::string to_json(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const VerificationReport& r : reports)
    out.push_back({{"claim", r.claim},
                   {"domain_size", r.domain_size},
                   {"hits", r.hits},
                   {"pass", r.passed()},
                   {"counterexamples", r.counterexamples}});
  return out.dump(2) + "\n";
}

std::string to_dot(const GraphDocument& doc) {
  const ColoredGraph& g = doc.graph;
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box, fontsize=10];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (!doc.labels.empty()) {
      const auto& m = doc.labels[v];
      os << " [label=\"" << v << "\\n";
      for (std::size_t k = 0; k < 4; ++k) os << (k ? "," : "") << m.a[k];
      os << "\"]";
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.from << " -> " << e.to;
    if (e.color == 1)
      os << " [penwidth=3]";
    else
      os << " [label=\"" << e.color << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace crystal
