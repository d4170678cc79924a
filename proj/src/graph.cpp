#include "crystal/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace crystal {

namespace {

std::string describe_count(const IndexSet& colors, const RootCount& c) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t p = 0; p < c.rank(); ++p) {
    if (c[p] == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << colors.label(p) << ':' << c[p];
  }
  os << '}';
  return os.str();
}

std::string describe_path(const InconsistentWeight::Path& path, VertexId root) {
  std::ostringstream os;
  os << root;
  for (const auto& [color, v] : path) os << " -" << color << "-> " << v;
  return os.str();
}

}  // namespace

ColoredGraph::ColoredGraph(IndexSet colors, std::optional<Gcm> cartan)
    : colors_(std::move(colors)), succ_(colors_.size()), pred_(colors_.size()) {
  set_cartan(std::move(cartan));
}

void ColoredGraph::set_cartan(std::optional<Gcm> cartan) {
  if (cartan && cartan->index_set() != colors_)
    throw Error(Errc::InvalidInput, "cartan matrix index set differs from the graph's colors");
  cartan_ = std::move(cartan);
}

VertexId ColoredGraph::add_vertex() {
  const auto id = static_cast<VertexId>(vertex_count_++);
  for (auto& s : succ_) s.push_back(kNoVertex);
  for (auto& p : pred_) p.push_back(kNoVertex);
  return id;
}

void ColoredGraph::add_vertices(std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) add_vertex();
}

void ColoredGraph::check_vertex(VertexId v) const {
  if (!has_vertex(v)) throw Error(Errc::InvalidInput, "vertex " + std::to_string(v) + " out of range");
}

void ColoredGraph::add_edge(VertexId from, VertexId to, Color color) {
  add_edge_at(from, to, colors_.position(color));
}

void ColoredGraph::add_edge_at(VertexId from, VertexId to, std::size_t c) {
  check_vertex(from);
  check_vertex(to);
  if (c >= rank()) throw Error(Errc::InvalidInput, "color position out of range");
  if (succ_[c][from] != kNoVertex)
    throw Error(Errc::DuplicateEdge, "vertex " + std::to_string(from) + " already has an outgoing " +
                                         std::to_string(colors_.label(c)) + "-arrow");
  if (pred_[c][to] != kNoVertex)
    throw Error(Errc::DuplicateEdge, "vertex " + std::to_string(to) + " already has an incoming " +
                                         std::to_string(colors_.label(c)) + "-arrow");
  succ_[c][from] = to;
  pred_[c][to] = from;
}

void ColoredGraph::insert_edge(VertexId from, VertexId to, Color color) {
  check_vertex(from);
  check_vertex(to);
  const std::size_t c = colors_.position(color);
  if (succ_[c][from] == kNoVertex && pred_[c][to] == kNoVertex) {
    succ_[c][from] = to;
    pred_[c][to] = from;
  } else {
    extra_.push_back(Edge{from, to, color});
  }
}

bool ColoredGraph::remove_edge(VertexId from, VertexId to, Color color) {
  check_vertex(from);
  check_vertex(to);
  const std::size_t c = colors_.position(color);
  auto extra_it = std::find(extra_.begin(), extra_.end(), Edge{from, to, color});
  if (extra_it != extra_.end()) {
    extra_.erase(extra_it);
    return true;
  }
  if (succ_[c][from] != to) return false;
  succ_[c][from] = kNoVertex;
  pred_[c][to] = kNoVertex;
  // A side-list arrow may have been blocked only by the removed one.
  for (auto it = extra_.begin(); it != extra_.end(); ++it) {
    const std::size_t ec = colors_.position(it->color);
    if (succ_[ec][it->from] == kNoVertex && pred_[ec][it->to] == kNoVertex) {
      succ_[ec][it->from] = it->to;
      pred_[ec][it->to] = it->from;
      extra_.erase(it);
      break;
    }
  }
  return true;
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t c = 0; c < rank(); ++c)
    for (std::size_t v = 0; v < vertex_count_; ++v)
      if (succ_[c][v] != kNoVertex)
        out.push_back(Edge{static_cast<VertexId>(v), succ_[c][v], colors_.label(c)});
  out.insert(out.end(), extra_.begin(), extra_.end());
  return out;
}

std::size_t ColoredGraph::edge_count() const {
  std::size_t n = extra_.size();
  for (const auto& s : succ_)
    n += static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](VertexId v) { return v != kNoVertex; }));
  return n;
}

bool ColoredGraph::operator==(const ColoredGraph& other) const {
  return colors_ == other.colors_ && cartan_ == other.cartan_ &&
         vertex_count_ == other.vertex_count_ && succ_ == other.succ_ && extra_ == other.extra_;
}

StringStats string_stats(const ColoredGraph& g, VertexId x) {
  if (!g.has_vertex(x)) throw Error(Errc::InvalidInput, "vertex out of range");
  StringStats s{std::vector<int>(g.rank(), 0), std::vector<int>(g.rank(), 0)};
  const auto bound = static_cast<int>(g.vertex_count());
  for (std::size_t c = 0; c < g.rank(); ++c) {
    for (VertexId v = g.e(c, x); v != kNoVertex; v = g.e(c, v))
      if (++s.eps[c] > bound)
        throw Error(Errc::NonTerminating, "monochromatic cycle through vertex " + std::to_string(x));
    for (VertexId v = g.f(c, x); v != kNoVertex; v = g.f(c, v))
      if (++s.phi[c] > bound)
        throw Error(Errc::NonTerminating, "monochromatic cycle through vertex " + std::to_string(x));
  }
  return s;
}

CrystalView::CrystalView(const ColoredGraph& g)
    : g_(&g),
      eps_(g.rank(), std::vector<int>(g.vertex_count(), -1)),
      phi_(g.rank(), std::vector<int>(g.vertex_count(), -1)) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> chain;
  for (std::size_t c = 0; c < g.rank(); ++c) {
    for (std::size_t start = 0; start < n; ++start) {
      const auto head = static_cast<VertexId>(start);
      if (g.e(c, head) != kNoVertex) continue;
      chain.clear();
      for (VertexId v = head; v != kNoVertex; v = g.f(c, v)) chain.push_back(v);
      const auto len = static_cast<int>(chain.size());
      for (int k = 0; k < len; ++k) {
        eps_[c][chain[k]] = k;
        phi_[c][chain[k]] = len - 1 - k;
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (eps_[c][v] < 0)
        throw Error(Errc::NonTerminating, "vertex " + std::to_string(v) + " lies on a " +
                                              std::to_string(g.index_set().label(c)) + "-colored cycle");
  }
}

std::optional<int> CrystalView::delta(Dir d, Stat s, std::size_t i, std::size_t j, VertexId x) const {
  const VertexId y = step(d, i, x);
  if (y == kNoVertex) return std::nullopt;
  return stat(s, j, y) - stat(s, j, x);
}

VertexId CrystalView::follow(Dir d, VertexId x, std::span<const std::size_t> word) const {
  for (auto it = std::rbegin(word); it != std::rend(word) && x != kNoVertex; ++it) x = step(d, *it, x);
  return x;
}

int delta(const ColoredGraph& g, Dir d, Stat s, Color i, Color j, VertexId x) {
  const std::size_t ci = g.index_set().position(i);
  const std::size_t cj = g.index_set().position(j);
  if (!g.has_vertex(x)) throw Error(Errc::InvalidInput, "vertex out of range");
  const VertexId y = d == Dir::E ? g.e(ci, x) : g.f(ci, x);
  if (y == kNoVertex)
    throw Error(Errc::UndefinedStep, std::string(d == Dir::E ? "e_" : "f_") + std::to_string(i) +
                                         " of vertex " + std::to_string(x) + " is undefined");
  const StringStats before = string_stats(g, x);
  const StringStats after = string_stats(g, y);
  return s == Stat::Eps ? after.eps[cj] - before.eps[cj] : after.phi[cj] - before.phi[cj];
}

std::vector<StructuralViolation> is_good(const ColoredGraph& g) {
  std::vector<StructuralViolation> out;
  for (const Edge& e : g.conflicting_edges()) {
    const std::size_t c = g.index_set().position(e.color);
    if (g.f(c, e.from) != kNoVertex)
      out.push_back({GoodRule::G1, e.color, e.from,
                     "two " + std::to_string(e.color) + "-arrows leave vertex " + std::to_string(e.from)});
    if (g.e(c, e.to) != kNoVertex)
      out.push_back({GoodRule::G2, e.color, e.to,
                     "two " + std::to_string(e.color) + "-arrows enter vertex " + std::to_string(e.to)});
  }
  const std::size_t n = g.vertex_count();
  for (std::size_t c = 0; c < g.rank(); ++c) {
    std::vector<char> seen(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (g.e(c, static_cast<VertexId>(v)) != kNoVertex) continue;
      for (VertexId w = static_cast<VertexId>(v); w != kNoVertex; w = g.f(c, w)) seen[w] = 1;
    }
    // Whatever is left sits on a cycle (f_c is injective); report each cycle once.
    for (std::size_t v = 0; v < n; ++v) {
      if (seen[v]) continue;
      VertexId w = static_cast<VertexId>(v);
      std::size_t len = 0;
      while (!seen[w]) {
        seen[w] = 1;
        ++len;
        w = g.f(c, w);
      }
      out.push_back({GoodRule::G3, g.index_set().label(c), static_cast<VertexId>(v),
                     "vertex " + std::to_string(v) + " lies on a " + std::to_string(g.index_set().label(c)) +
                         "-colored cycle of length " + std::to_string(len)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.witness, static_cast<int>(a.rule)) < std::pair(b.witness, static_cast<int>(b.rule));
  });
  return out;
}

std::vector<VertexId> maximum_elements(const ColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> sources;
  for (std::size_t v = 0; v < n; ++v) {
    bool source = true;
    for (std::size_t c = 0; c < g.rank() && source; ++c) source = g.e(c, static_cast<VertexId>(v)) == kNoVertex;
    if (source) sources.push_back(static_cast<VertexId>(v));
  }
  for (const Edge& e : g.conflicting_edges())
    std::erase(sources, e.to);
  // A second source is never reachable from the first.
  if (sources.size() != 1) return {};
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{sources.front()};
  seen[sources.front()] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < g.rank(); ++c) {
      const VertexId v = g.f(c, u);
      if (v != kNoVertex && !seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  if (reached != n) return {};
  return sources;
}

WeightAssignment wt_assign(const ColoredGraph& g, VertexId x0) {
  if (!g.has_vertex(x0)) throw Error(Errc::InvalidInput, "root vertex out of range");
  const std::size_t n = g.vertex_count();
  WeightAssignment out;
  out.root = x0;
  out.wt.assign(n, RootCount(g.rank()));
  out.dist.assign(n, -1);
  std::vector<std::pair<VertexId, std::size_t>> parent(n, {kNoVertex, 0});

  auto tree_path = [&](VertexId v) {
    InconsistentWeight::Path path;
    while (v != x0) {
      path.emplace_back(g.index_set().label(parent[v].second), v);
      v = parent[v].first;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  out.dist[x0] = 0;
  std::deque<VertexId> queue{x0};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < g.rank(); ++c) {
      const VertexId v = g.f(c, u);
      if (v == kNoVertex) continue;
      RootCount via = out.wt[u].plus(c);
      if (out.dist[v] < 0) {
        out.dist[v] = out.dist[u] + 1;
        out.wt[v] = std::move(via);
        parent[v] = {u, c};
        queue.push_back(v);
      } else if (out.wt[v] != via) {
        auto first = tree_path(v);
        auto second = tree_path(u);
        second.emplace_back(g.index_set().label(c), v);
        std::ostringstream os;
        os << "vertex " << v << " reached with WT " << describe_count(g.index_set(), out.wt[v])
           << " along " << describe_path(first, x0) << " and with WT "
           << describe_count(g.index_set(), via) << " along " << describe_path(second, x0);
        throw InconsistentWeight(v, std::move(first), std::move(second), os.str());
      }
    }
  }
  return out;
}

ColoredGraph reverse(const ColoredGraph& g) {
  ColoredGraph r(g.index_set(), g.cartan());
  r.add_vertices(g.vertex_count());
  for (const Edge& e : g.edges()) r.insert_edge(e.to, e.from, e.color);
  return r;
}

}  // namespace crystal
