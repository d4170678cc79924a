#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/error.hpp"

namespace crystal {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

struct Edge {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  Color color = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Finite I-colored directed graph. Vertices are 0..n-1.
///
/// The per-color successor/predecessor maps hold the Kashiwara structure.
/// Arrows that would give a vertex a second outgoing or incoming arrow of the
/// same color can still be recorded through insert_edge (so files describing
/// bad graphs load and can be diagnosed), but they live in a side list and are
/// invisible to navigation.
class ColoredGraph {
 public:
  explicit ColoredGraph(IndexSet colors, std::optional<Gcm> cartan = std::nullopt);
  explicit ColoredGraph(const Gcm& cartan) : ColoredGraph(cartan.index_set(), cartan) {}

  const IndexSet& index_set() const noexcept { return colors_; }
  std::size_t rank() const noexcept { return colors_.size(); }
  const std::optional<Gcm>& cartan() const noexcept { return cartan_; }
  void set_cartan(std::optional<Gcm> cartan);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool has_vertex(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < vertex_count_;
  }

  VertexId add_vertex();
  void add_vertices(std::size_t n);

  /// Adds x -> y of the given color label. Throws DuplicateEdge if x already
  /// has an outgoing arrow or y an incoming arrow of that color.
  void add_edge(VertexId from, VertexId to, Color color);
  /// Same as add_edge but addressed by color position.
  void add_edge_at(VertexId from, VertexId to, std::size_t color_pos);
  /// Records any arrow; conflicting ones go to the side list (see class doc).
  void insert_edge(VertexId from, VertexId to, Color color);
  /// Removes an arrow if present (navigable or side list). Returns whether one was removed.
  bool remove_edge(VertexId from, VertexId to, Color color);

  /// f_i x and e_i x by color position; kNoVertex when undefined.
  VertexId f(std::size_t color_pos, VertexId x) const { return succ_[color_pos][x]; }
  VertexId e(std::size_t color_pos, VertexId x) const { return pred_[color_pos][x]; }

  /// All arrows, navigable ones first (sorted by color position, then source),
  /// followed by the side list in insertion order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  const std::vector<Edge>& conflicting_edges() const noexcept { return extra_; }

  bool operator==(const ColoredGraph& other) const;

 private:
  void check_vertex(VertexId v) const;

  IndexSet colors_;
  std::optional<Gcm> cartan_;
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<VertexId>> succ_;
  std::vector<std::vector<VertexId>> pred_;
  std::vector<Edge> extra_;
};

/// String statistics of one vertex, indexed by color position.
struct StringStats {
  std::vector<int> eps;
  std::vector<int> phi;
};

/// epsilon/phi by walking the strings through x. Throws NonTerminating on a
/// monochromatic cycle.
StringStats string_stats(const ColoredGraph& g, VertexId x);

enum class Dir { E, F };
enum class Stat { Eps, Phi };

/// Read-only view of a good graph with every string statistic precomputed.
/// This is what the axiom checker and the builder navigate.
class CrystalView {
 public:
  /// Throws NonTerminating if some color has a cycle.
  explicit CrystalView(const ColoredGraph& g);

  const ColoredGraph& graph() const noexcept { return *g_; }
  std::size_t rank() const noexcept { return g_->rank(); }
  std::size_t vertex_count() const noexcept { return g_->vertex_count(); }

  VertexId e(std::size_t i, VertexId x) const { return g_->e(i, x); }
  VertexId f(std::size_t i, VertexId x) const { return g_->f(i, x); }
  VertexId step(Dir d, std::size_t i, VertexId x) const { return d == Dir::E ? e(i, x) : f(i, x); }

  int eps(std::size_t i, VertexId x) const { return eps_[i][x]; }
  int phi(std::size_t i, VertexId x) const { return phi_[i][x]; }
  int stat(Stat s, std::size_t i, VertexId x) const { return s == Stat::Eps ? eps(i, x) : phi(i, x); }

  /// beta_j(g_i x) - beta_j(x); nullopt when g_i x is undefined.
  std::optional<int> delta(Dir d, Stat s, std::size_t i, std::size_t j, VertexId x) const;

  /// Applies a word of Kashiwara operators written left to right as in
  /// mathematical notation, so follow(E, x, {i, j, j, i}) is e_i e_j e_j e_i x
  /// (rightmost letter applied first). kNoVertex if any step is undefined.
  VertexId follow(Dir d, VertexId x, std::span<const std::size_t> word) const;
  VertexId follow(Dir d, VertexId x, std::initializer_list<std::size_t> word) const {
    return follow(d, x, std::span<const std::size_t>(word.begin(), word.size()));
  }

 private:
  const ColoredGraph* g_;
  std::vector<std::vector<int>> eps_;
  std::vector<std::vector<int>> phi_;
};

/// delta(g, dir, stat, i, j, x) with color labels; throws UndefinedStep when
/// g_i x does not exist.
int delta(const ColoredGraph& g, Dir d, Stat s, Color i, Color j, VertexId x);

enum class GoodRule { G1, G2, G3 };

struct StructuralViolation {
  GoodRule rule;
  Color color;
  VertexId witness;
  std::string detail;
};

/// Every (G1)/(G2)/(G3) failure; empty iff the graph is good.
std::vector<StructuralViolation> is_good(const ColoredGraph& g);

/// Vertices with no incoming arrow from which every vertex is f-reachable.
std::vector<VertexId> maximum_elements(const ColoredGraph& g);

/// WT (multiset of colors along any path from x0) and DIST for each vertex;
/// dist is -1 for vertices not reachable from x0.
struct WeightAssignment {
  VertexId root = kNoVertex;
  std::vector<RootCount> wt;
  std::vector<int> dist;
};

/// Thrown by wt_assign when two paths from x0 reach `witness` with different
/// color multisets. Paths are (color, vertex) steps starting at x0.
class InconsistentWeight : public Error {
 public:
  using Path = std::vector<std::pair<Color, VertexId>>;
  InconsistentWeight(VertexId witness, Path first, Path second, const std::string& what)
      : Error(Errc::InconsistentWeight, what),
        witness_(witness),
        first_(std::move(first)),
        second_(std::move(second)) {}

  VertexId witness() const noexcept { return witness_; }
  const Path& first_path() const noexcept { return first_; }
  const Path& second_path() const noexcept { return second_; }

 private:
  VertexId witness_;
  Path first_;
  Path second_;
};

WeightAssignment wt_assign(const ColoredGraph& g, VertexId x0);

/// Arrow reversal; colors and cartan data are kept.
ColoredGraph reverse(const ColoredGraph& g);

}  // namespace crystal
