#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crystal {

/// Color label as it appears in files and reports (1, 2, ... for B2).
using Color = int;

/// Ordered finite set of distinct color labels. Everything else in the library
/// addresses colors by their position in this list; labels only matter at the
/// I/O boundary.
class IndexSet {
 public:
  explicit IndexSet(std::vector<Color> labels);

  /// {1, 2, ..., n}
  static IndexSet first_n(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  Color label(std::size_t pos) const { return labels_.at(pos); }
  const std::vector<Color>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(Color label) const noexcept;
  /// Position of a label; throws InvalidInput for unknown labels.
  std::size_t position(Color label) const;

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<Color> labels_;
};

enum class RankTwoType { Orthogonal, SimplyLaced, B2, B2Transpose };

std::string to_string(RankTwoType t);

/// Weight data kept as its pairings <h_i, mu>, one entry per color position.
using PairingVector = std::vector<int>;

/// Generalized Cartan matrix. Construction enforces the structural GCM rules
/// (diagonal 2, non-positive off-diagonal, a_ij = 0 iff a_ji = 0); whether a
/// pair is one of the supported rank-2 types is decided by classify_pair.
class Gcm {
 public:
  Gcm(IndexSet index_set, std::vector<std::vector<int>> rows);

  static Gcm b2();   // [[2,-2],[-1,2]] on {1,2}
  static Gcm a2();   // [[2,-1],[-1,2]] on {1,2}
  static Gcm b3();   // [[2,-1,0],[-1,2,-1],[0,-2,2]] on {1,2,3}; color 3 is the short root
  static Gcm c3();   // [[2,-1,0],[-1,2,-2],[0,-1,2]] on {1,2,3}; color 3 is the long root

  const IndexSet& index_set() const noexcept { return index_set_; }
  std::size_t rank() const noexcept { return index_set_.size(); }

  /// Entry by color position.
  int at(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }
  /// Entry by color label.
  int entry(Color i, Color j) const;
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// True when every off-diagonal pair classifies without error.
  bool all_pairs_supported() const;

  bool operator==(const Gcm&) const = default;

 private:
  IndexSet index_set_;
  std::vector<std::vector<int>> rows_;
};

/// Classifies the restriction of A to the ordered pair (i, j) by color
/// position. Throws UnsupportedPair outside A1xA1, A2, B2, transpose-B2.
RankTwoType classify_positions(const Gcm& a, std::size_t i, std::size_t j);

/// Same as classify_positions, addressed by color label.
RankTwoType classify_pair(const Gcm& a, Color i, Color j);

/// Element of N[I]: a multiplicity for each color position.
class RootCount {
 public:
  RootCount() = default;
  explicit RootCount(std::size_t rank) : counts_(rank, 0) {}
  explicit RootCount(std::vector<int> counts);

  std::size_t rank() const noexcept { return counts_.size(); }
  int operator[](std::size_t pos) const { return counts_.at(pos); }
  const std::vector<int>& counts() const noexcept { return counts_; }

  /// Adds `times` copies of the color at `pos`.
  RootCount& add(std::size_t pos, int times = 1);
  RootCount plus(std::size_t pos, int times = 1) const;
  RootCount& operator+=(const RootCount& other);
  friend RootCount operator+(RootCount lhs, const RootCount& rhs) { return lhs += rhs; }

  /// Total number of colors counted with multiplicity.
  int total() const;

  auto operator<=>(const RootCount&) const = default;

 private:
  std::vector<int> counts_;
};

/// Component j is <h_j, sum_i c(i) alpha_i> = sum_i a_ji c(i).
PairingVector pairing_of_root_count(const Gcm& a, const RootCount& c);

}  // namespace crystal
