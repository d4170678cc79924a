#include "crystal/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "crystal/error.hpp"

namespace crystal {

IndexSet::IndexSet(std::vector<Color> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(Errc::InvalidInput, "index set must be nonempty");
  std::set<Color> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
    throw Error(Errc::InvalidInput, "index set labels must be distinct");
}

IndexSet IndexSet::first_n(std::size_t n) {
  std::vector<Color> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return IndexSet(std::move(labels));
}

std::optional<std::size_t> IndexSet::find(Color label) const noexcept {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t IndexSet::position(Color label) const {
  if (auto p = find(label)) return *p;
  throw Error(Errc::InvalidInput, "unknown color " + std::to_string(label));
}

std::string to_string(RankTwoType t) {
  switch (t) {
    case RankTwoType::Orthogonal: return "A1xA1";
    case RankTwoType::SimplyLaced: return "A2";
    case RankTwoType::B2: return "B2";
    case RankTwoType::B2Transpose: return "tB2";
  }
  return "?";
}

Gcm::Gcm(IndexSet index_set, std::vector<std::vector<int>> rows)
    : index_set_(std::move(index_set)), rows_(std::move(rows)) {
  const std::size_t n = index_set_.size();
  if (rows_.size() != n) throw Error(Errc::InvalidInput, "cartan matrix must be square over the index set");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].size() != n) throw Error(Errc::InvalidInput, "cartan matrix must be square over the index set");
    if (rows_[i][i] != 2) throw Error(Errc::InvalidInput, "cartan diagonal entries must equal 2");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rows_[i][j] > 0)
        throw Error(Errc::InvalidInput, "cartan off-diagonal entries must be <= 0");
      if ((rows_[i][j] == 0) != (rows_[j][i] == 0))
        throw Error(Errc::InvalidInput, "cartan entries a_ij and a_ji must vanish together");
    }
  }
}

Gcm Gcm::b2() { return Gcm(IndexSet::first_n(2), {{2, -2}, {-1, 2}}); }
Gcm Gcm::a2() { return Gcm(IndexSet::first_n(2), {{2, -1}, {-1, 2}}); }
Gcm Gcm::b3() { return Gcm(IndexSet::first_n(3), {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}); }
Gcm Gcm::c3() { return Gcm(IndexSet::first_n(3), {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}); }

int Gcm::entry(Color i, Color j) const {
  return at(index_set_.position(i), index_set_.position(j));
}

bool Gcm::all_pairs_supported() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j) {
      try {
        classify_positions(*this, i, j);
      } catch (const Error&) {
        return false;
      }
    }
  return true;
}

RankTwoType classify_positions(const Gcm& a, std::size_t i, std::size_t j) {
  if (i == j || i >= a.rank() || j >= a.rank())
    throw Error(Errc::InvalidInput, "classify_pair needs two distinct colors of the index set");
  const int aij = a.at(i, j);
  const int aji = a.at(j, i);
  if (aij == 0 && aji == 0) return RankTwoType::Orthogonal;
  if (aij == -1 && aji == -1) return RankTwoType::SimplyLaced;
  if (aij == -2 && aji == -1) return RankTwoType::B2;
  if (aij == -1 && aji == -2) return RankTwoType::B2Transpose;
  throw Error(Errc::UnsupportedPair, "(a_ij, a_ji) = (" + std::to_string(aij) + ", " +
                                         std::to_string(aji) + ") for colors " +
                                         std::to_string(a.index_set().label(i)) + ", " +
                                         std::to_string(a.index_set().label(j)));
}

RankTwoType classify_pair(const Gcm& a, Color i, Color j) {
  return classify_positions(a, a.index_set().position(i), a.index_set().position(j));
}

RootCount::RootCount(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) throw Error(Errc::InvalidInput, "root counts are nonnegative");
}

RootCount& RootCount::add(std::size_t pos, int times) {
  counts_.at(pos) += times;
  return *this;
}

RootCount RootCount::plus(std::size_t pos, int times) const {
  RootCount r = *this;
  r.add(pos, times);
  return r;
}

RootCount& RootCount::operator+=(const RootCount& other) {
  if (other.rank() != rank()) throw Error(Errc::InvalidInput, "root count rank mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

int RootCount::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

PairingVector pairing_of_root_count(const Gcm& a, const RootCount& c) {
  if (c.rank() != a.rank()) throw Error(Errc::InvalidInput, "root count rank mismatch");
  PairingVector out(a.rank(), 0);
  for (std::size_t j = 0; j < a.rank(); ++j)
    for (std::size_t i = 0; i < a.rank(); ++i) out[j] += a.at(j, i) * c[i];
  return out;
}

}  // namespace crystal
