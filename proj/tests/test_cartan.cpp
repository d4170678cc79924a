#include "doctest.h"

#include "crystal/cartan.hpp"
#include "oracles.hpp"

using namespace crystal;

TEST_CASE("index sets keep labels in order and reject duplicates") {
  const IndexSet s({3, 1});
  CHECK(s.size() == 2);
  CHECK(s.label(0) == 3);
  CHECK(s.position(1) == 1);
  CHECK_FALSE(s.find(2).has_value());
  CHECK_THROWS_AS(s.position(2), Error);
  CHECK_THROWS_AS(IndexSet({1, 1}), Error);
  CHECK_THROWS_AS(IndexSet(std::vector<Color>{}), Error);
  CHECK(IndexSet::first_n(3).labels() == std::vector<Color>{1, 2, 3});
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(Gcm(IndexSet::first_n(2), {{2, 1}, {-1, 2}}), Error);
  CHECK_THROWS_AS(Gcm(IndexSet::first_n(2), {{2, 0}, {-1, 2}}), Error);
  CHECK_THROWS_AS(Gcm(IndexSet::first_n(2), {{1, -1}, {-1, 2}}), Error);
  CHECK_THROWS_AS(Gcm(IndexSet::first_n(2), {{2, -1}}), Error);
  CHECK_NOTHROW(Gcm(IndexSet::first_n(2), {{2, -3}, {-1, 2}}));
}

TEST_CASE("rank-two classification") {
  CHECK(classify_pair(Gcm::b2(), 1, 2) == RankTwoType::B2);
  CHECK(classify_pair(Gcm::b2(), 2, 1) == RankTwoType::B2Transpose);
  CHECK(classify_pair(Gcm::a2(), 1, 2) == RankTwoType::SimplyLaced);
  CHECK(classify_pair(Gcm::b3(), 1, 3) == RankTwoType::Orthogonal);
  CHECK(classify_pair(Gcm::b3(), 1, 2) == RankTwoType::SimplyLaced);
  CHECK(classify_pair(Gcm::b3(), 2, 3) == RankTwoType::B2Transpose);
  CHECK(classify_pair(Gcm::c3(), 2, 3) == RankTwoType::B2);
  const Gcm g2(IndexSet::first_n(2), {{2, -3}, {-1, 2}});
  CHECK_THROWS_AS(classify_pair(g2, 1, 2), Error);
  CHECK_FALSE(g2.all_pairs_supported());
  CHECK(Gcm::b3().all_pairs_supported());
}

TEST_CASE("named matrices follow <h_i, alpha_j> for explicit root systems") {
  CHECK(Gcm::b2().rows() == oracle::cartan_of(oracle::type_b2()));
  CHECK(Gcm::b3().rows() == oracle::cartan_of(oracle::type_b3()));
  CHECK(Gcm::c3().rows() == oracle::cartan_of(oracle::type_c3()));
}

TEST_CASE("root counts and pairings") {
  RootCount c(2);
  c.add(0).add(1, 2);
  CHECK(c.total() == 3);
  CHECK(c.plus(0)[0] == 2);
  CHECK((c + c)[1] == 4);
  // <h_j, alpha_1 + 2 alpha_2> for B2.
  CHECK(pairing_of_root_count(Gcm::b2(), c) == PairingVector{2 - 4, -1 + 4});
}
