#include "doctest.h"

#include "crystal/graph.hpp"

using namespace crystal;

namespace {

// x0 -1-> a -2-> z and x0 -2-> b -2-> c -1-> z.
ColoredGraph inhomogeneous() {
  ColoredGraph g(Gcm::b2());
  g.add_vertices(5);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 4, 2);
  g.add_edge(0, 2, 2);
  g.add_edge(2, 3, 2);
  g.add_edge(3, 4, 1);
  return g;
}

}  // namespace

TEST_CASE("navigation and duplicate arrows") {
  ColoredGraph g(Gcm::b2());
  g.add_vertices(3);
  g.add_edge(0, 1, 1);
  CHECK(g.f(0, 0) == 1);
  CHECK(g.e(0, 1) == 0);
  CHECK(g.f(1, 0) == kNoVertex);
  CHECK_THROWS_AS(g.add_edge(0, 2, 1), Error);
  CHECK_THROWS_AS(g.add_edge(2, 1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 7, 2), Error);
  CHECK_THROWS_AS(g.add_edge(0, 2, 5), Error);
}

TEST_CASE("lenient insertion keeps conflicting arrows for diagnosis") {
  ColoredGraph g(Gcm::b2());
  g.add_vertices(3);
  g.insert_edge(0, 1, 1);
  g.insert_edge(0, 2, 1);
  CHECK(g.conflicting_edges().size() == 1);
  CHECK(g.edge_count() == 2);
  const auto bad = is_good(g);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].rule == GoodRule::G1);
  CHECK(g.remove_edge(0, 1, 1));
  CHECK(g.conflicting_edges().empty());
  CHECK(g.f(0, 0) == 2);
  CHECK(is_good(g).empty());
}

TEST_CASE("monochromatic cycles") {
  ColoredGraph g(Gcm::b2());
  g.add_vertices(2);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 0, 2);
  const auto bad = is_good(g);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].rule == GoodRule::G3);
  CHECK_THROWS_AS(string_stats(g, 0), Error);
  CHECK_THROWS_AS(CrystalView{g}, Error);
}

TEST_CASE("string statistics agree with the precomputed view") {
  ColoredGraph g(Gcm::b2());
  g.add_vertices(4);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(1, 3, 2);
  const CrystalView v(g);
  for (VertexId x = 0; x < 4; ++x) {
    const StringStats s = string_stats(g, x);
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(s.eps[c] == v.eps(c, x));
      CHECK(s.phi[c] == v.phi(c, x));
    }
  }
  CHECK(v.phi(0, 0) == 2);
  CHECK(v.eps(0, 2) == 2);
  CHECK(v.follow(Dir::F, 0, {1, 0}) == 3);
  CHECK(v.follow(Dir::E, 3, {0, 1}) == 0);
  CHECK(v.follow(Dir::F, 0, {1, 1}) == kNoVertex);
  CHECK(delta(g, Dir::F, Stat::Phi, 1, 2, 0) == 1);
  CHECK_THROWS_AS(delta(g, Dir::E, Stat::Eps, 1, 2, 0), Error);
  CHECK(v.delta(Dir::E, Stat::Eps, 0, 1, 0) == std::nullopt);
}

TEST_CASE("maximum element") {
  ColoredGraph g = inhomogeneous();
  CHECK(maximum_elements(g) == std::vector<VertexId>{0});
  g.add_vertex();
  CHECK(maximum_elements(g).empty());
}

TEST_CASE("inconsistent weights name the witness and both paths") {
  const ColoredGraph g = inhomogeneous();
  try {
    wt_assign(g, 0);
    FAIL("expected an inconsistent weight");
  } catch (const InconsistentWeight& w) {
    CHECK(w.code() == Errc::InconsistentWeight);
    CHECK(w.witness() == 4);
    CHECK(w.first_path().back().second == 4);
    CHECK(w.second_path().back().second == 4);
    CHECK(w.first_path().size() != w.second_path().size());
  }
}

TEST_CASE("weights and distances on a consistent graph") {
  ColoredGraph g(Gcm::b2());
  g.add_vertices(4);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 2, 2);
  g.add_edge(1, 3, 2);
  g.add_edge(2, 3, 1);
  const WeightAssignment w = wt_assign(g, 0);
  CHECK(w.dist == std::vector<int>{0, 1, 1, 2});
  CHECK(w.wt[3].counts() == std::vector<int>{1, 1});
}

TEST_CASE("reversal swaps every arrow") {
  const ColoredGraph g = inhomogeneous();
  const ColoredGraph r = reverse(g);
  CHECK(r.edge_count() == g.edge_count());
  for (const Edge& e : g.edges()) CHECK(r.f(r.index_set().position(e.color), e.to) == e.from);
  CHECK(reverse(r) == g);
}
