// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "crystal/axioms.hpp"
#include "crystal/builder.hpp"
#include "crystal/oracle.hpp"
#include "crystal/pbw.hpp"

using namespace crystal;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

std::int64_t closed_dimension(int a, int b) { return std::int64_t(a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6; }

Outcome dimensions() {
  Outcome o;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      const auto n = std::int64_t(pbw::generate({a, b}).elements.size());
      if (n != closed_dimension(a, b))
        o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ") has " + std::to_string(n));
    }
  if (pbw::generate({1, 1}).elements.size() != 16 || pbw::generate({3, 0}).elements.size() != 20 ||
      pbw::generate({0, 2}).elements.size() != 14)
    o.fail("anchor counts differ");
  return o;
}

Outcome transition_maps() {
  Outcome o;
  const VerificationReport r = verify_lemmas(8);
  if (r.domain_size != 6561) o.fail("domain " + std::to_string(r.domain_size));
  if (!r.passed()) o.fail(r.counterexamples.front());
  return o;
}

Outcome soundness() {
  Outcome o;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      const pbw::PbwCrystal c = pbw::generate({a, b});
      if (!check_all(c.graph, Gcm::b2(), PairingVector{a, b}).pass) o.fail("B(" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (!check_all(reverse(c.graph), Gcm::b2(), PairingVector{a, b}).pass)
        o.fail("reversed B(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return o;
}

Outcome propositions() {
  Outcome o;
  std::vector<pbw::HighestWeightB2> grid;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) grid.push_back({a, b});
  grid.push_back({4, 4});
  std::size_t hits = 0;
  for (const auto& lam : grid)
    for (const VerificationReport& r : {verify_kakunin1(lam), verify_kakunin2(lam), verify_kakunin3(lam)}) {
      hits += r.hits;
      if (!r.passed()) o.fail(r.claim + ": " + r.counterexamples.front());
    }
  if (hits == 0) o.fail("no element met any hypothesis");
  return o;
}

Outcome synthesis() {
  Outcome o;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const ColoredGraph s = synthesize(Gcm::b2(), {a, b});
      const pbw::PbwCrystal c = pbw::generate({a, b});
      const IsoMap m = build_isomorphism(s, c.graph);
      const CrystalView vs(s), vc(c.graph);
      for (std::size_t v = 0; v < m.forward.size(); ++v)
        for (std::size_t i = 0; i < 2; ++i)
          if (vs.eps(i, VertexId(v)) != vc.eps(i, m.forward[v]) || vs.phi(i, VertexId(v)) != vc.phi(i, m.forward[v]))
            o.fail("statistics differ in B(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return o;
}

Outcome mutations() {
  Outcome o;
  std::size_t total = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const pbw::PbwCrystal c = pbw::generate({a, b});
      for (const Edge& e : c.graph.edges()) {
        ColoredGraph h = c.graph;
        h.remove_edge(e.from, e.to, e.color);
        ++total;
        if (check_all(h, Gcm::b2()).violations.empty())
          o.fail("undetected deletion " + std::to_string(e.from) + "->" + std::to_string(e.to));
      }
    }
  o.note = o.ok ? std::to_string(total) + " deletions" : o.note;
  return o;
}

Outcome rank_three() {
  Outcome o;
  const Gcm b3 = Gcm::b3();
  const ColoredGraph g = synthesize(b3, {1, 0, 0});
  const auto expected = weyl_dim_general(b3, {1, 0, 0});
  if (expected != 7 || std::int64_t(g.vertex_count()) != expected) o.fail(std::to_string(g.vertex_count()) + " vertices");
  if (!check_all(g, b3, PairingVector{1, 0, 0}).pass) o.fail("check_all");
  if (classify_pair(b3, 1, 2) != RankTwoType::SimplyLaced) o.fail("pair (1,2)");
  const RankTwoType t23 = classify_pair(b3, 2, 3);
  if (t23 != RankTwoType::B2 && t23 != RankTwoType::B2Transpose) o.fail("pair (2,3)");
  if (classify_pair(b3, 1, 3) != RankTwoType::Orthogonal) o.fail("pair (1,3)");
  if (synthesize(Gcm::c3(), {1, 0, 0}).vertex_count() != 6) o.fail("C3 standard crystal");
  return o;
}

Outcome membership() {
  Outcome o;
  int matched = 0;
  for (const MembershipPin& p : pin_membership_rule(6))
    if (p.matches_dimensions) {
      ++matched;
      o.note = "pinned " + pbw::to_string(p.rule);
    }
  if (matched != 1) o.fail(std::to_string(matched) + " rules match");
  if (pbw::kDefaultMembershipRule != pbw::MembershipRule::EpsilonStar) o.fail("default rule is not the pinned one");
  return o;
}

Outcome confluence() {
  Outcome o;
  ColoredGraph g(Gcm::b2());
  g.add_vertices(5);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 4, 2);
  g.add_edge(0, 2, 2);
  g.add_edge(2, 3, 2);
  g.add_edge(3, 4, 1);
  try {
    wt_assign(g, 0);
    o.fail("wt_assign accepted the graph");
  } catch (const InconsistentWeight& e) {
    if (e.witness() != 4) o.fail("wt_assign witness " + std::to_string(e.witness()));
  }
  const auto v = check_confluence(g);
  if (v.size() != 1 || v[0].witness != 4) o.fail("check_confluence witness");
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      if (!check_confluence(pbw::generate({a, b}).graph, 7).empty())
        o.fail("B(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "dimension reproduction on [0,6]^2", 30, dimensions},
      {2, "R and R^-1 closed forms on [0,8]^4", 5, transition_maps},
      {3, "axioms hold on B(lambda) and its reversal, [0,5]^2", 60, soundness},
      {4, "proposition suites on [0,3]^2 and (4,4)", 60, propositions},
      {5, "synthesis is isomorphic to generation on [0,4]^2", 60, synthesis},
      {6, "every single-edge deletion is detected on [0,3]^2", 60, mutations},
      {7, "rank three synthesis on B3 with (1,0,0)", 5, rank_three},
      {8, "membership rule pinned by dimensions", 60, membership},
      {9, "confluence detector", 60, confluence},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) o.fail("over the " + std::to_string(int(c.limit_s)) + " s limit");
    if (!o.ok) ++failures;
    std::printf("[%s] %d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.note.empty() ? "" : ": ",
                o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
