#include "doctest.h"

#include "crystal/error.hpp"
#include "crystal/oracle.hpp"
#include "crystal/pbw.hpp"
#include "oracles.hpp"

using namespace crystal;

TEST_CASE("B2 Weyl dimensions") {
  CHECK(weyl_dim_b2(0, 0) == 1);
  CHECK(weyl_dim_b2(1, 0) == 4);
  CHECK(weyl_dim_b2(0, 1) == 5);
  CHECK(weyl_dim_b2(1, 1) == 16);
  CHECK(weyl_dim_b2(3, 0) == 20);
  CHECK(weyl_dim_b2(0, 2) == 14);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      CHECK(weyl_dim_b2(a, b) == oracle::weyl_dimension(oracle::type_b2(), {a, b}));
      CHECK(weyl_dim_general(Gcm::b2(), {a, b}) == weyl_dim_b2(a, b));
    }
}

TEST_CASE("general Weyl dimensions in rank three") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        CHECK(weyl_dim_general(Gcm::b3(), {a, b, c}) == oracle::weyl_dimension(oracle::type_b3(), {a, b, c}));
        CHECK(weyl_dim_general(Gcm::c3(), {a, b, c}) == oracle::weyl_dimension(oracle::type_c3(), {a, b, c}));
      }
  CHECK(weyl_dim_general(Gcm::b3(), {1, 0, 0}) == 7);
  CHECK(weyl_dim_general(Gcm::b3(), {0, 0, 1}) == 8);
  CHECK(weyl_dim_general(Gcm::c3(), {1, 0, 0}) == 6);
  CHECK(weyl_dim_general(Gcm::a2(), {1, 1}) == 8);
}

TEST_CASE("affine matrices have no Weyl dimension") {
  const Gcm affine(IndexSet::first_n(2), {{2, -2}, {-2, 2}});
  try {
    weyl_dim_general(affine, {1, 0});
    FAIL("expected NotFiniteType");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFiniteType);
  }
}

TEST_CASE("the three propositions hold and are exercised") {
  std::size_t h1 = 0, h2 = 0, h3 = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const pbw::HighestWeightB2 lam{a, b};
      for (const VerificationReport& r : {verify_kakunin1(lam), verify_kakunin2(lam), verify_kakunin3(lam)})
        CHECK_MESSAGE(r.passed(), r.claim, " at (", a, ",", b, "): ", r.counterexamples.front());
      h1 += verify_kakunin1(lam).hits;
      h2 += verify_kakunin2(lam).hits;
      h3 += verify_kakunin3(lam).hits;
    }
  CHECK(h1 > 0);
  CHECK(h2 > 0);
  CHECK(h3 > 0);
  CHECK(verify_kakunin1({0, 0}).hits == 0);
}

TEST_CASE("spot values of the parametrized families") {
  using pbw::PbwElement;
  const PbwElement y = PbwElement::from_a({2, 1, 3, 0});
  CHECK(y.x.c == pbw::Quad{2, 2, 0, 5});
  CHECK(pbw::navigated_delta_e_eps(y, 1, 2) == 1);
  CHECK(pbw::navigated_delta_e_eps(y, 2, 1) == 1);
  CHECK(pbw::epsilon_star(y)[0] >= 0);

  const PbwElement z = PbwElement::from_a({1, 0, 0, 1});
  CHECK(z.x.c == pbw::Quad{0, 1, 0, 0});
  CHECK(oracle::search_r_preimage({0, 1, 0, 0}, 3) == pbw::Quad{1, 0, 0, 1});
}

TEST_CASE("lemma scan passes and detects an injected bug") {
  CHECK(verify_lemmas(1).passed());
  const VerificationReport r = verify_lemmas(8);
  CHECK(r.passed());
  CHECK(r.domain_size == 9 * 9 * 9 * 9);
  LemmaHooks broken;
  broken.r_upper = broken_r_upper;
  CHECK_FALSE(verify_lemmas(4, broken).passed());
}

TEST_CASE("exactly one membership rule matches the dimensions") {
  const auto pins = pin_membership_rule(3);
  REQUIRE(pins.size() == 2);
  int matched = 0;
  for (const MembershipPin& p : pins)
    if (p.matches_dimensions) {
      ++matched;
      CHECK(p.rule == pbw::MembershipRule::EpsilonStar);
    }
  CHECK(matched == 1);
}
