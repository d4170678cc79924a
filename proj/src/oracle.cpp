#include "crystal/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "crystal/graph.hpp"

namespace crystal {

namespace {

using pbw::DualDatum;
using pbw::LusztigDatum;
using pbw::PbwElement;
using pbw::Quad;

PbwElement elem(const Quad& a, const Quad& x) { return PbwElement{LusztigDatum{a}, DualDatum{x}}; }

std::string quad_str(const Quad& q) {
  return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
         std::to_string(q[3]) + ")";
}

// Navigation helpers over a generated crystal, with colors 1 and 2 at
// positions 0 and 1.
class Nav {
 public:
  explicit Nav(const pbw::PbwCrystal& c) : c_(c), v_(c.graph) {}

  const CrystalView& view() const { return v_; }
  const PbwElement& label(VertexId x) const { return c_.elements[x]; }

  VertexId e(const std::vector<int>& word, VertexId x) const { return v_.follow(Dir::E, x, pos(word)); }
  VertexId f(const std::vector<int>& word, VertexId x) const { return v_.follow(Dir::F, x, pos(word)); }

  std::optional<int> de(int i, int j, VertexId x) const {
    return v_.delta(Dir::E, Stat::Eps, std::size_t(i - 1), std::size_t(j - 1), x);
  }
  std::optional<int> df(int i, int j, VertexId x) const {
    return v_.delta(Dir::F, Stat::Phi, std::size_t(i - 1), std::size_t(j - 1), x);
  }
  int eps(int i, VertexId x) const { return x == kNoVertex ? -1 : v_.eps(std::size_t(i - 1), x); }

  // Common endpoint of the e-words, or kNoVertex.
  VertexId meet(const std::vector<std::vector<int>>& words, VertexId x) const {
    VertexId common = kNoVertex;
    for (std::size_t k = 0; k < words.size(); ++k) {
      const VertexId y = e(words[k], x);
      if (y == kNoVertex || (k > 0 && y != common)) return kNoVertex;
      common = y;
    }
    return common;
  }

 private:
  static std::vector<std::size_t> pos(const std::vector<int>& word) {
    std::vector<std::size_t> out;
    for (int c : word) out.push_back(std::size_t(c - 1));
    return out;
  }

  const pbw::PbwCrystal& c_;
  CrystalView v_;
};

// Parametrized families, solved for their parameters from the label.
bool in_x1(const PbwElement& m) {
  const int a = m.a[0], b = m.a[1];
  return a >= 1 && b >= 1 && m == elem({a, b, a, b}, {b, a, b, a});
}

bool in_x2(const PbwElement& m) {
  const int a = m.a[0], b = m.a[1], c = m.a[3];
  return a >= 1 && 0 <= c && c < b && m == elem({a, b, a, c}, {b, a, c, a + 2 * b - 2 * c});
}

bool in_x3(const PbwElement& m) {
  const int a = m.a[0], b = m.a[1], c = m.a[2];
  return b >= 1 && 0 <= c && c < a && m == elem({a, b, c, a + b - c}, {b, a, b, c});
}

bool in_k2(const PbwElement& m) {
  const int a = m.a[0], b = m.a[1], c = m.a[3];
  return a >= 2 && 0 <= c && c <= b && m == elem({a, b, a + 1, c}, {b + 1, a, c, a + 2 * b - 2 * c + 1});
}

bool in_k3(const PbwElement& m) {
  const int a = m.a[0], b = m.a[1], c = m.a[2];
  return a >= 2 && b >= 1 && 0 <= c && c <= a - 2 && m == elem({a, b, c, a + b - c - 1}, {b, a - 2, b + 1, c});
}

std::string lam_str(const pbw::HighestWeightB2& l) {
  return "lambda=(" + std::to_string(l.l1) + "," + std::to_string(l.l2) + ")";
}

class Collector {
 public:
  Collector(VerificationReport& r, std::string prefix) : r_(r), prefix_(std::move(prefix)) {}
  void operator()(const std::string& what) { r_.counterexamples.push_back(prefix_ + ": " + what); }

 private:
  VerificationReport& r_;
  std::string prefix_;
};

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::int64_t weyl_dim_b2(int a, int b) {
  if (a < 0 || b < 0) throw Error(Errc::InvalidInput, "highest weight must be dominant");
  const std::int64_t A = a, B = b;
  return (A + 1) * (B + 1) * (A + B + 2) * (A + 2 * B + 3) / 6;
}

std::int64_t weyl_dim_general(const Gcm& a, const PairingVector& lambda, std::size_t root_budget) {
  const std::size_t r = a.rank();
  if (lambda.size() != r) throw Error(Errc::InvalidInput, "highest weight has the wrong number of entries");
  if (std::any_of(lambda.begin(), lambda.end(), [](int p) { return p < 0; }))
    throw Error(Errc::InvalidInput, "highest weight must be dominant");

  // A positive root as simple-root coefficients, with its coroot as
  // simple-coroot coefficients.
  using Vec = std::vector<std::int64_t>;
  std::map<Vec, Vec> roots;
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    roots.emplace(e, e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vec root = queue[head];
    const Vec coroot = roots.at(root);
    for (std::size_t i = 0; i < r; ++i) {
      // s_i(alpha) = alpha - <h_i, alpha> alpha_i ; s_i(h) = h - <h, alpha_i> h_i.
      std::int64_t pair_root = 0, pair_coroot = 0;
      for (std::size_t k = 0; k < r; ++k) {
        pair_root += a.at(i, k) * root[k];
        pair_coroot += coroot[k] * a.at(k, i);
      }
      Vec image = root;
      image[i] -= pair_root;
      if (std::all_of(image.begin(), image.end(), [](std::int64_t c) { return c == 0; })) continue;
      if (std::any_of(image.begin(), image.end(), [](std::int64_t c) { return c < 0; })) continue;
      if (roots.count(image)) continue;
      if (roots.size() >= root_budget)
        throw Error(Errc::NotFiniteType, "positive root closure exceeds " + std::to_string(root_budget) + " roots");
      Vec co = coroot;
      co[i] -= pair_coroot;
      roots.emplace(image, co);
      queue.push_back(image);
    }
  }

  __int128 num = 1, den = 1;
  for (const auto& [root, co] : roots) {
    __int128 top = 0, bottom = 0;
    for (std::size_t k = 0; k < r; ++k) {
      top += static_cast<__int128>(co[k]) * (lambda[k] + 1);
      bottom += co[k];
    }
    num *= top;
    den *= bottom;
    const __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw Error(Errc::NotFiniteType, "Weyl product is not an integer");
  return static_cast<std::int64_t>(num);
}

VerificationReport verify_kakunin1(const pbw::HighestWeightB2& lambda) {
  VerificationReport report{"Delta=(1,2) splits into X1, X2, X3 " + lam_str(lambda), 0, 0, {}};
  const pbw::PbwCrystal c = pbw::generate(lambda);
  const Nav nav(c);
  report.domain_size = c.elements.size();
  for (std::size_t v = 0; v < c.elements.size(); ++v) {
    const auto x = static_cast<VertexId>(v);
    const PbwElement& m = c.elements[v];
    Collector fail(report, pbw::to_string(m));
    const bool lhs = nav.eps(1, x) > 0 && nav.eps(2, x) > 0 && nav.de(1, 2, x) == 1 && nav.de(2, 1, x) == 2;
    const int families = int(in_x1(m)) + int(in_x2(m)) + int(in_x3(m));
    if (families > 1) fail("lies in more than one family");
    if (lhs != (families == 1)) {
      fail(lhs ? "Delta=(1,2) but in no family" : "in a family but Delta is not (1,2)");
      continue;
    }
    if (!lhs) continue;
    ++report.hits;

    const VertexId y = nav.e({1, 1, 2}, x);
    const VertexId y2 = nav.e({1, 1, 2, 2, 1}, x);
    if (y == kNoVertex || y2 == kNoVertex) {
      fail("y or y' does not exist");
      continue;
    }
    const std::pair<int, int> dd{*nav.df(1, 2, y), *nav.df(1, 2, y2)};
    if (dd == std::pair{1, 0}) fail("Delta'' = (1,0)");
    const std::pair<int, int> expected = in_x1(m) ? std::pair{0, 1} : in_x2(m) ? std::pair{1, 1} : std::pair{0, 0};
    if (dd != expected) {
      fail("Delta'' = (" + std::to_string(dd.first) + "," + std::to_string(dd.second) + ") does not match its family");
      continue;
    }

    if (in_x1(m)) {
      const int a = m.a[0], b = m.a[1];
      if (nav.label(y) != elem({a, b - 1, a, b}, {b, a, b - 1, a})) fail("y differs from the family formula");
      if (nav.label(y2) != elem({a, b - 1, a - 1, b}, {b - 1, a, b - 1, a - 1}))
        fail("y' differs from the family formula");
      const VertexId z =
          nav.meet({{2, 1, 1, 2, 1, 2, 1}, {2, 1, 1, 1, 2, 2, 1}, {1, 2, 2, 1, 1, 1, 2}, {1, 2, 1, 2, 1, 1, 2}}, x);
      if (z == kNoVertex) {
        fail("the four 7-letter words do not meet");
        continue;
      }
      if (nav.label(z) != elem({a - 1, b - 1, a - 1, b - 1}, {b - 1, a - 1, b - 1, a - 1}))
        fail("z differs from the family formula");
      if (nav.df(1, 2, z) != 1 || nav.df(2, 1, z) != 2) fail("Delta'(z) is not (1,2)");
    } else if (in_x2(m)) {
      const int a = m.a[0], b = m.a[1], cc = m.a[3];
      if (nav.label(y2) != elem({a, b - 1, a - 1, cc}, {b - 1, a - 1, cc, a + 2 * b - 2 * cc - 2}))
        fail("y' differs from the family formula");
      if (nav.meet({{1, 1, 2, 2, 1}, {1, 2, 1, 2, 1}, {2, 1, 1, 1, 2}}, x) != y2)
        fail("the three 5-letter words do not meet at y'");
      if (nav.df(2, 1, y2) != 1) fail("Delta^f_phi(2,1,y') is not 1");
    } else {
      const int a = m.a[0], b = m.a[1], cc = m.a[2];
      const VertexId fy2 = nav.f({2}, y2);
      if (fy2 == kNoVertex || fy2 != nav.e({1}, y)) fail("f_2 y' differs from e_1 y");
      else if (nav.label(fy2) != elem({a - 1, b - 1, cc, a + b - cc}, {b + 1, a - 1, b - 1, cc}))
        fail("f_2 y' differs from the family formula");
      if (nav.df(2, 1, y2) != 2) fail("Delta^f_phi(2,1,y') is not 2");
      const VertexId low = nav.f({1, 1}, y2);
      if (low == kNoVertex || nav.df(2, 1, low) != 0) fail("Delta^f_phi(2,1,f_1^2 y') is not 0");
    }
  }
  return report;
}

VerificationReport verify_kakunin2(const pbw::HighestWeightB2& lambda) {
  VerificationReport report{"eps_1>=2, Delta=(1,1) family " + lam_str(lambda), 0, 0, {}};
  const pbw::PbwCrystal c = pbw::generate(lambda);
  const Nav nav(c);
  report.domain_size = c.elements.size();
  for (std::size_t v = 0; v < c.elements.size(); ++v) {
    const auto x = static_cast<VertexId>(v);
    const PbwElement& m = c.elements[v];
    Collector fail(report, pbw::to_string(m));
    const bool lhs = nav.eps(1, x) >= 2 && nav.eps(2, x) > 0 && nav.de(1, 2, x) == 1 && nav.de(2, 1, x) == 1;
    if (lhs != in_k2(m)) {
      fail(lhs ? "hypotheses hold outside the family" : "in the family but the hypotheses fail");
      continue;
    }
    if (!lhs) continue;
    ++report.hits;
    const int a = m.a[0], b = m.a[1], cc = m.a[3];
    const VertexId z = nav.meet({{1, 2, 2, 1, 1}, {1, 2, 1, 2, 1}, {2, 1, 1, 1, 2}}, x);
    if (z == kNoVertex) fail("the three 5-letter words do not meet");
    else if (nav.label(z) != elem({a - 2, b + 1, a - 2, cc}, {b + 1, a - 2, cc, a + 2 * b - 2 * cc}))
      fail("z differs from the family formula");
  }
  return report;
}

VerificationReport verify_kakunin3(const pbw::HighestWeightB2& lambda) {
  VerificationReport report{"Delta=(0,2) with Delta^e_eps(2,1,e_1^2 x)=0 family " + lam_str(lambda), 0, 0, {}};
  const pbw::PbwCrystal c = pbw::generate(lambda);
  const Nav nav(c);
  report.domain_size = c.elements.size();
  for (std::size_t v = 0; v < c.elements.size(); ++v) {
    const auto x = static_cast<VertexId>(v);
    const PbwElement& m = c.elements[v];
    Collector fail(report, pbw::to_string(m));
    const VertexId up = nav.e({1, 1}, x);
    const bool lhs = nav.eps(1, x) >= 2 && nav.eps(2, x) > 0 && nav.eps(2, up) > 0 && nav.de(2, 1, up) == 0 &&
                     nav.de(1, 2, x) == 0 && nav.de(2, 1, x) == 2;
    if (lhs != in_k3(m)) {
      fail(lhs ? "hypotheses hold outside the family" : "in the family but the hypotheses fail");
      continue;
    }
    if (!lhs) continue;
    ++report.hits;
    const int a = m.a[0], b = m.a[1], cc = m.a[2];
    const VertexId z = nav.meet({{1, 2, 2, 1, 1}, {2, 1, 1, 2, 1}, {2, 1, 1, 1, 2}}, x);
    if (z == kNoVertex) fail("the three 5-letter words do not meet");
    else if (nav.label(z) != elem({a - 1, b - 1, cc, a + b - cc - 2}, {b - 1, a - 1, b - 1, cc}))
      fail("z differs from the family formula");
  }
  return report;
}

pbw::DualDatum broken_r_upper(const pbw::LusztigDatum& v) {
  const auto [a1, a2, a3, a4] = v.c;
  if (a3 < a1) throw Error(Errc::HypothesisNotMet, "closed form needs a3 >= a1");
  const int hi = std::max(a2, a4);
  return DualDatum{{std::min(a2, a4) + a3 - a1, a1, hi, a3 + 2 * a2 - 2 * hi}};
}

VerificationReport verify_lemmas(int n, const LemmaHooks& hooks) {
  if (n < 1) throw Error(Errc::InvalidInput, "box size must be at least 1");
  VerificationReport report{"closed forms and Delta corollaries on [0," + std::to_string(n) + "]^4", 0, 0, {}};
  auto add = [&](const std::string& claim, const Quad& q, const std::string& what) {
    report.counterexamples.push_back(claim + " at " + quad_str(q) + ": " + what);
  };
  for (int a1 = 0; a1 <= n; ++a1)
    for (int a2 = 0; a2 <= n; ++a2)
      for (int a3 = 0; a3 <= n; ++a3)
        for (int a4 = 0; a4 <= n; ++a4) {
          ++report.domain_size;
          const Quad q{a1, a2, a3, a4};
          const LusztigDatum a{q};
          const DualDatum x{q};
          const DualDatum ra = pbw::r_transfer(a);
          const LusztigDatum rx = pbw::r_inverse(x);
          if (pbw::r_inverse(ra) != a) add("R^-1 R = id", q, "got " + quad_str(pbw::r_inverse(ra).c));
          if (pbw::r_transfer(rx) != x) add("R R^-1 = id", q, "got " + quad_str(pbw::r_transfer(rx).c));
          if (!pbw::is_valid(PbwElement{a, ra})) add("weight identities", q, "fail for (a, R(a))");

          if (a3 >= a1 && hooks.r_upper(a) != ra) add("R, a3 >= a1", q, "got " + quad_str(hooks.r_upper(a).c));
          if (a3 <= a1 && hooks.r_lower(a) != ra) add("R, a3 <= a1", q, "got " + quad_str(hooks.r_lower(a).c));
          if (a3 >= a1 && hooks.rinv_upper(x) != rx)
            add("R^-1, x3 >= x1", q, "got " + quad_str(hooks.rinv_upper(x).c));
          if (a3 <= a1 && hooks.rinv_lower(x) != rx)
            add("R^-1, x3 <= x1", q, "got " + quad_str(hooks.rinv_lower(x).c));

          const PbwElement m{a, ra};
          const auto d21 = pbw::navigated_delta_e_eps(m, 2, 1);
          const auto d12 = pbw::navigated_delta_e_eps(m, 1, 2);
          if ((a3 >= a1 && a1 >= 1 && ra[0] >= 1) || (ra[2] >= ra[0] && ra[0] >= 1 && a1 >= 1)) ++report.hits;
          if (a3 >= a1 && a1 >= 1 && ra[0] >= 1 && d21 != pbw::corollary_delta_2_1(m))
            add("Delta^e_eps(2,1)", q, "formula " + std::to_string(pbw::corollary_delta_2_1(m)));
          if (ra[2] >= ra[0] && ra[0] >= 1 && a1 >= 1 && d12 != pbw::corollary_delta_1_2(m))
            add("Delta^e_eps(1,2)", q, "formula " + std::to_string(pbw::corollary_delta_1_2(m)));
          if (a1 > a3 && ra[0] > ra[2] && d12 && d21 && *d12 * *d21 != 0)
            add("product of Delta values", q, "is " + std::to_string(*d12 * *d21));
        }
  return report;
}

std::vector<MembershipPin> pin_membership_rule(int max_hw) {
  std::vector<MembershipPin> out;
  for (auto rule : {pbw::MembershipRule::EpsilonStar, pbw::MembershipRule::ThirdCoordinate}) {
    MembershipPin pin{rule, true, ""};
    for (int l1 = 0; l1 <= max_hw && pin.matches_dimensions; ++l1)
      for (int l2 = 0; l2 <= max_hw && pin.matches_dimensions; ++l2) {
        const pbw::HighestWeightB2 lam{l1, l2};
        const auto dim = static_cast<std::size_t>(weyl_dim_b2(l1, l2));
        try {
          const std::size_t generated = pbw::generate(lam, {pbw::kDefaultVertexBudget, rule}).elements.size();
          const std::size_t filtered = pbw::enumerate_by_membership(lam, rule, 4 * dim + 16);
          if (generated != dim || filtered != dim) {
            pin.matches_dimensions = false;
            pin.detail = lam_str(lam) + ": " + std::to_string(generated) + " generated, " +
                         std::to_string(filtered) + " filtered, expected " + std::to_string(dim);
          }
        } catch (const Error& e) {
          pin.matches_dimensions = false;
          pin.detail = lam_str(lam) + ": " + e.what();
        }
      }
    out.push_back(pin);
  }
  return out;
}

}  // namespace crystal
