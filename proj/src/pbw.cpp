#include "crystal/pbw.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "crystal/error.hpp"

namespace crystal::pbw {

namespace {

std::string quad_str(const Quad& q) {
  std::ostringstream os;
  os << '(' << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ')';
  return os.str();
}

// Root multiplicities of the weight, read from the x side.
std::array<int, 2> alpha_counts(const DualDatum& x) {
  return {x[1] + 2 * x[2] + x[3], x[0] + x[1] + x[2]};
}

}  // namespace

PbwElement PbwElement::from_a(const Quad& a) {
  LusztigDatum la{a};
  return PbwElement{la, r_transfer(la)};
}

std::string to_string(const PbwElement& m) { return "(" + quad_str(m.a.c) + "," + quad_str(m.x.c) + ")"; }

DualDatum r_transfer(const LusztigDatum& v) {
  const auto [a, b, c, d] = v.c;
  const int n1 = std::max(b, std::max(b, d) + c - a);
  const int n2 = std::max(a, c) + 2 * b;
  const int n3 = std::min(c + d, a + std::min(b, d));
  const int n4 = std::min(a, c);
  const int mu = std::max(2 * n3, n2 + n4);
  return DualDatum{{n1, mu - n2, n2 + n3 - mu, n4 - 2 * n3 + mu}};
}

LusztigDatum r_inverse(const DualDatum& v) {
  const auto [a, b, c, d] = v.c;
  const int p1 = std::max(b, std::max(b, d) + 2 * (c - a));
  const int p2 = std::max(a, c) + b;
  const int p3 = std::min(2 * c + d, 2 * a + std::min(b, d));
  const int p4 = std::min(a, c);
  const int nu = std::max(p3, p2 + p4);
  return LusztigDatum{{p1, nu - p2, 2 * p2 + p3 - 2 * nu, p4 - p3 + nu}};
}

DualDatum closed_form_r_upper(const LusztigDatum& v) {
  const auto [a1, a2, a3, a4] = v.c;
  if (a3 < a1) throw Error(Errc::HypothesisNotMet, "closed form needs a3 >= a1");
  const int lo = std::min(a2, a4);
  return DualDatum{{std::max(a2, a4) + a3 - a1, a1, lo, a3 + 2 * a2 - 2 * lo}};
}

DualDatum closed_form_r_lower(const LusztigDatum& v) {
  const auto [a1, a2, a3, a4] = v.c;
  if (a3 > a1) throw Error(Errc::HypothesisNotMet, "closed form needs a3 <= a1");
  // The middle threshold a4 + (a3 - a1)/2 can be half-integral; compare doubled.
  if (2 * a2 >= 2 * a4 + a3 - a1) return DualDatum{{a2, a3, a4, a1 + 2 * a2 - 2 * a4}};
  if (a2 >= a4 + a3 - a1)
    return DualDatum{{a2, 2 * a3 + 2 * a4 - a1 - 2 * a2, a1 + 2 * a2 - (a3 + a4), a3}};
  return DualDatum{{a4 + a3 - a1, a1, a2, a3}};
}

LusztigDatum closed_form_rinv_upper(const DualDatum& v) {
  const auto [x1, x2, x3, x4] = v.c;
  if (x3 < x1) throw Error(Errc::HypothesisNotMet, "closed form needs x3 >= x1");
  const int lo = std::min(x2, x4);
  return LusztigDatum{{std::max(x2, x4) + 2 * (x3 - x1), x1, lo, x3 + x2 - lo}};
}

LusztigDatum closed_form_rinv_lower(const DualDatum& v) {
  const auto [x1, x2, x3, x4] = v.c;
  if (x3 > x1) throw Error(Errc::HypothesisNotMet, "closed form needs x3 <= x1");
  if (x2 >= x4 + x3 - x1) return LusztigDatum{{x2, x3, x4, x1 + x2 - x4}};
  if (x2 >= x4 + 2 * (x3 - x1))
    return LusztigDatum{{x2, 2 * x3 + x4 - x1 - x2, 2 * x1 + 2 * x2 - 2 * x3 - x4, x3}};
  return LusztigDatum{{x4 + 2 * (x3 - x1), x1, x2, x3}};
}

DualDatum closed_form_r(const LusztigDatum& a) {
  return a[2] >= a[0] ? closed_form_r_upper(a) : closed_form_r_lower(a);
}

LusztigDatum closed_form_rinv(const DualDatum& x) {
  return x[2] >= x[0] ? closed_form_rinv_upper(x) : closed_form_rinv_lower(x);
}

bool is_valid(const PbwElement& m) {
  for (int k = 0; k < 4; ++k)
    if (m.a[k] < 0 || m.x[k] < 0) return false;
  if (r_transfer(m.a) != m.x) return false;
  const auto [c1, c2] = alpha_counts(m.x);
  return c1 == m.a[0] + 2 * m.a[1] + m.a[2] && c2 == m.a[1] + m.a[2] + m.a[3];
}

RootCount root_count(const PbwElement& m) {
  const auto [c1, c2] = alpha_counts(m.x);
  return RootCount(std::vector<int>{c1, c2});
}

ElemStats elem_stats(const PbwElement& m, const Level& lam) {
  const auto [c1, c2] = alpha_counts(m.x);
  const int l1 = lam ? lam->l1 : 0;
  const int l2 = lam ? lam->l2 : 0;
  ElemStats s;
  s.eps = {m.a[0], m.x[0]};
  s.wt = {l1 - (2 * c1 - 2 * c2), l2 - (-c1 + 2 * c2)};
  s.phi = {s.eps[0] + s.wt[0], s.eps[1] + s.wt[1]};
  return s;
}

std::array<int, 2> epsilon_star(const PbwElement& m) { return {m.x[3], m.a[3]}; }

std::optional<PbwElement> kashiwara_step(const PbwElement& m, Dir d, Color i, const Level& lam) {
  if (i != 1 && i != 2) throw Error(Errc::InvalidInput, "B2 colors are 1 and 2");
  const ElemStats s = elem_stats(m, lam);
  const std::size_t k = static_cast<std::size_t>(i - 1);
  int shift = 0;
  if (d == Dir::E) {
    if (s.eps[k] <= 0) return std::nullopt;
    shift = -1;
  } else {
    if (lam && s.phi[k] <= 0) return std::nullopt;
    shift = 1;
  }
  if (i == 1) {
    Quad a = m.a.c;
    a[0] += shift;
    return PbwElement::from_a(a);
  }
  DualDatum x = m.x;
  x.c[0] += shift;
  return PbwElement{r_inverse(x), x};
}

std::string to_string(MembershipRule rule) {
  return rule == MembershipRule::EpsilonStar ? "epsilon-star (x4, a4)" : "third-coordinate (x3, a3)";
}

bool is_member(const PbwElement& m, const HighestWeightB2& lam, MembershipRule rule) {
  if (rule == MembershipRule::EpsilonStar) return m.x[3] <= lam.l1 && m.a[3] <= lam.l2;
  return m.x[2] <= lam.l1 && m.a[2] <= lam.l2;
}

std::optional<VertexId> PbwCrystal::find(const PbwElement& m) const {
  auto it = index.find(m);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

PbwCrystal generate(const HighestWeightB2& lam, const GenerateOptions& options) {
  if (lam.l1 < 0 || lam.l2 < 0) throw Error(Errc::InvalidInput, "highest weight must be dominant");
  PbwCrystal out;
  out.lambda = lam;
  auto intern = [&](const PbwElement& m) {
    auto [it, fresh] = out.index.try_emplace(m, static_cast<VertexId>(out.elements.size()));
    if (fresh) {
      if (out.elements.size() >= options.budget)
        throw Error(Errc::BudgetExceeded, "B(lambda) exceeds the vertex budget of " + std::to_string(options.budget));
      if (!is_member(m, lam, options.rule))
        throw Error(Errc::MembershipMismatch,
                    to_string(m) + " is phi-reachable but fails the " + to_string(options.rule) + " cutoff");
      out.elements.push_back(m);
      out.graph.add_vertex();
    }
    return std::pair{it->second, fresh};
  };

  intern(PbwElement::zero());
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    const auto u = static_cast<VertexId>(head);
    for (Color i : {1, 2}) {
      auto next = kashiwara_step(out.elements[head], Dir::F, i, lam);
      if (!next) continue;
      const VertexId v = intern(*next).first;
      out.graph.add_edge(u, v, i);
    }
  }
  return out;
}

std::size_t enumerate_by_membership(const HighestWeightB2& lam, MembershipRule rule, std::size_t budget) {
  std::map<PbwElement, bool> seen;
  std::deque<PbwElement> queue{PbwElement::zero()};
  seen.emplace(PbwElement::zero(), true);
  while (!queue.empty()) {
    const PbwElement m = queue.front();
    queue.pop_front();
    for (Color i : {1, 2}) {
      auto next = kashiwara_step(m, Dir::F, i, kInfinity);
      if (!is_member(*next, lam, rule) || seen.count(*next)) continue;
      if (seen.size() >= budget)
        throw Error(Errc::BudgetExceeded, "membership enumeration exceeds " + std::to_string(budget) + " elements");
      seen.emplace(*next, true);
      queue.push_back(*next);
    }
  }
  return seen.size();
}

int corollary_delta_2_1(const PbwElement& m) {
  const auto& a = m.a;
  if (!(a[2] >= a[0] && a[0] >= 1 && m.x[0] >= 1))
    throw Error(Errc::HypothesisNotMet, "needs a3 >= a1 >= 1 and x1 >= 1 at " + to_string(m));
  return std::max(0, 2 + a[0] - a[2] + 2 * a[1] - 2 * std::max(a[1], a[3]));
}

int corollary_delta_1_2(const PbwElement& m) {
  const auto& x = m.x;
  if (!(x[2] >= x[0] && x[0] >= 1 && m.a[0] >= 1))
    throw Error(Errc::HypothesisNotMet, "needs x3 >= x1 >= 1 and a1 >= 1 at " + to_string(m));
  return std::max(0, 1 + x[0] - x[2] + x[1] - std::max(x[1], x[3]));
}

std::optional<int> navigated_delta_e_eps(const PbwElement& m, Color i, Color j) {
  auto up = kashiwara_step(m, Dir::E, i, kInfinity);
  if (!up) return std::nullopt;
  const std::size_t k = static_cast<std::size_t>(j - 1);
  return elem_stats(*up, kInfinity).eps[k] - elem_stats(m, kInfinity).eps[k];
}

}  // namespace crystal::pbw
