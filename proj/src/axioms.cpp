#include "crystal/axioms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace crystal {

namespace {

using Word = std::vector<std::size_t>;

Dir opposite(Dir d) { return d == Dir::E ? Dir::F : Dir::E; }
Stat stat_for(Dir d) { return d == Dir::E ? Stat::Eps : Stat::Phi; }

class Checker {
 public:
  Checker(const CrystalView& v, std::vector<Violation>& out) : v_(v), colors_(v.graph().index_set()), out_(out) {}

  const CrystalView& view() const { return v_; }

  void report(AxiomId id, std::size_t i, std::size_t j, VertexId x, std::string detail) {
    out_.push_back(Violation{id, std::pair{colors_.label(i), colors_.label(j)}, x, std::move(detail), {}});
  }

  // "e_1 e_2^2 e_1" with repeated letters collapsed.
  std::string word(Dir d, const Word& w) const {
    std::ostringstream os;
    const char* op = d == Dir::E ? "e_" : "f_";
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) ++run;
      if (k > 0) os << ' ';
      os << op << colors_.label(w[k]);
      if (run > 1) os << '^' << run;
      k += run;
    }
    return os.str();
  }

  // Common endpoint of every word applied to x. On failure returns kNoVertex
  // and explains why in `why`.
  VertexId meet(Dir d, VertexId x, const std::vector<Word>& words, std::string& why) const {
    VertexId common = kNoVertex;
    for (std::size_t k = 0; k < words.size(); ++k) {
      const VertexId y = v_.follow(d, x, words[k]);
      if (y == kNoVertex) {
        why = word(d, words[k]) + " x is undefined";
        return kNoVertex;
      }
      if (k == 0) {
        common = y;
      } else if (y != common) {
        why = word(d, words[0]) + " x = " + std::to_string(common) + " but " + word(d, words[k]) +
              " x = " + std::to_string(y);
        return kNoVertex;
      }
    }
    return common;
  }

  // (delta(d,s,i,j,x), delta(d,s,j,i,x)); only meaningful when g_i x, g_j x exist.
  std::pair<int, int> pair_delta(Dir d, std::size_t i, std::size_t j, VertexId x) const {
    const Stat s = stat_for(d);
    return {*v_.delta(d, s, i, j, x), *v_.delta(d, s, j, i, x)};
  }

  bool both_defined(Dir d, std::size_t i, std::size_t j, VertexId x) const {
    return v_.step(d, i, x) != kNoVertex && v_.step(d, j, x) != kNoVertex;
  }

 private:
  const CrystalView& v_;
  const IndexSet& colors_;
  std::vector<Violation>& out_;
};

std::string pair_str(std::pair<int, int> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

void require_good(const ColoredGraph& g, const Gcm& a) {
  if (g.index_set() != a.index_set())
    throw Error(Errc::InvalidInput, "cartan matrix index set differs from the graph's colors");
  if (!is_good(g).empty()) throw Error(Errc::PrereqFailed, "graph is not good");
}

void run_s2_s3(Checker& c, const Gcm& a, bool include_diagonal) {
  const CrystalView& v = c.view();
  for (std::size_t xi = 0; xi < v.vertex_count(); ++xi) {
    const auto x = static_cast<VertexId>(xi);
    for (std::size_t i = 0; i < v.rank(); ++i) {
      const VertexId y = v.e(i, x);
      if (y == kNoVertex) continue;
      for (std::size_t j = 0; j < v.rank(); ++j) {
        if (j == i && !include_diagonal) continue;
        const int d_eps = v.eps(j, y) - v.eps(j, x);
        const int d_phi = v.phi(j, y) - v.phi(j, x);
        if (d_phi - d_eps != a.at(j, i))
          c.report(AxiomId::S2, i, j, x,
                   "Delta^e_phi - Delta^e_eps = " + std::to_string(d_phi - d_eps) + ", expected " +
                       std::to_string(a.at(j, i)));
        if (j != i && !(d_phi <= 0 && d_eps >= 0))
          c.report(AxiomId::S3, i, j, x,
                   "Delta^e_eps = " + std::to_string(d_eps) + ", Delta^e_phi = " + std::to_string(d_phi));
      }
    }
  }
}

// (S4) for d = E, (S5) for d = F.
void run_s4_s5_at(Checker& c, Dir d, std::size_t i, std::size_t j, VertexId x) {
  const CrystalView& v = c.view();
  const Stat s = stat_for(d);
  const Dir od = opposite(d);
  const Stat os = stat_for(od);
  const AxiomId a_id = d == Dir::E ? AxiomId::A_MINUS : AxiomId::A_PLUS;
  const AxiomId b_id = d == Dir::E ? AxiomId::B_MINUS : AxiomId::B_PLUS;
  const auto dl = c.pair_delta(d, i, j, x);
  std::string why;

  for (auto [k, l] : {std::pair{i, j}, std::pair{j, i}}) {
    if (*v.delta(d, s, k, l, x) != 0) continue;
    const VertexId z = c.meet(d, x, {{l, k}, {k, l}}, why);
    if (z == kNoVertex) {
      c.report(a_id, k, l, x, why);
      continue;
    }
    const auto back = v.delta(od, os, l, k, z);
    if (back != 0)
      c.report(a_id, k, l, x,
               "at z = " + std::to_string(z) + " the dual difference is " +
                   (back ? std::to_string(*back) : std::string("undefined")) + ", expected 0");
  }

  if (dl == std::pair{1, 1}) {
    const VertexId z = c.meet(d, x, {{i, j, j, i}, {j, i, i, j}}, why);
    if (z == kNoVertex) {
      c.report(b_id, i, j, x, why);
      return;
    }
    const auto bi = v.delta(od, os, i, j, z);
    const auto bj = v.delta(od, os, j, i, z);
    if (bi != 1 || bj != 1)
      c.report(b_id, i, j, x, "at z = " + std::to_string(z) + " the dual differences are not (1,1)");
  }
}

void run_s4_s5(Checker& c) {
  const CrystalView& v = c.view();
  for (std::size_t xi = 0; xi < v.vertex_count(); ++xi) {
    const auto x = static_cast<VertexId>(xi);
    for (std::size_t i = 0; i < v.rank(); ++i)
      for (std::size_t j = i + 1; j < v.rank(); ++j)
        for (Dir d : {Dir::E, Dir::F})
          if (c.both_defined(d, i, j, x)) run_s4_s5_at(c, d, i, j, x);
  }
}

// Delta'' = (Delta^f_phi(i,j,y), Delta^f_phi(i,j,y')) with y = e_i^2 e_j x and
// y' = e_i^2 e_j^2 e_i x. Nullopt (and a D- report) if y or y' is missing.
struct DMinusData {
  VertexId y = kNoVertex;
  VertexId y2 = kNoVertex;
  std::pair<int, int> dd;
};

std::optional<DMinusData> d_minus_data(Checker& c, std::size_t i, std::size_t j, VertexId x, bool report) {
  const CrystalView& v = c.view();
  DMinusData out;
  out.y = v.follow(Dir::E, x, {i, i, j});
  out.y2 = v.follow(Dir::E, x, {i, i, j, j, i});
  if (out.y == kNoVertex || out.y2 == kNoVertex) {
    if (report)
      c.report(AxiomId::D_MINUS, i, j, x,
               c.word(Dir::E, out.y == kNoVertex ? Word{i, i, j} : Word{i, i, j, j, i}) + " x is undefined");
    return std::nullopt;
  }
  out.dd = {*v.delta(Dir::F, Stat::Phi, i, j, out.y), *v.delta(Dir::F, Stat::Phi, i, j, out.y2)};
  return out;
}

void run_s6(Checker& c, std::size_t i, std::size_t j, VertexId x) {
  const CrystalView& v = c.view();
  const auto data = d_minus_data(c, i, j, x, true);
  if (!data) return;
  const auto [y, y2, dd] = *data;
  std::string why;
  if (dd == std::pair{1, 1}) {
    const VertexId fy2 = v.f(j, y2);
    const VertexId ey = v.e(i, y);
    if (fy2 == kNoVertex || fy2 != ey)
      c.report(AxiomId::P1_MINUS, i, j, x, "f_j y' differs from e_i y");
    else if (v.delta(Dir::F, Stat::Phi, j, i, y2) != 1)
      c.report(AxiomId::P1_MINUS, i, j, x, "Delta^f_phi(j,i,y') is not 1");
  } else if (dd == std::pair{0, 1}) {
    const VertexId z = c.meet(Dir::E, x, {{j, i, i, i, j, j, i}, {i, j, j, i, i, i, j}}, why);
    if (z == kNoVertex) {
      c.report(AxiomId::Q1_MINUS, i, j, x, why);
    } else if (!c.both_defined(Dir::F, i, j, z) || c.pair_delta(Dir::F, i, j, z) != std::pair{1, 2}) {
      c.report(AxiomId::Q1_MINUS, i, j, x, "Delta'(z) is not (1,2) at z = " + std::to_string(z));
    }
  } else if (dd == std::pair{0, 0}) {
    const VertexId fy2 = v.f(j, y2);
    const VertexId ey = v.e(i, y);
    const VertexId low = v.follow(Dir::F, y2, {i, i});
    if (fy2 == kNoVertex || fy2 != ey)
      c.report(AxiomId::R_MINUS, i, j, x, "f_j y' differs from e_i y");
    else if (v.delta(Dir::F, Stat::Phi, j, i, y2) != 2)
      c.report(AxiomId::R_MINUS, i, j, x, "Delta^f_phi(j,i,y') is not 2");
    else if (low == kNoVertex || v.delta(Dir::F, Stat::Phi, j, i, low) != 0)
      c.report(AxiomId::R_MINUS, i, j, x, "Delta^f_phi(j,i,f_i^2 y') is not 0");
  } else {
    c.report(AxiomId::D_MINUS, i, j, x, "Delta'' = " + pair_str(dd));
  }
}

void run_s7(Checker& c, std::size_t i, std::size_t j, VertexId x) {
  const CrystalView& v = c.view();
  const VertexId y = v.follow(Dir::F, x, {i, i, j});
  const VertexId y2 = v.follow(Dir::F, x, {i, i, j, j, i});
  if (y == kNoVertex || y2 == kNoVertex) {
    c.report(AxiomId::D_PLUS, i, j, x,
             c.word(Dir::F, y == kNoVertex ? Word{i, i, j} : Word{i, i, j, j, i}) + " x is undefined");
    return;
  }
  const std::pair<int, int> dd{*v.delta(Dir::E, Stat::Eps, i, j, y), *v.delta(Dir::E, Stat::Eps, i, j, y2)};
  if (dd != std::pair{0, 1}) return;
  std::string why;
  if (c.meet(Dir::F, x, {{j, i, i, i, j, j, i}, {i, j, j, i, i, i, j}}, why) == kNoVertex)
    c.report(AxiomId::D_PLUS, i, j, x, why);
}

void run_c1_plus(Checker& c, AxiomId parent, std::size_t i, std::size_t j, VertexId x) {
  std::string why;
  if (c.meet(Dir::F, x, {{i, j, j, i, i}, {j, i, i, i, j}}, why) == kNoVertex)
    c.report(AxiomId::C1_PLUS, i, j, x, std::string(to_string(parent)) + ": " + why);
}

void run_s6_s9(Checker& c, const Gcm& a) {
  const CrystalView& v = c.view();
  for (auto [i, j] : b2_pairs(a)) {
    for (std::size_t xi = 0; xi < v.vertex_count(); ++xi) {
      const auto x = static_cast<VertexId>(xi);
      if (c.both_defined(Dir::E, i, j, x) && c.pair_delta(Dir::E, i, j, x) == std::pair{1, 2}) run_s6(c, i, j, x);
      if (!c.both_defined(Dir::F, i, j, x)) continue;
      const auto dp = c.pair_delta(Dir::F, i, j, x);
      if (dp == std::pair{1, 2}) run_s7(c, i, j, x);
      if (dp == std::pair{1, 1} && v.phi(i, x) >= 2) run_c1_plus(c, AxiomId::S8, i, j, x);
      if (dp == std::pair{0, 2}) {
        const VertexId w = v.follow(Dir::F, x, {i, i});
        if (w != kNoVertex && v.f(j, w) != kNoVertex && v.delta(Dir::F, Stat::Phi, j, i, w) == 0)
          run_c1_plus(c, AxiomId::S9, i, j, x);
      }
    }
  }
}

void run_variants(Checker& c, const Gcm& a) {
  const CrystalView& v = c.view();
  std::string why;
  for (auto [i, j] : b2_pairs(a)) {
    for (std::size_t xi = 0; xi < v.vertex_count(); ++xi) {
      const auto x = static_cast<VertexId>(xi);
      if (!c.both_defined(Dir::E, i, j, x)) continue;
      const auto dl = c.pair_delta(Dir::E, i, j, x);
      if (dl == std::pair{1, 1} && v.eps(i, x) >= 2 &&
          c.meet(Dir::E, x, {{i, j, j, i, i}, {j, i, i, i, j}}, why) == kNoVertex)
        c.report(AxiomId::S8_PRIME, i, j, x, why);
      if (dl != std::pair{1, 2}) continue;
      const auto data = d_minus_data(c, i, j, x, false);
      if (!data) continue;
      if (data->dd == std::pair{1, 1}) {
        if (c.meet(Dir::E, x, {{i, i, j, j, i}, {i, j, i, j, i}, {j, i, i, i, j}}, why) == kNoVertex)
          c.report(AxiomId::P_MINUS, i, j, x, why);
      } else if (data->dd == std::pair{0, 1}) {
        const VertexId z = c.meet(
            Dir::E, x, {{j, i, i, j, i, j, i}, {j, i, i, i, j, j, i}, {i, j, j, i, i, i, j}, {i, j, i, j, i, i, j}},
            why);
        if (z == kNoVertex) {
          c.report(AxiomId::Q_MINUS, i, j, x, why);
          continue;
        }
        const VertexId u = v.follow(Dir::F, z, {i, i, j});
        const VertexId u2 = v.follow(Dir::F, z, {i, i, j, j, i});
        if (u == kNoVertex || u2 == kNoVertex ||
            std::pair{*v.delta(Dir::E, Stat::Eps, i, j, u), *v.delta(Dir::E, Stat::Eps, i, j, u2)} !=
                std::pair{0, 1})
          c.report(AxiomId::Q1_MINUS, i, j, x, "follow-up below z = " + std::to_string(z) + " is not (0,1)");
      }
    }
  }
}

}  // namespace

std::string_view to_string(AxiomId id) {
  switch (id) {
    case AxiomId::S1: return "S1";
    case AxiomId::S2: return "S2";
    case AxiomId::S3: return "S3";
    case AxiomId::S4: return "S4";
    case AxiomId::S5: return "S5";
    case AxiomId::S6: return "S6";
    case AxiomId::S7: return "S7";
    case AxiomId::S8: return "S8";
    case AxiomId::S9: return "S9";
    case AxiomId::A_MINUS: return "A-";
    case AxiomId::A_PLUS: return "A+";
    case AxiomId::B_MINUS: return "B-";
    case AxiomId::B_PLUS: return "B+";
    case AxiomId::D_MINUS: return "D-";
    case AxiomId::D_PLUS: return "D+";
    case AxiomId::C1_PLUS: return "C1+";
    case AxiomId::P1_MINUS: return "P1-";
    case AxiomId::Q1_MINUS: return "Q1-";
    case AxiomId::R_MINUS: return "R-";
    case AxiomId::S8_PRIME: return "S8'";
    case AxiomId::P_MINUS: return "P-";
    case AxiomId::Q_MINUS: return "Q-";
    case AxiomId::CONFLUENCE: return "CONFLUENCE";
    case AxiomId::MAXIMUM: return "MAXIMUM";
    case AxiomId::HIGHEST_WEIGHT: return "HIGHEST_WEIGHT";
  }
  return "?";
}

void sort_violations(std::vector<Violation>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Violation& l, const Violation& r) {
    return std::tie(l.witness, l.axiom, l.pair) < std::tie(r.witness, r.axiom, r.pair);
  });
}

std::vector<std::pair<std::size_t, std::size_t>> b2_pairs(const Gcm& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j) {
      const RankTwoType t = classify_positions(a, i, j);
      if (t == RankTwoType::B2) out.emplace_back(i, j);
      if (t == RankTwoType::B2Transpose) out.emplace_back(j, i);
    }
  return out;
}

std::vector<Violation> check_s2_s3(const ColoredGraph& g, const Gcm& a, bool include_diagonal) {
  require_good(g, a);
  const CrystalView v(g);
  std::vector<Violation> out;
  Checker c(v, out);
  run_s2_s3(c, a, include_diagonal);
  sort_violations(out);
  return out;
}

std::vector<Violation> check_s4_s5(const ColoredGraph& g, const Gcm& a) {
  require_good(g, a);
  const CrystalView v(g);
  std::vector<Violation> out;
  Checker c(v, out);
  run_s4_s5(c);
  sort_violations(out);
  return out;
}

std::vector<Violation> check_s6_s9(const ColoredGraph& g, const Gcm& a) {
  require_good(g, a);
  const CrystalView v(g);
  std::vector<Violation> out;
  Checker c(v, out);
  run_s6_s9(c, a);
  sort_violations(out);
  return out;
}

std::vector<Violation> check_variants(const ColoredGraph& g, const Gcm& a) {
  require_good(g, a);
  const CrystalView v(g);
  std::vector<Violation> out;
  Checker c(v, out);
  run_variants(c, a);
  sort_violations(out);
  return out;
}

std::vector<Violation> check_confluence(const ColoredGraph& g, int s_max) {
  if (!is_good(g).empty()) throw Error(Errc::PrereqFailed, "graph is not good");
  const CrystalView v(g);
  const std::size_t r = g.rank();
  using State = std::pair<VertexId, std::vector<int>>;
  auto expand = [&](const std::set<State>& level) {
    std::set<State> next;
    for (const auto& [y, count] : level)
      for (std::size_t c = 0; c < r; ++c) {
        const VertexId up = v.e(c, y);
        if (up == kNoVertex) continue;
        auto bumped = count;
        ++bumped[c];
        next.emplace(up, std::move(bumped));
      }
    return next;
  };

  std::vector<Violation> out;
  for (std::size_t xi = 0; xi < g.vertex_count(); ++xi) {
    const auto x = static_cast<VertexId>(xi);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        if (v.e(i, x) == kNoVertex || v.e(j, x) == kNoVertex) continue;
        std::vector<int> ci(r, 0), cj(r, 0);
        ++ci[i];
        ++cj[j];
        std::set<State> from_i{{v.e(i, x), ci}};
        std::set<State> from_j{{v.e(j, x), cj}};
        bool found = false;
        for (int s = 2; s <= s_max && !found; ++s) {
          from_i = expand(from_i);
          from_j = expand(from_j);
          for (const State& st : from_i)
            if (from_j.count(st)) {
              found = true;
              break;
            }
        }
        if (!found)
          out.push_back(Violation{AxiomId::CONFLUENCE, std::pair{g.index_set().label(i), g.index_set().label(j)}, x,
                                  "no confluent pair of paths of length <= " + std::to_string(s_max),
                                  {}});
      }
  }
  sort_violations(out);
  return out;
}

std::map<std::pair<Color, Color>, DeltaHistogram> delta_histogram(const ColoredGraph& g, const Gcm& a) {
  require_good(g, a);
  const CrystalView v(g);
  std::vector<Violation> unused;
  Checker c(v, unused);
  std::map<std::pair<Color, Color>, DeltaHistogram> out;
  for (auto [i, j] : b2_pairs(a)) {
    auto& h = out[{g.index_set().label(i), g.index_set().label(j)}];
    for (std::size_t xi = 0; xi < g.vertex_count(); ++xi) {
      const auto x = static_cast<VertexId>(xi);
      if (c.both_defined(Dir::E, i, j, x)) ++h[c.pair_delta(Dir::E, i, j, x)];
    }
  }
  return out;
}

CheckReport check_all(const ColoredGraph& g, const Gcm& a, const std::optional<PairingVector>& expected_phi0) {
  if (g.index_set() != a.index_set())
    throw Error(Errc::InvalidInput, "cartan matrix index set differs from the graph's colors");
  CheckReport report;
  auto& out = report.violations;

  for (const StructuralViolation& sv : is_good(g))
    out.push_back(Violation{AxiomId::S1, std::nullopt, sv.witness, sv.detail, {}});
  if (!out.empty()) {
    sort_violations(out);
    return report;
  }

  const auto maxima = maximum_elements(g);
  if (maxima.size() != 1) {
    out.push_back(Violation{AxiomId::MAXIMUM, std::nullopt, maxima.empty() ? kNoVertex : maxima.front(),
                            std::to_string(maxima.size()) + " maximum elements", {}});
    return report;
  }
  report.maximum = maxima.front();

  try {
    wt_assign(g, maxima.front());
  } catch (const InconsistentWeight& w) {
    out.push_back(Violation{AxiomId::CONFLUENCE, std::nullopt, w.witness(), w.what(), w.first_path()});
  }

  const CrystalView v(g);
  Checker c(v, out);
  run_s2_s3(c, a, false);
  run_s4_s5(c);
  run_s6_s9(c, a);

  PairingVector phi0(g.rank());
  for (std::size_t p = 0; p < g.rank(); ++p) phi0[p] = v.phi(p, maxima.front());
  report.phi_at_maximum = phi0;
  if (expected_phi0 && *expected_phi0 != phi0) {
    std::ostringstream os;
    os << "phi at the maximum is (";
    for (std::size_t p = 0; p < phi0.size(); ++p) os << (p ? "," : "") << phi0[p];
    os << ')';
    out.push_back(Violation{AxiomId::HIGHEST_WEIGHT, std::nullopt, maxima.front(), os.str(), {}});
  }

  sort_violations(out);
  report.pass = out.empty();
  return report;
}

}  // namespace crystal
