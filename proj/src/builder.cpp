#include "crystal/builder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "crystal/axioms.hpp"

namespace crystal {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // The smaller root wins so classes keep their first candidate as root.
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
  }

 private:
  std::vector<std::size_t> parent_;
};

using Word = std::vector<std::size_t>;

[[noreturn]] void inconsistent(const std::string& what) { throw Error(Errc::SynthesisInconsistency, what); }

class Synthesizer {
 public:
  Synthesizer(const Gcm& a, const PairingVector& phi0, const SynthesisOptions& options)
      : a_(a), phi0_(phi0), options_(options), g_(a), r_(a.rank()), eps_(r_), phi_(r_) {}

  ColoredGraph run() {
    new_vertex(RootCount(r_));
    for (std::size_t c = 0; c < r_; ++c) eps_[c].back() = 0;
    set_phi(0);
    layers_.push_back({0});

    while (true) {
      std::vector<std::pair<VertexId, std::size_t>> cands;
      for (VertexId w : layers_.back())
        for (std::size_t c = 0; c < r_; ++c)
          if (phi_[c][w] > 0) cands.emplace_back(w, c);
      if (cands.empty()) break;
      if (cands.size() > options_.layer_budget)
        throw Error(Errc::BudgetExceeded,
                    "layer " + std::to_string(layers_.size()) + " exceeds the candidate budget of " +
                        std::to_string(options_.layer_budget));
      index_.clear();
      for (std::size_t k = 0; k < cands.size(); ++k) index_[cands[k]] = k;
      uf_.emplace(cands.size());
      glue_layer();
      materialize(cands);
    }
    finish();
    return std::move(g_);
  }

 private:
  VertexId new_vertex(RootCount wt) {
    if (g_.vertex_count() >= options_.budget)
      throw Error(Errc::BudgetExceeded, "synthesis exceeds the vertex budget of " + std::to_string(options_.budget));
    const VertexId v = g_.add_vertex();
    wt_.push_back(std::move(wt));
    for (std::size_t c = 0; c < r_; ++c) {
      eps_[c].push_back(0);
      phi_[c].push_back(0);
    }
    return v;
  }

  void set_phi(VertexId v) {
    const PairingVector pair = pairing_of_root_count(a_, wt_[v]);
    for (std::size_t c = 0; c < r_; ++c) {
      phi_[c][v] = eps_[c][v] + phi0_[c] - pair[c];
      if (phi_[c][v] < 0)
        inconsistent("vertex " + std::to_string(v) + " gets phi_" + std::to_string(g_.index_set().label(c)) +
                     " = " + std::to_string(phi_[c][v]));
    }
  }

  VertexId follow(VertexId x, const Word& w) const {
    for (auto it = w.rbegin(); it != w.rend() && x != kNoVertex; ++it) x = g_.f(*it, x);
    return x;
  }

  std::optional<int> dphi(std::size_t i, std::size_t j, VertexId x) const {
    const VertexId y = g_.f(i, x);
    if (y == kNoVertex) return std::nullopt;
    return phi_[j][y] - phi_[j][x];
  }

  std::optional<int> deps(std::size_t i, std::size_t j, VertexId x) const {
    const VertexId y = g_.e(i, x);
    if (y == kNoVertex) return std::nullopt;
    return eps_[j][y] - eps_[j][x];
  }

  bool both(std::size_t i, std::size_t j, VertexId x) const { return phi_[i][x] > 0 && phi_[j][x] > 0; }

  // Glues the final steps of two f-words from w. All but the first letter of
  // each word must already be built.
  void glue(VertexId w, const Word& u, const Word& v, const char* rule) {
    auto candidate = [&](const Word& word) {
      const VertexId pen = follow(w, Word(word.begin() + 1, word.end()));
      if (pen == kNoVertex)
        inconsistent(std::string(rule) + " at vertex " + std::to_string(w) + ": a required path is missing");
      auto it = index_.find({pen, word.front()});
      if (it == index_.end())
        inconsistent(std::string(rule) + " at vertex " + std::to_string(w) + ": vertex " + std::to_string(pen) +
                     " has no " + std::to_string(g_.index_set().label(word.front())) + "-arrow to add");
      return it->second;
    };
    uf_->unite(candidate(u), candidate(v));
  }

  const std::vector<VertexId>* layer_back(std::size_t lag) const {
    return layers_.size() >= lag ? &layers_[layers_.size() - lag] : nullptr;
  }

  void glue_layer() {
    const auto b2 = b2_pairs(a_);
    // The new layer is layers_.size(); layer k-L is layer_back(L).
    if (const auto* l2 = layer_back(2))
      for (VertexId w : *l2)
        for (std::size_t i = 0; i < r_; ++i)
          for (std::size_t j = 0; j < r_; ++j)
            if (i != j && both(i, j, w) && dphi(i, j, w) == 0) glue(w, {j, i}, {i, j}, "A+");
    if (const auto* l4 = layer_back(4))
      for (VertexId w : *l4)
        for (std::size_t i = 0; i < r_; ++i)
          for (std::size_t j = i + 1; j < r_; ++j)
            if (both(i, j, w) && dphi(i, j, w) == 1 && dphi(j, i, w) == 1) glue(w, {i, j, j, i}, {j, i, i, j}, "B+");
    if (const auto* l5 = layer_back(5))
      for (VertexId w : *l5)
        for (auto [i, j] : b2) {
          if (!both(i, j, w)) continue;
          const int di = *dphi(i, j, w);
          const int dj = *dphi(j, i, w);
          bool fire = di == 1 && dj == 1 && phi_[i][w] >= 2;
          if (di == 0 && dj == 2) {
            const VertexId u = follow(w, {i, i});
            fire = u != kNoVertex && g_.f(j, u) != kNoVertex && dphi(j, i, u) == 0;
          }
          if (fire) glue(w, {i, j, j, i, i}, {j, i, i, i, j}, "C1+");
        }
    if (const auto* l7 = layer_back(7))
      for (VertexId w : *l7)
        for (auto [i, j] : b2) {
          if (!both(i, j, w) || dphi(i, j, w) != 1 || dphi(j, i, w) != 2) continue;
          const VertexId y = follow(w, {i, i, j});
          const VertexId y2 = follow(w, {i, i, j, j, i});
          if (y == kNoVertex || y2 == kNoVertex)
            inconsistent("D+ at vertex " + std::to_string(w) + ": a required path is missing");
          if (deps(i, j, y) == 0 && deps(i, j, y2) == 1) glue(w, {j, i, i, i, j, j, i}, {i, j, j, i, i, i, j}, "D+");
        }
  }

  void materialize(const std::vector<std::pair<VertexId, std::size_t>>& cands) {
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < cands.size(); ++k) classes[uf_->find(k)].push_back(k);
    std::vector<VertexId> layer;
    for (const auto& [root, members] : classes) {
      const auto [w0, c0] = cands[members.front()];
      const RootCount wt = wt_[w0].plus(c0);
      const VertexId v = new_vertex(wt);
      for (std::size_t m : members) {
        const auto [w, c] = cands[m];
        if (wt_[w].plus(c) != wt) inconsistent("glued candidates of vertex " + std::to_string(v) + " differ in weight");
        if (g_.e(c, v) != kNoVertex)
          inconsistent("vertex " + std::to_string(v) + " would get two incoming " +
                       std::to_string(g_.index_set().label(c)) + "-arrows");
        g_.add_edge_at(w, v, c);
        eps_[c][v] = eps_[c][w] + 1;
      }
      set_phi(v);
      layer.push_back(v);
    }
    layers_.push_back(std::move(layer));
  }

  void finish() {
    const CrystalView view(g_);
    for (std::size_t v = 0; v < g_.vertex_count(); ++v)
      for (std::size_t c = 0; c < r_; ++c)
        if (view.phi(c, static_cast<VertexId>(v)) != phi_[c][v])
          inconsistent("string length phi differs from the weight prediction at vertex " + std::to_string(v));
    const CheckReport report = check_all(g_, a_, phi0_);
    if (!report.pass) {
      const Violation& first = report.violations.front();
      inconsistent("result fails " + std::string(to_string(first.axiom)) + " at vertex " +
                   std::to_string(first.witness) + ": " + first.detail);
    }
  }

  const Gcm& a_;
  const PairingVector& phi0_;
  SynthesisOptions options_;
  ColoredGraph g_;
  std::size_t r_;
  std::vector<RootCount> wt_;
  std::vector<std::vector<int>> eps_;
  std::vector<std::vector<int>> phi_;
  std::vector<std::vector<VertexId>> layers_;
  std::map<std::pair<VertexId, std::size_t>, std::size_t> index_;
  std::optional<UnionFind> uf_;
};

std::string vec_str(const PairingVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

}  // namespace

ColoredGraph synthesize(const Gcm& a, const PairingVector& phi0, const SynthesisOptions& options) {
  if (phi0.size() != a.rank()) throw Error(Errc::InvalidInput, "highest weight has the wrong number of entries");
  if (std::any_of(phi0.begin(), phi0.end(), [](int p) { return p < 0; }))
    throw Error(Errc::InvalidInput, "highest weight must be dominant");
  if (!a.all_pairs_supported())
    throw Error(Errc::UnsupportedPair, "synthesis needs every rank-2 restriction to be A1xA1, A2 or B2");
  return Synthesizer(a, phi0, options).run();
}

IsoMap build_isomorphism(const ColoredGraph& x, const ColoredGraph& y) {
  if (!x.cartan() || !y.cartan()) throw Error(Errc::PrereqFailed, "both graphs need cartan data");
  if (!(*x.cartan() == *y.cartan())) throw Error(Errc::PrereqFailed, "cartan data differ");
  const Gcm& a = *x.cartan();
  const CheckReport rx = check_all(x, a);
  if (!rx.pass) throw Error(Errc::PrereqFailed, "first graph fails check_all");
  const CheckReport ry = check_all(y, a);
  if (!ry.pass) throw Error(Errc::PrereqFailed, "second graph fails check_all");
  if (*rx.phi_at_maximum != *ry.phi_at_maximum)
    throw Error(Errc::PrereqFailed,
                "highest weights differ: " + vec_str(*rx.phi_at_maximum) + " vs " + vec_str(*ry.phi_at_maximum));

  auto fail = [](const std::string& what) -> void { throw Error(Errc::NotIsomorphic, what); };
  const std::size_t n = x.vertex_count();
  if (y.vertex_count() != n)
    fail("vertex counts differ: " + std::to_string(n) + " vs " + std::to_string(y.vertex_count()));

  const WeightAssignment wx = wt_assign(x, *rx.maximum);
  const WeightAssignment wy = wt_assign(y, *ry.maximum);
  const int depth = *std::max_element(wx.dist.begin(), wx.dist.end());
  std::vector<std::vector<VertexId>> layers(static_cast<std::size_t>(depth) + 1);
  for (std::size_t v = 0; v < n; ++v) layers[wx.dist[v]].push_back(static_cast<VertexId>(v));
  std::vector<std::size_t> y_sizes(layers.size(), 0);
  for (int d : wy.dist) {
    if (d > depth) fail("second graph is deeper than the first");
    ++y_sizes[d];
  }

  const CrystalView vx(x);
  const CrystalView vy(y);
  IsoMap out{std::vector<VertexId>(n, kNoVertex)};
  std::vector<char> used(n, 0);
  out.forward[*rx.maximum] = *ry.maximum;
  used[*ry.maximum] = 1;
  for (std::size_t d = 0; d < layers.size(); ++d) {
    if (layers[d].size() != y_sizes[d]) fail("layer " + std::to_string(d) + " sizes differ");
    for (VertexId v : layers[d]) {
      if (d > 0) {
        VertexId image = kNoVertex;
        for (std::size_t c = 0; c < x.rank(); ++c) {
          const VertexId p = x.e(c, v);
          if (p == kNoVertex) continue;
          const VertexId q = y.f(c, out.forward[p]);
          if (q == kNoVertex) fail("image of vertex " + std::to_string(p) + " has no matching arrow");
          if (image != kNoVertex && image != q) fail("parents of vertex " + std::to_string(v) + " disagree");
          image = q;
        }
        if (used[image]) fail("map is not injective at vertex " + std::to_string(v));
        used[image] = 1;
        out.forward[v] = image;
      }
      for (std::size_t c = 0; c < x.rank(); ++c)
        if (vx.eps(c, v) != vy.eps(c, out.forward[v]) || vx.phi(c, v) != vy.phi(c, out.forward[v]))
          fail("string statistics differ at vertex " + std::to_string(v));
    }
  }
  if (x.edge_count() != y.edge_count()) fail("edge counts differ");
  for (const Edge& e : x.edges())
    if (y.f(x.index_set().position(e.color), out.forward[e.from]) != out.forward[e.to])
      fail("arrow " + std::to_string(e.from) + " -> " + std::to_string(e.to) + " is not preserved");
  return out;
}

InvolutionReport verify_reversal_involution(const pbw::HighestWeightB2& lambda) {
  InvolutionReport report;
  const pbw::PbwCrystal crystal = pbw::generate(lambda);
  const ColoredGraph& g = crystal.graph;
  const ColoredGraph rev = reverse(g);
  const CheckReport rr = check_all(rev, Gcm::b2(), PairingVector{lambda.l1, lambda.l2});
  if (!rr.pass) {
    report.detail = "reversed graph fails " + std::string(to_string(rr.violations.front().axiom));
    return report;
  }
  try {
    report.map = build_isomorphism(g, rev).forward;
  } catch (const Error& e) {
    report.detail = e.what();
    return report;
  }
  const CrystalView view(g);
  for (std::size_t b = 0; b < report.map.size(); ++b) {
    const auto v = static_cast<VertexId>(b);
    const VertexId w = report.map[b];
    for (std::size_t c = 0; c < g.rank(); ++c)
      if (view.eps(c, v) != view.phi(c, w)) {
        report.detail = "eps(b) differs from phi(w(b)) at vertex " + std::to_string(b);
        return report;
      }
    if (report.map[w] != v) {
      report.detail = "w is not an involution at vertex " + std::to_string(b);
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace crystal
