#pragma once

// Independent reference computations used only by the tests.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "crystal/pbw.hpp"

namespace oracle {

/// A root system given by explicit Euclidean vectors (integer coordinates).
struct EuclideanSystem {
  std::vector<std::vector<int>> simple;
  std::vector<std::vector<int>> positive;
  /// Fundamental weights, doubled so that they stay integral.
  std::vector<std::vector<int>> fundamental_x2;
};

inline int dot(const std::vector<int>& u, const std::vector<int>& v) {
  int s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

/// Rank 2 with alpha1 = e2 short, alpha2 = e1 - e2 long.
inline EuclideanSystem type_b2() {
  return {{{0, 1}, {1, -1}}, {{1, -1}, {0, 1}, {1, 0}, {1, 1}}, {{1, 1}, {2, 0}}};
}

/// so(7): alpha1 = e1-e2, alpha2 = e2-e3, alpha3 = e3 short.
inline EuclideanSystem type_b3() {
  return {{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}},
          {{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}, {0, 1, -1}, {0, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
          {{2, 0, 0}, {2, 2, 0}, {1, 1, 1}}};
}

/// sp(6): alpha1 = e1-e2, alpha2 = e2-e3, alpha3 = 2e3 long.
inline EuclideanSystem type_c3() {
  return {{{1, -1, 0}, {0, 1, -1}, {0, 0, 2}},
          {{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}, {0, 1, -1}, {0, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
          {{2, 0, 0}, {2, 2, 0}, {2, 2, 2}}};
}

/// <h_i, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
inline std::vector<std::vector<int>> cartan_of(const EuclideanSystem& s) {
  std::vector<std::vector<int>> out(s.simple.size(), std::vector<int>(s.simple.size()));
  for (std::size_t i = 0; i < s.simple.size(); ++i)
    for (std::size_t j = 0; j < s.simple.size(); ++j)
      out[i][j] = 2 * dot(s.simple[i], s.simple[j]) / dot(s.simple[i], s.simple[i]);
  return out;
}

/// Weyl dimension: product of (lambda + rho, alpha) / (rho, alpha).
inline std::int64_t weyl_dimension(const EuclideanSystem& s, const std::vector<int>& lambda) {
  const std::size_t n = s.simple.front().size();
  std::vector<int> lam2(n, 0), rho2(n, 0);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      lam2[k] += lambda[i] * s.fundamental_x2[i][k];
      rho2[k] += s.fundamental_x2[i][k];
    }
  std::int64_t num = 1, den = 1;
  for (const auto& a : s.positive) {
    std::vector<int> shifted(n);
    for (std::size_t k = 0; k < n; ++k) shifted[k] = lam2[k] + rho2[k];
    num *= dot(shifted, a);
    den *= dot(rho2, a);
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

/// R^{-1}(x) found by searching the box [0, bound]^4 for a with R(a) = x.
inline std::optional<crystal::pbw::Quad> search_r_preimage(const crystal::pbw::Quad& x, int bound) {
  using namespace crystal::pbw;
  for (int a1 = 0; a1 <= bound; ++a1)
    for (int a2 = 0; a2 <= bound; ++a2)
      for (int a3 = 0; a3 <= bound; ++a3)
        for (int a4 = 0; a4 <= bound; ++a4)
          if (r_transfer(LusztigDatum{{a1, a2, a3, a4}}).c == x) return Quad{a1, a2, a3, a4};
  return std::nullopt;
}

}  // namespace oracle
