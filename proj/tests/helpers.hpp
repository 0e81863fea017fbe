#pragma once

#include <string>

#include "gsemi/repcat.hpp"

namespace gsemi::testing {

inline std::string fixture(const std::string& name) {
  return std::string(GSEMI_FIXTURES) + "/" + name;
}

inline BoundQuiverAlgebra load(const std::string& name, std::uint32_t p = 101) {
  BoundQuiverAlgebra alg = parse_algebra_file(fixture(name));
  alg.field_char = p;
  return alg;
}

// Random acyclic quiver with at most `max_v` vertices and `max_a` arrows, and
// a random stable representation over it with at most two summands per vertex.
inline StableRep random_stable_rep(const BoundQuiverAlgebra& alg, Rng& rng, std::uint32_t p,
                                   int max_v = 5, int max_a = 6) {
  std::vector<int> perfect;
  for (const auto& cls : stable_classes(alg))
    for (int a : cls.member_arrows) perfect.push_back(a);

  StableRep r;
  int nv = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_v)));
  for (int v = 0; v < nv; ++v) r.q.vertices.push_back("q" + std::to_string(v + 1));
  int na = nv < 2 ? 0 : static_cast<int>(rng.below(static_cast<std::uint32_t>(max_a + 1)));
  for (int k = 0; k < na; ++k) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      int u = static_cast<int>(rng.below(static_cast<std::uint32_t>(nv)));
      int w = static_cast<int>(rng.below(static_cast<std::uint32_t>(nv)));
      if (u == w) continue;
      if (u > w) std::swap(u, w);  // vertex order is a topological order
      r.q.arrows.push_back({"e" + std::to_string(r.q.arrows.size() + 1), u, w});
      break;
    }
  }
  r.summands.resize(nv);
  for (int v = 0; v < nv; ++v) {
    if (perfect.empty()) continue;
    int count = static_cast<int>(rng.below(3));
    for (int t = 0; t < count; ++t)
      r.summands[v].push_back(perfect[rng.below(static_cast<std::uint32_t>(perfect.size()))]);
  }
  for (const auto& a : r.q.arrows) {
    Mat m(static_cast<int>(r.summands[a.tgt].size()),
          static_cast<int>(r.summands[a.src].size()), p);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (r.summands[a.tgt][i] == r.summands[a.src][j]) m.set(i, j, rng.fp_element(p));
    r.maps.push_back(std::move(m));
  }
  return r;
}

// Random quadratic monomial algebra: a small quiver (cycles allowed) with a
// random set of composable length-2 relations, re-drawn until the result is
// finite dimensional.
inline BoundQuiverAlgebra random_algebra(Rng& rng, int max_v = 4, int max_a = 6) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    BoundQuiverAlgebra alg;
    int nv = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_v)));
    for (int v = 0; v < nv; ++v) alg.quiver.vertices.push_back("w" + std::to_string(v + 1));
    int na = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_a)));
    for (int k = 0; k < na; ++k) {
      int u = static_cast<int>(rng.below(static_cast<std::uint32_t>(nv)));
      int w = static_cast<int>(rng.below(static_cast<std::uint32_t>(nv)));
      alg.quiver.arrows.push_back({"c" + std::to_string(k + 1), u, w});
    }
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < na; ++b)
        if (alg.quiver.arrows[a].tgt == alg.quiver.arrows[b].src && rng.below(2) == 0)
          alg.relations.emplace_back(a, b);
    try {
      validate_algebra(alg);
    } catch (const InfiniteDimensionalError&) {
      continue;
    }
    if (enumerate_nonzero_paths(alg).size() > 64) continue;  // keep the oracle cheap
    alg.field_char = 101;
    alg.name = "random";
    return alg;
  }
  throw std::runtime_error("random_algebra: no finite-dimensional draw in 200 attempts");
}

}  // namespace gsemi::testing
