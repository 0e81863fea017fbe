#include "gsemi/dynkin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gsemi/gp.hpp"

namespace gsemi {

namespace {

// Adjacency of the ADE diagram in a fixed vertex numbering: a path for A_n;
// for D/E, vertex 0 is the branch node with legs attached in order.
std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t) {
  std::vector<std::pair<int, int>> e;
  if (t.family == 'A') {
    for (int i = 0; i + 1 < t.rank; ++i) e.emplace_back(i, i + 1);
    return e;
  }
  std::vector<int> legs;
  if (t.family == 'D') legs = {1, 1, t.rank - 3};
  else legs = {1, 2, t.rank - 4};  // E6/E7/E8: legs 1,2,2 / 1,2,3 / 1,2,4
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return e;
}

long tits_form(const std::vector<int>& x, const std::vector<std::pair<int, int>>& edges) {
  long q = 0;
  for (int xi : x) q += static_cast<long>(xi) * xi;
  for (const auto& [a, b] : edges) q -= static_cast<long>(x[a]) * x[b];
  return q;
}

}  // namespace

std::optional<DynkinType> classify_underlying_graph(const Quiver& q) {
  int n = static_cast<int>(q.vertices.size());
  if (n == 0) return std::nullopt;
  if (!q.underlying_connected()) throw DisconnectedError("quiver is not connected");
  // Multiple edges (any orientation) and loops are never Dynkin.
  std::set<std::pair<int, int>> seen;
  for (const auto& a : q.arrows) {
    if (a.src == a.tgt) return std::nullopt;
    auto key = std::minmax(a.src, a.tgt);
    if (!seen.insert({key.first, key.second}).second) return std::nullopt;
  }
  if (static_cast<int>(seen.size()) != n - 1) return std::nullopt;  // connected + not a tree

  std::vector<int> deg(n, 0);
  for (const auto& [u, v] : seen) { ++deg[u]; ++deg[v]; }
  int maxdeg = n == 1 ? 0 : *std::max_element(deg.begin(), deg.end());
  if (maxdeg <= 2) return DynkinType{'A', n};
  if (maxdeg > 3) return std::nullopt;
  int branches = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
  if (branches != 1) return std::nullopt;
  int center = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());

  std::vector<int> leg_lengths;
  for (const auto& [u, v] : seen) {
    int start = -1;
    if (u == center) start = v;
    if (v == center) start = u;
    if (start < 0) continue;
    int len = 1, prev = center, cur = start;
    while (true) {
      int next = -1;
      for (const auto& [a, b] : seen) {
        if (a == cur && b != prev) next = b;
        if (b == cur && a != prev) next = a;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    leg_lengths.push_back(len);
  }
  std::sort(leg_lengths.begin(), leg_lengths.end());
  if (leg_lengths.size() != 3) return std::nullopt;
  int a = leg_lengths[0], b = leg_lengths[1], c = leg_lengths[2];
  if (a == 1 && b == 1) return DynkinType{'D', n};
  if (a == 1 && b == 2 && c >= 2 && c <= 4) return DynkinType{'E', n};
  return std::nullopt;
}

std::vector<std::vector<int>> positive_roots(const DynkinType& t) {
  int n = t.rank;
  auto edges = diagram_edges(t);
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (int i = 0; i < n; ++i) {
        std::vector<int> y = x;
        if (++y[i] > 6) continue;
        if (tits_form(y, edges) != 1) continue;
        if (roots.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    long ha = std::accumulate(a.begin(), a.end(), 0L);
    long hb = std::accumulate(b.begin(), b.end(), 0L);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

CmReport cm_classification(const BoundQuiverAlgebra& alg, const Quiver& q) {
  CmReport r;
  auto type = classify_underlying_graph(q);
  r.dynkin = type.has_value();
  r.type = type;
  int m = check_gsemisimple(alg).m;
  if (type) {
    r.root_count = static_cast<long>(positive_roots(*type).size());
    r.cm_finite = true;
    r.count_is_finite = true;
    r.gp_count = m * r.root_count;
  } else {
    r.cm_finite = (m == 0);
    r.count_is_finite = (m == 0);
    r.gp_count = 0;
  }
  return r;
}

}  // namespace gsemi
