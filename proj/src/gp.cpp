#include "gsemi/gp.hpp"

#include <algorithm>
#include <sstream>

namespace gsemi {

std::string GpIndec::label(const BoundQuiverAlgebra& alg) const {
  if (kind == Kind::Projective) return "e_" + alg.quiver.vertices[index] + "L";
  return alg.quiver.arrows[index].id + "L";
}

RelationQuiver relation_quiver(const BoundQuiverAlgebra& alg) {
  RelationQuiver rq;
  rq.num_arrows = static_cast<int>(alg.quiver.arrows.size());
  for (const auto& [f, s] : alg.relations) {
    rq.edges.emplace_back(s, f);
    rq.edge_labels.push_back(alg.quiver.arrows[s].id + "*" + alg.quiver.arrows[f].id);
  }
  return rq;
}

std::vector<PerfectComponent> perfect_components(const BoundQuiverAlgebra& alg,
                                                 const RelationQuiver& rq) {
  int n = rq.num_arrows;
  // Weakly connected components of the relation quiver.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : rq.edges) {
        if (a == x && comp[b] < 0) { comp[b] = ncomp; stack.push_back(b); }
        if (b == x && comp[a] < 0) { comp[a] = ncomp; stack.push_back(a); }
      }
    }
    ++ncomp;
  }
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  std::vector<int> succ(n, -1);
  for (const auto& [a, b] : rq.edges) {
    ++outdeg[a];
    ++indeg[b];
    succ[a] = b;
  }

  std::vector<PerfectComponent> out;
  std::vector<bool> comp_bad(ncomp, false);
  std::vector<std::vector<int>> members(ncomp);
  for (int v = 0; v < n; ++v) {
    members[comp[v]].push_back(v);
    if (indeg[v] != 1 || outdeg[v] != 1) comp_bad[comp[v]] = true;
  }
  for (int c = 0; c < ncomp; ++c) {
    if (comp_bad[c]) continue;
    // Every vertex has in/out degree one, so the component is a cycle.
    int start = members[c][0];
    for (int v : members[c])
      if (alg.quiver.arrows[v].id < alg.quiver.arrows[start].id) start = v;
    PerfectComponent pc;
    int cur = start;
    do {
      pc.cycle.push_back(cur);
      cur = succ[cur];
    } while (cur != start && static_cast<int>(pc.cycle.size()) <= n);
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end(), [&](const PerfectComponent& a, const PerfectComponent& b) {
    return alg.quiver.arrows[a.cycle[0]].id < alg.quiver.arrows[b.cycle[0]].id;
  });
  return out;
}

std::vector<PerfectComponent> perfect_components(const BoundQuiverAlgebra& alg) {
  return perfect_components(alg, relation_quiver(alg));
}

bool is_perfect_arrow(const BoundQuiverAlgebra& alg, int arrow) {
  for (const auto& pc : perfect_components(alg))
    for (int a : pc.cycle)
      if (a == arrow) return true;
  return false;
}

bool arrow_ideal_is_projective(const BoundQuiverAlgebra& alg, int arrow) {
  return alg.killers_of(arrow).empty();
}

std::vector<GpIndec> gp_indecomposables(const BoundQuiverAlgebra& alg) {
  std::vector<GpIndec> out;
  for (std::size_t v = 0; v < alg.quiver.vertices.size(); ++v)
    out.push_back(GpIndec::projective(static_cast<int>(v)));
  for (const auto& pc : perfect_components(alg))
    for (int a : pc.cycle) out.push_back(GpIndec::arrow_ideal(a));
  return out;
}

GpIndec syzygy_step(const BoundQuiverAlgebra& alg, const GpIndec& g, SyzygyDir dir) {
  if (g.is_projective())
    throw NotStableError("syzygy of the projective " + g.label(alg) + " vanishes");
  for (const auto& pc : perfect_components(alg)) {
    auto it = std::find(pc.cycle.begin(), pc.cycle.end(), g.index);
    if (it == pc.cycle.end()) continue;
    int pos = static_cast<int>(it - pc.cycle.begin());
    int d = static_cast<int>(pc.cycle.size());
    int npos = dir == SyzygyDir::Forward ? (pos + 1) % d : (pos + d - 1) % d;
    return GpIndec::arrow_ideal(pc.cycle[npos]);
  }
  throw NotStableError("arrow `" + alg.quiver.arrows[g.index].id + "` is not perfect");
}

std::vector<StableClass> stable_classes(const BoundQuiverAlgebra& alg) {
  std::vector<StableClass> out;
  for (const auto& pc : perfect_components(alg)) {
    StableClass c;
    c.member_arrows = pc.cycle;
    c.period = static_cast<int>(pc.cycle.size());
    out.push_back(std::move(c));
  }
  return out;
}

int class_of_arrow(const std::vector<StableClass>& classes, int arrow) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int a : classes[i].member_arrows)
      if (a == arrow) return static_cast<int>(i);
  return -1;
}

GsReport check_gsemisimple(const BoundQuiverAlgebra& alg) {
  GsReport r;
  r.classes = stable_classes(alg);
  r.m = 0;
  for (const auto& c : r.classes) r.m += c.period;
  r.gsemisimple = true;
  r.cm_finite = true;
  return r;
}

OneGorensteinReport check_one_gorenstein(const BoundQuiverAlgebra& alg) {
  OneGorensteinReport r;
  for (int a = 0; a < static_cast<int>(alg.quiver.arrows.size()); ++a) {
    if (arrow_ideal_is_projective(alg, a)) continue;
    if (is_perfect_arrow(alg, a)) continue;
    r.offending_arrows.push_back(a);
  }
  r.one_gorenstein = r.offending_arrows.empty();
  return r;
}

std::vector<int> singularity_descriptor(const BoundQuiverAlgebra& alg) {
  std::vector<int> periods;
  for (const auto& c : stable_classes(alg)) periods.push_back(c.period);
  std::sort(periods.begin(), periods.end());
  return periods;
}

GprjAlmostSplit almost_split_gprj(const BoundQuiverAlgebra& alg, const GpIndec& g) {
  if (g.is_projective())
    throw NotStableError("no almost split sequence ends at a projective");
  GprjAlmostSplit seq;
  seq.right = g;
  seq.left = syzygy_step(alg, g, SyzygyDir::Forward);
  seq.cover_vertex = alg.quiver.arrows[g.index].src;
  return seq;
}

std::string render_singularity(const std::vector<int>& periods) {
  if (periods.empty()) return "trivial (0)";
  std::ostringstream os;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i) os << " x ";
    os << "D^b(mod k)/[" << periods[i] << "]";
  }
  return os.str();
}

}  // namespace gsemi
