#include "gsemi/repcat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gsemi {

namespace {

std::pair<int, int> class_position(const BoundQuiverAlgebra& alg, int arrow) {
  auto classes = stable_classes(alg);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t k = 0; k < classes[c].member_arrows.size(); ++k)
      if (classes[c].member_arrows[k] == arrow)
        return {static_cast<int>(c), static_cast<int>(k)};
  throw NotStableError("arrow `" + alg.quiver.arrows[arrow].id + "` is not perfect");
}

}  // namespace

int syzygy_arrow(const BoundQuiverAlgebra& alg, int arrow) {
  return syzygy_step(alg, GpIndec::arrow_ideal(arrow), SyzygyDir::Forward).index;
}

int inverse_syzygy_arrow(const BoundQuiverAlgebra& alg, int arrow) {
  return syzygy_step(alg, GpIndec::arrow_ideal(arrow), SyzygyDir::Inverse).index;
}

Quiver linear_quiver(int n) {
  Quiver q;
  for (int v = 1; v <= n; ++v) q.vertices.push_back("v" + std::to_string(v));
  for (int k = 1; k < n; ++k) q.arrows.push_back({"a" + std::to_string(k), k - 1, k});
  return q;
}

void validate_stable_rep(const BoundQuiverAlgebra& alg, const StableRep& r) {
  if (!r.q.is_acyclic()) throw PatternViolationError("stable rep over a non-acyclic quiver");
  if (r.summands.size() != r.q.vertices.size() || r.maps.size() != r.q.arrows.size())
    throw PatternViolationError("stable rep has wrong vertex/arrow data sizes");
  for (const auto& per_vertex : r.summands)
    for (int a : per_vertex)
      if (!is_perfect_arrow(alg, a))
        throw PatternViolationError("summand `" + alg.quiver.arrows[a].id +
                                    "` is not a perfect arrow ideal");
  for (std::size_t k = 0; k < r.q.arrows.size(); ++k) {
    const auto& src = r.summands[r.q.arrows[k].src];
    const auto& tgt = r.summands[r.q.arrows[k].tgt];
    const Mat& mmat = r.maps[k];
    if (mmat.rows() != static_cast<int>(tgt.size()) || mmat.cols() != static_cast<int>(src.size()))
      throw PatternViolationError("stable rep matrix has wrong shape at arrow `" +
                                  r.q.arrows[k].id + "`");
    for (int i = 0; i < mmat.rows(); ++i)
      for (int j = 0; j < mmat.cols(); ++j)
        if (mmat.at(i, j) && tgt[i] != src[j])
          throw PatternViolationError(
              "nonzero entry between non-isomorphic stable summands at arrow `" +
              r.q.arrows[k].id + "`");
  }
}

StableRep canonicalize(const BoundQuiverAlgebra& alg, const StableRep& r) {
  StableRep out = r;
  std::vector<std::vector<int>> perm(r.summands.size());
  for (std::size_t v = 0; v < r.summands.size(); ++v) {
    std::vector<int> idx(r.summands[v].size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return class_position(alg, r.summands[v][a]) < class_position(alg, r.summands[v][b]);
    });
    perm[v] = idx;
    std::vector<int> sorted;
    for (int k : idx) sorted.push_back(r.summands[v][k]);
    out.summands[v] = sorted;
  }
  for (std::size_t k = 0; k < r.q.arrows.size(); ++k) {
    const auto& ps = perm[r.q.arrows[k].src];
    const auto& pt = perm[r.q.arrows[k].tgt];
    Mat m(static_cast<int>(pt.size()), static_cast<int>(ps.size()), r.maps[k].prime());
    for (std::size_t i = 0; i < pt.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        m.set(static_cast<int>(i), static_cast<int>(j), r.maps[k].at(pt[i], ps[j]));
    out.maps[k] = std::move(m);
  }
  return out;
}

GpRep lift(const BoundQuiverAlgebra& alg, const StableRep& r_in) {
  validate_stable_rep(alg, r_in);
  StableRep r = canonicalize(alg, r_in);
  const Quiver& q = r.q;
  int nv = static_cast<int>(q.vertices.size());

  GpRep h;
  h.q = q;
  h.modules.resize(nv);
  h.maps.resize(q.arrows.size());
  std::vector<int> stable_off(nv, 0);
  // Offset of each incoming arrow's projective block within the target fiber.
  std::vector<std::map<int, int>> block_off(nv);

  for (const auto& layer : q.source_layers()) {
    for (int v : layer) {
      std::vector<GpIndec> sums;
      for (int a : q.arrows_into(v)) {
        block_off[v][a] = static_cast<int>(sums.size());
        for (const GpIndec& s : h.modules[q.arrows[a].src].summands) {
          if (s.is_projective()) sums.push_back(s);
          else sums.push_back(GpIndec::projective(alg.quiver.arrows[s.index].tgt));
        }
      }
      stable_off[v] = static_cast<int>(sums.size());
      for (int g : r.summands[v]) sums.push_back(GpIndec::arrow_ideal(g));
      h.modules[v].summands = std::move(sums);
    }
  }

  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    int u = q.arrows[k].src, v = q.arrows[k].tgt;
    int rows = static_cast<int>(h.modules[v].summands.size());
    int cols = static_cast<int>(h.modules[u].summands.size());
    SymbolicMorphism f(rows, cols);
    // The left-approximation block: each source summand embeds into its own
    // enveloping projective inside the target fiber.
    int r0 = block_off[v].at(static_cast<int>(k));
    for (int c = 0; c < cols; ++c) {
      const GpIndec& s = h.modules[u].summands[c];
      f.at(r0 + c, c) = s.is_projective() ? MorEntry::id(1) : MorEntry::emb(1);
    }
    // The scalar block prescribed by the stable representation.
    const Mat& smat = r.maps[k];
    for (int i = 0; i < smat.rows(); ++i)
      for (int jj = 0; jj < smat.cols(); ++jj)
        if (smat.at(i, jj))
          f.at(stable_off[v] + i, stable_off[u] + jj) = MorEntry::id(smat.at(i, jj));
    h.maps[k] = std::move(f);
  }
  return h;
}

StableRep psi(const BoundQuiverAlgebra& alg, const GpRep& rep) {
  StableRep out;
  out.q = rep.q;
  std::uint32_t p = alg.field_char;
  std::vector<std::vector<int>> stable_pos(rep.q.vertices.size());
  out.summands.resize(rep.q.vertices.size());
  for (std::size_t v = 0; v < rep.q.vertices.size(); ++v)
    for (std::size_t s = 0; s < rep.modules[v].summands.size(); ++s)
      if (!rep.modules[v].summands[s].is_projective()) {
        stable_pos[v].push_back(static_cast<int>(s));
        out.summands[v].push_back(rep.modules[v].summands[s].index);
      }
  for (std::size_t k = 0; k < rep.q.arrows.size(); ++k) {
    int u = rep.q.arrows[k].src, v = rep.q.arrows[k].tgt;
    Mat m(static_cast<int>(stable_pos[v].size()), static_cast<int>(stable_pos[u].size()), p);
    for (std::size_t i = 0; i < stable_pos[v].size(); ++i)
      for (std::size_t j = 0; j < stable_pos[u].size(); ++j) {
        const MorEntry& e = rep.maps[k].at(stable_pos[v][i], stable_pos[u][j]);
        if (e.k == MorEntry::K::Id) m.set(static_cast<int>(i), static_cast<int>(j), e.c);
      }
    out.maps.push_back(std::move(m));
  }
  validate_stable_rep(alg, out);
  return out;
}

bool stable_rep_isomorphic(const BoundQuiverAlgebra& alg, const StableRep& a,
                           const StableRep& b) {
  StableRep ca = canonicalize(alg, a), cb = canonicalize(alg, b);
  if (ca.summands != cb.summands) return false;
  for (std::size_t k = 0; k < ca.maps.size(); ++k) {
    if (ca.maps[k] == cb.maps[k]) continue;
    // Same zero-pattern support classes: compare blockwise ranks.
    int u = ca.q.arrows[k].src, v = ca.q.arrows[k].tgt;
    std::set<int> classes(ca.summands[u].begin(), ca.summands[u].end());
    for (int cls : classes) {
      std::vector<int> ridx, cidx;
      for (std::size_t i = 0; i < ca.summands[v].size(); ++i)
        if (ca.summands[v][i] == cls) ridx.push_back(static_cast<int>(i));
      for (std::size_t j = 0; j < ca.summands[u].size(); ++j)
        if (ca.summands[u][j] == cls) cidx.push_back(static_cast<int>(j));
      auto block = [&](const Mat& m) {
        Mat blk(static_cast<int>(ridx.size()), static_cast<int>(cidx.size()), m.prime());
        for (std::size_t i = 0; i < ridx.size(); ++i)
          for (std::size_t j = 0; j < cidx.size(); ++j)
            blk.set(static_cast<int>(i), static_cast<int>(j), m.at(ridx[i], cidx[j]));
        return blk;
      };
      if (rank(block(ca.maps[k])) != rank(block(cb.maps[k]))) return false;
    }
  }
  return true;
}

RepVerifyResult verify_gp_rep(const BoundQuiverAlgebra& alg, const GpRep& rep, std::uint32_t p,
                              Rng& rng) {
  RepVerifyResult res;
  const Quiver& q = rep.q;
  std::vector<MatrixModule> fibers;
  std::vector<Mat> arrow_mats;
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    fibers.push_back(realize_sum(alg, rep.modules[v], p));
  for (std::size_t k = 0; k < q.arrows.size(); ++k)
    arrow_mats.push_back(realize_morphism(alg, rep.maps[k], rep.modules[q.arrows[k].src],
                                          rep.modules[q.arrows[k].tgt], p));
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    std::vector<int> in = q.arrows_into(static_cast<int>(v));
    Mat assembled(fibers[v].dim(), 0, p);
    MatrixModule source = zero_module(alg, p);
    for (int a : in) {
      assembled = hstack(assembled, arrow_mats[a]);
      source = direct_sum(alg, source, fibers[q.arrows[a].src]);
    }
    if (rank(assembled) != assembled.cols()) {
      res.ok = false;
      res.failing_vertex = static_cast<int>(v);
      res.reason = "assembled map into `" + q.vertices[v] + "` is not injective";
      return res;
    }
    MatrixModule coker = quotient_module(alg, fibers[v], assembled).quotient;
    if (coker.dim() == 0) continue;
    auto match = match_known_decomposition(alg, coker, rng);
    if (!match) {
      res.ok = false;
      res.inconclusive = true;
      res.failing_vertex = static_cast<int>(v);
      res.reason = "cokernel at `" + q.vertices[v] +
                   "` could not be matched against the known indecomposables";
      return res;
    }
  }
  res.ok = true;
  return res;
}

std::string SnObject::label(const BoundQuiverAlgebra& alg) const {
  std::string ref_name = kind == Kind::Interval ? alg.quiver.arrows[ref].id
                                                : "P(" + alg.quiver.vertices[ref] + ")";
  return "[" + std::to_string(i) + "," + std::to_string(j) + "," + ref_name + "]";
}

std::vector<SnObject> sn_indecomposables(const BoundQuiverAlgebra& alg, int n) {
  std::vector<SnObject> out;
  for (int v = 0; v < static_cast<int>(alg.quiver.vertices.size()); ++v)
    for (int k = 0; k < n; ++k) out.push_back(SnObject::proj_interval(k, v));
  for (const auto& cls : stable_classes(alg))
    for (int h : cls.member_arrows)
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back(SnObject::interval(i, j, h));
  return out;
}

long sn_count(const BoundQuiverAlgebra& alg, int n) {
  return static_cast<long>(sn_indecomposables(alg, n).size());
}

long sn_nonprojective_count(const BoundQuiverAlgebra& alg, int n) {
  long m = check_gsemisimple(alg).m;
  return m * n * (n + 1) / 2;
}

AlmostSplitSequence almost_split_sn(const BoundQuiverAlgebra& alg, int n, const SnObject& end) {
  if (end.is_projective())
    throw NotCoveredError("no almost split sequence ends at a projective representation");
  if (end.i < 1 || end.j > n || end.i > end.j) throw NotCoveredError("end indices out of range");
  int h = end.ref;
  int sh = syzygy_arrow(alg, h);
  AlmostSplitSequence seq;
  seq.right = end;
  if (n == 1) {
    seq.family = "boundary";
    seq.left = SnObject::interval(1, 1, sh);
    seq.middles = {SnObject::proj_interval(0, alg.quiver.arrows[sh].src)};
    return seq;
  }
  if (end.i == n && end.j == n) {
    seq.family = "boundary";
    seq.left = SnObject::interval(1, n, sh);
    seq.middles = {SnObject::interval(1, n - 1, sh)};
    return seq;
  }
  if (end.i == 1 && end.j == n) {
    seq.family = "top";
    seq.left = SnObject::interval(1, 1, sh);
    seq.middles = {SnObject::proj_interval(0, alg.quiver.arrows[sh].src),
                   SnObject::interval(2, n, h)};
    return seq;
  }
  if (end.i == end.j && end.i < n) {
    seq.family = "diagonal";
    seq.left = SnObject::interval(end.i + 1, end.i + 1, h);
    seq.middles = {SnObject::proj_interval(end.i, alg.quiver.arrows[h].src),
                   SnObject::interval(end.i, end.i + 1, h)};
    return seq;
  }
  throw NotCoveredError("no covered almost split sequence ends at " + end.label(alg));
}

RealizedRep realize_sn_object(const BoundQuiverAlgebra& alg, int n, const SnObject& obj,
                              std::uint32_t p) {
  RealizedRep rep;
  MatrixModule zero = zero_module(alg, p);
  if (obj.is_projective()) {
    MatrixModule proj = realize_gp_indec(alg, GpIndec::projective(obj.ref), p);
    for (int v = 1; v <= n; ++v) rep.vertex.push_back(v > obj.i ? proj : zero);
    for (int v = 1; v < n; ++v) {
      if (v > obj.i) rep.arrow.push_back(Mat::identity(proj.dim(), p));
      else rep.arrow.push_back(Mat(rep.vertex[v].dim(), rep.vertex[v - 1].dim(), p));
    }
    return rep;
  }
  int h = obj.ref;
  int sh = syzygy_arrow(alg, h);
  MatrixModule stretch = realize_gp_indec(alg, GpIndec::arrow_ideal(sh), p);
  MatrixModule tail = realize_gp_indec(alg, GpIndec::projective(alg.quiver.arrows[h].src), p);
  Mat incl = embedding_matrix(alg, sh, p);
  for (int v = 1; v <= n; ++v) {
    if (v < obj.i) rep.vertex.push_back(zero);
    else if (v <= obj.j) rep.vertex.push_back(stretch);
    else rep.vertex.push_back(tail);
  }
  for (int v = 1; v < n; ++v) {
    if (v >= obj.i && v + 1 <= obj.j) rep.arrow.push_back(Mat::identity(stretch.dim(), p));
    else if (v == obj.j && obj.j < n) rep.arrow.push_back(incl);
    else if (v > obj.j) rep.arrow.push_back(Mat::identity(tail.dim(), p));
    else rep.arrow.push_back(Mat(rep.vertex[v].dim(), rep.vertex[v - 1].dim(), p));
  }
  return rep;
}

namespace {

RealizedRep direct_sum_reps(const BoundQuiverAlgebra& alg, const RealizedRep& a,
                            const RealizedRep& b, std::uint32_t p) {
  RealizedRep out;
  for (std::size_t v = 0; v < a.vertex.size(); ++v)
    out.vertex.push_back(direct_sum(alg, a.vertex[v], b.vertex[v]));
  for (std::size_t k = 0; k < a.arrow.size(); ++k) {
    Mat m(out.vertex[k + 1].dim(), out.vertex[k].dim(), p);
    m.paste(0, 0, a.arrow[k]);
    m.paste(a.vertex[k + 1].dim(), a.vertex[k].dim(), b.arrow[k]);
    out.arrow.push_back(std::move(m));
  }
  return out;
}

}  // namespace

RealizedSequence realize_almost_split(const BoundQuiverAlgebra& alg, int n,
                                      const AlmostSplitSequence& seq, std::uint32_t p) {
  RealizedSequence rs;
  rs.left = realize_sn_object(alg, n, seq.left, p);
  rs.right = realize_sn_object(alg, n, seq.right, p);
  std::vector<RealizedRep> mids;
  for (const auto& m : seq.middles) mids.push_back(realize_sn_object(alg, n, m, p));
  rs.middle = mids[0];
  for (std::size_t k = 1; k < mids.size(); ++k)
    rs.middle = direct_sum_reps(alg, rs.middle, mids[k], p);

  int h = seq.right.ref;
  int sh = syzygy_arrow(alg, h);
  int s2h = syzygy_arrow(alg, sh);
  Mat iota_h = embedding_matrix(alg, sh, p);      // Omega(H) into P0(H)
  Mat iota_oh = embedding_matrix(alg, s2h, p);    // Omega^2(H) into P0(Omega H)
  Mat pi_oh = cover_matrix(alg, sh, p);           // P0(Omega H) onto Omega(H)
  int dW = iota_h.cols();                         // dim Omega(H)
  int dP1 = iota_oh.rows();                       // dim P0(Omega H)
  int dP0 = iota_h.rows();                        // dim P0(H)

  auto zero_to = [&](int r, int c) { return Mat(r, c, p); };

  for (int v = 1; v <= n; ++v) {
    Mat f = zero_to(rs.middle.vertex[v - 1].dim(), rs.left.vertex[v - 1].dim());
    Mat g = zero_to(rs.right.vertex[v - 1].dim(), rs.middle.vertex[v - 1].dim());
    if (seq.family == "boundary" && n == 1) {
      f = iota_oh;
      g = pi_oh;
    } else if (seq.family == "boundary") {
      if (v < n) f = Mat::identity(iota_oh.cols(), p);
      else f = iota_oh;
      if (v == n) g = pi_oh;
    } else if (seq.family == "top") {
      // middle = [0,0,P1] (+) [2,n,H]
      if (v == 1) {
        f.paste(0, 0, iota_oh);
        g = pi_oh.negated();
      } else {
        f.paste(0, 0, Mat::identity(dP1, p));
        f.paste(dP1, 0, pi_oh);
        g.paste(0, 0, pi_oh.negated());
        g.paste(0, dP1, Mat::identity(dW, p));
      }
    } else {  // diagonal, end [i,i,H], middle = [i,i,P0(H)] (+) [i,i+1,H]
      int i = seq.right.i;
      if (v == i) {
        g = Mat::identity(dW, p).negated();
      } else if (v == i + 1) {
        f.paste(0, 0, iota_h);
        f.paste(dP0, 0, Mat::identity(dW, p));
        g.paste(0, 0, Mat::identity(dP0, p));
        g.paste(0, dP0, iota_h.negated());
      } else if (v > i + 1) {
        f.paste(0, 0, Mat::identity(dP0, p));
        f.paste(dP0, 0, Mat::identity(dP0, p));
        g.paste(0, 0, Mat::identity(dP0, p));
        g.paste(0, dP0, Mat::identity(dP0, p).negated());
      }
    }
    rs.f.push_back(std::move(f));
    rs.g.push_back(std::move(g));
  }
  return rs;
}

bool verify_almost_split(const BoundQuiverAlgebra& alg, int n, const AlmostSplitSequence& seq,
                         std::uint32_t p) {
  RealizedSequence rs = realize_almost_split(alg, n, seq, p);
  for (int v = 0; v < n; ++v) {
    int dl = rs.left.vertex[v].dim(), dm = rs.middle.vertex[v].dim(),
        dr = rs.right.vertex[v].dim();
    if (dl + dr != dm) return false;
    if (dm == 0) continue;
    if (!verify_exact_sequence(rs.f[v], rs.g[v])) return false;
  }
  for (int k = 0; k + 1 < n; ++k) {
    if (!(rs.middle.arrow[k] * rs.f[k] == rs.f[k + 1] * rs.left.arrow[k])) return false;
    if (!(rs.right.arrow[k] * rs.g[k] == rs.g[k + 1] * rs.middle.arrow[k])) return false;
  }
  return true;
}

StableComponent knit_stable_component(const BoundQuiverAlgebra& alg, int n, int class_index) {
  auto classes = stable_classes(alg);
  if (class_index < 0 || class_index >= static_cast<int>(classes.size()))
    throw NotStableError("no stable class with index " + std::to_string(class_index));
  const StableClass& cls = classes[class_index];

  StableComponent comp;
  comp.n = n;
  comp.class_index = class_index;
  comp.exact = n <= 2;
  std::map<SnObject, int> index;
  for (int h : cls.member_arrows)
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        index[SnObject::interval(i, j, h)] = static_cast<int>(comp.vertices.size());
        comp.vertices.push_back(SnObject::interval(i, j, h));
      }
  for (const SnObject& x : comp.vertices) {
    if (x.i >= 2) comp.arrows.emplace_back(index.at(x), index.at(SnObject::interval(x.i - 1, x.j, x.ref)));
    if (x.j > x.i) comp.arrows.emplace_back(index.at(x), index.at(SnObject::interval(x.i, x.j - 1, x.ref)));
    if (x.i == 1 && x.j < n)
      comp.arrows.emplace_back(
          index.at(x), index.at(SnObject::interval(x.j + 1, n, inverse_syzygy_arrow(alg, x.ref))));
  }
  comp.tau.resize(comp.vertices.size());
  for (const SnObject& x : comp.vertices) {
    SnObject t = x.j < n ? SnObject::interval(x.i + 1, x.j + 1, x.ref)
                         : SnObject::interval(1, x.i, syzygy_arrow(alg, x.ref));
    comp.tau[index.at(x)] = index.at(t);
  }
  return comp;
}

DivisibilityReport divisibility_report(int n, const StableComponent& comp) {
  DivisibilityReport r;
  r.n = n;
  r.cardinality = static_cast<long>(comp.vertices.size());
  r.divisor = n % 2 == 0 ? n + 1 : (n + 1) / 2;
  r.pass = r.divisor != 0 && r.cardinality % r.divisor == 0;
  return r;
}

}  // namespace gsemi
