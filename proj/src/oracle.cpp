#include "gsemi/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gsemi {

namespace {

constexpr int kMaxDim = 512;

std::vector<Path> module_basis_paths(const BoundQuiverAlgebra& alg, const GpIndec& g) {
  std::vector<Path> out;
  for (const Path& p : enumerate_nonzero_paths(alg)) {
    if (g.is_projective()) {
      if (p.target(alg.quiver) == g.index) out.push_back(p);
    } else {
      if (!p.is_trivial() && p.arrows().back() == g.index) out.push_back(p);
    }
  }
  return out;
}

MatrixModule from_paths(const BoundQuiverAlgebra& alg, const std::vector<Path>& basis,
                        std::uint32_t p) {
  const Quiver& q = alg.quiver;
  MatrixModule m;
  m.p = p;
  std::map<std::string, int> index;
  for (const Path& pth : basis) {
    index[pth.label(q)] = static_cast<int>(m.labels.size());
    m.labels.push_back(pth.label(q));
    m.grade.push_back(pth.source(q));
  }
  int n = m.dim();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    Mat act(n, n, p);
    Path ap = Path::of_arrows({static_cast<int>(a)});
    for (int j = 0; j < n; ++j) {
      const Path& pth = basis[j];
      if (pth.source(q) != q.arrows[a].tgt) continue;
      auto prod = compose_paths(alg, pth, ap);  // pth . a = traverse a, then pth
      if (!prod) continue;
      auto it = index.find(prod->label(q));
      if (it != index.end()) act.set(it->second, j, 1);
    }
    m.action.push_back(std::move(act));
  }
  return m;
}

Mat column(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  Mat c(static_cast<int>(v.size()), 1, p);
  for (std::size_t i = 0; i < v.size(); ++i) c.set(static_cast<int>(i), 0, v[i]);
  return c;
}

}  // namespace

std::vector<int> MatrixModule::dim_vector(int num_vertices) const {
  std::vector<int> dv(num_vertices, 0);
  for (int g : grade) ++dv[g];
  return dv;
}

void validate_matrix_module(const BoundQuiverAlgebra& alg, const MatrixModule& m) {
  const Quiver& q = alg.quiver;
  if (m.action.size() != q.arrows.size())
    throw ShapeMismatchError("module has wrong number of action matrices");
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Mat& act = m.action[a];
    if (act.rows() != m.dim() || act.cols() != m.dim())
      throw ShapeMismatchError("action matrix has wrong shape");
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j)
        if (act.at(i, j) && (m.grade[i] != q.arrows[a].src || m.grade[j] != q.arrows[a].tgt))
          throw ShapeMismatchError("action matrix breaks the vertex grading");
  }
  for (const auto& [f, s] : alg.relations)
    if (!(m.action[f] * m.action[s]).is_zero())
      throw ShapeMismatchError("action matrices do not kill a relation");
}

MatrixModule realize_gp_indec(const BoundQuiverAlgebra& alg, const GpIndec& g, std::uint32_t p) {
  return from_paths(alg, module_basis_paths(alg, g), p);
}

MatrixModule zero_module(const BoundQuiverAlgebra& alg, std::uint32_t p) {
  MatrixModule m;
  m.p = p;
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a) m.action.emplace_back(0, 0, p);
  return m;
}

MatrixModule direct_sum(const BoundQuiverAlgebra& alg, const MatrixModule& a,
                        const MatrixModule& b) {
  MatrixModule m;
  m.p = a.p;
  m.labels = a.labels;
  for (const auto& l : b.labels) m.labels.push_back(l);
  m.grade = a.grade;
  m.grade.insert(m.grade.end(), b.grade.begin(), b.grade.end());
  for (std::size_t k = 0; k < alg.quiver.arrows.size(); ++k) {
    Mat act(m.dim(), m.dim(), m.p);
    act.paste(0, 0, a.action[k]);
    act.paste(a.dim(), a.dim(), b.action[k]);
    m.action.push_back(std::move(act));
  }
  return m;
}

MatrixModule realize_sum(const BoundQuiverAlgebra& alg, const SymbolicModule& sm, std::uint32_t p) {
  MatrixModule m = zero_module(alg, p);
  for (const GpIndec& g : sm.summands) m = direct_sum(alg, m, realize_gp_indec(alg, g, p));
  if (m.dim() > kMaxDim) throw ShapeMismatchError("module dimension exceeds the desk-scale cap");
  return m;
}

MatrixModule regular_module(const BoundQuiverAlgebra& alg, std::uint32_t p) {
  SymbolicModule sm;
  for (std::size_t v = 0; v < alg.quiver.vertices.size(); ++v)
    sm.summands.push_back(GpIndec::projective(static_cast<int>(v)));
  return realize_sum(alg, sm, p);
}

Mat embedding_matrix(const BoundQuiverAlgebra& alg, int alpha, std::uint32_t p) {
  GpIndec ideal = GpIndec::arrow_ideal(alpha);
  GpIndec proj = GpIndec::projective(alg.quiver.arrows[alpha].tgt);
  std::vector<Path> src = module_basis_paths(alg, ideal);
  std::vector<Path> tgt = module_basis_paths(alg, proj);
  Mat e(static_cast<int>(tgt.size()), static_cast<int>(src.size()), p);
  for (std::size_t j = 0; j < src.size(); ++j) {
    auto it = std::find(tgt.begin(), tgt.end(), src[j]);
    if (it == tgt.end()) throw ShapeMismatchError("embedding: basis path missing in projective");
    e.set(static_cast<int>(it - tgt.begin()), static_cast<int>(j), 1);
  }
  return e;
}

Mat cover_matrix(const BoundQuiverAlgebra& alg, int alpha, std::uint32_t p) {
  GpIndec ideal = GpIndec::arrow_ideal(alpha);
  GpIndec proj = GpIndec::projective(alg.quiver.arrows[alpha].src);
  std::vector<Path> src = module_basis_paths(alg, proj);
  std::vector<Path> tgt = module_basis_paths(alg, ideal);
  Path ap = Path::of_arrows({alpha});
  Mat c(static_cast<int>(tgt.size()), static_cast<int>(src.size()), p);
  for (std::size_t j = 0; j < src.size(); ++j) {
    auto prod = compose_paths(alg, ap, src[j]);  // alpha . q: traverse q, then alpha
    if (!prod) continue;
    auto it = std::find(tgt.begin(), tgt.end(), *prod);
    if (it == tgt.end()) throw ShapeMismatchError("cover: composite path missing in ideal");
    c.set(static_cast<int>(it - tgt.begin()), static_cast<int>(j), 1);
  }
  return c;
}

Mat realize_morphism(const BoundQuiverAlgebra& alg, const SymbolicMorphism& f,
                     const SymbolicModule& src, const SymbolicModule& tgt, std::uint32_t p) {
  if (f.rows != static_cast<int>(tgt.summands.size()) ||
      f.cols != static_cast<int>(src.summands.size()))
    throw ShapeMismatchError("symbolic morphism block structure mismatch");
  std::vector<MatrixModule> srcs, tgts;
  std::vector<int> soff{0}, toff{0};
  for (const auto& g : src.summands) {
    srcs.push_back(realize_gp_indec(alg, g, p));
    soff.push_back(soff.back() + srcs.back().dim());
  }
  for (const auto& g : tgt.summands) {
    tgts.push_back(realize_gp_indec(alg, g, p));
    toff.push_back(toff.back() + tgts.back().dim());
  }
  Mat out(toff.back(), soff.back(), p);
  for (int r = 0; r < f.rows; ++r)
    for (int c = 0; c < f.cols; ++c) {
      const MorEntry& e = f.at(r, c);
      if (e.k == MorEntry::K::Zero || e.c % p == 0) continue;
      if (e.k == MorEntry::K::Id) {
        if (!(src.summands[c] == tgt.summands[r]))
          throw ShapeMismatchError("ScalarId entry between distinct summands");
        out.paste(toff[r], soff[c], Mat::identity(srcs[c].dim(), p).scaled(e.c));
      } else {
        if (src.summands[c].is_projective() || !tgt.summands[r].is_projective() ||
            tgt.summands[r].index != alg.quiver.arrows[src.summands[c].index].tgt)
          throw ShapeMismatchError("ScalarEmb entry with illegal endpoints");
        out.paste(toff[r], soff[c], embedding_matrix(alg, src.summands[c].index, p).scaled(e.c));
      }
    }
  MatrixModule sm = realize_sum(alg, src, p);
  MatrixModule tm = realize_sum(alg, tgt, p);
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a)
    if (!(tm.action[a] * out == out * sm.action[a]))
      throw NotEquivariantError("assembled matrix does not commute with arrow `" +
                                alg.quiver.arrows[a].id + "`");
  return out;
}

CoverResult projective_cover_and_syzygy(const BoundQuiverAlgebra& alg, const MatrixModule& m) {
  if (m.dim() == 0) throw ZeroModuleError("projective cover of the zero module");
  std::uint32_t p = m.p;
  int n = m.dim();

  // rad M = sum of the arrow-action images; top generators are standard basis
  // vectors completing it.
  Mat rad(n, 0, p);
  for (const Mat& act : m.action) rad = hstack(rad, act);
  int rad_rank = rank(rad);
  std::vector<int> gens;
  Mat probe = rad;
  for (int i = 0; i < n && static_cast<int>(gens.size()) < n - rad_rank; ++i) {
    Mat e(n, 1, p);
    e.set(i, 0, 1);
    Mat ext = hstack(probe, e);
    if (rank(ext) > rank(probe)) {
      gens.push_back(i);
      probe = ext;
    }
  }

  CoverResult r;
  MatrixModule cover = zero_module(alg, p);
  std::vector<std::vector<Path>> copy_paths;
  for (int gi : gens) {
    int v = m.grade[gi];
    r.cover_vertices.push_back(v);
    cover = direct_sum(alg, cover, realize_gp_indec(alg, GpIndec::projective(v), p));
    copy_paths.push_back(module_basis_paths(alg, GpIndec::projective(v)));
  }
  r.cover = std::move(cover);

  Mat map(n, r.cover.dim(), p);
  int col = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const Path& q : copy_paths[k]) {
      // g . q applies the arrow actions from the last traversed arrow down.
      std::vector<std::uint32_t> vec(n, 0);
      vec[gens[k]] = 1;
      Mat x = column(vec, p);
      const auto& tr = q.arrows();
      for (auto it = tr.rbegin(); it != tr.rend(); ++it) x = m.action[*it] * x;
      for (int i = 0; i < n; ++i) map.set(i, col, x.at(i, 0));
      ++col;
    }
  }
  if (rank(map) != n) throw ShapeMismatchError("cover map is not surjective");
  r.map = std::move(map);

  r.inclusion = kernel_basis(r.map);
  r.syzygy = submodule(alg, r.cover, r.inclusion);
  for (int i = 0; i < r.syzygy.dim(); ++i) r.syzygy.labels[i] = "s" + std::to_string(i);
  return r;
}

MatrixModule submodule(const BoundQuiverAlgebra& alg, const MatrixModule& m,
                       const Mat& basis_cols) {
  MatrixModule s;
  s.p = m.p;
  int k = basis_cols.cols();
  for (int j = 0; j < k; ++j) {
    int g = -1;
    for (int i = 0; i < basis_cols.rows(); ++i)
      if (basis_cols.at(i, j)) { g = m.grade[i]; break; }
    if (g < 0) throw ShapeMismatchError("submodule basis contains the zero vector");
    s.grade.push_back(g);
    s.labels.push_back("s" + std::to_string(j));
  }
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a) {
    Mat img = m.action[a] * basis_cols;
    auto t = solve(basis_cols, img);
    if (!t) throw ShapeMismatchError("given basis does not span a submodule");
    s.action.push_back(std::move(*t));
  }
  return s;
}

QuotientResult quotient_module(const BoundQuiverAlgebra& alg, const MatrixModule& m,
                               const Mat& sub_basis_cols) {
  std::uint32_t p = m.p;
  int n = m.dim();
  // Row-echelon form of the subspace, to reduce vectors and read off a
  // complement of standard coordinates.
  Mat rows = sub_basis_cols.transposed();
  std::vector<std::pair<int, std::vector<std::uint32_t>>> echelon;  // (lead, row)
  for (int i = 0; i < rows.rows(); ++i) {
    std::vector<std::uint32_t> v(n);
    for (int j = 0; j < n; ++j) v[j] = rows.at(i, j);
    for (const auto& [lead, er] : echelon) {
      if (v[lead]) {
        std::uint32_t f = v[lead];
        for (int j = 0; j < n; ++j) v[j] = fp_sub(v[j], fp_mul(f, er[j], p), p);
      }
    }
    int lead = -1;
    for (int j = 0; j < n; ++j)
      if (v[j]) { lead = j; break; }
    if (lead < 0) continue;
    std::uint32_t inv = fp_inv(v[lead], p);
    for (int j = 0; j < n; ++j) v[j] = fp_mul(v[j], inv, p);
    echelon.emplace_back(lead, std::move(v));
  }
  std::vector<bool> is_lead(n, false);
  for (const auto& [lead, er] : echelon) is_lead[lead] = true;
  std::vector<int> rep;
  for (int i = 0; i < n; ++i)
    if (!is_lead[i]) rep.push_back(i);

  Mat proj(static_cast<int>(rep.size()), n, p);
  for (int c = 0; c < n; ++c) {
    std::vector<std::uint32_t> v(n, 0);
    v[c] = 1;
    for (const auto& [lead, er] : echelon) {
      if (v[lead]) {
        std::uint32_t f = v[lead];
        for (int j = 0; j < n; ++j) v[j] = fp_sub(v[j], fp_mul(f, er[j], p), p);
      }
    }
    for (std::size_t r = 0; r < rep.size(); ++r) proj.set(static_cast<int>(r), c, v[rep[r]]);
  }

  QuotientResult qr;
  qr.quotient.p = p;
  for (int i : rep) {
    qr.quotient.grade.push_back(m.grade[i]);
    qr.quotient.labels.push_back("q:" + m.labels[i]);
  }
  Mat incl(n, static_cast<int>(rep.size()), p);
  for (std::size_t r = 0; r < rep.size(); ++r) incl.set(rep[r], static_cast<int>(r), 1);
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a)
    qr.quotient.action.push_back(proj * (m.action[a] * incl));
  qr.projection = std::move(proj);
  return qr;
}

std::vector<Mat> hom_space(const BoundQuiverAlgebra& alg, const MatrixModule& src,
                           const MatrixModule& tgt) {
  std::uint32_t p = src.p;
  int nm = src.dim(), nn = tgt.dim();
  // Variables: entries (r, c) with matching grades.
  std::vector<std::pair<int, int>> vars;
  std::vector<std::vector<int>> var_at(nn, std::vector<int>(nm, -1));
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nm; ++c)
      if (tgt.grade[r] == src.grade[c]) {
        var_at[r][c] = static_cast<int>(vars.size());
        vars.emplace_back(r, c);
      }
  std::vector<std::vector<std::uint32_t>> eqs;
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a) {
    int sv = alg.quiver.arrows[a].src, tv = alg.quiver.arrows[a].tgt;
    for (int i = 0; i < nn; ++i) {
      if (tgt.grade[i] != sv) continue;
      for (int j = 0; j < nm; ++j) {
        if (src.grade[j] != tv) continue;
        // (act_tgt(a) F - F act_src(a))_{i,j} = 0
        std::vector<std::uint32_t> row(vars.size(), 0);
        bool any = false;
        for (int k = 0; k < nn; ++k) {
          std::uint32_t v = tgt.action[a].at(i, k);
          if (v && var_at[k][j] >= 0) { row[var_at[k][j]] = fp_add(row[var_at[k][j]], v, p); any = true; }
        }
        for (int k = 0; k < nm; ++k) {
          std::uint32_t v = src.action[a].at(k, j);
          if (v && var_at[i][k] >= 0) {
            row[var_at[i][k]] = fp_sub(row[var_at[i][k]], v, p);
            any = true;
          }
        }
        if (any) eqs.push_back(std::move(row));
      }
    }
  }
  Mat sys(static_cast<int>(eqs.size()), static_cast<int>(vars.size()), p);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j) sys.set(static_cast<int>(i), static_cast<int>(j), eqs[i][j]);
  Mat ker = kernel_basis(sys);
  std::vector<Mat> basis;
  for (int b = 0; b < ker.cols(); ++b) {
    Mat f(nn, nm, p);
    for (std::size_t v = 0; v < vars.size(); ++v)
      f.set(vars[v].first, vars[v].second, ker.at(static_cast<int>(v), b));
    basis.push_back(std::move(f));
  }
  return basis;
}

int hom_dim(const BoundQuiverAlgebra& alg, const MatrixModule& src, const MatrixModule& tgt) {
  return static_cast<int>(hom_space(alg, src, tgt).size());
}

namespace {

Mat combine(const std::vector<Mat>& basis, const std::vector<std::uint32_t>& coeff) {
  Mat f = Mat::zero(basis[0].rows(), basis[0].cols(), basis[0].prime());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeff[i]) f = f + basis[i].scaled(coeff[i]);
  return f;
}

}  // namespace

IsoResult is_isomorphic(const BoundQuiverAlgebra& alg, const MatrixModule& a,
                        const MatrixModule& b, Rng& rng) {
  if (a.dim() != b.dim()) return IsoResult::No;
  if (a.dim_vector(static_cast<int>(alg.quiver.vertices.size())) !=
      b.dim_vector(static_cast<int>(alg.quiver.vertices.size())))
    return IsoResult::No;
  if (a.dim() == 0) return IsoResult::Yes;
  std::vector<Mat> hom = hom_space(alg, a, b);
  if (hom.empty()) return IsoResult::No;
  std::uint32_t p = a.p;
  for (const Mat& f : hom)
    if (is_invertible(f)) return IsoResult::Yes;
  // Exhaust small coefficient spaces, sample otherwise.
  double total = 1;
  for (std::size_t i = 0; i < hom.size(); ++i) total *= p;
  if (total <= 65536.0) {
    std::vector<std::uint32_t> coeff(hom.size(), 0);
    while (true) {
      if (is_invertible(combine(hom, coeff))) return IsoResult::Yes;
      std::size_t k = 0;
      while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
      if (k == coeff.size()) break;
    }
    return IsoResult::No;
  }
  for (int t = 0; t < 256; ++t) {
    std::vector<std::uint32_t> coeff(hom.size());
    for (auto& c : coeff) c = rng.fp_element(p);
    if (is_invertible(combine(hom, coeff))) return IsoResult::Yes;
  }
  return IsoResult::Inconclusive;
}

std::vector<int> ext_dims(const BoundQuiverAlgebra& alg, const MatrixModule& m, int bound) {
  MatrixModule reg = regular_module(alg, m.p);
  std::vector<int> paths_from(alg.quiver.vertices.size(), 0);
  for (const Path& p : enumerate_nonzero_paths(alg)) ++paths_from[p.source(alg.quiver)];

  std::vector<int> out;
  MatrixModule cur = m;
  int h_prev = hom_dim(alg, cur, reg);
  for (int i = 1; i <= bound; ++i) {
    if (cur.dim() == 0) {
      out.push_back(0);
      continue;
    }
    CoverResult cov = projective_cover_and_syzygy(alg, cur);
    int h_cover = 0;
    for (int v : cov.cover_vertices) h_cover += paths_from[v];
    int h_cur = hom_dim(alg, cov.syzygy, reg);
    out.push_back(h_cur - h_cover + h_prev);
    cur = cov.syzygy;
    h_prev = h_cur;
  }
  return out;
}

std::vector<bool> ext_vanishing(const BoundQuiverAlgebra& alg, const MatrixModule& m, int bound) {
  std::vector<bool> out;
  for (int d : ext_dims(alg, m, bound)) out.push_back(d == 0);
  return out;
}

bool verify_exact_sequence(const Mat& f, const Mat& g) {
  if (g.cols() != f.rows()) throw ShapeMismatchError("maps do not compose");
  if (!(g * f).is_zero()) return false;
  int rf = rank(f), rg = rank(g);
  return rf == f.cols() && rg == g.rows() && rf + rg == f.rows();
}

std::optional<std::vector<GpIndec>> match_known_decomposition(const BoundQuiverAlgebra& alg,
                                                              const MatrixModule& m, Rng& rng) {
  int nv = static_cast<int>(alg.quiver.vertices.size());
  std::uint32_t p = m.p;
  std::vector<GpIndec> candidates = gp_indecomposables(alg);
  std::vector<MatrixModule> realized;
  for (const auto& g : candidates) realized.push_back(realize_gp_indec(alg, g, p));
  // Larger candidates first makes the peeling terminate faster.
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return realized[a].dim() > realized[b].dim(); });

  MatrixModule rem = m;
  std::vector<GpIndec> found;
  while (rem.dim() > 0) {
    std::vector<int> dv = rem.dim_vector(nv);
    bool progressed = false;
    for (std::size_t idx : order) {
      const MatrixModule& cand = realized[idx];
      std::vector<int> cdv = cand.dim_vector(nv);
      bool fits = cand.dim() > 0;
      for (int v = 0; v < nv && fits; ++v)
        if (cdv[v] > dv[v]) fits = false;
      if (!fits) continue;
      std::vector<Mat> in = hom_space(alg, cand, rem);
      if (in.empty()) continue;
      std::vector<Mat> outh = hom_space(alg, rem, cand);
      if (outh.empty()) continue;

      auto attempt = [&](const Mat& fwd, const Mat& back) -> bool {
        auto u = inverse(back * fwd);
        if (!u) return false;
        Mat e = fwd * (*u * back);  // idempotent with image iso to cand
        Mat complement = kernel_basis(e);
        rem = submodule(alg, rem, complement);
        found.push_back(candidates[idx]);
        return true;
      };

      bool split = false;
      for (const Mat& fwd : in) {
        for (const Mat& back : outh)
          if (attempt(fwd, back)) { split = true; break; }
        if (split) break;
      }
      for (int t = 0; t < 256 && !split; ++t) {
        std::vector<std::uint32_t> cf(in.size()), cb(outh.size());
        for (auto& c : cf) c = rng.fp_element(p);
        for (auto& c : cb) c = rng.fp_element(p);
        split = attempt(combine(in, cf), combine(outh, cb));
      }
      if (split) { progressed = true; break; }
    }
    if (!progressed) return std::nullopt;
  }
  return found;
}

}  // namespace gsemi
