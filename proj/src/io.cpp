#include "gsemi/io.hpp"

#include <fstream>
#include <sstream>

namespace gsemi {

namespace {

Json classes_json(const BoundQuiverAlgebra& alg, const std::vector<StableClass>& classes) {
  Json arr = Json::array();
  for (const auto& c : classes) {
    Json ids = Json::array();
    for (int a : c.member_arrows) ids.push_back(alg.quiver.arrows[a].id);
    arr.push_back(Json{{"arrows", ids}, {"period", c.period}});
  }
  return arr;
}

}  // namespace

Json gp_report_json(const BoundQuiverAlgebra& alg) {
  GsReport gs = check_gsemisimple(alg);
  OneGorensteinReport og = check_one_gorenstein(alg);
  Json j;
  j["schema"] = "gsemi/gp-report/v1";
  if (!alg.name.empty()) j["algebra"] = alg.name;
  j["m"] = gs.m;
  j["classes"] = classes_json(alg, gs.classes);
  j["gsemisimple"] = gs.gsemisimple;
  j["reason"] = gs.reason;
  j["cm_finite"] = gs.cm_finite;
  j["one_gorenstein"] = og.one_gorenstein;
  Json off = Json::array();
  for (int a : og.offending_arrows) off.push_back(alg.quiver.arrows[a].id);
  j["offending_arrows"] = off;
  j["singularity"] = singularity_descriptor(alg);
  return j;
}

std::string gp_report_text(const BoundQuiverAlgebra& alg) {
  GsReport gs = check_gsemisimple(alg);
  OneGorensteinReport og = check_one_gorenstein(alg);
  std::vector<int> sing = singularity_descriptor(alg);
  std::ostringstream os;
  if (!alg.name.empty()) os << "algebra: " << alg.name << "\n";
  os << "vertices: " << alg.quiver.vertices.size() << ", arrows: " << alg.quiver.arrows.size()
     << ", relations: " << alg.relations.size() << "\n";
  os << "G-semisimple: yes (" << gs.reason << ")\n";
  os << "CM-finite: yes\n";
  os << "m = " << gs.m << " (indecomposable non-projective Gorenstein projectives)\n";
  os << "stable classes: " << gs.classes.size() << "\n";
  for (std::size_t i = 0; i < gs.classes.size(); ++i) {
    os << "  class " << i << ": l = " << gs.classes[i].period << ", orbit";
    for (int a : gs.classes[i].member_arrows) os << " " << alg.quiver.arrows[a].id << "L";
    os << "\n";
  }
  os << "1-Gorenstein: " << (og.one_gorenstein ? "yes" : "no");
  if (!og.one_gorenstein) {
    os << " (offending arrows:";
    for (int a : og.offending_arrows) os << " " << alg.quiver.arrows[a].id;
    os << ")";
  }
  os << "\n";
  os << "singularity category: " << render_singularity(sing) << "\n";
  return os.str();
}

Json sn_list_json(const BoundQuiverAlgebra& alg, int n) {
  Json j;
  j["schema"] = "gsemi/sn/v1";
  j["n"] = n;
  j["count"] = sn_count(alg, n);
  j["nonprojective_count"] = sn_nonprojective_count(alg, n);
  Json objs = Json::array();
  for (const SnObject& o : sn_indecomposables(alg, n)) {
    Json e;
    e["kind"] = o.is_projective() ? "projective" : "interval";
    e["i"] = o.i;
    e["j"] = o.j;
    e["ref"] = o.is_projective() ? alg.quiver.vertices[o.ref] : alg.quiver.arrows[o.ref].id;
    e["label"] = o.label(alg);
    objs.push_back(std::move(e));
  }
  j["objects"] = std::move(objs);
  return j;
}

namespace {

Json sn_object_json(const BoundQuiverAlgebra& alg, const SnObject& o) {
  Json e;
  e["label"] = o.label(alg);
  e["kind"] = o.is_projective() ? "projective" : "interval";
  e["i"] = o.i;
  e["j"] = o.j;
  e["ref"] = o.is_projective() ? alg.quiver.vertices[o.ref] : alg.quiver.arrows[o.ref].id;
  return e;
}

}  // namespace

Json sequence_json(const BoundQuiverAlgebra& alg, const AlmostSplitSequence& seq) {
  Json j;
  j["schema"] = "gsemi/ars/v1";
  j["family"] = seq.family;
  j["left"] = sn_object_json(alg, seq.left);
  Json mids = Json::array();
  for (const auto& m : seq.middles) mids.push_back(sn_object_json(alg, m));
  j["middles"] = std::move(mids);
  j["right"] = sn_object_json(alg, seq.right);
  return j;
}

Json component_json(const BoundQuiverAlgebra& alg, const StableComponent& comp) {
  Json j;
  j["schema"] = "gsemi/component/v1";
  j["n"] = comp.n;
  j["class_index"] = comp.class_index;
  j["exact"] = comp.exact;
  j["cardinality"] = comp.vertices.size();
  Json verts = Json::array();
  for (const auto& v : comp.vertices) verts.push_back(v.label(alg));
  j["vertices"] = std::move(verts);
  Json arrows = Json::array();
  for (const auto& [a, b] : comp.arrows) arrows.push_back(Json::array({a, b}));
  j["arrows"] = std::move(arrows);
  Json tau = Json::array();
  for (std::size_t i = 0; i < comp.tau.size(); ++i)
    tau.push_back(Json::array({i, comp.tau[i]}));
  j["tau"] = std::move(tau);
  DivisibilityReport d = divisibility_report(comp.n, comp);
  j["divisor"] = d.divisor;
  j["divisible"] = d.pass;
  return j;
}

Json components_json(const BoundQuiverAlgebra& alg, const std::vector<StableComponent>& comps,
                     int n) {
  Json j;
  j["schema"] = "gsemi/components/v1";
  j["n"] = n;
  j["count"] = comps.size();
  Json arr = Json::array();
  for (const auto& c : comps) arr.push_back(component_json(alg, c));
  j["components"] = std::move(arr);
  return j;
}

Json dynkin_report_json(const CmReport& report, bool with_roots,
                        const std::vector<std::vector<int>>& roots) {
  Json j;
  j["schema"] = "gsemi/dynkin/v1";
  j["type"] = report.type ? report.type->name() : "NotDynkin";
  j["root_count"] = report.root_count;
  if (with_roots) j["roots"] = roots;
  j["cm_finite"] = report.cm_finite;
  if (report.count_is_finite) j["gp_count"] = report.gp_count;
  else j["gp_count"] = "infinite";
  return j;
}

Json stable_rep_json(const BoundQuiverAlgebra& alg, const StableRep& rep) {
  Json j;
  j["schema"] = "gsemi/stablerep/v1";
  Json verts;
  for (std::size_t v = 0; v < rep.q.vertices.size(); ++v) {
    Json lst = Json::array();
    for (int a : rep.summands[v]) lst.push_back(Json{{"class", alg.quiver.arrows[a].id}, {"mult", 1}});
    verts[rep.q.vertices[v]] = std::move(lst);
  }
  j["vertices"] = std::move(verts);
  Json arrows;
  for (std::size_t k = 0; k < rep.q.arrows.size(); ++k) {
    Json m = Json::array();
    for (int r = 0; r < rep.maps[k].rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < rep.maps[k].cols(); ++c) row.push_back(rep.maps[k].at(r, c));
      m.push_back(std::move(row));
    }
    arrows[rep.q.arrows[k].id] = std::move(m);
  }
  j["arrows"] = std::move(arrows);
  return j;
}

Json gp_rep_json(const BoundQuiverAlgebra& alg, const GpRep& rep) {
  Json j;
  j["schema"] = "gsemi/gprep/v1";
  Json verts;
  for (std::size_t v = 0; v < rep.q.vertices.size(); ++v) {
    Json lst = Json::array();
    for (const GpIndec& s : rep.modules[v].summands) {
      if (s.is_projective())
        lst.push_back(Json{{"kind", "proj"}, {"id", alg.quiver.vertices[s.index]}});
      else
        lst.push_back(Json{{"kind", "arrow"}, {"id", alg.quiver.arrows[s.index].id}});
    }
    verts[rep.q.vertices[v]] = std::move(lst);
  }
  j["vertices"] = std::move(verts);
  Json arrows;
  for (std::size_t k = 0; k < rep.q.arrows.size(); ++k) {
    const SymbolicMorphism& f = rep.maps[k];
    Json m = Json::array();
    for (int r = 0; r < f.rows; ++r) {
      Json row = Json::array();
      for (int c = 0; c < f.cols; ++c) {
        const MorEntry& e = f.at(r, c);
        if (e.k == MorEntry::K::Zero) row.push_back(Json{{"k", "z"}});
        else if (e.k == MorEntry::K::Id) row.push_back(Json{{"k", "id"}, {"c", e.c}});
        else row.push_back(Json{{"k", "emb"}, {"c", e.c}});
      }
      m.push_back(std::move(row));
    }
    arrows[rep.q.arrows[k].id] = std::move(m);
  }
  j["arrows"] = std::move(arrows);
  return j;
}

std::string component_dot(const BoundQuiverAlgebra& alg, const StableComponent& comp) {
  std::ostringstream os;
  os << "digraph component {\n";
  for (std::size_t i = 0; i < comp.vertices.size(); ++i)
    os << "  n" << i << " [label=\"" << comp.vertices[i].label(alg) << "\"];\n";
  for (const auto& [a, b] : comp.arrows) os << "  n" << a << " -> n" << b << ";\n";
  for (std::size_t i = 0; i < comp.tau.size(); ++i)
    os << "  n" << i << " -> n" << comp.tau[i] << " [style=dashed, label=\"tau\"];\n";
  os << "}\n";
  return os.str();
}

std::string components_dot(const BoundQuiverAlgebra& alg,
                           const std::vector<StableComponent>& comps) {
  std::ostringstream os;
  os << "digraph components {\n";
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::string pre = "c" + std::to_string(c) + "_n";
    for (std::size_t i = 0; i < comps[c].vertices.size(); ++i)
      os << "  " << pre << i << " [label=\"" << comps[c].vertices[i].label(alg) << "\"];\n";
    for (const auto& [a, b] : comps[c].arrows) os << "  " << pre << a << " -> " << pre << b << ";\n";
    for (std::size_t i = 0; i < comps[c].tau.size(); ++i)
      os << "  " << pre << i << " -> " << pre << comps[c].tau[i]
         << " [style=dashed, label=\"tau\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string relation_quiver_dot(const BoundQuiverAlgebra& alg, const RelationQuiver& rq) {
  std::ostringstream os;
  os << "digraph relation_quiver {\n";
  for (int a = 0; a < rq.num_arrows; ++a)
    os << "  n" << a << " [label=\"" << alg.quiver.arrows[a].id << "\"];\n";
  for (std::size_t e = 0; e < rq.edges.size(); ++e)
    os << "  n" << rq.edges[e].first << " -> n" << rq.edges[e].second << " [label=\""
       << rq.edge_labels[e] << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

Quiver quiver_from_json(const Json& jq) {
  Quiver q;
  for (const auto& v : jq.at("vertices")) q.vertices.push_back(v.get<std::string>());
  for (const auto& a : jq.at("arrows")) {
    int s = q.vertex_index(a.at("src").get<std::string>());
    int t = q.vertex_index(a.at("tgt").get<std::string>());
    if (s < 0 || t < 0) throw ParseError("rep quiver arrow with unknown endpoint");
    q.arrows.push_back({a.at("id").get<std::string>(), s, t});
  }
  return q;
}

Quiver resolve_quiver(const Json& doc, const std::string& base_dir) {
  const Json& jq = doc.at("quiver");
  if (jq.is_string()) {
    std::string path = jq.get<std::string>();
    if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
    return parse_quiver_file(path);
  }
  return quiver_from_json(jq);
}

}  // namespace

Quiver parse_quiver_file(const std::string& path) {
  return parse_algebra_file(path).quiver;
}

StableRep parse_stable_rep(const BoundQuiverAlgebra& alg, const Json& doc,
                           const std::string& base_dir, std::uint32_t p) {
  StableRep rep;
  rep.q = resolve_quiver(doc, base_dir);
  rep.summands.resize(rep.q.vertices.size());
  const Json& verts = doc.at("vertices");
  for (auto it = verts.begin(); it != verts.end(); ++it) {
    int v = rep.q.vertex_index(it.key());
    if (v < 0) throw ParseError("stable rep: unknown quiver vertex `" + it.key() + "`");
    for (const auto& e : it.value()) {
      int a = alg.quiver.arrow_index(e.at("class").get<std::string>());
      if (a < 0) throw ParseError("stable rep: unknown arrow class");
      int mult = e.contains("mult") ? e.at("mult").get<int>() : 1;
      for (int k = 0; k < mult; ++k) rep.summands[v].push_back(a);
    }
  }
  for (std::size_t k = 0; k < rep.q.arrows.size(); ++k) {
    int su = static_cast<int>(rep.summands[rep.q.arrows[k].src].size());
    int sv = static_cast<int>(rep.summands[rep.q.arrows[k].tgt].size());
    Mat m(sv, su, p);
    if (doc.contains("arrows") && doc.at("arrows").contains(rep.q.arrows[k].id)) {
      const Json& jm = doc.at("arrows").at(rep.q.arrows[k].id);
      if (static_cast<int>(jm.size()) != sv)
        throw ParseError("stable rep: matrix row count mismatch at `" + rep.q.arrows[k].id + "`");
      for (int r = 0; r < sv; ++r) {
        if (static_cast<int>(jm[r].size()) != su)
          throw ParseError("stable rep: matrix column count mismatch");
        for (int c = 0; c < su; ++c) m.set(r, c, jm[r][c].get<long long>() % p);
      }
    }
    rep.maps.push_back(std::move(m));
  }
  validate_stable_rep(alg, rep);
  return rep;
}

GpRep parse_gp_rep(const BoundQuiverAlgebra& alg, const Json& doc, const std::string& base_dir) {
  GpRep rep;
  rep.q = resolve_quiver(doc, base_dir);
  rep.modules.resize(rep.q.vertices.size());
  rep.maps.resize(rep.q.arrows.size());
  const Json& verts = doc.at("vertices");
  for (auto it = verts.begin(); it != verts.end(); ++it) {
    int v = rep.q.vertex_index(it.key());
    if (v < 0) throw ParseError("gp rep: unknown quiver vertex `" + it.key() + "`");
    for (const auto& e : it.value()) {
      std::string kind = e.at("kind").get<std::string>();
      std::string id = e.at("id").get<std::string>();
      if (kind == "proj") {
        int vx = alg.quiver.vertex_index(id);
        if (vx < 0) throw ParseError("gp rep: unknown vertex `" + id + "`");
        rep.modules[v].summands.push_back(GpIndec::projective(vx));
      } else if (kind == "arrow") {
        int a = alg.quiver.arrow_index(id);
        if (a < 0) throw ParseError("gp rep: unknown arrow `" + id + "`");
        rep.modules[v].summands.push_back(GpIndec::arrow_ideal(a));
      } else {
        throw ParseError("gp rep: summand kind must be `proj` or `arrow`");
      }
    }
  }
  for (std::size_t k = 0; k < rep.q.arrows.size(); ++k) {
    int cols = static_cast<int>(rep.modules[rep.q.arrows[k].src].summands.size());
    int rows = static_cast<int>(rep.modules[rep.q.arrows[k].tgt].summands.size());
    SymbolicMorphism f(rows, cols);
    if (doc.contains("arrows") && doc.at("arrows").contains(rep.q.arrows[k].id)) {
      const Json& jm = doc.at("arrows").at(rep.q.arrows[k].id);
      if (static_cast<int>(jm.size()) != rows)
        throw ParseError("gp rep: entry row count mismatch at `" + rep.q.arrows[k].id + "`");
      for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(jm[r].size()) != cols)
          throw ParseError("gp rep: entry column count mismatch");
        for (int c = 0; c < cols; ++c) {
          const Json& je = jm[r][c];
          std::string kk = je.at("k").get<std::string>();
          if (kk == "z") f.at(r, c) = MorEntry::zero();
          else if (kk == "id") f.at(r, c) = MorEntry::id(je.at("c").get<std::uint32_t>());
          else if (kk == "emb") f.at(r, c) = MorEntry::emb(je.at("c").get<std::uint32_t>());
          else throw ParseError("gp rep: entry kind must be z, id or emb");
        }
      }
    }
    rep.maps[k] = std::move(f);
  }
  return rep;
}

}  // namespace gsemi
