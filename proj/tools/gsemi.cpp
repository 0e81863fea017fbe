#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gsemi/io.hpp"

namespace {

using namespace gsemi;

struct Config {
  std::uint32_t prime = 101;
  std::uint64_t seed = 0;
  int ext_bound = 0;  // 0 = auto: 2 * max l(G) + 2
  std::string format = "text";
};

int auto_ext_bound(const BoundQuiverAlgebra& alg) {
  int maxl = 0;
  for (const auto& c : stable_classes(alg)) maxl = std::max(maxl, c.period);
  return 2 * maxl + 2;
}

BoundQuiverAlgebra load_algebra(const std::string& path, const Config& cfg) {
  BoundQuiverAlgebra alg = parse_algebra_file(path);
  alg.field_char = cfg.prime;
  return alg;
}

std::string dirname_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open `" + path + "`");
  Json doc;
  in >> doc;
  return doc;
}

void dump_matrices(const BoundQuiverAlgebra& alg, const Config& cfg, const std::string& dir) {
  for (const GpIndec& g : gp_indecomposables(alg)) {
    MatrixModule m = realize_gp_indec(alg, g, cfg.prime);
    for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a) {
      std::ofstream out(dir + "/" + g.label(alg) + "." + alg.quiver.arrows[a].id + ".csv");
      for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) out << (c ? "," : "") << m.action[a].at(r, c);
        out << "\n";
      }
    }
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

SnObject parse_sn_object(const BoundQuiverAlgebra& alg, std::string spec_str) {
  std::string s = spec_str;
  if (!s.empty() && s.front() == '[') s = s.substr(1);
  if (!s.empty() && s.back() == ']') s.pop_back();
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') { parts.push_back(cur); cur.clear(); }
    else if (!isspace(static_cast<unsigned char>(c))) cur += c;
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw ParseError("object must be written as [i,j,arrow] or [k,k,P(v)]");
  int i = std::stoi(parts[0]);
  int j = std::stoi(parts[1]);
  const std::string& ref = parts[2];
  if (ref.size() > 3 && ref.substr(0, 2) == "P(" && ref.back() == ')') {
    if (i != j) throw ParseError("projective intervals are written [k,k,P(v)]");
    int v = alg.quiver.vertex_index(ref.substr(2, ref.size() - 3));
    if (v < 0) throw ParseError("unknown vertex in `" + ref + "`");
    return SnObject::proj_interval(i, v);
  }
  int a = alg.quiver.arrow_index(ref);
  if (a < 0) throw ParseError("unknown arrow `" + ref + "`");
  return SnObject::interval(i, j, a);
}

int resolve_class(const BoundQuiverAlgebra& alg, const std::string& spec_str) {
  auto classes = stable_classes(alg);
  int arrow = alg.quiver.arrow_index(spec_str);
  if (arrow >= 0) {
    int c = class_of_arrow(classes, arrow);
    if (c < 0) throw ParseError("arrow `" + spec_str + "` is not perfect");
    return c;
  }
  int idx = std::stoi(spec_str);
  if (idx < 0 || idx >= static_cast<int>(classes.size()))
    throw ParseError("no stable class `" + spec_str + "`");
  return idx;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsemi: Gorenstein projective classification over quadratic monomial algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("-p,--prime", cfg.prime, "prime for the oracle field (default 101)");
  app.add_option("--seed", cfg.seed, "RNG seed for oracle sampling")->envname("GSEMI_SEED");
  app.add_option("--ext-bound", cfg.ext_bound, "Ext-vanishing depth (default 2*max l(G)+2)");
  app.add_option("-f,--format", cfg.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::string alg_path, quiver_path, rep_path, at_spec, class_spec, dot_path, mode = "list";
  int n = 2;
  bool check = false, with_roots = false;

  bool with_oracle = false;
  std::string dump_dir;
  auto* analyze = app.add_subcommand("analyze", "full gp-module report");
  analyze->add_option("algebra", alg_path)->required();
  analyze->add_flag("--oracle", with_oracle,
                    "cross-check syzygies and Ext vanishing through the oracle");
  analyze->add_option("--dump-matrices", dump_dir,
                      "write the realized action matrices as CSV files into this directory");

  auto* sing = app.add_subcommand("sing", "singularity-category descriptor");
  sing->add_option("algebra", alg_path)->required();

  auto* sn = app.add_subcommand("sn", "indecomposables of S_n(Gprj)");
  sn->add_option("algebra", alg_path)->required();
  sn->add_option("--n", n, "number of vertices of the linear quiver")
      ->required()
      ->check(CLI::Range(1, 64));
  sn->add_option("mode", mode, "list or count")->check(CLI::IsMember({"list", "count"}));

  auto* ars = app.add_subcommand("ars", "almost split sequence with the given ending term");
  ars->add_option("algebra", alg_path)->required();
  ars->add_option("--n", n)->required()->check(CLI::Range(1, 64));
  ars->add_option("--at", at_spec, "ending object, e.g. [3,3,x]")->required();
  ars->add_flag("--check", check, "verify exactness through the oracle");

  auto* component = app.add_subcommand("component", "stable Auslander-Reiten components");
  component->add_option("algebra", alg_path)->required();
  component->add_option("--n", n)->required()->check(CLI::Range(1, 64));
  component->add_option("--class", class_spec,
                        "class index, a perfect arrow id, or `all` (the default)");
  component->add_option("--dot", dot_path, "write the component(s) as a DOT file");

  auto* dynkin = app.add_subcommand("dynkin", "CM-finiteness of the path algebra over a quiver");
  dynkin->add_option("algebra", alg_path)->required();
  dynkin->add_option("--quiver", quiver_path)->required();
  dynkin->add_flag("--roots", with_roots, "include the positive roots in the output");

  auto* lift_cmd = app.add_subcommand("lift", "lift a stable representation to a GP representation");
  lift_cmd->add_option("algebra", alg_path)->required();
  lift_cmd->add_option("--rep", rep_path, "stable representation JSON file")->required();
  lift_cmd->add_flag("--check", check, "verify the lift and the psi round trip");

  auto* verify = app.add_subcommand("verify", "oracle-check a GP representation file");
  verify->add_option("algebra", alg_path)->required();
  verify->add_option("--rep", rep_path, "GP representation JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!is_prime(cfg.prime)) throw ParseError("--prime must be a prime number");
    if (cfg.ext_bound < 0) throw ParseError("--ext-bound must be non-negative");
    if (cfg.format == "dot" && !analyze->parsed() && !component->parsed())
      throw UnsupportedFormatError("dot output is only available for analyze and component");

    if (analyze->parsed()) {
      BoundQuiverAlgebra alg = load_algebra(alg_path, cfg);
      if (cfg.format == "json") emit(gp_report_json(alg));
      else if (cfg.format == "dot") std::cout << relation_quiver_dot(alg, relation_quiver(alg));
      else std::cout << gp_report_text(alg);
      if (!dump_dir.empty()) dump_matrices(alg, cfg, dump_dir);
      if (with_oracle) {
        int bound = cfg.ext_bound > 0 ? cfg.ext_bound : auto_ext_bound(alg);
        Rng rng(cfg.seed);
        bool all_ok = true;
        for (const auto& cls : stable_classes(alg))
          for (int a : cls.member_arrows) {
            MatrixModule ideal = realize_gp_indec(alg, GpIndec::arrow_ideal(a), cfg.prime);
            CoverResult cov = projective_cover_and_syzygy(alg, ideal);
            GpIndec omega = syzygy_step(alg, GpIndec::arrow_ideal(a), SyzygyDir::Forward);
            bool syz_ok = is_isomorphic(alg, cov.syzygy,
                                        realize_gp_indec(alg, omega, cfg.prime), rng) ==
                          IsoResult::Yes;
            std::vector<bool> ext = ext_vanishing(alg, ideal, bound);
            bool ext_ok = std::all_of(ext.begin(), ext.end(), [](bool b) { return b; });
            all_ok = all_ok && syz_ok && ext_ok;
            std::cout << "oracle " << alg.quiver.arrows[a].id << "L: syzygy "
                      << (syz_ok ? "ok" : "MISMATCH") << ", Ext^1.." << bound
                      << (ext_ok ? " vanish" : " NONZERO") << "\n";
          }
        if (!all_ok) return 2;
      }
    } else if (sing->parsed()) {
      BoundQuiverAlgebra alg = load_algebra(alg_path, cfg);
      auto periods = singularity_descriptor(alg);
      if (cfg.format == "json")
        emit(Json{{"schema", "gsemi/singularity/v1"}, {"periods", periods}});
      else std::cout << render_singularity(periods) << "\n";
    } else if (sn->parsed()) {
      BoundQuiverAlgebra alg = load_algebra(alg_path, cfg);
      if (mode == "count") {
        std::cout << sn_count(alg, n) << "\n";
      } else if (cfg.format == "json") {
        emit(sn_list_json(alg, n));
      } else {
        for (const SnObject& o : sn_indecomposables(alg, n))
          std::cout << o.label(alg) << "\n";
      }
    } else if (ars->parsed()) {
      BoundQuiverAlgebra alg = load_algebra(alg_path, cfg);
      SnObject end = parse_sn_object(alg, at_spec);
      AlmostSplitSequence seq = almost_split_sn(alg, n, end);
      bool verified = false;
      if (check) {
        verified = verify_almost_split(alg, n, seq, cfg.prime);
        if (!verified) {
          std::cerr << "internal error: realized sequence failed the oracle check\n";
          return 2;
        }
      }
      if (cfg.format == "json") {
        Json j = sequence_json(alg, seq);
        if (check) j["verified"] = verified;
        emit(j);
      } else {
        std::cout << "family: " << seq.family << "\n0 -> " << seq.left.label(alg) << " -> ";
        for (std::size_t k = 0; k < seq.middles.size(); ++k)
          std::cout << (k ? " (+) " : "") << seq.middles[k].label(alg);
        std::cout << " -> " << seq.right.label(alg) << " -> 0\n";
        if (check) std::cout << "oracle: exact\n";
      }
    } else if (component->parsed()) {
      BoundQuiverAlgebra alg = load_algebra(alg_path, cfg);
      std::vector<StableComponent> comps;
      if (class_spec.empty() || class_spec == "all") {
        for (std::size_t k = 0; k < stable_classes(alg).size(); ++k)
          comps.push_back(knit_stable_component(alg, n, static_cast<int>(k)));
      } else {
        comps.push_back(knit_stable_component(alg, n, resolve_class(alg, class_spec)));
      }
      std::string dot = comps.size() == 1 ? component_dot(alg, comps[0])
                                          : components_dot(alg, comps);
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        out << dot;
      }
      if (cfg.format == "json") {
        if (comps.size() == 1 && !class_spec.empty() && class_spec != "all")
          emit(component_json(alg, comps[0]));
        else emit(components_json(alg, comps, n));
      } else if (cfg.format == "dot") {
        std::cout << dot;
      } else {
        for (const auto& comp : comps) {
          DivisibilityReport div = divisibility_report(n, comp);
          std::cout << "component of class " << comp.class_index
                    << " in the stable AR quiver of S_" << n << ": " << comp.vertices.size()
                    << " vertices, " << (comp.exact ? "exact" : "best-effort knitting")
                    << "; divisibility: |Gamma| = " << div.cardinality << ", divisor "
                    << div.divisor << ": " << (div.pass ? "pass" : "FAIL") << "\n";
        }
        if (comps.empty())
          std::cout << "no stable classes: the stable AR quiver of S_" << n << " is empty\n";
      }
    } else if (dynkin->parsed()) {
      BoundQuiverAlgebra alg = load_algebra(alg_path, cfg);
      Quiver q = parse_quiver_file(quiver_path);
      if (!q.is_acyclic()) throw ValidationError("quiver must be acyclic");
      CmReport report = cm_classification(alg, q);
      std::vector<std::vector<int>> roots;
      if (report.type && with_roots) roots = positive_roots(*report.type);
      if (cfg.format == "json") emit(dynkin_report_json(report, with_roots, roots));
      else {
        std::cout << "underlying graph: " << (report.type ? report.type->name() : "not Dynkin")
                  << "\n";
        std::cout << "CM-finite: " << (report.cm_finite ? "yes" : "no");
        if (report.count_is_finite) std::cout << "; count = " << report.gp_count;
        std::cout << "\n";
        if (with_roots)
          for (const auto& r : roots) {
            std::cout << "root:";
            for (int x : r) std::cout << " " << x;
            std::cout << "\n";
          }
      }
    } else if (lift_cmd->parsed()) {
      BoundQuiverAlgebra alg = load_algebra(alg_path, cfg);
      StableRep rep = parse_stable_rep(alg, read_json_file(rep_path), dirname_of(rep_path),
                                       cfg.prime);
      GpRep lifted = lift(alg, rep);
      if (check) {
        Rng rng(cfg.seed);
        RepVerifyResult vr = verify_gp_rep(alg, lifted, cfg.prime, rng);
        if (vr.inconclusive) {
          std::cerr << "inconclusive: " << vr.reason << "\n";
          return 2;
        }
        bool round = stable_rep_isomorphic(alg, psi(alg, lifted), rep);
        if (!vr.ok || !round) {
          std::cerr << "internal error: lifted representation failed verification\n";
          return 2;
        }
      }
      Json j = gp_rep_json(alg, lifted);
      if (check) j["checked"] = true;
      emit(j);
    } else if (verify->parsed()) {
      BoundQuiverAlgebra alg = load_algebra(alg_path, cfg);
      GpRep rep = parse_gp_rep(alg, read_json_file(rep_path), dirname_of(rep_path));
      Rng rng(cfg.seed);
      RepVerifyResult vr = verify_gp_rep(alg, rep, cfg.prime, rng);
      if (cfg.format == "json") {
        Json j{{"schema", "gsemi/verify/v1"}, {"ok", vr.ok}};
        if (!vr.ok) {
          j["vertex"] = vr.failing_vertex >= 0 ? rep.q.vertices[vr.failing_vertex] : "";
          j["reason"] = vr.reason;
          j["inconclusive"] = vr.inconclusive;
        }
        emit(j);
      } else if (vr.ok) {
        std::cout << "Gorenstein projective: yes (certified by decomposition against the known "
                     "indecomposables)\n";
      } else if (vr.inconclusive) {
        std::cout << "Gorenstein projective: inconclusive, evidence only (" << vr.reason << ")\n";
      } else {
        std::cout << "Gorenstein projective: no (" << vr.reason << ")\n";
      }
      if (vr.inconclusive) return 2;
    }
  } catch (const OracleInconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
