#include <doctest.h>

#include <set>

#include "helpers.hpp"

#include "gsemi/io.hpp"

using namespace gsemi;
using gsemi::testing::load;
using gsemi::testing::random_stable_rep;

namespace {

Quiver a2_quiver() {
  Quiver q;
  q.vertices = {"v1", "v2"};
  q.arrows = {{"q", 0, 1}};
  return q;
}

StableRep kx2_rep_a2(const BoundQuiverAlgebra& kx2, std::uint32_t scalar) {
  StableRep r;
  r.q = a2_quiver();
  int x = kx2.quiver.arrow_index("x");
  r.summands = {{x}, {x}};
  Mat m(1, 1, kx2.field_char);
  m.set(0, 0, scalar);
  r.maps = {m};
  return r;
}

}  // namespace

TEST_CASE("stable rep validation") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  StableRep ok = kx2_rep_a2(kx2, 1);
  CHECK_NOTHROW(validate_stable_rep(kx2, ok));

  BoundQuiverAlgebra ba = load("ba.alg");
  StableRep bad;
  bad.q = a2_quiver();
  bad.summands = {{ba.quiver.arrow_index("b")}, {}};
  bad.maps = {Mat(0, 1, 101)};
  CHECK_THROWS_AS(validate_stable_rep(ba, bad), PatternViolationError);

  BoundQuiverAlgebra nak = load("nak32.alg");
  StableRep mixed;
  mixed.q = a2_quiver();
  mixed.summands = {{nak.quiver.arrow_index("a1")}, {nak.quiver.arrow_index("a2")}};
  Mat m(1, 1, 101);
  m.set(0, 0, 1);  // nonzero entry between distinct stable summands
  mixed.maps = {m};
  CHECK_THROWS_AS(validate_stable_rep(nak, mixed), PatternViolationError);
}

TEST_CASE("lift over a single vertex returns the stable fiber") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  StableRep r;
  r.q.vertices = {"v1"};
  r.summands = {{kx2.quiver.arrow_index("x")}};
  GpRep h = lift(kx2, r);
  REQUIRE(h.modules[0].summands.size() == 1);
  CHECK(h.modules[0].summands[0] == GpIndec::arrow_ideal(0));
}

TEST_CASE("lift over A_2 adds the enveloping projective") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");

  GpRep h = lift(kx2, kx2_rep_a2(kx2, 1));
  REQUIRE(h.modules[0].summands.size() == 1);
  REQUIRE(h.modules[1].summands.size() == 2);
  CHECK(h.modules[1].summands[0] == GpIndec::projective(0));
  CHECK(h.modules[1].summands[1] == GpIndec::arrow_ideal(0));
  CHECK(h.maps[0].at(0, 0) == MorEntry::emb(1));
  CHECK(h.maps[0].at(1, 0) == MorEntry::id(1));

  GpRep h0 = lift(kx2, kx2_rep_a2(kx2, 0));
  CHECK(h0.maps[0].at(0, 0) == MorEntry::emb(1));
  CHECK(h0.maps[0].at(1, 0) == MorEntry::zero());

  Rng rng(0);
  CHECK(verify_gp_rep(kx2, h, 101, rng).ok);
  CHECK(verify_gp_rep(kx2, h0, 101, rng).ok);
}

TEST_CASE("psi recovers the stable representation") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  StableRep r = kx2_rep_a2(kx2, 1);
  StableRep back = psi(kx2, lift(kx2, r));
  CHECK(back.summands == r.summands);
  CHECK(back.maps[0] == r.maps[0]);
  CHECK(stable_rep_isomorphic(kx2, back, r));
}

TEST_CASE("psi drops the approximation legs into projectives") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  GpRep rep;
  rep.q = a2_quiver();
  rep.modules.resize(2);
  rep.modules[0].summands = {GpIndec::arrow_ideal(0)};
  rep.modules[1].summands = {GpIndec::projective(0)};
  SymbolicMorphism f(1, 1);
  f.at(0, 0) = MorEntry::emb(1);
  rep.maps = {f};
  Rng rng(0);
  CHECK(verify_gp_rep(kx2, rep, 101, rng).ok);
  StableRep s = psi(kx2, rep);
  CHECK(s.summands[0] == std::vector<int>{0});
  CHECK(s.summands[1].empty());
  CHECK(s.maps[0].rows() == 0);
  CHECK(s.maps[0].cols() == 1);
}

TEST_CASE("purely projective representations verify as Gorenstein projective") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  GpRep rep;
  rep.q = a2_quiver();
  rep.modules.resize(2);
  rep.modules[0].summands = {GpIndec::projective(0)};
  rep.modules[1].summands = {GpIndec::projective(0)};
  SymbolicMorphism f(1, 1);
  f.at(0, 0) = MorEntry::id(1);
  rep.maps = {f};
  Rng rng(0);
  CHECK(verify_gp_rep(kx2, rep, 101, rng).ok);
}

TEST_CASE("an algebra without stable classes exports an empty document") {
  BoundQuiverAlgebra a2 = load("a2.alg");
  std::vector<StableComponent> comps;
  Json j = components_json(a2, comps, 2);
  CHECK(j["count"] == 0);
  CHECK(j["components"].empty());
  std::string dot = components_dot(a2, comps);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);
}

TEST_CASE("psi kills purely projective representations") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  GpRep rep;
  rep.q = a2_quiver();
  rep.modules.resize(2);
  rep.modules[0].summands = {GpIndec::projective(0)};
  rep.modules[1].summands = {GpIndec::projective(0)};
  SymbolicMorphism f(1, 1);
  f.at(0, 0) = MorEntry::id(1);
  rep.maps = {f};
  StableRep s = psi(kx2, rep);
  CHECK(s.summands[0].empty());
  CHECK(s.summands[1].empty());
}

TEST_CASE("verify_gp_rep rejects a non-injective structure map") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  GpRep rep;
  rep.q = a2_quiver();
  rep.modules.resize(2);
  rep.modules[0].summands = {GpIndec::projective(0)};
  rep.modules[1].summands = {GpIndec::arrow_ideal(0)};
  rep.maps = {SymbolicMorphism(1, 1)};  // zero map from a nonzero module
  Rng rng(0);
  RepVerifyResult res = verify_gp_rep(kx2, rep, 101, rng);
  CHECK_FALSE(res.ok);
  CHECK_FALSE(res.inconclusive);
  CHECK(res.failing_vertex == 1);
}

TEST_CASE("random stable representations lift and round-trip") {
  for (const char* name : {"kx2.alg", "nak32.alg"}) {
    BoundQuiverAlgebra alg = load(name);
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
      StableRep r = random_stable_rep(alg, rng, 101);
      GpRep h = lift(alg, r);
      RepVerifyResult res = verify_gp_rep(alg, h, 101, rng);
      CHECK(res.ok);
      CHECK(stable_rep_isomorphic(alg, psi(alg, h), r));
    }
  }
}

TEST_CASE("S_n indecomposable counts") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  CHECK(sn_count(kx2, 2) == 5);
  CHECK(sn_count(kx2, 3) == 9);
  CHECK(sn_nonprojective_count(kx2, 3) == 6);

  BoundQuiverAlgebra a2 = load("a2.alg");
  for (int n = 1; n <= 4; ++n) {
    CHECK(sn_count(a2, n) == 2 * n);
    CHECK(sn_nonprojective_count(a2, n) == 0);
  }

  BoundQuiverAlgebra nak = load("nak32.alg");
  CHECK(sn_count(nak, 2) == 3 * 2 + 3 * 3);

  for (const char* name : {"kx2.alg", "nak32.alg", "ex313.alg"}) {
    BoundQuiverAlgebra alg = load(name);
    long s = static_cast<long>(alg.quiver.vertices.size());
    long m = check_gsemisimple(alg).m;
    for (int n = 1; n <= 4; ++n)
      CHECK(sn_count(alg, n) == n * s + m * n * (n + 1) / 2);
  }
}

TEST_CASE("almost split sequences match the three families") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  int x = kx2.quiver.arrow_index("x");
  AlmostSplitSequence b = almost_split_sn(kx2, 3, SnObject::interval(3, 3, x));
  CHECK(b.family == "boundary");
  CHECK(b.left == SnObject::interval(1, 3, x));
  REQUIRE(b.middles.size() == 1);
  CHECK(b.middles[0] == SnObject::interval(1, 2, x));

  // Ending at (0 -> a2 L) in S_2: the end is [2,2,a3] since Omega(a3 L) = a2 L.
  BoundQuiverAlgebra nak = load("nak32.alg");
  int a2i = nak.quiver.arrow_index("a2"), a3i = nak.quiver.arrow_index("a3");
  CHECK(syzygy_arrow(nak, a3i) == a2i);
  AlmostSplitSequence s = almost_split_sn(nak, 2, SnObject::interval(2, 2, a3i));
  CHECK(s.left == SnObject::interval(1, 2, a2i));
  REQUIRE(s.middles.size() == 1);
  CHECK(s.middles[0] == SnObject::interval(1, 1, a2i));
  // [1,1,a2] realizes to the inclusion a1 L -> e_2 L.
  RealizedRep mid = realize_sn_object(nak, 2, s.middles[0], 101);
  CHECK(mid.vertex[0].dim() == 1);
  CHECK(mid.vertex[1].dim() == 2);

  AlmostSplitSequence t = almost_split_sn(kx2, 3, SnObject::interval(1, 3, x));
  CHECK(t.family == "top");
  CHECK(t.left == SnObject::interval(1, 1, x));
  REQUIRE(t.middles.size() == 2);
  CHECK(t.middles[0] == SnObject::proj_interval(0, 0));
  CHECK(t.middles[1] == SnObject::interval(2, 3, x));

  AlmostSplitSequence d = almost_split_sn(kx2, 3, SnObject::interval(2, 2, x));
  CHECK(d.family == "diagonal");
  CHECK(d.left == SnObject::interval(3, 3, x));
  REQUIRE(d.middles.size() == 2);
  CHECK(d.middles[0] == SnObject::proj_interval(2, 0));
  CHECK(d.middles[1] == SnObject::interval(2, 3, x));

  CHECK_THROWS_AS(almost_split_sn(kx2, 3, SnObject::proj_interval(0, 0)), NotCoveredError);
  CHECK_THROWS_AS(almost_split_sn(kx2, 3, SnObject::interval(1, 2, x)), NotCoveredError);
}

TEST_CASE("every covered family realizes to an exact sequence") {
  for (const char* name : {"kx2.alg", "nak32.alg", "ex313.alg"}) {
    for (std::uint32_t p : {2u, 101u}) {
      BoundQuiverAlgebra alg = load(name, p);
      for (const auto& cls : stable_classes(alg))
        for (int h : cls.member_arrows)
          for (int n : {1, 2, 3}) {
            std::vector<SnObject> ends;
            ends.push_back(SnObject::interval(n, n, h));
            if (n >= 2) ends.push_back(SnObject::interval(1, n, h));
            for (int i = 1; i < n; ++i) ends.push_back(SnObject::interval(i, i, h));
            for (const SnObject& end : ends) {
              AlmostSplitSequence seq = almost_split_sn(alg, n, end);
              CHECK(verify_almost_split(alg, n, seq, p));
            }
          }
    }
  }
}

TEST_CASE("the S_2 component carries the three expected vertex families") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  StableComponent c = knit_stable_component(kx2, 2, 0);
  CHECK(c.exact);
  CHECK(c.vertices.size() == 3);
  CHECK(c.arrows.size() == 3);

  BoundQuiverAlgebra nak = load("nak32.alg");
  StableComponent cn = knit_stable_component(nak, 2, 0);
  CHECK(cn.vertices.size() == 9);
  std::set<SnObject> verts(cn.vertices.begin(), cn.vertices.end());
  auto nak_classes = stable_classes(nak);
  for (int h : nak_classes[0].member_arrows) {
    CHECK(verts.count(SnObject::interval(1, 1, h)));
    CHECK(verts.count(SnObject::interval(1, 2, h)));
    CHECK(verts.count(SnObject::interval(2, 2, h)));
  }
}

TEST_CASE("components partition the non-projective objects and match C(Lambda)") {
  for (const char* name : {"kx2.alg", "nak32.alg", "ex313.alg"}) {
    BoundQuiverAlgebra alg = load(name);
    auto classes = stable_classes(alg);
    for (int n : {2, 3}) {
      std::set<SnObject> seen;
      long total = 0;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        StableComponent comp = knit_stable_component(alg, n, static_cast<int>(c));
        total += static_cast<long>(comp.vertices.size());
        for (const auto& v : comp.vertices) CHECK(seen.insert(v).second);
      }
      CHECK(total == sn_nonprojective_count(alg, n));
    }
  }
}

TEST_CASE("tau is a bijection whose orbits close inside the component") {
  for (const char* name : {"kx2.alg", "nak32.alg", "ex313.alg"}) {
    BoundQuiverAlgebra alg = load(name);
    for (int n : {2, 3, 4}) {
      StableComponent c = knit_stable_component(alg, n, 0);
      std::vector<int> indeg(c.vertices.size(), 0);
      for (int t : c.tau) ++indeg[t];
      for (int d : indeg) CHECK(d == 1);
      // The orbit of the seed returns to the seed.
      int start = 0, cur = 0, steps = 0;
      do {
        cur = c.tau[cur];
        ++steps;
        REQUIRE(steps <= static_cast<int>(c.vertices.size()) + 1);
      } while (cur != start);
    }
  }
}

TEST_CASE("meshes have at most two stable middle terms") {
  for (const char* name : {"nak32.alg", "ex313.alg"}) {
    BoundQuiverAlgebra alg = load(name);
    for (int n : {2, 3, 4}) {
      StableComponent c = knit_stable_component(alg, n, 0);
      std::vector<int> indeg(c.vertices.size(), 0);
      for (const auto& [a, b] : c.arrows) ++indeg[b];
      for (int d : indeg) CHECK(d <= 2);
    }
  }
}

TEST_CASE("the knitted component is connected") {
  BoundQuiverAlgebra ex = load("ex313.alg");
  StableComponent c = knit_stable_component(ex, 3, 0);
  std::vector<std::set<int>> adj(c.vertices.size());
  for (const auto& [a, b] : c.arrows) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::set<int> seen{0};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  CHECK(seen.size() == c.vertices.size());
}

TEST_CASE("divisibility reports") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  StableComponent c3 = knit_stable_component(kx2, 3, 0);
  CHECK(c3.vertices.size() == 6);
  DivisibilityReport d3 = divisibility_report(3, c3);
  CHECK(d3.divisor == 2);
  CHECK(d3.pass);

  StableComponent c2 = knit_stable_component(kx2, 2, 0);
  DivisibilityReport d2 = divisibility_report(2, c2);
  CHECK(d2.divisor == 3);
  CHECK(d2.pass);
}

TEST_CASE("DOT export is deterministic with the expected shape") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  StableComponent c = knit_stable_component(kx2, 2, 0);
  std::string dot = component_dot(kx2, c);
  CHECK(dot == component_dot(kx2, c));
  std::size_t solid = 0, dashed = 0, nodes = 0, pos = 0;
  for (pos = 0; (pos = dot.find("label=\"[", pos)) != std::string::npos; ++pos) ++nodes;
  for (pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++solid;
  for (pos = 0; (pos = dot.find("style=dashed", pos)) != std::string::npos; ++pos) ++dashed;
  CHECK(nodes == 3);
  CHECK(dashed == 3);
  CHECK(solid - dashed == 3);

  BoundQuiverAlgebra nak = load("nak32.alg");
  std::string rq = relation_quiver_dot(nak, relation_quiver(nak));
  std::size_t edges = 0;
  for (pos = 0; (pos = rq.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 3);
}

TEST_CASE("rep JSON round trip") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  StableRep r = kx2_rep_a2(kx2, 1);
  Json doc = stable_rep_json(kx2, r);
  doc["quiver"] = Json{{"vertices", {"v1", "v2"}},
                       {"arrows", {Json{{"id", "q"}, {"src", "v1"}, {"tgt", "v2"}}}}};
  StableRep back = parse_stable_rep(kx2, doc, ".", 101);
  CHECK(back.summands == r.summands);
  CHECK(back.maps[0] == r.maps[0]);

  GpRep h = lift(kx2, r);
  Json hdoc = gp_rep_json(kx2, h);
  hdoc["quiver"] = doc["quiver"];
  GpRep hback = parse_gp_rep(kx2, hdoc, ".");
  REQUIRE(hback.modules[1].summands.size() == 2);
  CHECK(hback.modules[1].summands == h.modules[1].summands);
  CHECK(hback.maps[0].at(0, 0) == h.maps[0].at(0, 0));
}
