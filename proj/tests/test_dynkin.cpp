#include <doctest.h>

#include "helpers.hpp"

#include "gsemi/dynkin.hpp"
#include "gsemi/io.hpp"

using namespace gsemi;
using gsemi::testing::fixture;
using gsemi::testing::load;

namespace {

// A star with legs of the given lengths hanging off vertex 0, with an
// arbitrary orientation (all arrows point away from the center).
Quiver star(const std::vector<int>& legs) {
  Quiver q;
  q.vertices.push_back("c");
  int prev;
  for (std::size_t l = 0; l < legs.size(); ++l) {
    prev = 0;
    for (int k = 0; k < legs[l]; ++k) {
      int v = static_cast<int>(q.vertices.size());
      q.vertices.push_back("v" + std::to_string(v));
      q.arrows.push_back({"a" + std::to_string(q.arrows.size()), prev, v});
      prev = v;
    }
  }
  return q;
}

}  // namespace

TEST_CASE("Dynkin recognition") {
  CHECK(classify_underlying_graph(parse_quiver_file(fixture("a3.quiver"))) == DynkinType{'A', 3});
  CHECK(classify_underlying_graph(parse_quiver_file(fixture("d4.quiver"))) == DynkinType{'D', 4});
  CHECK(classify_underlying_graph(parse_quiver_file(fixture("kronecker.quiver"))) == std::nullopt);

  CHECK(classify_underlying_graph(star({1})) == DynkinType{'A', 2});
  CHECK(classify_underlying_graph(star({1, 1})) == DynkinType{'A', 3});
  CHECK(classify_underlying_graph(star({1, 1, 1})) == DynkinType{'D', 4});
  CHECK(classify_underlying_graph(star({1, 1, 4})) == DynkinType{'D', 7});
  CHECK(classify_underlying_graph(star({1, 2, 2})) == DynkinType{'E', 6});
  CHECK(classify_underlying_graph(star({1, 2, 3})) == DynkinType{'E', 7});
  CHECK(classify_underlying_graph(star({1, 2, 4})) == DynkinType{'E', 8});
  CHECK(classify_underlying_graph(star({1, 2, 5})) == std::nullopt);
  CHECK(classify_underlying_graph(star({2, 2, 2})) == std::nullopt);
  CHECK(classify_underlying_graph(star({1, 1, 1, 1})) == std::nullopt);

  Quiver one;
  one.vertices.push_back("1");
  CHECK(classify_underlying_graph(one) == DynkinType{'A', 1});

  // Underlying triangle, acyclically oriented.
  Quiver tri;
  tri.vertices = {"1", "2", "3"};
  tri.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}};
  CHECK(classify_underlying_graph(tri) == std::nullopt);

  Quiver disc;
  disc.vertices = {"1", "2"};
  CHECK_THROWS_AS(classify_underlying_graph(disc), DisconnectedError);
}

TEST_CASE("0 roots by closure match the classical counts") {
  for (int k = 1; k <= 8; ++k)
    CHECK(positive_roots(DynkinType{'A', k}).size() ==
          static_cast<std::size_t>(k * (k + 1) / 2));
  CHECK(positive_roots(DynkinType{'D', 4}).size() == 12);
  CHECK(positive_roots(DynkinType{'D', 5}).size() == 20);
  CHECK(positive_roots(DynkinType{'D', 6}).size() == 30);
  CHECK(positive_roots(DynkinType{'E', 6}).size() == 36);
  CHECK(positive_roots(DynkinType{'E', 7}).size() == 63);
  CHECK(positive_roots(DynkinType{'E', 8}).size() == 120);
}

TEST_CASE("classification is orientation invariant") {
  Quiver q = parse_quiver_file(fixture("a3.quiver"));
  auto t = classify_underlying_graph(q);
  std::swap(q.arrows[0].src, q.arrows[0].tgt);
  CHECK(classify_underlying_graph(q) == t);
  std::swap(q.arrows[1].src, q.arrows[1].tgt);
  CHECK(classify_underlying_graph(q) == t);
}

TEST_CASE("CM classification") {
  BoundQuiverAlgebra kx2 = load("kx2.alg");
  CmReport r = cm_classification(kx2, parse_quiver_file(fixture("a3.quiver")));
  CHECK(r.cm_finite);
  CHECK(r.gp_count == 6);

  CmReport k = cm_classification(kx2, parse_quiver_file(fixture("kronecker.quiver")));
  CHECK_FALSE(k.cm_finite);
  CHECK_FALSE(k.count_is_finite);

  BoundQuiverAlgebra a2 = load("a2.alg");
  CmReport h = cm_classification(a2, parse_quiver_file(fixture("kronecker.quiver")));
  CHECK(h.cm_finite);
  CHECK(h.gp_count == 0);
}

TEST_CASE("the Dynkin count matches the interval count over linear quivers") {
  for (const char* name : {"kx2.alg", "a2.alg", "nak32.alg", "ex313.alg", "ba.alg"}) {
    BoundQuiverAlgebra alg = load(name);
    for (int n = 1; n <= 4; ++n) {
      long roots = static_cast<long>(positive_roots(DynkinType{'A', n}).size());
      long m = check_gsemisimple(alg).m;
      CHECK(m * roots == sn_nonprojective_count(alg, n));
    }
  }
}
