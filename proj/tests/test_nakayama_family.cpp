// The cyclic radical-square-zero algebras, one for every cycle length: a
// single orbit of every period, including the even ones the file fixtures
// do not cover.

#include <doctest.h>

#include "helpers.hpp"

using namespace gsemi;

namespace {

// Cycle quiver on n vertices with every length-2 path killed.
BoundQuiverAlgebra cyclic_radical_square_zero(int n) {
  BoundQuiverAlgebra alg;
  for (int v = 1; v <= n; ++v) alg.quiver.vertices.push_back(std::to_string(v));
  for (int i = 0; i < n; ++i)
    alg.quiver.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
  for (int i = 0; i < n; ++i) alg.relations.emplace_back(i, (i + 1) % n);
  validate_algebra(alg);
  alg.field_char = 101;
  alg.name = "Z" + std::to_string(n);
  return alg;
}

}  // namespace

TEST_CASE("cyclic radical-square-zero algebras for every period") {
  Rng rng(11);
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    BoundQuiverAlgebra alg = cyclic_radical_square_zero(n);

    CHECK(enumerate_nonzero_paths(alg).size() == static_cast<std::size_t>(2 * n));
    GsReport gs = check_gsemisimple(alg);
    CHECK(gs.m == n);
    REQUIRE(gs.classes.size() == 1);
    CHECK(gs.classes[0].period == n);
    CHECK(singularity_descriptor(alg) == std::vector<int>{n});
    CHECK(check_one_gorenstein(alg).one_gorenstein);

    // Oracle agreement for the whole orbit.
    for (int a = 0; a < n; ++a) {
      MatrixModule ideal = realize_gp_indec(alg, GpIndec::arrow_ideal(a), 101);
      CHECK(ideal.dim() == 1);
      CoverResult cov = projective_cover_and_syzygy(alg, ideal);
      GpIndec omega = syzygy_step(alg, GpIndec::arrow_ideal(a), SyzygyDir::Forward);
      CHECK(is_isomorphic(alg, cov.syzygy, realize_gp_indec(alg, omega, 101), rng) ==
            IsoResult::Yes);
    }

    // The S_2 component has 3n vertices, and the tau-orbit of the boundary
    // vertex has length 3n for odd n and 3n/2 for even n (tau cubed moves
    // two syzygy steps).
    StableComponent comp = knit_stable_component(alg, 2, 0);
    CHECK(comp.vertices.size() == static_cast<std::size_t>(3 * n));
    CHECK(divisibility_report(2, comp).pass);
    int seed = -1;
    for (std::size_t i = 0; i < comp.vertices.size(); ++i)
      if (comp.vertices[i] == SnObject::interval(2, 2, 0)) seed = static_cast<int>(i);
    REQUIRE(seed >= 0);
    int cur = seed, steps = 0;
    do {
      cur = comp.tau[cur];
      ++steps;
    } while (cur != seed && steps <= 3 * n + 1);
    CHECK(steps == (n % 2 == 0 ? 3 * n / 2 : 3 * n));

    // Almost split families stay exact for a higher-period class.
    for (int nn : {2, 3}) {
      CHECK(verify_almost_split(alg, nn, almost_split_sn(alg, nn, SnObject::interval(nn, nn, 0)),
                                101));
      CHECK(verify_almost_split(alg, nn, almost_split_sn(alg, nn, SnObject::interval(1, nn, 0)),
                                101));
    }
  }
}
