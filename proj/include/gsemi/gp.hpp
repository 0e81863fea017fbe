#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsemi/qalg.hpp"

namespace gsemi {

struct NotStableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An indecomposable Gorenstein projective module: a vertex projective e_v L
// or the right ideal of a perfect arrow.
struct GpIndec {
  enum class Kind { Projective, ArrowIdeal };
  Kind kind = Kind::Projective;
  int index = -1;  // vertex index or arrow index

  static GpIndec projective(int v) { return {Kind::Projective, v}; }
  static GpIndec arrow_ideal(int a) { return {Kind::ArrowIdeal, a}; }
  bool is_projective() const { return kind == Kind::Projective; }

  std::string label(const BoundQuiverAlgebra& alg) const;
  bool operator==(const GpIndec&) const = default;
  auto operator<=>(const GpIndec&) const = default;
};

// Vertices are the arrows of the underlying quiver; one edge per relation,
// oriented in the syzygy direction: the edge of the relation (f, s) runs
// s -> f, so that one step from the vertex alpha lands on Omega(alpha L).
struct RelationQuiver {
  int num_arrows = 0;
  std::vector<std::pair<int, int>> edges;  // (from, to) = (second, first)
  std::vector<std::string> edge_labels;    // the defining relation, rendered
};

struct PerfectComponent {
  // Cyclically ordered arrows (a_1, ..., a_d), starting at the least arrow id
  // and following the syzygy direction: Omega(a_i L) = a_{i+1} L.
  std::vector<int> cycle;
};

struct StableClass {
  std::vector<int> member_arrows;  // syzygy order from the least arrow id
  int period = 0;                  // = member_arrows.size(), minimal
};

enum class SyzygyDir { Forward, Inverse };

struct GsReport {
  bool gsemisimple = true;
  std::string reason = "quadratic-monomial";
  int m = 0;
  std::vector<StableClass> classes;
  bool cm_finite = true;
};

struct OneGorensteinReport {
  bool one_gorenstein = true;
  std::vector<int> offending_arrows;
};

// 0 -> Omega(G) -> e_v L -> G -> 0 in Gprj, the almost split sequence ending
// at a non-projective G.
struct GprjAlmostSplit {
  GpIndec left;
  int cover_vertex = -1;
  GpIndec right;
};

RelationQuiver relation_quiver(const BoundQuiverAlgebra& alg);
std::vector<PerfectComponent> perfect_components(const BoundQuiverAlgebra& alg,
                                                 const RelationQuiver& rq);
std::vector<PerfectComponent> perfect_components(const BoundQuiverAlgebra& alg);

bool is_perfect_arrow(const BoundQuiverAlgebra& alg, int arrow);
// True when the cover e_{s(alpha)} L -> alpha L is injective, i.e. no
// relation has alpha as its second (later-traversed) arrow.
bool arrow_ideal_is_projective(const BoundQuiverAlgebra& alg, int arrow);

std::vector<GpIndec> gp_indecomposables(const BoundQuiverAlgebra& alg);
GpIndec syzygy_step(const BoundQuiverAlgebra& alg, const GpIndec& g, SyzygyDir dir);
std::vector<StableClass> stable_classes(const BoundQuiverAlgebra& alg);
int class_of_arrow(const std::vector<StableClass>& classes, int arrow);

GsReport check_gsemisimple(const BoundQuiverAlgebra& alg);
OneGorensteinReport check_one_gorenstein(const BoundQuiverAlgebra& alg);
// Multiset of orbit lengths {l(G)}, sorted ascending: the singularity
// category is the product of orbit categories D^b(mod k)/[l(G)].
std::vector<int> singularity_descriptor(const BoundQuiverAlgebra& alg);
GprjAlmostSplit almost_split_gprj(const BoundQuiverAlgebra& alg, const GpIndec& g);

std::string render_singularity(const std::vector<int>& periods);

}  // namespace gsemi
