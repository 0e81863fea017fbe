#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gsemi/oracle.hpp"

namespace gsemi {

struct NotCoveredError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PatternViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A representation of an acyclic quiver over the stable category: per vertex
// a multiset of perfect arrow ideals, per arrow a matrix over F_p whose
// (i, j) entry may be nonzero only when target summand i and source summand j
// are the same arrow ideal.
struct StableRep {
  Quiver q;
  std::vector<std::vector<int>> summands;  // per vertex: arrow indices
  std::vector<Mat> maps;                   // per arrow: |tgt summands| x |src summands|
};

struct GpRep {
  Quiver q;
  std::vector<SymbolicModule> modules;
  std::vector<SymbolicMorphism> maps;
};

void validate_stable_rep(const BoundQuiverAlgebra& alg, const StableRep& r);
StableRep canonicalize(const BoundQuiverAlgebra& alg, const StableRep& r);

// The density construction: H_v = G_v (+) sum over incoming arrows of the
// enveloping projectives of the already-built source fibers.
GpRep lift(const BoundQuiverAlgebra& alg, const StableRep& r);

// Stabilization: drops projective summands and keeps the scalar entries
// between arrow ideals.
StableRep psi(const BoundQuiverAlgebra& alg, const GpRep& rep);

// Vertexwise dimensions plus per-class matrix ranks, after canonicalization.
bool stable_rep_isomorphic(const BoundQuiverAlgebra& alg, const StableRep& a, const StableRep& b);

struct RepVerifyResult {
  bool ok = false;
  bool inconclusive = false;
  int failing_vertex = -1;
  std::string reason;
};
RepVerifyResult verify_gp_rep(const BoundQuiverAlgebra& alg, const GpRep& rep, std::uint32_t p,
                              Rng& rng);

// --- The monomorphism category S_n(Gprj) of the linear quiver A_n ---

// Interval(i, j, G): Omega(G) on vertices i..j followed by the projective
// cover of G on j+1..n. ProjInterval(k, P): P on vertices k+1..n, written
// [k,k,P] (for k = 0, [0,0,P]).
struct SnObject {
  enum class Kind { Interval, ProjInterval };
  Kind kind = Kind::Interval;
  int i = 1;
  int j = 1;
  int ref = -1;  // arrow index (Interval) or vertex index (ProjInterval)

  static SnObject interval(int i, int j, int arrow) { return {Kind::Interval, i, j, arrow}; }
  static SnObject proj_interval(int k, int vertex) {
    return {Kind::ProjInterval, k, k, vertex};
  }
  bool is_projective() const { return kind == Kind::ProjInterval; }
  std::string label(const BoundQuiverAlgebra& alg) const;
  bool operator==(const SnObject&) const = default;
  auto operator<=>(const SnObject&) const = default;
};

std::vector<SnObject> sn_indecomposables(const BoundQuiverAlgebra& alg, int n);
long sn_count(const BoundQuiverAlgebra& alg, int n);
long sn_nonprojective_count(const BoundQuiverAlgebra& alg, int n);

struct AlmostSplitSequence {
  SnObject left;
  std::vector<SnObject> middles;
  SnObject right;
  std::string family;  // "boundary", "top" or "diagonal"
};

AlmostSplitSequence almost_split_sn(const BoundQuiverAlgebra& alg, int n, const SnObject& end);

// A realized representation of A_n: a module per vertex and a matrix per
// arrow v_k -> v_{k+1}.
struct RealizedRep {
  std::vector<MatrixModule> vertex;
  std::vector<Mat> arrow;
};
RealizedRep realize_sn_object(const BoundQuiverAlgebra& alg, int n, const SnObject& obj,
                              std::uint32_t p);

struct RealizedSequence {
  RealizedRep left, middle, right;
  std::vector<Mat> f, g;  // per vertex
};
RealizedSequence realize_almost_split(const BoundQuiverAlgebra& alg, int n,
                                      const AlmostSplitSequence& seq, std::uint32_t p);
// Exactness at every vertex, commutation with the A_n structure maps, and
// vertexwise dimension additivity.
bool verify_almost_split(const BoundQuiverAlgebra& alg, int n, const AlmostSplitSequence& seq,
                         std::uint32_t p);

struct StableComponent {
  int n = 2;
  int class_index = 0;
  bool exact = true;  // n <= 2 has the closed-form component; n >= 3 is knitted
  std::vector<SnObject> vertices;
  std::vector<std::pair<int, int>> arrows;  // indices into vertices
  std::vector<int> tau;                     // vertex index -> vertex index
};

StableComponent knit_stable_component(const BoundQuiverAlgebra& alg, int n, int class_index);

struct DivisibilityReport {
  int n = 0;
  long cardinality = 0;
  long divisor = 0;
  bool pass = false;
};
DivisibilityReport divisibility_report(int n, const StableComponent& comp);

// Helpers shared with the CLI and the oracle tests.
int syzygy_arrow(const BoundQuiverAlgebra& alg, int arrow);          // Omega
int inverse_syzygy_arrow(const BoundQuiverAlgebra& alg, int arrow);  // Omega^{-1}
Quiver linear_quiver(int n);

}  // namespace gsemi
