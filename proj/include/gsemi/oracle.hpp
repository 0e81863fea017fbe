#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsemi/fp.hpp"
#include "gsemi/gp.hpp"
#include "gsemi/qalg.hpp"

namespace gsemi {

struct ZeroModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotEquivariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OracleInconclusiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A module given by explicit data over F_p: a labeled basis graded by the
// vertices (a basis path sits at its source vertex) and one action matrix per
// arrow. action[a] maps the grade-t(a) coordinates into the grade-s(a) ones.
struct MatrixModule {
  std::uint32_t p = 101;
  std::vector<std::string> labels;
  std::vector<int> grade;
  std::vector<Mat> action;

  int dim() const { return static_cast<int>(grade.size()); }
  std::vector<int> dim_vector(int num_vertices) const;
};

struct SymbolicModule {
  std::vector<GpIndec> summands;
};

struct MorEntry {
  enum class K { Zero, Id, Emb };
  K k = K::Zero;
  std::uint32_t c = 0;

  static MorEntry zero() { return {K::Zero, 0}; }
  static MorEntry id(std::uint32_t c) { return {K::Id, c}; }
  static MorEntry emb(std::uint32_t c) { return {K::Emb, c}; }
  bool operator==(const MorEntry&) const = default;
};

// Block matrix indexed by (target summand, source summand).
struct SymbolicMorphism {
  int rows = 0;
  int cols = 0;
  std::vector<MorEntry> entries;

  SymbolicMorphism() = default;
  SymbolicMorphism(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}
  MorEntry& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const MorEntry& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

void validate_matrix_module(const BoundQuiverAlgebra& alg, const MatrixModule& m);

MatrixModule realize_gp_indec(const BoundQuiverAlgebra& alg, const GpIndec& g, std::uint32_t p);
MatrixModule realize_sum(const BoundQuiverAlgebra& alg, const SymbolicModule& m, std::uint32_t p);
MatrixModule zero_module(const BoundQuiverAlgebra& alg, std::uint32_t p);
MatrixModule direct_sum(const BoundQuiverAlgebra& alg, const MatrixModule& a, const MatrixModule& b);
// The regular representation, i.e. the direct sum of all e_v L.
MatrixModule regular_module(const BoundQuiverAlgebra& alg, std::uint32_t p);

Mat realize_morphism(const BoundQuiverAlgebra& alg, const SymbolicMorphism& f,
                     const SymbolicModule& src, const SymbolicModule& tgt, std::uint32_t p);

// The basis inclusion alpha L -> e_{t(alpha)} L (the minimal left projective
// approximation of a perfect arrow ideal).
Mat embedding_matrix(const BoundQuiverAlgebra& alg, int alpha, std::uint32_t p);
// The cover map e_{s(alpha)} L ->> alpha L, q |-> alpha q.
Mat cover_matrix(const BoundQuiverAlgebra& alg, int alpha, std::uint32_t p);

struct CoverResult {
  std::vector<int> cover_vertices;  // one entry per indecomposable summand
  MatrixModule cover;
  Mat map;             // cover -> M, surjective
  MatrixModule syzygy;
  Mat inclusion;       // syzygy -> cover, columns are the kernel basis
};
CoverResult projective_cover_and_syzygy(const BoundQuiverAlgebra& alg, const MatrixModule& m);

MatrixModule submodule(const BoundQuiverAlgebra& alg, const MatrixModule& m, const Mat& basis_cols);
struct QuotientResult {
  MatrixModule quotient;
  Mat projection;  // M -> quotient coordinates
};
QuotientResult quotient_module(const BoundQuiverAlgebra& alg, const MatrixModule& m,
                               const Mat& sub_basis_cols);

std::vector<Mat> hom_space(const BoundQuiverAlgebra& alg, const MatrixModule& src,
                           const MatrixModule& tgt);
int hom_dim(const BoundQuiverAlgebra& alg, const MatrixModule& src, const MatrixModule& tgt);

enum class IsoResult { Yes, No, Inconclusive };
IsoResult is_isomorphic(const BoundQuiverAlgebra& alg, const MatrixModule& a,
                        const MatrixModule& b, Rng& rng);

// dim Ext^i(M, Lambda) for i = 1..bound, computed from the minimal projective
// resolution of M.
std::vector<int> ext_dims(const BoundQuiverAlgebra& alg, const MatrixModule& m, int bound);
std::vector<bool> ext_vanishing(const BoundQuiverAlgebra& alg, const MatrixModule& m, int bound);

// f then g must compose; true iff 0 -> src(f) -> src(g) -> tgt(g) -> 0 is exact.
bool verify_exact_sequence(const Mat& f, const Mat& g);

// Splits M into copies of the known Gorenstein projective indecomposables by
// repeatedly peeling direct summands (random retraction search). nullopt when
// the search stalls before M is exhausted.
std::optional<std::vector<GpIndec>> match_known_decomposition(const BoundQuiverAlgebra& alg,
                                                              const MatrixModule& m, Rng& rng);

}  // namespace gsemi
