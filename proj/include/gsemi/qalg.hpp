#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsemi {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfiniteDimensionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonQuadraticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotComposableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string id;
  int src = -1;
  int tgt = -1;
};

struct Quiver {
  std::vector<std::string> vertices;  // declaration order
  std::vector<Arrow> arrows;          // declaration order

  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;
  std::vector<int> arrows_into(int v) const;
  std::vector<int> arrows_out_of(int v) const;
  bool is_acyclic() const;
  bool underlying_connected() const;
  // Longest-source-first layering V_1, V_2, ... used by the lift induction;
  // V_1 holds the vertices with no incoming arrow. Requires acyclicity.
  std::vector<std::vector<int>> source_layers() const;
};

// A path in the quiver. Arrows are stored in traversal order (first arrow
// traversed first); the printed form is right-to-left, a_m*...*a_1.
class Path {
public:
  static Path trivial(int vertex) {
    Path p;
    p.base_ = vertex;
    return p;
  }
  static Path of_arrows(std::vector<int> traversal);

  bool is_trivial() const { return arrows_.empty(); }
  int length() const { return static_cast<int>(arrows_.size()); }
  int base() const { return base_; }
  const std::vector<int>& arrows() const { return arrows_; }

  int source(const Quiver& q) const { return is_trivial() ? base_ : q.arrows[arrows_.front()].src; }
  int target(const Quiver& q) const { return is_trivial() ? base_ : q.arrows[arrows_.back()].tgt; }

  std::string label(const Quiver& q) const;
  bool operator==(const Path&) const = default;

private:
  int base_ = -1;
  std::vector<int> arrows_;
};

struct BoundQuiverAlgebra {
  Quiver quiver;
  // Each relation is the killed length-2 path as a traversal pair
  // (first, second) with t(first) = s(second). In the right-to-left
  // notation of the input format this is the token `second*first`.
  std::vector<std::pair<int, int>> relations;
  std::uint32_t field_char = 101;  // oracle metadata only
  std::string name;

  bool in_ideal(int first, int second) const;
  // The unique f with (f, alpha) in I, i.e. the arrow with Omega(alpha L) = f L
  // when alpha is perfect. Empty when no relation ends at alpha.
  std::vector<int> killers_of(int alpha) const;   // all f with (f, alpha) in I
  std::vector<int> killed_after(int alpha) const; // all s with (alpha, s) in I
};

BoundQuiverAlgebra parse_algebra(const std::string& text);
BoundQuiverAlgebra parse_algebra_file(const std::string& path);
void validate_algebra(const BoundQuiverAlgebra& alg);

// Concatenation pq (first q, then p). Returns nullopt when the composite is
// composable but killed by I; throws NotComposableError when t(q) != s(p).
std::optional<Path> compose_paths(const BoundQuiverAlgebra& alg, const Path& p, const Path& q);

bool path_is_nonzero(const BoundQuiverAlgebra& alg, const Path& p);

// All nonzero paths, trivial ones included, sorted by (length, lexicographic
// arrow ids). For a monomial algebra this is a k-basis of the algebra.
std::vector<Path> enumerate_nonzero_paths(const BoundQuiverAlgebra& alg);

BoundQuiverAlgebra opposite_algebra(const BoundQuiverAlgebra& alg);

}  // namespace gsemi
