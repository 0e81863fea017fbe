#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsemi/qalg.hpp"

namespace gsemi {

struct DisconnectedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DynkinType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 1;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  bool operator==(const DynkinType&) const = default;
};

// ADE recognition of the underlying graph; nullopt on non-Dynkin shapes
// (cycles, multiple edges, non-ADE trees). Throws on disconnected input.
std::optional<DynkinType> classify_underlying_graph(const Quiver& q);

// Positive roots of the Tits form, found by closure under adding simple roots
// (coordinates bounded by 6, enough for the highest root of E8). Sorted by
// (height, lexicographic).
std::vector<std::vector<int>> positive_roots(const DynkinType& t);

struct CmReport {
  bool dynkin = false;
  std::optional<DynkinType> type;
  long root_count = 0;
  bool cm_finite = false;
  bool count_is_finite = false;
  long gp_count = 0;  // meaningful only when count_is_finite
};

CmReport cm_classification(const BoundQuiverAlgebra& alg, const Quiver& q);

}  // namespace gsemi
