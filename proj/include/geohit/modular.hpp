#pragma once

#include <optional>
#include <vector>

#include "geohit/instance.hpp"

namespace geohit {

/// Top-level partition of a connected graph into maximal strong modules.
struct ModularPartition {
  std::vector<VertexSet> modules;
  /// adjacent[i][j]: all edges between modules i and j are present.
  std::vector<std::vector<char>> adjacent;
  /// module_of[v]: index of the module containing v.
  std::vector<int> module_of;

  int size() const { return static_cast<int>(modules.size()); }
};

bool is_module(const WeightedGraph& g, const VertexSet& m);

/// Smallest module of g containing `seed`.
VertexSet module_closure(const WeightedGraph& g, VertexSet seed);

/// Maximal strong modules of a connected graph: co-components when the
/// complement is disconnected, otherwise the maximal proper modules (all
/// singletons when g is prime). Throws Disconnected.
ModularPartition modular_partition(const WeightedGraph& g);

struct ModularStats {
  long long module_branches = 0;
  long long cover_branches = 0;
};

/// Exact solver parameterized by k plus modular-width (unit weights,
/// Standard variant). Throws VariantUnsupported, WeightedUnsupported,
/// UnreachablePair.
std::optional<Solution> solve_modular(const SpiInstance& inst, const Deadline& deadline = {},
                                      ModularStats* stats = nullptr);

}  // namespace geohit
