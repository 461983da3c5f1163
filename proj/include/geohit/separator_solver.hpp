#pragma once

#include <map>
#include <optional>

#include "geohit/instance.hpp"

namespace geohit {

/// Instance where no terminal lies in Z: every terminal z in Z got a pendant z'
/// that replaces z in all pairs.
struct LiftedInstance {
  SpiInstance instance;
  std::map<Vertex, Vertex> z_pendants;
};

/// Pendant edges have length 0 on weighted inputs and 1 on unit-weighted ones.
/// Pairwise inputs are materialized first.
LiftedInstance lift_terminals(const SpiInstance& inst, const VertexSet& z);

/// Number of terminals in each component of g - z (components in
/// components_without order).
std::vector<int> terminals_per_component(const WeightedGraph& g, const VertexSet& z, const VertexSet& terminals);

struct SeparatorStats {
  long long z_branches = 0;
  long long y_branches = 0;
  std::size_t max_kernel_size = 0;
  std::size_t max_compressed_set = 0;
};

/// Exact solver given Z with |Z| <= p and at most q terminals per component
/// of G - Z. Throws SeparatorInvalid when the promise fails, UnreachablePair.
std::optional<Solution> solve_with_separator(const SpiInstance& inst, const VertexSet& z, int p, int q,
                                             const Deadline& deadline = {}, SeparatorStats* stats = nullptr);

/// Checks, by direct interval computation, that for all u, v outside Z the
/// interval I[u,v] minus Z and minus every I[z,z'] stays inside the
/// components of u and v in G - Z. Always true; a self-test hook.
bool check_interval_locality(const WeightedGraph& g, const VertexSet& z);

/// Equivalence on V where, inside each component C of G - Z, vertices are
/// grouped by the pairs over Z + (V(T) within C) they interrupt; vertices of
/// different components, and vertices of Z, are never grouped together.
/// Same representation as t_equivalence_classes.
TEquivPartition component_local_classes(const WeightedGraph& g, const DistanceMatrix& dist, const VertexSet& z,
                                        std::span<const VertexPair> pairs);

}  // namespace geohit
