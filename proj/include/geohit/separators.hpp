#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "geohit/graph.hpp"

namespace geohit {

enum class SeparatorKind { ViWitness, MultiwayCut, Multicut, PqSeparator };

std::string_view to_string(SeparatorKind kind);

/// A deletion set together with the parameters it witnesses. Only the
/// certify_* functions build these; each one recomputes q (and iota) and
/// throws SeparatorInvalid when the kind's condition fails.
struct SeparatorCertificate {
  VertexSet z;
  SeparatorKind kind = SeparatorKind::PqSeparator;
  int p = 0;
  /// Maximum number of terminals in one component of G - z. For ViWitness
  /// every vertex counts as a terminal, so q is the largest component size.
  int q = 0;
  /// ViWitness only: |z| + largest component size.
  int iota = 0;
};

int max_component_size(const WeightedGraph& g, const VertexSet& removed);
int max_terminals_per_component(const WeightedGraph& g, const VertexSet& removed, const VertexSet& terminals);

bool is_multiway_cut(const WeightedGraph& g, const VertexSet& terminals, const VertexSet& x);
/// Pairs with an endpoint in x count as separated.
bool is_multicut(const WeightedGraph& g, std::span<const VertexPair> pairs, const VertexSet& x);

SeparatorCertificate certify_vi(const WeightedGraph& g, VertexSet z);
SeparatorCertificate certify_multiway_cut(const WeightedGraph& g, const VertexSet& terminals, VertexSet x);
SeparatorCertificate certify_multicut(const WeightedGraph& g, std::span<const VertexPair> pairs, VertexSet x);
SeparatorCertificate certify_pq(const WeightedGraph& g, const VertexSet& terminals, VertexSet z, int q_bound);

struct VertexIntegrity {
  int iota = 0;
  SeparatorCertificate witness;
};

/// Exact vertex integrity by bounded branching, iota tried from 1 upward.
VertexIntegrity vertex_integrity(const WeightedGraph& g, const Deadline& deadline = {});

/// Smallest vertex multiway cut of size <= r that avoids the terminals, or
/// nullopt. Throws TerminalAdjacent when two terminals share an edge.
std::optional<SeparatorCertificate> multiway_cut(const WeightedGraph& g, const VertexSet& terminals, int r,
                                                 const Deadline& deadline = {});

/// Smallest vertex multicut of size <= r that avoids every terminal vertex,
/// or nullopt. Throws PairAdjacent when a pair is an edge.
std::optional<SeparatorCertificate> multicut(const WeightedGraph& g, std::span<const VertexPair> pairs, int r,
                                             const Deadline& deadline = {});

/// First Z (by size, then lexicographically) with |Z| <= p and at most q
/// terminals in each component of G - Z. Z may contain terminals.
/// Throws CapExceeded when g has more than `cap` vertices.
std::optional<SeparatorCertificate> pq_separator(const WeightedGraph& g, const VertexSet& terminals, int p, int q,
                                                 int cap = 24, const Deadline& deadline = {});

}  // namespace geohit
