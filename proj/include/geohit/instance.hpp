#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geohit/graph.hpp"

namespace geohit {

enum class Variant { Standard, Pairwise };

using Solution = VertexSet;

/// Graph + terminal pairs + budget. The pairwise variant stores a terminal
/// set Q and materializes T = all unordered pairs of Q on demand.
class SpiInstance {
 public:
  SpiInstance() = default;
  SpiInstance(WeightedGraph graph, std::vector<VertexPair> pairs, int budget);
  static SpiInstance pairwise(WeightedGraph graph, VertexSet q, int budget);

  const WeightedGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  Variant variant() const { return variant_; }
  int budget() const { return budget_; }

  /// Pairs as stored (Standard variant); empty for Pairwise.
  const std::vector<VertexPair>& stored_pairs() const { return pairs_; }
  /// Q (Pairwise variant); empty for Standard.
  const VertexSet& q() const { return q_; }

  /// The terminal pairs T in canonical order, materialized for Pairwise.
  std::vector<VertexPair> terminal_pairs() const;
  /// V(T), sorted.
  VertexSet terminals() const;

  /// Same instance in Standard form.
  SpiInstance materialized() const;
  SpiInstance with_budget(int budget) const;

  friend bool operator==(const SpiInstance&, const SpiInstance&) = default;

 private:
  WeightedGraph graph_;
  Variant variant_ = Variant::Standard;
  std::vector<VertexPair> pairs_;
  VertexSet q_;
  int budget_ = 0;
};

/// Parses the line-oriented .spi format; throws ParseError with a position.
SpiInstance parse_instance(std::string_view text);

/// Canonical text: header, sorted `e u v w` lines, then sorted `t` lines or one `q` line.
std::string serialize_instance(const SpiInstance& inst);

/// Reads the single `s v1 ... vj` line of a solution file.
Solution parse_solution(std::string_view text);
std::string serialize_solution(const Solution& sol);

struct VerifyResult {
  bool over_budget = false;
  std::size_t size = 0;
  /// Uninterrupted pairs in canonical order.
  std::vector<VertexPair> violated;

  bool feasible() const { return !over_budget && violated.empty(); }
};

/// Checks |S| <= k and that S interrupts every terminal pair.
/// Throws UnreachablePair when some terminal pair is disconnected.
VerifyResult verify_solution(const SpiInstance& inst, const Solution& sol);
VerifyResult verify_solution(const SpiInstance& inst, const DistanceMatrix& dist, const Solution& sol);

}  // namespace geohit
