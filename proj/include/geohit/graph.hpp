#pragma once

#include <span>
#include <utility>
#include <vector>

#include "geohit/types.hpp"

namespace geohit {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex to;
  Weight weight;
};

/// Simple undirected graph with nonnegative integer edge lengths.
///
/// Vertices are the dense indices [0, n). Edges are stored canonically with
/// u < v and sorted; construction rejects self-loops, parallel edges,
/// out-of-range endpoints and negative weights with InvalidGraph.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<Weight> edge_weight(Vertex u, Vertex v) const;

  /// True iff every edge has length 1.
  bool unit_weighted() const;
  int max_degree() const;

  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in the order given.
  WeightedGraph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// All-pairs shortest distances; unreachable entries hold a sentinel that is
/// never used in arithmetic.
class DistanceMatrix {
 public:
  static constexpr Weight kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int size() const { return n_; }
  bool reachable(Vertex u, Vertex v) const { return raw(u, v) != kUnreachable; }
  /// Distance between u and v, or nullopt when they lie in different components.
  std::optional<Weight> distance(Vertex u, Vertex v) const {
    Weight d = raw(u, v);
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  /// Distance; throws UnreachablePair when u and v are disconnected.
  Weight at(Vertex u, Vertex v) const {
    Weight d = raw(u, v);
    if (d == kUnreachable) throw UnreachablePair(u, v);
    return d;
  }

  Weight raw(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(Vertex u, Vertex v, Weight d) { dist_[static_cast<std::size_t>(u) * n_ + v] = d; }

 private:
  int n_ = 0;
  std::vector<Weight> dist_;
};

DistanceMatrix apsp(const WeightedGraph& g);

/// Vertices on at least one shortest u-v path: { w : d(u,w) + d(w,v) = d(u,v) }.
VertexSet geodesic_interval(const WeightedGraph& g, const DistanceMatrix& dist, Vertex u, Vertex v);

/// True iff w lies in I[u,v]. Throws UnreachablePair when u, v are disconnected.
bool in_interval(const DistanceMatrix& dist, Vertex u, Vertex v, Vertex w);

bool interrupts(const WeightedGraph& g, const DistanceMatrix& dist, const VertexSet& s,
                VertexPair pair);

/// Partition of V into classes of vertices interrupting the same pairs of T.
struct TEquivPartition {
  /// class_of[v] is the lowest vertex index of v's class.
  std::vector<Vertex> class_of;
  /// Classes ordered by their lowest vertex; each class sorted.
  std::vector<VertexSet> classes;
};

TEquivPartition t_equivalence_classes(const WeightedGraph& g, const DistanceMatrix& dist,
                                      std::span<const VertexPair> pairs);

/// Connected components of g - removed, each sorted, ordered by lowest vertex.
/// Removed vertices belong to no component.
std::vector<VertexSet> components_without(const WeightedGraph& g, const VertexSet& removed);

inline std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  return components_without(g, {});
}

bool is_connected(const WeightedGraph& g);

}  // namespace geohit
