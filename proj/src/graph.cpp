#include "geohit/graph.hpp"

#include <map>
#include <queue>
#include <string>

namespace geohit {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidGraph("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
    if (e.weight < 0) {
      throw InvalidGraph("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has negative weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw InvalidGraph("parallel edge {" + std::to_string(edges[i].u) + "," +
                         std::to_string(edges[i].v) + "}");
    }
  }
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  }
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const { return edge_weight(u, v).has_value(); }

std::optional<Weight> WeightedGraph::edge_weight(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.to < x; });
  if (it == adj.end() || it->to != v) return std::nullopt;
  return it->weight;
}

bool WeightedGraph::unit_weighted() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1; });
}

int WeightedGraph::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

WeightedGraph WeightedGraph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) out.push_back({index[e.u], index[e.v], e.weight});
  }
  return WeightedGraph(static_cast<int>(keep.size()), std::move(out));
}

DistanceMatrix apsp(const WeightedGraph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dist(n);
  // Dijkstra from every source; zero-length edges are fine.
  using Item = std::pair<Weight, Vertex>;
  for (Vertex s = 0; s < n; ++s) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist.set(s, s, 0);
    heap.push({0, s});
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d != dist.raw(s, x)) continue;
      for (const auto& nb : g.neighbors(x)) {
        Weight nd = d + nb.weight;
        Weight cur = dist.raw(s, nb.to);
        if (cur == DistanceMatrix::kUnreachable || nd < cur) {
          dist.set(s, nb.to, nd);
          heap.push({nd, nb.to});
        }
      }
    }
  }
  return dist;
}

bool in_interval(const DistanceMatrix& dist, Vertex u, Vertex v, Vertex w) {
  Weight duv = dist.at(u, v);
  auto duw = dist.distance(u, w);
  auto dwv = dist.distance(w, v);
  return duw && dwv && *duw + *dwv == duv;
}

VertexSet geodesic_interval(const WeightedGraph& g, const DistanceMatrix& dist, Vertex u, Vertex v) {
  Weight duv = dist.at(u, v);
  VertexSet out;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    auto duw = dist.distance(u, w);
    auto dwv = dist.distance(w, v);
    if (duw && dwv && *duw + *dwv == duv) out.push_back(w);
  }
  return out;
}

bool interrupts(const WeightedGraph&, const DistanceMatrix& dist, const VertexSet& s, VertexPair pair) {
  dist.at(pair.first, pair.second);
  return std::any_of(s.begin(), s.end(),
                     [&](Vertex w) { return in_interval(dist, pair.first, pair.second, w); });
}

TEquivPartition t_equivalence_classes(const WeightedGraph& g, const DistanceMatrix& dist,
                                      std::span<const VertexPair> pairs) {
  const int n = g.vertex_count();
  // Refine one pair at a time: the new label is (old label, membership).
  std::vector<int> label(n, 0);
  for (const auto& pr : pairs) {
    dist.at(pr.first, pr.second);
    std::map<std::pair<int, bool>, int> relabel;
    for (Vertex w = 0; w < n; ++w) {
      bool inside = in_interval(dist, pr.first, pr.second, w);
      auto [it, fresh] = relabel.try_emplace({label[w], inside}, static_cast<int>(relabel.size()));
      label[w] = it->second;
    }
  }

  TEquivPartition part;
  part.class_of.assign(n, -1);
  std::map<int, Vertex> lowest;
  for (Vertex w = 0; w < n; ++w) {
    auto [it, fresh] = lowest.try_emplace(label[w], w);
    part.class_of[w] = it->second;
  }
  std::map<Vertex, std::size_t> slot;
  for (Vertex w = 0; w < n; ++w) {
    Vertex rep = part.class_of[w];
    auto [it, fresh] = slot.try_emplace(rep, part.classes.size());
    if (fresh) part.classes.emplace_back();
    part.classes[it->second].push_back(w);
  }
  return part;
}

std::vector<VertexSet> components_without(const WeightedGraph& g, const VertexSet& removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex r : removed) seen[r] = 1;
  std::vector<VertexSet> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto& nb : g.neighbors(comp[head])) {
        if (!seen[nb.to]) {
          seen[nb.to] = 1;
          comp.push_back(nb.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const WeightedGraph& g) { return connected_components(g).size() <= 1; }

}  // namespace geohit
