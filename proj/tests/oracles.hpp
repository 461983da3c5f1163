#pragma once

// Independent reference implementations for tests. Nothing here calls the
// library's algorithms; only the plain data types (WeightedGraph, VertexPair)
// are shared. Everything is exhaustive and meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "geohit/graph.hpp"

namespace oracle {

using geohit::Vertex;
using geohit::VertexPair;
using geohit::VertexSet;
using geohit::Weight;
using geohit::WeightedGraph;

inline std::vector<std::vector<Weight>> weight_matrix(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, -1));
  for (const auto& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = e.weight;
  return w;
}

/// Union of the vertex sets of all minimum-weight simple u-v paths, found by
/// enumerating simple paths (pruned once longer than the best found so far).
/// Empty when v is unreachable from u.
inline VertexSet shortest_path_vertices(const WeightedGraph& g, Vertex u, Vertex v) {
  const int n = g.vertex_count();
  if (u == v) return {u};
  const auto w = weight_matrix(g);
  std::optional<Weight> best;
  std::vector<char> on_best(n, 0), on_path(n, 0);
  std::vector<Vertex> path{u};
  on_path[u] = 1;
  std::function<void(Vertex, Weight)> dfs = [&](Vertex x, Weight cost) {
    if (best && cost > *best) return;
    if (x == v) {
      if (!best || cost < *best) {
        best = cost;
        std::fill(on_best.begin(), on_best.end(), 0);
      }
      for (Vertex p : path) on_best[p] = 1;
      return;
    }
    for (Vertex y = 0; y < n; ++y) {
      if (w[x][y] < 0 || on_path[y]) continue;
      on_path[y] = 1;
      path.push_back(y);
      dfs(y, cost + w[x][y]);
      path.pop_back();
      on_path[y] = 0;
    }
  };
  dfs(u, 0);
  VertexSet out;
  for (Vertex x = 0; x < n; ++x) {
    if (on_best[x]) out.push_back(x);
  }
  return out;
}

/// Floyd-Warshall distances; -1 for unreachable.
inline std::vector<std::vector<Weight>> floyd_warshall(const WeightedGraph& g) {
  const int n = g.vertex_count();
  constexpr Weight inf = std::numeric_limits<Weight>::max() / 4;
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = std::min(d[e.u][e.v], e.weight);
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Interval via Floyd-Warshall; faster than path enumeration for n around 12-25.
inline VertexSet fw_interval(const std::vector<std::vector<Weight>>& d, Vertex u, Vertex v) {
  VertexSet out;
  if (d[u][v] < 0) return out;
  for (Vertex w = 0; w < static_cast<int>(d.size()); ++w) {
    if (d[u][w] >= 0 && d[w][v] >= 0 && d[u][w] + d[w][v] == d[u][v]) out.push_back(w);
  }
  return out;
}

inline std::vector<int> bits_of(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

inline std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

/// All subsets of {0..n-1} with at most k elements hitting every set (bitmasks, sorted).
inline std::vector<std::uint64_t> all_hitting_sets(int n, const std::vector<VertexSet>& sets, int k) {
  std::vector<std::uint64_t> set_masks;
  for (const auto& s : sets) set_masks.push_back(mask_of(s));
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (__builtin_popcountll(m) > k) continue;
    if (std::all_of(set_masks.begin(), set_masks.end(), [&](std::uint64_t s) { return (s & m) != 0; })) {
      out.push_back(m);
    }
  }
  return out;
}

/// Minimum hitting set size over {0..n-1}, or nullopt if none of size <= k.
inline std::optional<int> min_hitting_size(int n, const std::vector<VertexSet>& sets, int k) {
  std::vector<std::uint64_t> set_masks;
  for (const auto& s : sets) set_masks.push_back(mask_of(s));
  std::optional<int> best;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const int size = __builtin_popcountll(m);
    if (size > k || (best && size >= *best)) continue;
    if (std::all_of(set_masks.begin(), set_masks.end(), [&](std::uint64_t s) { return (s & m) != 0; })) best = size;
  }
  return best;
}

/// Optimum of an SPI instance by trying every vertex subset (n <= ~20).
inline std::optional<int> spi_optimum(const WeightedGraph& g, const std::vector<VertexPair>& pairs, int k) {
  const auto d = floyd_warshall(g);
  std::vector<VertexSet> sets;
  for (const auto& p : pairs) sets.push_back(fw_interval(d, p.first, p.second));
  return min_hitting_size(g.vertex_count(), sets, k);
}

inline std::vector<VertexSet> components_after(const WeightedGraph& g, std::uint64_t removed) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<VertexSet> comps;
  for (Vertex s = 0; s < n; ++s) {
    if ((removed >> s & 1) || label[s] >= 0) continue;
    VertexSet comp{s};
    label[s] = static_cast<int>(comps.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (const auto& nb : g.neighbors(comp[i])) {
        if (!(removed >> nb.to & 1) && label[nb.to] < 0) {
          label[nb.to] = label[s];
          comp.push_back(nb.to);
        }
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

inline int terminals_in(const VertexSet& comp, std::uint64_t terminals) {
  int c = 0;
  for (Vertex v : comp) c += (terminals >> v & 1) ? 1 : 0;
  return c;
}

inline int vertex_integrity(const WeightedGraph& g) {
  const int n = g.vertex_count();
  int best = n;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::size_t largest = 0;
    for (const auto& c : components_after(g, x)) largest = std::max(largest, c.size());
    best = std::min(best, __builtin_popcountll(x) + static_cast<int>(largest));
  }
  return best;
}

/// Minimum multiway cut avoiding the terminals; nullopt if none exists.
inline std::optional<int> min_multiway_cut(const WeightedGraph& g, const VertexSet& terminals) {
  const int n = g.vertex_count();
  const std::uint64_t tm = mask_of(terminals);
  std::optional<int> best;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (x & tm) continue;
    const int size = __builtin_popcountll(x);
    if (best && size >= *best) continue;
    const auto comps = components_after(g, x);
    if (std::all_of(comps.begin(), comps.end(), [&](const VertexSet& c) { return terminals_in(c, tm) <= 1; })) {
      best = size;
    }
  }
  return best;
}

/// Minimum multicut avoiding every pair endpoint; nullopt if none exists.
inline std::optional<int> min_multicut(const WeightedGraph& g, const std::vector<VertexPair>& pairs) {
  const int n = g.vertex_count();
  std::uint64_t tm = 0;
  for (const auto& p : pairs) tm |= (std::uint64_t{1} << p.first) | (std::uint64_t{1} << p.second);
  std::optional<int> best;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (x & tm) continue;
    const int size = __builtin_popcountll(x);
    if (best && size >= *best) continue;
    std::vector<int> label(n, -1);
    const auto comps = components_after(g, x);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Vertex v : comps[c]) label[v] = static_cast<int>(c);
    if (std::none_of(pairs.begin(), pairs.end(), [&](const VertexPair& p) { return label[p.first] == label[p.second]; })) {
      best = size;
    }
  }
  return best;
}

/// Every Z with |Z| <= p leaving at most q terminals per component (bitmasks).
inline std::vector<std::uint64_t> all_pq_separators(const WeightedGraph& g, const VertexSet& terminals, int p, int q) {
  const int n = g.vertex_count();
  const std::uint64_t tm = mask_of(terminals);
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
    if (__builtin_popcountll(z) > p) continue;
    const auto comps = components_after(g, z);
    if (std::all_of(comps.begin(), comps.end(), [&](const VertexSet& c) { return terminals_in(c, tm) <= q; })) {
      out.push_back(z);
    }
  }
  return out;
}

inline bool three_colorable(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);
  std::function<bool(int)> go = [&](int v) {
    if (v == n) return true;
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (const auto& nb : g.neighbors(v)) ok = ok && !(nb.to < v && color[nb.to] == c);
      if (!ok) continue;
      color[v] = c;
      if (go(v + 1)) return true;
    }
    color[v] = 0;
    return false;
  };
  return go(0);
}

inline int min_vertex_cover(const WeightedGraph& g) {
  const int n = g.vertex_count();
  int best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const bool covers = std::all_of(g.edges().begin(), g.edges().end(), [&](const geohit::Edge& e) {
      return (s >> e.u & 1) || (s >> e.v & 1);
    });
    if (covers) best = std::min(best, __builtin_popcountll(s));
  }
  return best;
}

/// Connected components of g (independent BFS).
inline std::vector<VertexSet> components(const WeightedGraph& g) { return components_after(g, 0); }

}  // namespace oracle
