#pragma once

#include <vector>

#include "geohit/graph.hpp"

namespace th {

using geohit::Edge;
using geohit::WeightedGraph;

inline WeightedGraph path(int n, int w = 1) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, w});
  return WeightedGraph(n, e);
}

inline WeightedGraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
  return WeightedGraph(n, e);
}

inline WeightedGraph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1});
  return WeightedGraph(n, e);
}

/// Center 0, leaves 1..leaves.
inline WeightedGraph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
  return WeightedGraph(leaves + 1, e);
}

}  // namespace th
