#pragma once

#include <algorithm>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "geohit/errors.hpp"

namespace geohit {

using Vertex = int;
using Weight = std::int64_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Unordered vertex pair stored as (min, max).
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : first(std::min(a, b)), second(std::max(a, b)) {}

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Cooperative wall-clock limit checked by solvers at branch boundaries.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}

  bool expired() const { return end_ && Clock::now() >= *end_; }

  // Samples the clock once every 256 calls.
  void check() const {
    if (!end_ || (++ticks_ & 0xff) != 0) return;
    if (Clock::now() >= *end_) throw TimedOut();
  }

 private:
  std::optional<Clock::time_point> end_;
  mutable std::uint32_t ticks_ = 0;
};

}  // namespace geohit
