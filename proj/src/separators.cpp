#include "geohit/separators.hpp"

#include <algorithm>
#include <string>

namespace geohit {

std::string_view to_string(SeparatorKind kind) {
  switch (kind) {
    case SeparatorKind::ViWitness: return "vi-witness";
    case SeparatorKind::MultiwayCut: return "multiway-cut";
    case SeparatorKind::Multicut: return "multicut";
    case SeparatorKind::PqSeparator: return "pq-separator";
  }
  return "?";
}

int max_component_size(const WeightedGraph& g, const VertexSet& removed) {
  std::size_t best = 0;
  for (const auto& c : components_without(g, removed)) best = std::max(best, c.size());
  return static_cast<int>(best);
}

int max_terminals_per_component(const WeightedGraph& g, const VertexSet& removed, const VertexSet& terminals) {
  std::size_t best = 0;
  for (const auto& c : components_without(g, removed)) {
    best = std::max(best, set_intersection(c, terminals).size());
  }
  return static_cast<int>(best);
}

namespace {

std::vector<int> component_index(const WeightedGraph& g, const VertexSet& removed) {
  std::vector<int> comp(g.vertex_count(), -1);
  const auto comps = components_without(g, removed);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp[v] = static_cast<int>(c);
  }
  return comp;
}

void check_vertices(const WeightedGraph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) throw SeparatorInvalid("vertex " + std::to_string(v) + " out of range");
  }
}

VertexSet pair_vertices(std::span<const VertexPair> pairs) {
  VertexSet out;
  for (const auto& pr : pairs) {
    out.push_back(pr.first);
    out.push_back(pr.second);
  }
  return normalized(std::move(out));
}

}  // namespace

bool is_multiway_cut(const WeightedGraph& g, const VertexSet& terminals, const VertexSet& x) {
  return max_terminals_per_component(g, x, terminals) <= 1;
}

bool is_multicut(const WeightedGraph& g, std::span<const VertexPair> pairs, const VertexSet& x) {
  const auto comp = component_index(g, x);
  return std::none_of(pairs.begin(), pairs.end(), [&](const VertexPair& pr) {
    return comp[pr.first] >= 0 && comp[pr.first] == comp[pr.second];
  });
}

SeparatorCertificate certify_vi(const WeightedGraph& g, VertexSet z) {
  z = normalized(std::move(z));
  check_vertices(g, z);
  SeparatorCertificate c{z, SeparatorKind::ViWitness, static_cast<int>(z.size()), max_component_size(g, z), 0};
  c.iota = c.p + c.q;
  return c;
}

SeparatorCertificate certify_multiway_cut(const WeightedGraph& g, const VertexSet& terminals, VertexSet x) {
  x = normalized(std::move(x));
  check_vertices(g, x);
  const int q = max_terminals_per_component(g, x, terminals);
  if (q > 1) throw SeparatorInvalid("not a multiway cut: a component keeps " + std::to_string(q) + " terminals");
  return {x, SeparatorKind::MultiwayCut, static_cast<int>(x.size()), q, 0};
}

SeparatorCertificate certify_multicut(const WeightedGraph& g, std::span<const VertexPair> pairs, VertexSet x) {
  x = normalized(std::move(x));
  check_vertices(g, x);
  if (!is_multicut(g, pairs, x)) throw SeparatorInvalid("not a multicut: some pair stays connected");
  return {x, SeparatorKind::Multicut, static_cast<int>(x.size()),
          max_terminals_per_component(g, x, pair_vertices(pairs)), 0};
}

SeparatorCertificate certify_pq(const WeightedGraph& g, const VertexSet& terminals, VertexSet z, int q_bound) {
  z = normalized(std::move(z));
  check_vertices(g, z);
  const int q = max_terminals_per_component(g, z, terminals);
  if (q > q_bound) {
    throw SeparatorInvalid("component keeps " + std::to_string(q) + " terminals, bound is " + std::to_string(q_bound));
  }
  return {z, SeparatorKind::PqSeparator, static_cast<int>(z.size()), q, 0};
}

namespace {

class IntegritySearch {
 public:
  IntegritySearch(const WeightedGraph& g, const Deadline& deadline) : g_(g), deadline_(deadline) {}

  std::optional<VertexSet> run(int iota) {
    iota_ = iota;
    VertexSet x;
    if (rec(x)) return x;
    return std::nullopt;
  }

 private:
  bool rec(VertexSet& x) {
    deadline_.check();
    const int budget = iota_ - static_cast<int>(x.size());
    const auto comps = components_without(g_, x);
    const VertexSet* oversized = nullptr;
    for (const auto& c : comps) {
      if (static_cast<int>(c.size()) > budget) {
        oversized = &c;
        break;
      }
    }
    if (!oversized) return true;
    if (budget <= 0) return false;

    // A connected piece of budget+1 vertices; any witness deletes one of them.
    std::vector<char> in_comp(g_.vertex_count(), 0), seen(g_.vertex_count(), 0);
    for (Vertex v : *oversized) in_comp[v] = 1;
    VertexSet piece{oversized->front()};
    seen[piece[0]] = 1;
    for (std::size_t head = 0; head < piece.size() && static_cast<int>(piece.size()) < budget + 1; ++head) {
      for (const auto& nb : g_.neighbors(piece[head])) {
        if (in_comp[nb.to] && !seen[nb.to] && static_cast<int>(piece.size()) < budget + 1) {
          seen[nb.to] = 1;
          piece.push_back(nb.to);
        }
      }
    }
    for (Vertex w : piece) {
      const auto at = std::upper_bound(x.begin(), x.end(), w) - x.begin();
      x.insert(x.begin() + at, w);
      if (rec(x)) return true;
      x.erase(x.begin() + at);
    }
    return false;
  }

  const WeightedGraph& g_;
  const Deadline& deadline_;
  int iota_ = 0;
};

// Shortest path in G minus `blocked` from s to the nearest vertex with
// target[v] set (v != s); returns the vertices of the path, or empty.
std::vector<Vertex> bfs_path(const WeightedGraph& g, Vertex s, const std::vector<char>& blocked,
                             const std::vector<char>& target) {
  const int n = g.vertex_count();
  std::vector<Vertex> parent(n, -2);
  std::vector<Vertex> queue{s};
  parent[s] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (const auto& nb : g.neighbors(x)) {
      const Vertex y = nb.to;
      if (parent[y] != -2 || blocked[y]) continue;
      parent[y] = x;
      if (target[y]) {
        std::vector<Vertex> path;
        for (Vertex v = y; v != -1; v = parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return {};
}

class MultiwaySearch {
 public:
  MultiwaySearch(const WeightedGraph& g, const VertexSet& terminals, const Deadline& deadline)
      : g_(g), terminals_(terminals), deadline_(deadline), is_terminal_(g.vertex_count(), 0) {
    for (Vertex t : terminals) is_terminal_[t] = 1;
  }

  std::optional<VertexSet> run(int size) {
    size_ = size;
    std::vector<char> removed(g_.vertex_count(), 0);
    if (rec(removed, 0)) {
      VertexSet x;
      for (Vertex v = 0; v < g_.vertex_count(); ++v) {
        if (removed[v]) x.push_back(v);
      }
      return x;
    }
    return std::nullopt;
  }

 private:
  std::vector<Vertex> connecting_path(const std::vector<char>& blocked) const {
    for (Vertex t : terminals_) {
      if (blocked[t]) continue;
      auto path = bfs_path(g_, t, blocked, is_terminal_);
      if (!path.empty()) return path;
    }
    return {};
  }

  // Internally disjoint terminal paths; each needs its own deleted vertex.
  int packing_bound(const std::vector<char>& removed) const {
    std::vector<char> blocked = removed;
    int count = 0;
    while (true) {
      auto path = connecting_path(blocked);
      if (path.empty()) return count;
      ++count;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) blocked[path[i]] = 1;
      if (path.size() == 2) return count;  // adjacent terminals; cannot happen after validation
    }
  }

  bool rec(std::vector<char>& removed, int used) {
    deadline_.check();
    const auto path = connecting_path(removed);
    if (path.empty()) return true;
    if (used >= size_ || used + packing_bound(removed) > size_) return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      removed[path[i]] = 1;
      if (rec(removed, used + 1)) return true;
      removed[path[i]] = 0;
    }
    return false;
  }

  const WeightedGraph& g_;
  const VertexSet& terminals_;
  const Deadline& deadline_;
  std::vector<char> is_terminal_;
  int size_ = 0;
};

class MulticutSearch {
 public:
  MulticutSearch(const WeightedGraph& g, std::span<const VertexPair> pairs, const Deadline& deadline)
      : g_(g), pairs_(pairs), deadline_(deadline), deletable_(g.vertex_count(), 1) {
    for (const auto& pr : pairs) deletable_[pr.first] = deletable_[pr.second] = 0;
  }

  std::optional<VertexSet> run(int size) {
    size_ = size;
    std::vector<char> removed(g_.vertex_count(), 0);
    if (rec(removed, 0)) {
      VertexSet x;
      for (Vertex v = 0; v < g_.vertex_count(); ++v) {
        if (removed[v]) x.push_back(v);
      }
      return x;
    }
    return std::nullopt;
  }

 private:
  // Deletable vertices on a shortest path joining some pair; nullopt when
  // every pair is separated. An empty result means an unbreakable path.
  std::optional<std::vector<Vertex>> connecting_path(const std::vector<char>& blocked) const {
    std::vector<char> target(g_.vertex_count(), 0);
    for (const auto& pr : pairs_) {
      target[pr.second] = 1;
      auto path = bfs_path(g_, pr.first, blocked, target);
      target[pr.second] = 0;
      if (path.empty()) continue;
      std::vector<Vertex> choices;
      for (Vertex v : path) {
        if (deletable_[v]) choices.push_back(v);
      }
      return choices;
    }
    return std::nullopt;
  }

  // Paths whose deletable vertices are pairwise disjoint; -1 if some path
  // cannot be broken at all.
  int packing_bound(const std::vector<char>& removed) const {
    std::vector<char> blocked = removed;
    int count = 0;
    while (true) {
      auto choices = connecting_path(blocked);
      if (!choices) return count;
      if (choices->empty()) return -1;
      ++count;
      for (Vertex v : *choices) blocked[v] = 1;
    }
  }

  bool rec(std::vector<char>& removed, int used) {
    deadline_.check();
    const auto choices = connecting_path(removed);
    if (!choices) return true;
    if (choices->empty() || used >= size_) return false;
    const int bound = packing_bound(removed);
    if (bound < 0 || used + bound > size_) return false;
    for (Vertex v : *choices) {
      removed[v] = 1;
      if (rec(removed, used + 1)) return true;
      removed[v] = 0;
    }
    return false;
  }

  const WeightedGraph& g_;
  std::span<const VertexPair> pairs_;
  const Deadline& deadline_;
  std::vector<char> deletable_;
  int size_ = 0;
};

}  // namespace

VertexIntegrity vertex_integrity(const WeightedGraph& g, const Deadline& deadline) {
  if (g.vertex_count() == 0) return {0, certify_vi(g, {})};
  IntegritySearch search(g, deadline);
  for (int iota = 1;; ++iota) {
    if (auto x = search.run(iota)) {
      auto cert = certify_vi(g, std::move(*x));
      GEOHIT_CHECK(cert.iota <= iota, "integrity witness exceeds target");
      return {cert.iota, std::move(cert)};
    }
  }
}

std::optional<SeparatorCertificate> multiway_cut(const WeightedGraph& g, const VertexSet& terminals_in, int r,
                                                 const Deadline& deadline) {
  const VertexSet terminals = normalized(terminals_in);
  check_vertices(g, terminals);
  for (Vertex t : terminals) {
    for (const auto& nb : g.neighbors(t)) {
      if (contains(terminals, nb.to)) {
        throw TerminalAdjacent("terminals " + std::to_string(t) + " and " + std::to_string(nb.to) +
                               " are adjacent; no multiway cut avoids them");
      }
    }
  }
  MultiwaySearch search(g, terminals, deadline);
  for (int size = 0; size <= r; ++size) {
    if (auto x = search.run(size)) return certify_multiway_cut(g, terminals, std::move(*x));
  }
  return std::nullopt;
}

std::optional<SeparatorCertificate> multicut(const WeightedGraph& g, std::span<const VertexPair> pairs, int r,
                                             const Deadline& deadline) {
  for (const auto& pr : pairs) {
    check_vertices(g, {pr.first, pr.second});
    if (g.has_edge(pr.first, pr.second)) {
      throw PairAdjacent("pair {" + std::to_string(pr.first) + "," + std::to_string(pr.second) +
                         "} is an edge; no multicut avoids its endpoints");
    }
  }
  MulticutSearch search(g, pairs, deadline);
  for (int size = 0; size <= r; ++size) {
    if (auto x = search.run(size)) return certify_multicut(g, pairs, std::move(*x));
  }
  return std::nullopt;
}

std::optional<SeparatorCertificate> pq_separator(const WeightedGraph& g, const VertexSet& terminals_in, int p, int q,
                                                 int cap, const Deadline& deadline) {
  const int n = g.vertex_count();
  if (n > cap) {
    throw CapExceeded("separator search limited to " + std::to_string(cap) + " vertices, graph has " +
                      std::to_string(n));
  }
  const VertexSet terminals = normalized(terminals_in);
  check_vertices(g, terminals);
  for (int size = 0; size <= std::min(p, n); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      deadline.check();
      VertexSet z(idx.begin(), idx.end());
      if (max_terminals_per_component(g, z, terminals) <= q) return certify_pq(g, terminals, std::move(z), q);
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace geohit
