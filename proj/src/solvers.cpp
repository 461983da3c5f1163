#include "geohit/solvers.hpp"

#include <cstdlib>
#include <string>

namespace geohit {

HitFamily intervals_of(const SpiInstance& inst) { return intervals_of(inst, apsp(inst.graph())); }

HitFamily intervals_of(const SpiInstance& inst, const DistanceMatrix& dist) {
  HitFamily fam;
  fam.universe_size = inst.vertex_count();
  fam.budget = inst.budget();
  for (const auto& pr : inst.terminal_pairs()) {
    fam.sets.push_back({geodesic_interval(inst.graph(), dist, pr.first, pr.second),
                        {TagKind::TerminalPair, pr.first, pr.second}});
  }
  return fam;
}

int default_brute_cap() {
  if (const char* env = std::getenv("GEOHIT_BRUTE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 64L));
  }
  return 20;
}

std::optional<Solution> solve_bruteforce(const SpiInstance& inst, const BruteForceOptions& opts,
                                         const Deadline& deadline) {
  const auto dist = apsp(inst.graph());
  const auto pairs = inst.terminal_pairs();
  const auto part = t_equivalence_classes(inst.graph(), dist, pairs);

  // Candidate vertices: class minima that interrupt at least one pair.
  std::vector<Vertex> candidates;
  for (const auto& cls : part.classes) {
    Vertex rep = cls.front();
    bool useful = std::any_of(pairs.begin(), pairs.end(),
                              [&](const VertexPair& p) { return in_interval(dist, p.first, p.second, rep); });
    if (useful) candidates.push_back(rep);
  }
  const int c = static_cast<int>(candidates.size());
  if (c > std::min(opts.cap, 64)) {
    throw CapExceeded("brute force limited to " + std::to_string(std::min(opts.cap, 64)) +
                      " candidate vertices, instance has " + std::to_string(c));
  }

  std::vector<std::uint64_t> pair_masks;
  for (const auto& p : pairs) {
    std::uint64_t m = 0;
    for (int i = 0; i < c; ++i) {
      if (in_interval(dist, p.first, p.second, candidates[i])) m |= std::uint64_t{1} << i;
    }
    pair_masks.push_back(m);
  }
  auto hits_all = [&](std::uint64_t s) {
    return std::all_of(pair_masks.begin(), pair_masks.end(), [&](std::uint64_t m) { return (m & s) != 0; });
  };

  // Combinations of each size in lexicographic order of the chosen indices.
  const int limit = std::min(inst.budget(), c);
  for (int size = 0; size <= limit; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      deadline.check();
      std::uint64_t s = 0;
      for (int i : idx) s |= std::uint64_t{1} << i;
      if (hits_all(s)) {
        Solution sol;
        for (int i : idx) sol.push_back(candidates[i]);
        return sol;
      }
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == c - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<Solution> solve_via_hitting_set(const SpiInstance& inst, HittingEngine engine,
                                              const Deadline& deadline) {
  HitFamily fam = intervals_of(inst);
  return engine == HittingEngine::BranchAndBound ? solve_bb(fam, deadline)
                                                 : solve_by_family_count(fam, deadline);
}

bool is_tree(const WeightedGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::optional<Solution> solve_tree(const SpiInstance& inst) {
  const auto& g = inst.graph();
  if (!is_tree(g)) throw NotATree();
  const int n = g.vertex_count();

  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<Vertex> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex x = order[head];
    for (const auto& nb : g.neighbors(x)) {
      if (!seen[nb.to]) {
        seen[nb.to] = 1;
        parent[nb.to] = x;
        depth[nb.to] = depth[x] + 1;
        order.push_back(nb.to);
      }
    }
  }
  auto top_of = [&](Vertex a, Vertex b) {
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      a = parent[a];
    }
    return a;
  };

  struct PathInfo {
    VertexPair pair;
    Vertex top;
  };
  std::vector<PathInfo> paths;
  for (const auto& p : inst.terminal_pairs()) paths.push_back({p, top_of(p.first, p.second)});
  std::stable_sort(paths.begin(), paths.end(), [&](const PathInfo& a, const PathInfo& b) {
    return depth[a.top] > depth[b.top];
  });

  std::vector<char> chosen(n, 0);
  auto path_hit = [&](const PathInfo& p) {
    for (Vertex x : {p.pair.first, p.pair.second}) {
      for (; x != p.top; x = parent[x]) {
        if (chosen[x]) return true;
      }
    }
    return static_cast<bool>(chosen[p.top]);
  };

  Solution sol;
  for (const auto& p : paths) {
    if (path_hit(p)) continue;
    chosen[p.top] = 1;
    sol.push_back(p.top);
  }
  if (static_cast<int>(sol.size()) > inst.budget()) return std::nullopt;
  return normalized(std::move(sol));
}

}  // namespace geohit
