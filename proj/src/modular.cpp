#include "geohit/modular.hpp"

#include <numeric>

#include "geohit/hitting_set.hpp"

namespace geohit {

bool is_module(const WeightedGraph& g, const VertexSet& m) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : m) in[v] = 1;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (in[w]) continue;
    int adjacent = 0;
    for (Vertex v : m) adjacent += g.has_edge(v, w) ? 1 : 0;
    if (adjacent != 0 && adjacent != static_cast<int>(m.size())) return false;
  }
  return true;
}

VertexSet module_closure(const WeightedGraph& g, VertexSet seed) {
  const int n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (Vertex v : seed) in[v] = 1;
  VertexSet m = normalized(std::move(seed));
  // A vertex outside m that sees part of m (but not all of it) splits m and must join.
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex w = 0; w < n; ++w) {
      if (in[w]) continue;
      int adjacent = 0;
      for (Vertex v : m) adjacent += g.has_edge(v, w) ? 1 : 0;
      if (adjacent != 0 && adjacent != static_cast<int>(m.size())) {
        in[w] = 1;
        m.insert(std::upper_bound(m.begin(), m.end(), w), w);
        grew = true;
      }
    }
  }
  return m;
}

namespace {

std::vector<VertexSet> complement_components(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      Vertex x = comp[head];
      for (Vertex y = 0; y < n; ++y) {
        if (!seen[y] && y != x && !g.has_edge(x, y)) {
          seen[y] = 1;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

ModularPartition modular_partition(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw Disconnected();
  ModularPartition part;
  if (n == 0) return part;

  auto co = complement_components(g);
  if (co.size() >= 2) {
    part.modules = std::move(co);
  } else {
    // Both g and its complement are connected: the maximal proper modules
    // partition V, and u, v share one iff their closure is not all of V.
    std::vector<int> owner(n, -1);
    for (Vertex u = 0; u < n; ++u) {
      if (owner[u] >= 0) continue;
      const int id = static_cast<int>(part.modules.size());
      VertexSet mod{u};
      owner[u] = id;
      for (Vertex v = u + 1; v < n; ++v) {
        if (owner[v] >= 0) continue;
        VertexSet closure = module_closure(g, set_union(mod, {v}));
        if (static_cast<int>(closure.size()) < n) {
          for (Vertex w : closure) owner[w] = id;
          mod = std::move(closure);
        }
      }
      part.modules.push_back(std::move(mod));
    }
  }

  std::sort(part.modules.begin(), part.modules.end());
  const int p = part.size();
  part.module_of.assign(n, -1);
  for (int i = 0; i < p; ++i) {
    for (Vertex v : part.modules[i]) part.module_of[v] = i;
  }
  part.adjacent.assign(p, std::vector<char>(p, 0));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i != j) part.adjacent[i][j] = g.has_edge(part.modules[i].front(), part.modules[j].front());
    }
  }
  return part;
}

namespace {

bool better(const VertexSet& candidate, const std::optional<VertexSet>& best) {
  if (!best) return true;
  if (candidate.size() != best->size()) return candidate.size() < best->size();
  return candidate < *best;
}

struct Member {
  VertexSet set;
  // Pair-derived members remember their pair; module members have pair_derived = false.
  bool pair_derived = false;
  VertexPair pair;
};

class ConnectedModularSolver {
 public:
  ConnectedModularSolver(const WeightedGraph& g, std::vector<VertexPair> pairs, int budget,
                         const Deadline& deadline, ModularStats* stats)
      : g_(g), pairs_(std::move(pairs)), budget_(budget), deadline_(deadline), stats_(stats) {}

  std::optional<VertexSet> solve() {
    if (pairs_.empty()) return VertexSet{};
    part_ = modular_partition(g_);
    const auto dist = apsp(g_);
    for (const auto& pr : pairs_) intervals_.push_back(geodesic_interval(g_, dist, pr.first, pr.second));

    const int p = part_.size();
    const int max_chosen = std::min(p, budget_);
    // Candidate sets of intersected modules, largest first.
    for (int size = max_chosen; size >= 1; --size) {
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        explore(idx);
        int pos = size - 1;
        while (pos >= 0 && idx[pos] == p - size + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    return best_;
  }

 private:
  void explore(const std::vector<int>& chosen_modules) {
    deadline_.check();
    if (stats_) ++stats_->module_branches;
    const int p = part_.size();
    std::vector<char> in_s(p, 0);
    for (int i : chosen_modules) in_s[i] = 1;
    const int budget = best_ ? std::min<int>(budget_, static_cast<int>(best_->size())) : budget_;
    if (static_cast<int>(chosen_modules.size()) > budget) return;

    std::vector<Member> family;
    for (std::size_t t = 0; t < pairs_.size(); ++t) {
      const auto& pr = pairs_[t];
      const VertexSet& interval = intervals_[t];
      bool covered = std::any_of(chosen_modules.begin(), chosen_modules.end(),
                                 [&](int i) { return is_subset(part_.modules[i], interval); });
      if (covered) continue;
      VertexSet j;
      for (Vertex w : interval) {
        if (in_s[part_.module_of[w]]) j.push_back(w);
      }
      if (j.empty()) return;
      if (part_.module_of[pr.first] != part_.module_of[pr.second]) {
        GEOHIT_CHECK(is_subset(j, VertexSet{pr.first, pr.second}),
                     "pair across modules kept more than its endpoints");
      }
      family.push_back({std::move(j), true, pr});
    }
    for (int i : chosen_modules) family.push_back({part_.modules[i], false, {}});

    // Sets of size <= 2: pairs that are edges or cross modules.
    HitFamily small;
    small.universe_size = g_.vertex_count();
    small.budget = budget;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& m = family[i];
      if (!m.pair_derived) continue;
      if (g_.has_edge(m.pair.first, m.pair.second) ||
          part_.module_of[m.pair.first] != part_.module_of[m.pair.second]) {
        GEOHIT_CHECK(m.set.size() <= 2, "second-phase set larger than two");
        small.sets.push_back({m.set, {TagKind::TerminalPair, m.pair.first, m.pair.second}});
      }
    }

    for (const auto& cover : enumerate_minimal_hs_size2(small, budget)) {
      if (stats_) ++stats_->cover_branches;
      finish(family, cover, budget);
    }
  }

  // Every remaining member lies inside one module; each module's members
  // must share a vertex.
  void finish(const std::vector<Member>& family, const VertexSet& cover, int budget) {
    const int p = part_.size();
    std::vector<std::optional<VertexSet>> common(p);
    for (const auto& m : family) {
      if (intersects(m.set, cover)) continue;
      const int mod = part_.module_of[m.set.front()];
      GEOHIT_CHECK(std::all_of(m.set.begin(), m.set.end(), [&](Vertex w) { return part_.module_of[w] == mod; }),
                   "member spans several modules before the polynomial tail");
      common[mod] = common[mod] ? set_intersection(*common[mod], m.set) : m.set;
      if (common[mod]->empty()) return;
    }
    VertexSet sol = cover;
    for (const auto& c : common) {
      if (c) sol.push_back(c->front());
    }
    if (static_cast<int>(sol.size()) > budget) return;
    sol = normalized(std::move(sol));
    if (better(sol, best_)) best_ = std::move(sol);
  }

  const WeightedGraph& g_;
  std::vector<VertexPair> pairs_;
  int budget_;
  const Deadline& deadline_;
  ModularStats* stats_;
  ModularPartition part_;
  std::vector<VertexSet> intervals_;
  std::optional<VertexSet> best_;
};

}  // namespace

std::optional<Solution> solve_modular(const SpiInstance& inst, const Deadline& deadline, ModularStats* stats) {
  if (inst.variant() != Variant::Standard) {
    throw VariantUnsupported("VariantUnsupported: materialize pairwise instances before the modular solver");
  }
  const auto& g = inst.graph();
  if (!g.unit_weighted()) throw WeightedUnsupported();
  const auto dist = apsp(g);
  const auto pairs = inst.terminal_pairs();
  for (const auto& pr : pairs) dist.at(pr.first, pr.second);

  // Components are modules; solve each on its own and add the optima.
  const auto comps = connected_components(g);
  std::vector<int> comp_of(g.vertex_count(), -1), local(g.vertex_count(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      comp_of[comps[c][i]] = static_cast<int>(c);
      local[comps[c][i]] = static_cast<int>(i);
    }
  }
  std::vector<std::vector<VertexPair>> comp_pairs(comps.size());
  for (const auto& pr : pairs) comp_pairs[comp_of[pr.first]].emplace_back(local[pr.first], local[pr.second]);

  Solution total;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comp_pairs[c].empty()) continue;
    const int remaining = inst.budget() - static_cast<int>(total.size());
    WeightedGraph sub = g.induced(comps[c]);
    auto part = ConnectedModularSolver(sub, comp_pairs[c], remaining, deadline, stats).solve();
    if (!part) return std::nullopt;
    for (Vertex v : *part) total.push_back(comps[c][v]);
  }
  return normalized(std::move(total));
}

}  // namespace geohit
