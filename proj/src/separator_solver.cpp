#include "geohit/separator_solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "geohit/hitting_set.hpp"

namespace geohit {

LiftedInstance lift_terminals(const SpiInstance& inst, const VertexSet& z) {
  const auto& g = inst.graph();
  const auto pairs = inst.terminal_pairs();
  const VertexSet terminals = inst.terminals();
  const Weight pendant_weight = g.unit_weighted() ? 1 : 0;

  LiftedInstance out;
  std::vector<Edge> edges = g.edges();
  int n = g.vertex_count();
  for (Vertex v : z) {
    if (contains(terminals, v)) {
      out.z_pendants[v] = n;
      edges.push_back({v, n, pendant_weight});
      ++n;
    }
  }
  auto lifted = [&](Vertex v) {
    auto it = out.z_pendants.find(v);
    return it == out.z_pendants.end() ? v : it->second;
  };
  std::vector<VertexPair> new_pairs;
  for (const auto& pr : pairs) new_pairs.emplace_back(lifted(pr.first), lifted(pr.second));
  out.instance = SpiInstance(WeightedGraph(n, std::move(edges)), std::move(new_pairs), inst.budget());
  return out;
}

std::vector<int> terminals_per_component(const WeightedGraph& g, const VertexSet& z, const VertexSet& terminals) {
  std::vector<int> counts;
  for (const auto& comp : components_without(g, z)) {
    counts.push_back(static_cast<int>(set_intersection(comp, terminals).size()));
  }
  return counts;
}

namespace {

std::uint64_t pow2_saturating(long long e) {
  return e >= 63 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << e;
}

long long choose2(long long x) { return x * (x - 1) / 2; }

// Combinations of {0..r-1} as bitmasks, by increasing size then lexicographically.
std::vector<std::uint64_t> masks_by_size(int r) {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << r);
  for (int size = 0; size <= r; ++size) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) {
      if (std::popcount(m) == size) out.push_back(m);
    }
  }
  return out;
}

bool better(const VertexSet& candidate, const std::optional<VertexSet>& best) {
  if (!best) return true;
  if (candidate.size() != best->size()) return candidate.size() < best->size();
  return candidate < *best;
}

}  // namespace

std::optional<Solution> solve_with_separator(const SpiInstance& inst, const VertexSet& z_in, int p, int q,
                                             const Deadline& deadline, SeparatorStats* stats) {
  const auto& g0 = inst.graph();
  const VertexSet z = normalized(z_in);
  if (z.size() != z_in.size()) throw SeparatorInvalid("separator lists a vertex twice");
  for (Vertex v : z) {
    if (v < 0 || v >= g0.vertex_count()) throw SeparatorInvalid("separator vertex " + std::to_string(v) + " out of range");
  }
  if (p < 0 || q < 0) throw SeparatorInvalid("p and q must be nonnegative");
  if (static_cast<int>(z.size()) > p) {
    throw SeparatorInvalid("separator has " + std::to_string(z.size()) + " vertices, more than p = " + std::to_string(p));
  }
  {
    const auto dist0 = apsp(g0);
    for (const auto& pr : inst.terminal_pairs()) dist0.at(pr.first, pr.second);
    const VertexSet terminals = inst.terminals();
    for (const auto& comp : components_without(g0, z)) {
      const auto inside = set_intersection(comp, terminals).size();
      if (static_cast<int>(inside) > q) {
        throw SeparatorInvalid("component of G - Z containing vertex " + std::to_string(comp.front()) + " has " +
                               std::to_string(inside) + " terminals, more than q = " + std::to_string(q));
      }
    }
  }

  const LiftedInstance lifted = lift_terminals(inst, z);
  const auto& g = lifted.instance.graph();
  const int n = g.vertex_count();
  const auto pairs = lifted.instance.terminal_pairs();
  const int k = inst.budget();
  const auto dist = apsp(g);

  // Representatives: the lowest vertex outside Z of each T-equivalence class.
  std::vector<char> in_z(n, 0);
  for (Vertex v : z) in_z[v] = 1;
  const auto part = t_equivalence_classes(g, dist, pairs);
  VertexSet reps;
  for (const auto& cls : part.classes) {
    for (Vertex v : cls) {
      if (!in_z[v]) {
        reps.push_back(v);
        break;
      }
    }
  }
  std::sort(reps.begin(), reps.end());

  const long long pq_pairs = choose2(static_cast<long long>(p) + q);
  {
    const std::uint64_t per_component = pow2_saturating(pq_pairs);
    for (const auto& comp : components_without(g, z)) {
      GEOHIT_CHECK(set_intersection(comp, reps).size() <= per_component,
                   "component holds more T-equivalence classes than the (p,q) bound allows");
    }
  }
  const std::uint64_t d_bound = pow2_saturating(pq_pairs + 1);
  const int d = static_cast<int>(std::min<std::uint64_t>(d_bound, std::numeric_limits<int>::max()));

  std::vector<VertexSet> full(pairs.size()), base(pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    full[t] = geodesic_interval(g, dist, pairs[t].first, pairs[t].second);
    base[t] = set_difference(full[t], z);
  }
  struct ZPair {
    VertexPair pair;
    VertexSet inner;  // I[z,z'] minus Z
  };
  std::vector<ZPair> zpairs;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (!dist.reachable(z[i], z[j])) continue;
      auto inner = set_difference(geodesic_interval(g, dist, z[i], z[j]), z);
      if (!inner.empty()) zpairs.push_back({{z[i], z[j]}, std::move(inner)});
    }
  }

  std::optional<VertexSet> best;
  const int zs = static_cast<int>(z.size());
  for (const std::uint64_t zmask : masks_by_size(zs)) {
    VertexSet z_used;
    for (int i = 0; i < zs; ++i) {
      if (zmask >> i & 1) z_used.push_back(z[i]);
    }
    const int cap = best ? std::min<int>(k, static_cast<int>(best->size())) : k;
    const int budget = cap - static_cast<int>(z_used.size());
    if (budget < 0) continue;
    deadline.check();
    if (stats) ++stats->z_branches;

    std::vector<std::size_t> open;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      if (!intersects(full[t], z_used)) open.push_back(t);
    }
    // Z-pairs whose interval is inside some open J; the others never change the family.
    std::vector<std::size_t> relevant;
    for (std::size_t r = 0; r < zpairs.size(); ++r) {
      if (std::any_of(open.begin(), open.end(), [&](std::size_t t) { return is_subset(zpairs[r].inner, base[t]); })) {
        relevant.push_back(r);
      }
    }
    const int rs = static_cast<int>(relevant.size());
    if (rs > 24) throw SeparatorInvalid("separator too large: " + std::to_string(rs) + " interacting Z-pairs");

    for (const std::uint64_t ymask : masks_by_size(rs)) {
      deadline.check();
      if (stats) ++stats->y_branches;
      auto in_y = [&](int i) { return (ymask >> i & 1) != 0; };

      HitFamily terminal_part;
      terminal_part.universe_size = n;
      terminal_part.budget = budget;
      bool dead = false;
      for (std::size_t t : open) {
        bool removed = false;
        VertexSet j = base[t];
        for (int i = 0; i < rs && !removed; ++i) {
          const auto& zp = zpairs[relevant[i]];
          if (!is_subset(zp.inner, base[t])) continue;
          if (in_y(i)) removed = true;
          else j = set_difference(j, zp.inner);
        }
        if (removed) continue;
        j = set_intersection(j, reps);
        if (j.empty()) {
          dead = true;
          break;
        }
        GEOHIT_CHECK(j.size() <= d_bound, "compressed terminal set exceeds 2^(C(p+q,2)+1)");
        if (stats) stats->max_compressed_set = std::max(stats->max_compressed_set, j.size());
        terminal_part.sets.push_back({std::move(j), {TagKind::TerminalPair, pairs[t].first, pairs[t].second}});
      }
      if (dead) continue;

      std::vector<TaggedSet> y_sets;
      for (int i = 0; i < rs && !dead; ++i) {
        if (!in_y(i)) continue;
        const auto& zp = zpairs[relevant[i]];
        VertexSet j = set_intersection(zp.inner, reps);
        if (j.empty()) dead = true;
        y_sets.push_back({std::move(j), {TagKind::SeparatorPair, zp.pair.first, zp.pair.second}});
      }
      if (dead) continue;

      KernelResult kernel = sunflower_kernelize(terminal_part, d);
      if (kernel.verdict == KernelVerdict::NoInstance) continue;
      HitFamily reduced = std::move(kernel.family);
      if (stats) stats->max_kernel_size = std::max(stats->max_kernel_size, reduced.sets.size());
      for (auto& ys : y_sets) reduced.sets.push_back(std::move(ys));
      {
        const std::uint64_t bound = kernel_bound(budget, d);
        GEOHIT_CHECK(bound > std::numeric_limits<std::uint64_t>::max() - std::uint64_t(p) * p ||
                         reduced.sets.size() <= bound + std::uint64_t(p) * p,
                     "reduced family exceeds k^d * d! + p^2");
      }

      // The subset DP is limited to 62 sets; larger families go to branch and bound.
      auto hs = reduced.sets.size() <= 62 ? solve_by_family_count(reduced, deadline) : solve_bb(reduced, deadline);
      if (!hs) continue;
      VertexSet sol = z_used;
      for (Vertex v : *hs) {
        Vertex original = v;
        for (const auto& [zv, pendant] : lifted.z_pendants) {
          if (pendant == v) original = zv;
        }
        sol.push_back(original);
      }
      sol = normalized(std::move(sol));
      if (better(sol, best)) best = std::move(sol);
    }
  }
  return best;
}

bool check_interval_locality(const WeightedGraph& g, const VertexSet& z) {
  const int n = g.vertex_count();
  const auto dist = apsp(g);
  std::vector<int> comp_of(n, -1);
  const auto comps = components_without(g, z);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<char> excluded(n, 0);
  for (Vertex v : z) excluded[v] = 1;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (!dist.reachable(z[i], z[j])) continue;
      for (Vertex w : geodesic_interval(g, dist, z[i], z[j])) excluded[w] = 1;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    if (comp_of[u] < 0) continue;
    for (Vertex v = u; v < n; ++v) {
      if (comp_of[v] < 0 || !dist.reachable(u, v)) continue;
      for (Vertex w : geodesic_interval(g, dist, u, v)) {
        if (!excluded[w] && comp_of[w] != comp_of[u] && comp_of[w] != comp_of[v]) return false;
      }
    }
  }
  return true;
}

TEquivPartition component_local_classes(const WeightedGraph& g, const DistanceMatrix& dist, const VertexSet& z,
                                        std::span<const VertexPair> pairs) {
  const int n = g.vertex_count();
  VertexSet terminals;
  for (const auto& pr : pairs) {
    terminals.push_back(pr.first);
    terminals.push_back(pr.second);
  }
  terminals = normalized(std::move(terminals));

  TEquivPartition part;
  part.class_of.assign(n, -1);
  for (Vertex v : z) part.class_of[v] = v;
  for (const auto& comp : components_without(g, z)) {
    const VertexSet anchors = set_union(z, set_intersection(comp, terminals));
    std::vector<VertexPair> local;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      for (std::size_t j = i + 1; j < anchors.size(); ++j) {
        if (dist.reachable(anchors[i], anchors[j])) local.emplace_back(anchors[i], anchors[j]);
      }
    }
    std::map<std::vector<char>, Vertex> lowest;
    for (Vertex v : comp) {
      std::vector<char> signature;
      signature.reserve(local.size());
      for (const auto& pr : local) signature.push_back(in_interval(dist, pr.first, pr.second, v) ? 1 : 0);
      auto [it, fresh] = lowest.try_emplace(std::move(signature), v);
      part.class_of[v] = it->second;
    }
  }
  std::map<Vertex, std::size_t> slot;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, fresh] = slot.try_emplace(part.class_of[v], part.classes.size());
    if (fresh) part.classes.emplace_back();
    part.classes[it->second].push_back(v);
  }
  return part;
}

}  // namespace geohit
