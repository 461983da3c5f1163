#pragma once

#include <optional>

#include "geohit/hitting_set.hpp"
#include "geohit/instance.hpp"

namespace geohit {

/// One set per terminal pair: its geodesic interval, tagged by the pair.
HitFamily intervals_of(const SpiInstance& inst);
HitFamily intervals_of(const SpiInstance& inst, const DistanceMatrix& dist);

/// Default candidate cap of the brute-force solver; GEOHIT_BRUTE_CAP overrides it.
int default_brute_cap();

struct BruteForceOptions {
  /// Maximum number of candidate vertices (T-equivalence representatives
  /// that interrupt at least one pair). Hard limit 64.
  int cap = default_brute_cap();
};

/// Exhaustive search over candidate subsets in increasing size, then
/// lexicographic order. Candidates are the lowest vertex of each
/// T-equivalence class whose members interrupt some pair; this changes
/// neither the optimum size nor the lexicographically least optimum.
/// Throws CapExceeded.
std::optional<Solution> solve_bruteforce(const SpiInstance& inst, const BruteForceOptions& opts = {},
                                         const Deadline& deadline = {});

enum class HittingEngine { BranchAndBound, FamilyDp };

std::optional<Solution> solve_via_hitting_set(const SpiInstance& inst, HittingEngine engine,
                                              const Deadline& deadline = {});

bool is_tree(const WeightedGraph& g);

/// Polynomial solver for trees: among unhit pairs repeatedly take the path
/// whose topmost vertex is deepest and add that vertex. Throws NotATree.
std::optional<Solution> solve_tree(const SpiInstance& inst);

}  // namespace geohit
