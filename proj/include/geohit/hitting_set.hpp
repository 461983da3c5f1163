#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geohit/types.hpp"

namespace geohit {

enum class TagKind { TerminalPair, SeparatorPair, Module, Custom };

/// Stable identity of a set inside a HitFamily (its origin).
struct SetTag {
  TagKind kind = TagKind::Custom;
  int first = 0;
  int second = 0;

  friend auto operator<=>(const SetTag&, const SetTag&) = default;
  friend bool operator==(const SetTag&, const SetTag&) = default;
};

struct TaggedSet {
  VertexSet elements;
  SetTag tag;
};

/// A family of subsets of {0..universe_size-1} together with a budget k.
struct HitFamily {
  int universe_size = 0;
  std::vector<TaggedSet> sets;
  int budget = 0;

  /// Throws InvalidInstance on out-of-range elements, unsorted sets or repeated tags.
  void validate() const;
  int max_set_size() const;
  bool has_empty_set() const;
  bool is_hit_by(const VertexSet& s) const;
};

/// Minimum hitting set of size <= budget, lexicographically least among the
/// optima; nullopt when none exists. Branches on a smallest unhit set with a
/// disjoint-packing lower bound. Throws InfeasibleEmptySet.
std::optional<VertexSet> solve_bb(const HitFamily& fam, const Deadline& deadline = {});

/// Same contract as solve_bb. Elements with identical incidence vectors are
/// collapsed to one representative, then a memoized dynamic program over
/// subsets of the family computes the optimum. Throws FamilyTooLarge for
/// families with more than 62 sets.
std::optional<VertexSet> solve_by_family_count(const HitFamily& fam, const Deadline& deadline = {});

enum class KernelVerdict { Reduced, NoInstance };

struct KernelResult {
  HitFamily family;
  KernelVerdict verdict = KernelVerdict::Reduced;
};

/// Saturating k^d * d!.
std::uint64_t kernel_bound(int k, int d);

/// Repeatedly replaces sunflowers with budget+1 petals by their cores.
/// Preserves the family of hitting sets of size <= budget exactly.
/// Throws MaxSizeExceeded when a set is larger than d.
KernelResult sunflower_kernelize(const HitFamily& fam, int d);

/// A sunflower: member indices into the searched family and their common core.
struct Sunflower {
  VertexSet core;
  std::vector<std::size_t> members;
};

/// Greedy petal extraction; returns a sunflower with `petals` members or nullopt.
std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& sets, int petals);

/// Inclusion-minimal hitting sets of size <= k of a family of 1- and
/// 2-element sets, each listed once, in lexicographic order.
std::vector<VertexSet> enumerate_minimal_hs_size2(const HitFamily& fam, int k);

}  // namespace geohit
