#include "geohit/hitting_set.hpp"

#include <bit>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace geohit {

void HitFamily::validate() const {
  if (universe_size < 0) throw InvalidInstance("negative universe size");
  if (budget < 0) throw InvalidInstance("negative budget");
  std::set<SetTag> tags;
  for (const auto& s : sets) {
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
      Vertex e = s.elements[i];
      if (e < 0 || e >= universe_size) {
        throw InvalidInstance("element " + std::to_string(e) + " outside the universe");
      }
      if (i > 0 && s.elements[i - 1] >= e) throw InvalidInstance("set elements must be sorted and distinct");
    }
    if (!tags.insert(s.tag).second) throw InvalidInstance("repeated set tag");
  }
}

int HitFamily::max_set_size() const {
  int d = 0;
  for (const auto& s : sets) d = std::max(d, static_cast<int>(s.elements.size()));
  return d;
}

bool HitFamily::has_empty_set() const {
  return std::any_of(sets.begin(), sets.end(), [](const TaggedSet& s) { return s.elements.empty(); });
}

bool HitFamily::is_hit_by(const VertexSet& s) const {
  return std::all_of(sets.begin(), sets.end(),
                     [&](const TaggedSet& t) { return intersects(t.elements, s); });
}

// ---------------------------------------------------------------------------
// Branch and bound

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const HitFamily& fam, const Deadline& deadline)
      : deadline_(deadline), n_(fam.universe_size), occurrences_(fam.universe_size) {
    for (const auto& s : fam.sets) sets_.push_back(s.elements);
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      for (Vertex e : sets_[i]) occurrences_[e].push_back(i);
    }
    hits_.assign(sets_.size(), 0);
    stamp_.assign(n_, 0);
    unhit_ = sets_.size();
  }

  std::optional<VertexSet> solve(int budget) {
    int opt = -1;
    for (int s = 0; s <= budget; ++s) {
      if (feasible(s)) {
        opt = s;
        break;
      }
    }
    if (opt < 0) return std::nullopt;

    // Lexicographically least optimum: the smallest element that belongs to
    // some optimum, followed by the least optimum of what it leaves unhit.
    VertexSet chosen;
    for (int left = opt; left > 0; --left) {
      bool placed = false;
      const Vertex start = chosen.empty() ? 0 : chosen.back() + 1;
      for (Vertex e = start; e < n_ && !placed; ++e) {
        if (occurrences_[e].empty()) continue;
        pick(e);
        if (feasible(left - 1)) {
          chosen.push_back(e);
          placed = true;
        } else {
          unpick(e);
        }
      }
      GEOHIT_CHECK(placed, "branch-and-bound lost its optimum during reconstruction");
    }
    return chosen;
  }

 private:
  void pick(Vertex e) {
    for (std::size_t i : occurrences_[e]) {
      if (hits_[i]++ == 0) --unhit_;
    }
  }
  void unpick(Vertex e) {
    for (std::size_t i : occurrences_[e]) {
      if (--hits_[i] == 0) ++unhit_;
    }
  }

  // Greedy packing of pairwise disjoint unhit sets, smallest first.
  int packing_bound() {
    ++epoch_;
    order_.clear();
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (hits_[i] == 0) order_.push_back(i);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return sets_[a].size() < sets_[b].size(); });
    int packed = 0;
    for (std::size_t i : order_) {
      const auto& s = sets_[i];
      if (std::any_of(s.begin(), s.end(), [&](Vertex e) { return stamp_[e] == epoch_; })) continue;
      for (Vertex e : s) stamp_[e] = epoch_;
      ++packed;
    }
    return packed;
  }

  bool feasible(int budget) {
    deadline_.check();
    if (unhit_ == 0) return true;
    if (budget == 0) return false;
    if (packing_bound() > budget) return false;
    std::size_t branch = sets_.size();
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (hits_[i] == 0 && (branch == sets_.size() || sets_[i].size() < sets_[branch].size())) branch = i;
    }
    const VertexSet candidates = sets_[branch];
    for (Vertex e : candidates) {
      pick(e);
      bool ok = feasible(budget - 1);
      unpick(e);
      if (ok) return true;
    }
    return false;
  }

  const Deadline& deadline_;
  int n_;
  std::vector<VertexSet> sets_;
  std::vector<std::vector<std::size_t>> occurrences_;
  std::vector<int> hits_;
  std::size_t unhit_ = 0;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<VertexSet> solve_bb(const HitFamily& fam, const Deadline& deadline) {
  fam.validate();
  if (fam.has_empty_set()) throw InfeasibleEmptySet();
  return BranchAndBound(fam, deadline).solve(fam.budget);
}

// ---------------------------------------------------------------------------
// Dynamic program over subsets of the family

namespace {

class FamilyDp {
 public:
  FamilyDp(const HitFamily& fam, const Deadline& deadline) : deadline_(deadline) {
    const std::size_t f = fam.sets.size();
    std::vector<std::uint64_t> incidence(fam.universe_size, 0);
    for (std::size_t i = 0; i < f; ++i) {
      for (Vertex e : fam.sets[i].elements) incidence[e] |= std::uint64_t{1} << i;
    }
    // One representative (the lowest element) per distinct nonzero incidence vector.
    std::set<std::uint64_t> seen;
    for (Vertex e = 0; e < fam.universe_size; ++e) {
      if (incidence[e] != 0 && seen.insert(incidence[e]).second) {
        reps_.push_back(e);
        masks_.push_back(incidence[e]);
      }
    }
    full_ = f == 0 ? 0 : (f == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f) - 1);
  }

  std::optional<VertexSet> solve(int budget) {
    int opt = cost(full_);
    if (opt > budget) return std::nullopt;
    VertexSet chosen;
    std::uint64_t mask = full_;
    while (mask != 0) {
      const int target = cost(mask) - 1;
      std::size_t best = reps_.size();
      for (std::size_t r = 0; r < reps_.size(); ++r) {
        if ((masks_[r] & mask) == 0) continue;
        if (cost(mask & ~masks_[r]) == target) {
          best = r;
          break;  // reps_ is increasing, so this is the smallest usable element
        }
      }
      GEOHIT_CHECK(best < reps_.size(), "family DP reconstruction failed");
      chosen.push_back(reps_[best]);
      mask &= ~masks_[best];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

 private:
  int cost(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    deadline_.check();
    const std::uint64_t lowest = mask & (~mask + 1);
    int best = std::numeric_limits<int>::max();
    for (std::size_t r = 0; r < reps_.size(); ++r) {
      if (masks_[r] & lowest) best = std::min(best, 1 + cost(mask & ~masks_[r]));
    }
    memo_.emplace(mask, best);
    return best;
  }

  const Deadline& deadline_;
  std::vector<Vertex> reps_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t full_ = 0;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace

std::optional<VertexSet> solve_by_family_count(const HitFamily& fam, const Deadline& deadline) {
  fam.validate();
  if (fam.has_empty_set()) throw InfeasibleEmptySet();
  if (fam.sets.size() > 62) {
    throw FamilyTooLarge("family-count solver supports at most 62 sets, got " +
                         std::to_string(fam.sets.size()));
  }
  return FamilyDp(fam, deadline).solve(fam.budget);
}

// ---------------------------------------------------------------------------
// Sunflower kernel

std::uint64_t kernel_bound(int k, int d) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (d <= 0) return 1;
  if (k == 0) return 0;
  std::uint64_t out = 1;
  auto mul = [&](std::uint64_t x) {
    if (out != 0 && x > kMax / out) {
      out = kMax;
      return false;
    }
    out *= x;
    return true;
  };
  for (int i = 0; i < d && k > 1; ++i) {
    if (!mul(static_cast<std::uint64_t>(k))) return kMax;
  }
  for (int i = 2; i <= d; ++i) {
    if (!mul(static_cast<std::uint64_t>(i))) return kMax;
  }
  return out;
}

namespace {

std::optional<Sunflower> find_sunflower_in(const std::vector<VertexSet>& sets,
                                           const std::vector<std::size_t>& ids, int petals) {
  if (static_cast<int>(ids.size()) < petals) return std::nullopt;
  // A maximal collection of pairwise disjoint sets.
  std::vector<std::size_t> disjoint;
  VertexSet used;
  for (std::size_t id : ids) {
    if (!intersects(sets[id], used)) {
      disjoint.push_back(id);
      used = set_union(used, sets[id]);
      if (static_cast<int>(disjoint.size()) == petals) return Sunflower{{}, disjoint};
    }
  }
  // Every set meets `used`. Recurse on the most frequent element only (lowest on
  // ties); pigeonhole makes this succeed whenever the family is above the bound.
  Vertex x = -1;
  std::size_t freq = 0;
  for (Vertex y : used) {
    std::size_t c = 0;
    for (std::size_t id : ids) c += contains(sets[id], y) ? 1 : 0;
    if (c > freq) {
      freq = c;
      x = y;
    }
  }
  if (static_cast<int>(freq) < petals) return std::nullopt;
  std::vector<VertexSet> reduced;
  std::vector<std::size_t> origin;
  for (std::size_t id : ids) {
    if (contains(sets[id], x)) {
      reduced.push_back(set_difference(sets[id], {x}));
      origin.push_back(id);
    }
  }
  std::vector<std::size_t> all(reduced.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (auto inner = find_sunflower_in(reduced, all, petals)) {
    Sunflower out;
    out.core = set_union(inner->core, {x});
    for (std::size_t m : inner->members) out.members.push_back(origin[m]);
    std::sort(out.members.begin(), out.members.end());
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& sets, int petals) {
  if (petals <= 0) return Sunflower{};
  std::vector<std::size_t> ids(sets.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return find_sunflower_in(sets, ids, petals);
}

KernelResult sunflower_kernelize(const HitFamily& fam, int d) {
  fam.validate();
  for (const auto& s : fam.sets) {
    if (static_cast<int>(s.elements.size()) > d) {
      throw MaxSizeExceeded("set of size " + std::to_string(s.elements.size()) +
                            " exceeds the declared maximum " + std::to_string(d));
    }
  }
  KernelResult result;
  result.family.universe_size = fam.universe_size;
  result.family.budget = fam.budget;
  if (fam.has_empty_set()) {
    result.verdict = KernelVerdict::NoInstance;
    return result;
  }

  // Identical sets collapse to the first occurrence.
  std::vector<TaggedSet> sets;
  {
    std::set<VertexSet> seen;
    for (const auto& s : fam.sets) {
      if (seen.insert(s.elements).second) sets.push_back(s);
    }
  }

  const int petals = fam.budget + 1;
  while (true) {
    std::vector<VertexSet> plain;
    plain.reserve(sets.size());
    for (const auto& s : sets) plain.push_back(s.elements);
    auto flower = find_sunflower(plain, petals);
    if (!flower) break;
    if (flower->core.empty()) {
      result.verdict = KernelVerdict::NoInstance;
      return result;
    }
    // Any hitting set of size <= budget must meet the core.
    std::vector<TaggedSet> next;
    const SetTag core_tag = sets[flower->members.front()].tag;
    bool core_present = false;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (std::binary_search(flower->members.begin(), flower->members.end(), i)) continue;
      if (sets[i].elements == flower->core) core_present = true;
      next.push_back(std::move(sets[i]));
    }
    if (!core_present) next.push_back({flower->core, core_tag});
    std::stable_sort(next.begin(), next.end(),
                     [](const TaggedSet& a, const TaggedSet& b) { return a.tag < b.tag; });
    sets = std::move(next);
  }
  std::stable_sort(sets.begin(), sets.end(),
                   [](const TaggedSet& a, const TaggedSet& b) { return a.tag < b.tag; });
  result.family.sets = std::move(sets);
  GEOHIT_CHECK(result.family.sets.size() <= kernel_bound(fam.budget, d),
               "sunflower kernel exceeds k^d * d!");
  return result;
}

// ---------------------------------------------------------------------------
// Minimal hitting sets of families of 1- and 2-element sets

namespace {

void cover_branch(const std::vector<VertexSet>& sets, std::vector<signed char>& state, VertexSet& chosen,
                  int budget, std::set<VertexSet>& leaves) {
  // state: 1 chosen, -1 excluded, 0 undecided
  const VertexSet* open = nullptr;
  for (const auto& s : sets) {
    if (std::none_of(s.begin(), s.end(), [&](Vertex e) { return state[e] == 1; })) {
      open = &s;
      break;
    }
  }
  if (!open) {
    leaves.insert(normalized(chosen));
    return;
  }
  if (budget == 0) return;
  std::vector<Vertex> free;
  for (Vertex e : *open) {
    if (state[e] == 0) free.push_back(e);
  }
  // Branch: take the first free element, or exclude it and recurse (which
  // forces the other element of a 2-set on the next visit).
  if (free.empty()) return;
  Vertex a = free.front();
  state[a] = 1;
  chosen.push_back(a);
  cover_branch(sets, state, chosen, budget - 1, leaves);
  chosen.pop_back();
  if (free.size() > 1) {
    state[a] = -1;
    cover_branch(sets, state, chosen, budget, leaves);
  }
  state[a] = 0;
}

}  // namespace

std::vector<VertexSet> enumerate_minimal_hs_size2(const HitFamily& fam, int k) {
  fam.validate();
  if (fam.has_empty_set()) throw InfeasibleEmptySet();
  std::vector<VertexSet> sets;
  for (const auto& s : fam.sets) {
    if (s.elements.size() > 2) {
      throw MaxSizeExceeded("minimal hitting set enumeration needs sets of size at most 2");
    }
    sets.push_back(s.elements);
  }
  std::set<VertexSet> leaves;
  std::vector<signed char> state(fam.universe_size, 0);
  VertexSet chosen;
  if (k >= 0) cover_branch(sets, state, chosen, k, leaves);

  std::vector<VertexSet> out;
  for (const auto& leaf : leaves) {
    bool minimal = true;
    for (Vertex e : leaf) {
      VertexSet smaller = set_difference(leaf, {e});
      if (std::all_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return intersects(s, smaller); })) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(leaf);
  }
  return out;
}

}  // namespace geohit
