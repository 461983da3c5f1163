// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "geohit/hitting_set.hpp"
#include "geohit/modular.hpp"
#include "geohit/reductions.hpp"
#include "geohit/separator_solver.hpp"
#include "geohit/separators.hpp"
#include "geohit/solvers.hpp"
#include "oracles.hpp"

using namespace geohit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string str(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::optional<int> size_of(const std::optional<Solution>& s) {
  return s ? std::optional<int>(static_cast<int>(s->size())) : std::nullopt;
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

// 1 -------------------------------------------------------------------------
Outcome interval_correctness() {
  Outcome o;
  gen::Rng rng(1001);
  const auto start = Clock::now();
  long checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform(rng, 1, 10);
    const bool weighted = trial % 2 == 1;
    const auto g = gen::random_graph(rng, n, gen::uniform(rng, 15, 70) / 100.0, weighted ? 5 : 1);
    const auto dist = apsp(g);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u; v < n; ++v) {
        const VertexSet expected = oracle::shortest_path_vertices(g, u, v);
        if (expected.empty()) {
          if (dist.reachable(u, v)) o.fail("unreachable pair reported reachable");
          continue;
        }
        ++checked;
        const VertexSet got = geodesic_interval(g, dist, u, v);
        if (got != expected) {
          o.fail("trial " + std::to_string(trial) + " pair " + std::to_string(u) + "," + std::to_string(v) + ": got " +
                 str(got) + " expected " + str(expected));
        }
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s, limit 10 s");
  o.detail = "200 graphs, " + std::to_string(checked) + " intervals vs path enumeration, " + std::to_string(secs) + " s";
  return o;
}

// 2 -------------------------------------------------------------------------
std::optional<std::pair<VertexSet, std::pair<int, int>>> pick_separator(const SpiInstance& inst) {
  const VertexSet terminals = inst.terminals();
  const int q = std::min<int>(2, static_cast<int>(terminals.size()));
  auto cert = pq_separator(inst.graph(), terminals, inst.vertex_count(), q);
  if (!cert) return std::nullopt;
  return std::make_pair(cert->z, std::make_pair(cert->p, q));
}

Outcome solver_concordance() {
  Outcome o;
  gen::Rng rng(2002);
  const auto start = Clock::now();
  int feasible = 0, modular_runs = 0, max_p = 0;
  for (int trial = 0; trial < 300 && o.pass; ++trial) {
    const int n = gen::uniform(rng, 2, 12);
    const bool weighted = trial % 3 == 2;
    const auto g = gen::random_graph(rng, n, gen::uniform(rng, 20, 60) / 100.0, weighted ? 5 : 1);
    const auto pairs = gen::random_pairs(rng, g, gen::uniform(rng, 0, 8));
    const int k = gen::uniform(rng, 0, 4);
    const SpiInstance inst(g, pairs, k);
    const auto expected = oracle::spi_optimum(g, pairs, k);
    if (expected) ++feasible;

    std::vector<std::pair<std::string, std::optional<Solution>>> results;
    results.emplace_back("bruteforce", solve_bruteforce(inst, {32}));
    results.emplace_back("hitting-bb", solve_via_hitting_set(inst, HittingEngine::BranchAndBound));
    results.emplace_back("hitting-fdp", solve_via_hitting_set(inst, HittingEngine::FamilyDp));
    if (!weighted) {
      results.emplace_back("modular", solve_modular(inst));
      ++modular_runs;
    }
    const auto sep = pick_separator(inst);
    if (!sep) {
      o.fail("trial " + std::to_string(trial) + ": no separator found");
      break;
    }
    max_p = std::max(max_p, sep->second.first);
    results.emplace_back("separator", solve_with_separator(inst, sep->first, sep->second.first, sep->second.second));

    for (const auto& [name, sol] : results) {
      if (size_of(sol) != expected) {
        o.fail("trial " + std::to_string(trial) + ": " + name + " size " + show(size_of(sol)) + ", exhaustive " +
               show(expected));
      }
      if (sol && !verify_solution(inst, *sol).feasible()) {
        o.fail("trial " + std::to_string(trial) + ": " + name + " returned a non-verifying set " + str(*sol));
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 120.0) o.fail("took " + std::to_string(secs) + " s, limit 120 s");
  o.detail = "300 instances (" + std::to_string(feasible) + " feasible, modular on " + std::to_string(modular_runs) +
             ", separator p up to " + std::to_string(max_p) + "), " + std::to_string(secs) + " s";
  return o;
}

// 3 and 4 -------------------------------------------------------------------
bool proper(const WeightedGraph& g, const std::vector<int>& color) {
  for (const auto& e : g.edges()) {
    if (color[e.u] == color[e.v] || color[e.u] < 1 || color[e.u] > 3) return false;
  }
  return true;
}

// Independent shape checks on the apex-deleted graph.
bool components_all(const WeightedGraph& g, Vertex apex, int size, int edges, int max_deg) {
  for (const auto& comp : oracle::components_after(g, std::uint64_t{1} << apex)) {
    if (static_cast<int>(comp.size()) != size) return false;
    int e = 0;
    for (Vertex v : comp) {
      int deg = 0;
      for (const auto& nb : g.neighbors(v)) deg += nb.to != apex ? 1 : 0;
      if (deg > max_deg) return false;
      e += deg;
    }
    if (e / 2 != edges) return false;
  }
  return true;
}

std::string structural_failure(const ReductionArtifact& a, int source_n) {
  if (auto why = check_certificate(a)) return *why;
  const auto& g = a.instance.graph();
  switch (a.gadget) {
    case GadgetKind::P5Apex:
      if (!components_all(g, 5 * source_n, 5, 4, 2)) return "independent P5-forest check failed";
      break;
    case GadgetKind::PathApex: {
      const int rest = g.vertex_count() - 1;
      if (rest > 0 && !components_all(g, 5 * source_n, rest, rest - 1, 2)) return "independent single-path check failed";
      break;
    }
    case GadgetKind::TriangleApex:
      if (!components_all(g, 3 * source_n, 3, 3, 2)) return "independent triangle-forest check failed";
      break;
    case GadgetKind::Bandwidth4: {
      const auto& ord = a.certificate.ordering;
      std::vector<int> pos(g.vertex_count());
      for (std::size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = static_cast<int>(i);
      int width = 0, deg = 0;
      for (const auto& e : g.edges()) width = std::max(width, std::abs(pos[e.u] - pos[e.v]));
      for (Vertex v = 0; v < g.vertex_count(); ++v) deg = std::max(deg, g.degree(v));
      if (source_n >= 2 && width != 4) return "bandwidth " + std::to_string(width) + " != 4";
      if (source_n >= 3 && deg != 5) return "max degree " + std::to_string(deg) + " != 5";
      if (width > 4 || deg > 5) return "bandwidth/degree bound exceeded";
      break;
    }
    default: break;
  }
  return {};
}

struct ColoringSweep {
  Outcome round_trip;
  Outcome structure;
};

ColoringSweep coloring_round_trips() {
  ColoringSweep sweep;
  const auto start = Clock::now();
  int graphs = 0, colorable = 0, extractions = 0, certificates = 0;
  const GadgetKind kinds[] = {GadgetKind::P5Apex, GadgetKind::PathApex, GadgetKind::TriangleApex, GadgetKind::Bandwidth4};
  for (int n = 1; n <= 5; ++n) {
    for (const auto& src : gen::graphs_up_to_isomorphism(n)) {
      ++graphs;
      const bool yes = oracle::three_colorable(src);
      colorable += yes ? 1 : 0;
      for (GadgetKind kind : kinds) {
        const auto a = generate_coloring_gadget(kind, {src});
        const std::string label = std::string(to_string(kind)) + " on " + std::to_string(n) + "-vertex source with " +
                                  std::to_string(src.edge_count()) + " edges";
        ++certificates;
        if (auto why = structural_failure(a, n); !why.empty()) sweep.structure.fail(label + ": " + why);
        if (a.instance.budget() != 2 * n) sweep.round_trip.fail(label + ": budget is not 2|V|");
        const auto sol = solve_bruteforce(a.instance, {32});
        if (sol.has_value() != yes) {
          sweep.round_trip.fail(label + ": gadget " + (sol ? "feasible" : "infeasible") + ", source " +
                                (yes ? "colorable" : "not colorable"));
          continue;
        }
        if (sol) {
          try {
            const auto color = extract_coloring(a, *sol);
            ++extractions;
            if (!proper(src, color)) sweep.round_trip.fail(label + ": extracted coloring is not proper");
          } catch (const Error& e) {
            sweep.round_trip.fail(label + ": extraction threw " + e.what());
          }
        }
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 300.0) sweep.round_trip.fail("took " + std::to_string(secs) + " s, limit 300 s");
  sweep.round_trip.detail = std::to_string(graphs) + " graphs on 1-5 vertices up to isomorphism (" +
                            std::to_string(colorable) + " 3-colorable) x 4 gadgets, " + std::to_string(extractions) +
                            " extractions, " + std::to_string(secs) + " s";
  sweep.structure.detail = std::to_string(certificates) + " coloring gadgets";
  return sweep;
}

Outcome hs_certificates(Outcome o) {
  gen::Rng rng(4004);
  int count = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto hs = gen::random_hs(rng, 6, 5, 3);
    for (const auto& a : {gen_hs_multicut(hs), gen_hs_pairwise(hs)}) {
      ++count;
      if (auto why = check_certificate(a)) o.fail(std::string(to_string(a.gadget)) + ": " + *why);
    }
  }
  o.detail += " + " + std::to_string(count) + " hitting set gadgets";
  return o;
}

// 5 -------------------------------------------------------------------------
bool witness_separates(const WeightedGraph& g, const std::vector<VertexPair>& pairs, const VertexSet& w) {
  const auto comps = oracle::components_after(g, oracle::mask_of(w));
  std::vector<int> label(g.vertex_count(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) label[v] = static_cast<int>(c);
  for (const auto& p : pairs) {
    if (label[p.first] >= 0 && label[p.first] == label[p.second]) return false;
  }
  return true;
}

Outcome hs_round_trips() {
  Outcome o;
  gen::Rng rng(5005);
  const auto start = Clock::now();
  int yes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto hs = gen::random_hs(rng, 6, 5, 3);
    const bool source_yes = oracle::min_hitting_size(hs.universe_size, hs.family, hs.budget).has_value();
    yes += source_yes ? 1 : 0;
    const std::string label = "trial " + std::to_string(trial);

    const auto mc = gen_hs_multicut(hs);
    const auto mc_pairs = mc.instance.terminal_pairs();
    if (mc.certificate.witness.size() != static_cast<std::size_t>(hs.budget + 3) ||
        !witness_separates(mc.instance.graph(), mc_pairs, mc.certificate.witness)) {
      o.fail(label + ": W is not a multicut of size h+3");
    }
    const auto pw = gen_hs_pairwise(hs);
    if (pw.instance.budget() != hs.budget + 2) o.fail(label + ": pairwise budget is not h+2");

    for (const auto* a : {&mc, &pw}) {
      const auto sol = solve_bruteforce(a->instance, {32});
      if (sol.has_value() != source_yes) {
        o.fail(label + ": " + std::string(to_string(a->gadget)) + " verdict differs from source");
        continue;
      }
      if (!sol) continue;
      try {
        const VertexSet extracted = extract_hitting_set(*a, hs, *sol);
        if (static_cast<int>(extracted.size()) > hs.budget || !hs.is_hit_by(extracted)) {
          o.fail(label + ": extracted set does not hit the source");
        }
      } catch (const Error& e) {
        o.fail(label + ": extraction threw " + e.what());
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 300.0) o.fail("took " + std::to_string(secs) + " s, limit 300 s");
  o.detail = "100 sources (" + std::to_string(yes) + " yes) x 2 gadgets, " + std::to_string(secs) + " s";
  return o;
}

// 6 -------------------------------------------------------------------------
Outcome kernel_soundness() {
  Outcome o;
  gen::Rng rng(6006);
  int reduced_sets = 0, input_sets = 0, no_instances = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int universe = gen::uniform(rng, 3, 15);
    const int k = trial % 4;
    auto fam = gen::random_family(rng, universe, gen::uniform(rng, 1, 4 + 4 * k), 3, k);
    // Plant a sunflower now and then so reductions actually happen.
    if (trial % 2 == 0 && universe >= 6) {
      const Vertex core = gen::uniform(rng, 0, universe - 1);
      int tag = 1000;
      for (Vertex x = 0; x < universe; ++x) {
        if (x != core) fam.sets.push_back({normalized({core, x}), {TagKind::Custom, tag++, 0}});
      }
    }
    constexpr int d = 3;
    const auto result = sunflower_kernelize(fam, d);
    input_sets += static_cast<int>(fam.sets.size());
    const auto before = oracle::all_hitting_sets(universe, gen::family_sets(fam), k);
    if (result.verdict == KernelVerdict::NoInstance) {
      ++no_instances;
      if (!before.empty()) o.fail("trial " + std::to_string(trial) + ": NoInstance but hitting sets exist");
      continue;
    }
    reduced_sets += static_cast<int>(result.family.sets.size());
    const auto after = oracle::all_hitting_sets(universe, gen::family_sets(result.family), k);
    if (before != after) o.fail("trial " + std::to_string(trial) + ": hitting sets of size <= k changed");
    if (result.family.sets.size() > kernel_bound(k, d)) {
      o.fail("trial " + std::to_string(trial) + ": kernel has " + std::to_string(result.family.sets.size()) +
             " sets, bound " + std::to_string(kernel_bound(k, d)));
    }
  }
  o.detail = "100 families, " + std::to_string(input_sets) + " sets in, " + std::to_string(reduced_sets) +
             " kept, " + std::to_string(no_instances) + " no-instances";
  return o;
}

// 7 -------------------------------------------------------------------------
VertexSet random_subset(gen::Rng& rng, int n, double p) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (gen::coin(rng, p)) s.push_back(v);
  return s;
}

// Direct membership test of the locality statement with Floyd-Warshall intervals.
bool locality_oracle(const WeightedGraph& g, const VertexSet& z) {
  const int n = g.vertex_count();
  const auto d = oracle::floyd_warshall(g);
  const auto comps = oracle::components_after(g, oracle::mask_of(z));
  std::vector<int> label(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) label[v] = static_cast<int>(c);
  std::vector<char> covered(n, 0);
  for (Vertex v : z) covered[v] = 1;
  for (Vertex a : z)
    for (Vertex b : z)
      if (a < b)
        for (Vertex w : oracle::fw_interval(d, a, b)) covered[w] = 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (label[u] < 0 || label[v] < 0) continue;
      for (Vertex w : oracle::fw_interval(d, u, v))
        if (!covered[w] && label[w] != label[u] && label[w] != label[v]) return false;
    }
  return true;
}

Outcome interval_locality() {
  Outcome o;
  gen::Rng rng(7007);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen::uniform(rng, 1, 12);
    const auto g = gen::random_graph(rng, n, gen::uniform(rng, 15, 60) / 100.0, trial % 2 ? 5 : 1);
    const auto z = random_subset(rng, n, gen::uniform(rng, 5, 40) / 100.0);
    if (!check_interval_locality(g, z)) o.fail("trial " + std::to_string(trial) + ": library check returned false");
    if (!locality_oracle(g, z)) o.fail("trial " + std::to_string(trial) + ": direct check found a violation");
  }
  o.detail = "100 (graph, Z) pairs, library hook and direct Floyd-Warshall check";
  return o;
}

// 8 -------------------------------------------------------------------------
Outcome component_classes_refine() {
  Outcome o;
  gen::Rng rng(8008);
  long compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen::uniform(rng, 2, 12);
    const auto g = gen::random_graph(rng, n, gen::uniform(rng, 20, 60) / 100.0, trial % 2 ? 5 : 1);
    const auto z = random_subset(rng, n, 0.25);
    const auto pairs = gen::random_pairs(rng, g, gen::uniform(rng, 1, 8));
    const auto local = component_local_classes(g, apsp(g), z, pairs);
    const auto d = oracle::floyd_warshall(g);
    std::vector<std::vector<char>> signature(n);
    for (const auto& p : pairs) {
      const auto iv = oracle::fw_interval(d, p.first, p.second);
      for (Vertex v = 0; v < n; ++v) signature[v].push_back(geohit::contains(iv, v));
    }
    const auto comps = oracle::components_after(g, oracle::mask_of(z));
    for (const auto& comp : comps)
      for (Vertex u : comp)
        for (Vertex v : comp)
          if (u < v && local.class_of[u] == local.class_of[v]) {
            ++compared;
            if (signature[u] != signature[v]) {
              o.fail("trial " + std::to_string(trial) + ": " + std::to_string(u) + " and " + std::to_string(v) +
                     " share a local class but are not T-equivalent");
            }
          }
  }
  o.detail = "100 (graph, Z, T) triples, " + std::to_string(compared) + " same-class vertex pairs checked";
  return o;
}

// 9 -------------------------------------------------------------------------
WeightedGraph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  return WeightedGraph(n, e);
}

WeightedGraph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1});
  return WeightedGraph(n, e);
}

WeightedGraph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
  return WeightedGraph(leaves + 1, e);
}

Outcome separator_subroutines() {
  Outcome o;
  gen::Rng rng(9009);
  const std::pair<const char*, std::pair<WeightedGraph, int>> named[] = {
      {"P9", {path_graph(9), 5}}, {"K6", {complete_graph(6), 6}}, {"K1,5", {star_graph(5), 2}}};
  for (const auto& [name, gi] : named) {
    const auto vi = vertex_integrity(gi.first);
    if (vi.iota != gi.second) o.fail(std::string("vi(") + name + ") = " + std::to_string(vi.iota));
  }
  int mw_found = 0, mc_found = 0, pq_found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen::uniform(rng, 1, 10);
    const auto g = gen::random_graph(rng, n, gen::uniform(rng, 15, 60) / 100.0);
    const std::string label = "trial " + std::to_string(trial);

    const auto vi = vertex_integrity(g);
    const int vi_expected = oracle::vertex_integrity(g);
    std::size_t largest = 0;
    for (const auto& c : oracle::components_after(g, oracle::mask_of(vi.witness.z))) largest = std::max(largest, c.size());
    if (vi.iota != vi_expected || static_cast<int>(vi.witness.z.size() + largest) != vi.iota) {
      o.fail(label + ": vertex integrity " + std::to_string(vi.iota) + ", exhaustive " + std::to_string(vi_expected));
    }

    // Multiway cut on an independent random terminal set.
    VertexSet u;
    for (Vertex v = 0; v < n; ++v) {
      const bool free = std::none_of(u.begin(), u.end(), [&](Vertex t) { return g.has_edge(t, v); });
      if (free && gen::coin(rng, 0.4)) u.push_back(v);
    }
    const auto mw = multiway_cut(g, u, n);
    const auto mw_expected = oracle::min_multiway_cut(g, u);
    if (size_of(mw ? std::optional<Solution>(mw->z) : std::nullopt) != mw_expected) {
      o.fail(label + ": multiway cut size differs from exhaustive " + show(mw_expected));
    } else if (mw) {
      ++mw_found;
      for (const auto& c : oracle::components_after(g, oracle::mask_of(mw->z)))
        if (oracle::terminals_in(c, oracle::mask_of(u)) > 1) o.fail(label + ": multiway cut leaves two terminals together");
      if (geohit::intersects(mw->z, u)) o.fail(label + ": multiway cut deletes a terminal");
    }

    // Multicut on random non-adjacent pairs.
    std::vector<VertexPair> pairs;
    for (const auto& p : gen::random_pairs(rng, g, gen::uniform(rng, 1, 4)))
      if (!g.has_edge(p.first, p.second)) pairs.push_back(p);
    const auto mc = multicut(g, pairs, n);
    const auto mc_expected = oracle::min_multicut(g, pairs);
    if (size_of(mc ? std::optional<Solution>(mc->z) : std::nullopt) != mc_expected) {
      o.fail(label + ": multicut size differs from exhaustive " + show(mc_expected));
    } else if (mc) {
      ++mc_found;
      if (!witness_separates(g, pairs, mc->z)) o.fail(label + ": multicut leaves a pair connected");
    }

    // (p,q)-separator against the full list of valid separators.
    const auto r = random_subset(rng, n, 0.5);
    const int p = gen::uniform(rng, 0, 3), q = gen::uniform(rng, 1, 3);
    const auto pq = pq_separator(g, r, p, q);
    const auto all = oracle::all_pq_separators(g, r, p, q);
    if (all.empty() != !pq.has_value()) {
      o.fail(label + ": pq separator existence differs from exhaustive");
    } else if (pq) {
      ++pq_found;
      int min_size = 64;
      for (auto m : all) min_size = std::min(min_size, __builtin_popcountll(m));
      const auto mask = oracle::mask_of(pq->z);
      if (std::find(all.begin(), all.end(), mask) == all.end() || static_cast<int>(pq->z.size()) != min_size) {
        o.fail(label + ": pq separator " + str(pq->z) + " is not a minimum valid separator");
      }
    }
  }
  o.detail = "vi(P9)=5, vi(K6)=6, vi(K1,5)=2; 100 random graphs each for vi, multiway cut (" + std::to_string(mw_found) +
             " found), multicut (" + std::to_string(mc_found) + "), pq (" + std::to_string(pq_found) + ")";
  return o;
}

// 10 ------------------------------------------------------------------------
Outcome tree_optimality() {
  Outcome o;
  gen::Rng rng(10010);
  double worst_ms = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform(rng, 1, 14);
    const auto g = gen::random_tree(rng, n, trial % 2 ? 5 : 1);
    const auto pairs = gen::random_pairs(rng, g, gen::uniform(rng, 0, 10));
    const int k = trial % 4 == 0 ? gen::uniform(rng, 0, 3) : n;
    const SpiInstance inst(g, pairs, k);
    const auto t0 = Clock::now();
    const auto got = solve_tree(inst);
    const double ms = seconds_since(t0) * 1000.0;
    worst_ms = std::max(worst_ms, ms);
    const auto expected = oracle::spi_optimum(g, pairs, k);
    const auto brute = solve_bruteforce(inst, {32});
    if (size_of(got) != expected || size_of(brute) != expected) {
      o.fail("trial " + std::to_string(trial) + ": tree " + show(size_of(got)) + ", brute force " +
             show(size_of(brute)) + ", exhaustive " + show(expected));
    }
    if (got && !verify_solution(inst, *got).feasible()) o.fail("trial " + std::to_string(trial) + ": tree answer does not verify");
    if (ms >= 10.0) o.fail("trial " + std::to_string(trial) + ": solve_tree took " + std::to_string(ms) + " ms");
  }
  std::ostringstream detail;
  detail << "200 trees, slowest solve_tree " << worst_ms << " ms";
  o.detail = detail.str();
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << ": " << o.detail;
    if (!o.pass) std::cout << "  -- " << o.failure;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  };
  auto guarded = [](const std::function<Outcome()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      Outcome o;
      o.fail(std::string("exception: ") + e.what());
      return o;
    }
  };

  report(1, "interval correctness", guarded(interval_correctness));
  report(2, "solver concordance", guarded(solver_concordance));
  ColoringSweep sweep;
  try {
    sweep = coloring_round_trips();
  } catch (const std::exception& e) {
    sweep.round_trip.fail(std::string("exception: ") + e.what());
    sweep.structure.fail(std::string("exception: ") + e.what());
  }
  report(3, "3-coloring reduction round trips", sweep.round_trip);
  report(4, "structural certificates", guarded([&] { return hs_certificates(sweep.structure); }));
  report(5, "hitting set reduction round trips", guarded(hs_round_trips));
  report(6, "kernel soundness", guarded(kernel_soundness));
  report(7, "interval locality around Z", guarded(interval_locality));
  report(8, "component classes refine T-equivalence", guarded(component_classes_refine));
  report(9, "separator subroutines", guarded(separator_subroutines));
  report(10, "tree solver optimality", guarded(tree_optimality));
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
