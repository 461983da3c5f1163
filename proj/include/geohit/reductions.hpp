#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geohit/instance.hpp"

namespace geohit {

/// Source of the 3-coloring gadgets. Weights are ignored.
struct ColoringInstance {
  WeightedGraph graph;
};

/// Hitting Set source: nonempty sets over {0..universe_size-1}, budget h.
struct HsInstance {
  int universe_size = 0;
  std::vector<VertexSet> family;
  int budget = 0;

  /// Throws InvalidInstance.
  void validate() const;
  bool is_hit_by(const VertexSet& s) const;
};

/// `p graph n m` followed by `e u v` lines.
ColoringInstance parse_coloring_source(std::string_view text);
/// `p hs n m h` followed by `f e1 e2 ...` lines.
HsInstance parse_hs_source(std::string_view text);

enum class GadgetKind { P5Apex, PathApex, TriangleApex, Bandwidth4, VcPairs, VcComplete, HsMulticut, HsPairwise };

std::string_view to_string(GadgetKind kind);
/// Accepts the CLI spelling (p5-apex, path-apex, ...).
std::optional<GadgetKind> parse_gadget_kind(std::string_view name);
bool is_coloring_gadget(GadgetKind kind);
bool is_hs_gadget(GadgetKind kind);

/// Structural claims about a generated graph, rechecked by check_certificate.
struct GadgetCertificate {
  /// p5-forest, single-path, triangle-forest, bandwidth-4, multicut-witness or none.
  std::string shape = "none";
  std::optional<Vertex> apex;
  /// Vertex order witnessing the bandwidth (bw4 only).
  std::vector<Vertex> ordering;
  int bandwidth = -1;
  int max_degree = -1;
  /// Multicut witness W (HS gadgets).
  VertexSet witness;
};

struct ReductionArtifact {
  SpiInstance instance;
  GadgetKind gadget = GadgetKind::P5Apex;
  /// Source entity label -> gadget vertices, e.g. "v2" -> {10,11,12,13,14},
  /// in construction order.
  std::vector<std::pair<std::string, VertexSet>> vertex_map;
  GadgetCertificate certificate;
  /// Source dimensions: coloring gadgets use vertices; HS gadgets use all three.
  int source_vertices = 0;
  int source_sets = 0;
  int source_budget = 0;
  /// Coloring gadgets: the source edges, for checking extracted colorings.
  std::vector<VertexPair> source_edges;
};

/// max over edges of |position(u) - position(v)|; `ordering` lists every
/// vertex once. Throws InvalidInstance otherwise.
int bandwidth_of_ordering(const WeightedGraph& g, const std::vector<Vertex>& ordering);

/// Empty when every structural claim holds, else a description of the first failure.
std::optional<std::string> check_certificate(const ReductionArtifact& artifact);

ReductionArtifact gen_p5_apex(const ColoringInstance& src);
ReductionArtifact gen_path_apex(const ColoringInstance& src);
ReductionArtifact gen_triangle_apex(const ColoringInstance& src);
ReductionArtifact gen_bandwidth4(const ColoringInstance& src);
/// Same graph, pairwise instance with Q = V. Throws Disconnected, since pairs
/// across components would have no interval.
SpiInstance gen_vc_pairs(const WeightedGraph& src, int k);
/// Complete graph on V with T = E.
SpiInstance gen_vc_complete(const WeightedGraph& src, int k);
ReductionArtifact gen_hs_multicut(const HsInstance& src);
ReductionArtifact gen_hs_pairwise(const HsInstance& src);

/// Dispatch by kind for the coloring gadgets.
ReductionArtifact generate_coloring_gadget(GadgetKind kind, const ColoringInstance& src);
ReductionArtifact generate_hs_gadget(GadgetKind kind, const HsInstance& src);

/// Known solution of a coloring gadget built from a proper coloring
/// (colors 1..3 per source vertex).
Solution coloring_to_solution(const ReductionArtifact& artifact, const std::vector<int>& coloring);

/// Colors 1..3 per source vertex read off a feasible solution. Throws
/// NotAColoringGadget, ExtractionFailed.
std::vector<int> extract_coloring(const ReductionArtifact& artifact, const Solution& sol);

/// Hitting set of the source read off a feasible solution. Throws
/// NotAHittingSetGadget, ExtractionFailed.
VertexSet extract_hitting_set(const ReductionArtifact& artifact, const HsInstance& src, const Solution& sol);

/// Sidecar text: gadget, shape, apex, ordering, bandwidth, max_degree, witness and map lines.
std::string serialize_certificate(const ReductionArtifact& artifact);

}  // namespace geohit
