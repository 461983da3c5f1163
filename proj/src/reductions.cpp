#include "geohit/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "geohit/separators.hpp"
#include "text_reader.hpp"

namespace geohit {

using namespace detail;

void HsInstance::validate() const {
  if (universe_size < 0) throw InvalidInstance("universe size must be nonnegative");
  if (budget < 0) throw InvalidInstance("budget must be nonnegative");
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto& f = family[j];
    if (f.empty()) throw InvalidInstance("set " + std::to_string(j) + " is empty");
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw InvalidInstance("set " + std::to_string(j) + " is not sorted and duplicate-free");
    }
    if (f.front() < 0 || f.back() >= universe_size) {
      throw InvalidInstance("set " + std::to_string(j) + " has an element outside the universe");
    }
  }
}

bool HsInstance::is_hit_by(const VertexSet& s) const {
  return std::all_of(family.begin(), family.end(), [&](const VertexSet& f) { return intersects(f, s); });
}

ColoringInstance parse_coloring_source(std::string_view text) {
  LineReader reader(text);
  std::vector<Token> tok;
  if (!reader.next(tok)) syntax(reader.line() + 1, 1, "missing 'p graph' header");
  const std::size_t header_line = reader.line();
  if (tok.size() != 4 || tok[0].text != "p" || tok[1].text != "graph") {
    syntax(header_line, tok[0].column, "header must be 'p graph <n> <m>'");
  }
  const long long n = to_int(tok[2], header_line);
  const long long m = to_int(tok[3], header_line);
  if (n < 0) semantic(header_line, tok[2].column, "vertex count must be nonnegative");
  if (m < 0) semantic(header_line, tok[3].column, "edge count must be nonnegative");
  const Token m_token = tok[3];

  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (reader.next(tok)) {
    const std::size_t line = reader.line();
    if (tok[0].text != "e" || tok.size() != 3) syntax(line, tok[0].column, "expected 'e <u> <v>'");
    Vertex u = to_vertex(tok[1], line, static_cast<int>(n));
    Vertex v = to_vertex(tok[2], line, static_cast<int>(n));
    if (u == v) semantic(line, tok[1].column, "self-loop");
    if (!seen.insert(std::minmax(u, v)).second) semantic(line, tok[1].column, "duplicate edge");
    edges.push_back({u, v, 1});
  }
  if (static_cast<long long>(edges.size()) != m) {
    semantic(header_line, m_token.column, "header declares " + std::to_string(m) + " edges, found " +
                                              std::to_string(edges.size()));
  }
  return {WeightedGraph(static_cast<int>(n), std::move(edges))};
}

HsInstance parse_hs_source(std::string_view text) {
  LineReader reader(text);
  std::vector<Token> tok;
  if (!reader.next(tok)) syntax(reader.line() + 1, 1, "missing 'p hs' header");
  const std::size_t header_line = reader.line();
  if (tok.size() != 5 || tok[0].text != "p" || tok[1].text != "hs") {
    syntax(header_line, tok[0].column, "header must be 'p hs <n> <m> <h>'");
  }
  HsInstance hs;
  const long long n = to_int(tok[2], header_line);
  const long long m = to_int(tok[3], header_line);
  const long long h = to_int(tok[4], header_line);
  for (int i = 2; i < 5; ++i) {
    if (to_int(tok[i], header_line) < 0) semantic(header_line, tok[i].column, "header fields must be nonnegative");
  }
  const Token m_token = tok[3];
  hs.universe_size = static_cast<int>(n);
  hs.budget = static_cast<int>(h);
  while (reader.next(tok)) {
    const std::size_t line = reader.line();
    if (tok[0].text != "f") syntax(line, tok[0].column, "expected 'f <e1> <e2> ...'");
    if (tok.size() < 2) semantic(line, tok[0].column, "empty set");
    VertexSet f;
    for (std::size_t i = 1; i < tok.size(); ++i) f.push_back(to_vertex(tok[i], line, hs.universe_size));
    f = normalized(std::move(f));
    if (f.size() != tok.size() - 1) semantic(line, tok[1].column, "repeated element");
    hs.family.push_back(std::move(f));
  }
  if (static_cast<long long>(hs.family.size()) != m) {
    semantic(header_line, m_token.column, "header declares " + std::to_string(m) + " sets, found " +
                                              std::to_string(hs.family.size()));
  }
  return hs;
}

namespace {

struct GadgetName {
  GadgetKind kind;
  std::string_view name;
};

constexpr GadgetName kGadgetNames[] = {
    {GadgetKind::P5Apex, "p5-apex"},         {GadgetKind::PathApex, "path-apex"},
    {GadgetKind::TriangleApex, "triangle-apex"}, {GadgetKind::Bandwidth4, "bw4"},
    {GadgetKind::VcPairs, "vc-pairs"},       {GadgetKind::VcComplete, "vc-complete"},
    {GadgetKind::HsMulticut, "hs-multicut"}, {GadgetKind::HsPairwise, "hs-pairwise"},
};

}  // namespace

std::string_view to_string(GadgetKind kind) {
  for (const auto& g : kGadgetNames) {
    if (g.kind == kind) return g.name;
  }
  return "?";
}

std::optional<GadgetKind> parse_gadget_kind(std::string_view name) {
  for (const auto& g : kGadgetNames) {
    if (g.name == name) return g.kind;
  }
  return std::nullopt;
}

bool is_coloring_gadget(GadgetKind kind) {
  return kind == GadgetKind::P5Apex || kind == GadgetKind::PathApex || kind == GadgetKind::TriangleApex ||
         kind == GadgetKind::Bandwidth4;
}

bool is_hs_gadget(GadgetKind kind) { return kind == GadgetKind::HsMulticut || kind == GadgetKind::HsPairwise; }

int bandwidth_of_ordering(const WeightedGraph& g, const std::vector<Vertex>& ordering) {
  const int n = g.vertex_count();
  if (static_cast<int>(ordering.size()) != n) throw InvalidInstance("ordering must list every vertex once");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = ordering[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw InvalidInstance("ordering must list every vertex once");
    pos[v] = i;
  }
  int width = 0;
  for (const auto& e : g.edges()) width = std::max(width, std::abs(pos[e.u] - pos[e.v]));
  return width;
}

namespace {

// Vertex numbering per gadget.
Vertex p5_vertex(int i, int role) { return 5 * i + role; }  // roles: v1 v1' v2 v3' v3
Vertex tri_vertex(int i, int color) { return 3 * i + color - 1; }
Vertex bw4_apex(int i) { return 4 * i; }
Vertex bw4_vertex(int i, int color) { return 4 * i + color; }

constexpr int kV1 = 0, kV1p = 1, kV2 = 2, kV3p = 3, kV3 = 4;
constexpr int kConnectorInner = 6;  // 7 edges per connector

std::vector<VertexPair> source_edges(const WeightedGraph& g) {
  std::vector<VertexPair> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<VertexPair> p5_pairs(const WeightedGraph& src) {
  std::vector<VertexPair> t;
  for (int i = 0; i < src.vertex_count(); ++i) {
    t.emplace_back(p5_vertex(i, kV1), p5_vertex(i, kV1p));
    t.emplace_back(p5_vertex(i, kV3), p5_vertex(i, kV3p));
  }
  for (const auto& e : src.edges()) {
    for (int role : {kV1, kV2, kV3}) t.emplace_back(p5_vertex(e.u, role), p5_vertex(e.v, role));
  }
  return t;
}

// Components of g minus the apex, each checked with `ok`.
template <class Pred>
bool apex_components_are(const WeightedGraph& g, Vertex apex, Pred ok) {
  for (const auto& comp : components_without(g, {apex})) {
    const WeightedGraph sub = g.induced(comp);
    if (!ok(sub)) return false;
  }
  return true;
}

bool is_path_graph(const WeightedGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && g.max_degree() <= 2 && is_connected(g);
}

ReductionArtifact checked(ReductionArtifact a) {
  if (auto failure = check_certificate(a)) throw InvariantViolation("generated gadget fails its certificate: " + *failure);
  return a;
}

}  // namespace

std::optional<std::string> check_certificate(const ReductionArtifact& a) {
  const auto& g = a.instance.graph();
  const auto& c = a.certificate;
  if (c.shape == "p5-forest" || c.shape == "single-path" || c.shape == "triangle-forest") {
    if (!c.apex || *c.apex < 0 || *c.apex >= g.vertex_count()) return "missing apex";
    if (c.shape == "p5-forest" &&
        !apex_components_are(g, *c.apex, [](const WeightedGraph& s) { return s.vertex_count() == 5 && is_path_graph(s); })) {
      return "H - s* is not a disjoint union of 5-vertex paths";
    }
    if (c.shape == "single-path") {
      const auto comps = components_without(g, {*c.apex});
      if (comps.size() > 1 || (comps.size() == 1 && !is_path_graph(g.induced(comps[0])))) {
        return "H - s* is not a single path";
      }
    }
    if (c.shape == "triangle-forest" &&
        !apex_components_are(g, *c.apex, [](const WeightedGraph& s) { return s.vertex_count() == 3 && s.edge_count() == 3; })) {
      return "H - s* is not a disjoint union of triangles";
    }
  } else if (c.shape == "bandwidth-4") {
    const int width = bandwidth_of_ordering(g, c.ordering);
    if (width != c.bandwidth || width > 4) return "ordering bandwidth " + std::to_string(width) + " does not match claim";
    if (g.max_degree() != c.max_degree || c.max_degree > 5) return "maximum degree does not match claim";
  } else if (c.shape == "multicut-witness") {
    const auto pairs = a.instance.terminal_pairs();
    if (!is_multicut(g, pairs, c.witness)) return "W is not a multicut of T";
    if (static_cast<int>(c.witness.size()) != a.source_budget + 3) return "W does not have size h+3";
  } else if (c.shape != "none") {
    return "unknown shape '" + c.shape + "'";
  }
  return std::nullopt;
}

ReductionArtifact gen_p5_apex(const ColoringInstance& src) {
  const int n = src.graph.vertex_count();
  const Vertex apex = 5 * n;
  std::vector<Edge> edges;
  ReductionArtifact a;
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r + 1 < 5; ++r) edges.push_back({p5_vertex(i, r), p5_vertex(i, r + 1), 1});
    for (int r : {kV1, kV1p, kV3p, kV3}) edges.push_back({apex, p5_vertex(i, r), 1});
    a.vertex_map.emplace_back("v" + std::to_string(i), VertexSet{5 * i, 5 * i + 1, 5 * i + 2, 5 * i + 3, 5 * i + 4});
  }
  a.vertex_map.emplace_back("s*", VertexSet{apex});
  a.instance = SpiInstance(WeightedGraph(n * 5 + 1, std::move(edges)), p5_pairs(src.graph), 2 * n);
  a.gadget = GadgetKind::P5Apex;
  a.certificate.shape = "p5-forest";
  a.certificate.apex = apex;
  a.source_vertices = n;
  a.source_edges = source_edges(src.graph);
  return checked(std::move(a));
}

ReductionArtifact gen_path_apex(const ColoringInstance& src) {
  const int n = src.graph.vertex_count();
  ReductionArtifact base = gen_p5_apex(src);
  std::vector<Edge> edges = base.instance.graph().edges();
  int next = 5 * n + 1;
  for (int i = 0; i + 1 < n; ++i) {
    VertexSet inner;
    Vertex prev = p5_vertex(i, kV3);
    for (int j = 0; j < kConnectorInner; ++j) {
      edges.push_back({prev, next, 1});
      inner.push_back(next);
      prev = next++;
    }
    edges.push_back({prev, p5_vertex(i + 1, kV1), 1});
    base.vertex_map.emplace_back("c" + std::to_string(i), std::move(inner));
  }
  base.instance = SpiInstance(WeightedGraph(next, std::move(edges)), base.instance.stored_pairs(), 2 * n);
  base.gadget = GadgetKind::PathApex;
  base.certificate.shape = "single-path";
  return checked(std::move(base));
}

ReductionArtifact gen_triangle_apex(const ColoringInstance& src) {
  const int n = src.graph.vertex_count();
  const Vertex apex = 3 * n;
  std::vector<Edge> edges;
  std::vector<VertexPair> t;
  ReductionArtifact a;
  for (int i = 0; i < n; ++i) {
    for (int c = 1; c <= 3; ++c) {
      edges.push_back({tri_vertex(i, c), tri_vertex(i, c % 3 + 1), 1});
      edges.push_back({apex, tri_vertex(i, c), 1});
      t.emplace_back(tri_vertex(i, c), tri_vertex(i, c % 3 + 1));
    }
    a.vertex_map.emplace_back("v" + std::to_string(i), VertexSet{3 * i, 3 * i + 1, 3 * i + 2});
  }
  for (const auto& e : src.graph.edges()) {
    for (int c = 1; c <= 3; ++c) t.emplace_back(tri_vertex(e.u, c), tri_vertex(e.v, c));
  }
  a.vertex_map.emplace_back("s*", VertexSet{apex});
  a.instance = SpiInstance(WeightedGraph(3 * n + 1, std::move(edges)), std::move(t), 2 * n);
  a.gadget = GadgetKind::TriangleApex;
  a.certificate.shape = "triangle-forest";
  a.certificate.apex = apex;
  a.source_vertices = n;
  a.source_edges = source_edges(src.graph);
  return checked(std::move(a));
}

ReductionArtifact gen_bandwidth4(const ColoringInstance& src) {
  const int n = src.graph.vertex_count();
  std::vector<Edge> edges;
  std::vector<VertexPair> t;
  ReductionArtifact a;
  for (int i = 0; i < n; ++i) {
    for (int c = 1; c <= 3; ++c) {
      edges.push_back({bw4_vertex(i, c), bw4_vertex(i, c % 3 + 1), 1});
      edges.push_back({bw4_apex(i), bw4_vertex(i, c), 1});
      t.emplace_back(bw4_vertex(i, c), bw4_vertex(i, c % 3 + 1));
    }
    if (i + 1 < n) edges.push_back({bw4_apex(i), bw4_apex(i + 1), 1});
    a.vertex_map.emplace_back("v" + std::to_string(i), VertexSet{4 * i + 1, 4 * i + 2, 4 * i + 3});
    a.vertex_map.emplace_back("s*" + std::to_string(i), VertexSet{4 * i});
  }
  for (const auto& e : src.graph.edges()) {
    for (int c = 1; c <= 3; ++c) t.emplace_back(bw4_vertex(e.u, c), bw4_vertex(e.v, c));
  }
  WeightedGraph h(4 * n, std::move(edges));
  a.certificate.shape = "bandwidth-4";
  for (Vertex v = 0; v < 4 * n; ++v) a.certificate.ordering.push_back(v);
  a.certificate.bandwidth = bandwidth_of_ordering(h, a.certificate.ordering);
  a.certificate.max_degree = h.max_degree();
  a.instance = SpiInstance(std::move(h), std::move(t), 2 * n);
  a.gadget = GadgetKind::Bandwidth4;
  a.source_vertices = n;
  a.source_edges = source_edges(src.graph);
  return checked(std::move(a));
}

SpiInstance gen_vc_pairs(const WeightedGraph& src, int k) {
  if (!is_connected(src)) throw Disconnected();
  std::vector<Edge> edges;
  for (const auto& e : src.edges()) edges.push_back({e.u, e.v, 1});
  VertexSet q;
  for (Vertex v = 0; v < src.vertex_count(); ++v) q.push_back(v);
  return SpiInstance::pairwise(WeightedGraph(src.vertex_count(), std::move(edges)), std::move(q), k);
}

SpiInstance gen_vc_complete(const WeightedGraph& src, int k) {
  const int n = src.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  }
  return SpiInstance(WeightedGraph(n, std::move(edges)), source_edges(src), k);
}

namespace {

struct HsLayout {
  int m, n, h;
  Vertex set(int j) const { return j; }
  Vertex element(int i) const { return m + i; }
  Vertex w(int j) const { return m + n + j; }
  Vertex x(int j) const { return m + n + (h + 3) + j; }
  Vertex f_star() const { return m + n + 2 * (h + 3); }
  Vertex w_star() const { return f_star() + 1; }
};

struct HsGraph {
  std::vector<Edge> edges;
  std::vector<VertexPair> pairs;
  VertexSet w;
};

HsGraph hs_base(const HsInstance& src, const HsLayout& lay, ReductionArtifact& a) {
  HsGraph out;
  for (int j = 0; j < lay.m; ++j) {
    for (Vertex e : src.family[j]) out.edges.push_back({lay.element(e), lay.set(j), 1});
    a.vertex_map.emplace_back("F" + std::to_string(j), VertexSet{lay.set(j)});
  }
  for (int i = 0; i < lay.n; ++i) {
    for (int j = 0; j < lay.h + 3; ++j) out.edges.push_back({lay.element(i), lay.w(j), 1});
    a.vertex_map.emplace_back("u" + std::to_string(i), VertexSet{lay.element(i)});
  }
  for (int j = 0; j < lay.h + 3; ++j) out.w.push_back(lay.w(j));
  for (int i = 0; i < lay.m; ++i) {
    for (int j = 0; j < lay.h + 3; ++j) out.pairs.emplace_back(lay.set(i), lay.w(j));
  }
  a.vertex_map.emplace_back("W", out.w);
  return out;
}

}  // namespace

ReductionArtifact gen_hs_multicut(const HsInstance& src) {
  src.validate();
  const HsLayout lay{static_cast<int>(src.family.size()), src.universe_size, src.budget};
  ReductionArtifact a;
  HsGraph base = hs_base(src, lay, a);
  a.instance = SpiInstance(WeightedGraph(lay.m + lay.n + lay.h + 3, std::move(base.edges)), std::move(base.pairs),
                           src.budget);
  a.gadget = GadgetKind::HsMulticut;
  a.certificate.shape = "multicut-witness";
  a.certificate.witness = base.w;
  a.source_vertices = lay.n;
  a.source_sets = lay.m;
  a.source_budget = lay.h;
  return checked(std::move(a));
}

ReductionArtifact gen_hs_pairwise(const HsInstance& src) {
  src.validate();
  // Without sets, X and W would sit in different components.
  if (src.family.empty()) throw InvalidInstance("the pairwise gadget needs at least one set");
  const HsLayout lay{static_cast<int>(src.family.size()), src.universe_size, src.budget};
  ReductionArtifact a;
  HsGraph base = hs_base(src, lay, a);
  VertexSet x;
  for (int j = 0; j < lay.h + 3; ++j) {
    base.edges.push_back({lay.f_star(), lay.x(j), 1});
    x.push_back(lay.x(j));
  }
  for (int j = 0; j < lay.m; ++j) base.edges.push_back({lay.f_star(), lay.set(j), 1});
  for (Vertex w : base.w) base.edges.push_back({lay.w_star(), w, 1});
  a.vertex_map.emplace_back("X", x);
  a.vertex_map.emplace_back("F*", VertexSet{lay.f_star()});
  a.vertex_map.emplace_back("w*", VertexSet{lay.w_star()});

  const int total = lay.w_star() + 1;
  VertexSet q;
  for (Vertex v = 0; v < total; ++v) {
    if (v < lay.element(0) || v >= lay.element(lay.n)) q.push_back(v);
  }
  a.instance = SpiInstance::pairwise(WeightedGraph(total, std::move(base.edges)), std::move(q), src.budget + 2);
  a.gadget = GadgetKind::HsPairwise;
  // W stays a multicut of the underlying multicut gadget's pairs; it does
  // not separate Q, so no structural claim is attached here.
  a.certificate.shape = "none";
  a.certificate.witness = base.w;
  a.source_vertices = lay.n;
  a.source_sets = lay.m;
  a.source_budget = lay.h;
  return checked(std::move(a));
}

ReductionArtifact generate_coloring_gadget(GadgetKind kind, const ColoringInstance& src) {
  switch (kind) {
    case GadgetKind::P5Apex: return gen_p5_apex(src);
    case GadgetKind::PathApex: return gen_path_apex(src);
    case GadgetKind::TriangleApex: return gen_triangle_apex(src);
    case GadgetKind::Bandwidth4: return gen_bandwidth4(src);
    default: throw NotAColoringGadget("gadget " + std::string(to_string(kind)) + " is not built from a 3-coloring source");
  }
}

ReductionArtifact generate_hs_gadget(GadgetKind kind, const HsInstance& src) {
  switch (kind) {
    case GadgetKind::HsMulticut: return gen_hs_multicut(src);
    case GadgetKind::HsPairwise: return gen_hs_pairwise(src);
    default: throw NotAHittingSetGadget("gadget " + std::string(to_string(kind)) + " is not built from a hitting set source");
  }
}

namespace {

bool p5_layout(GadgetKind kind) { return kind == GadgetKind::P5Apex || kind == GadgetKind::PathApex; }

VertexSet color_class_vertices(const ReductionArtifact& a, int i) {
  switch (a.gadget) {
    case GadgetKind::P5Apex:
    case GadgetKind::PathApex:
      return {p5_vertex(i, kV1), p5_vertex(i, kV1p), p5_vertex(i, kV2), p5_vertex(i, kV3p), p5_vertex(i, kV3)};
    case GadgetKind::TriangleApex: return {tri_vertex(i, 1), tri_vertex(i, 2), tri_vertex(i, 3)};
    default: return {bw4_vertex(i, 1), bw4_vertex(i, 2), bw4_vertex(i, 3)};
  }
}

}  // namespace

Solution coloring_to_solution(const ReductionArtifact& a, const std::vector<int>& coloring) {
  if (!is_coloring_gadget(a.gadget)) throw NotAColoringGadget("artifact is not a 3-coloring gadget");
  if (static_cast<int>(coloring.size()) != a.source_vertices) throw InvalidInstance("coloring has the wrong length");
  Solution s;
  for (int i = 0; i < a.source_vertices; ++i) {
    const int c = coloring[i];
    if (c < 1 || c > 3) throw InvalidInstance("colors must be 1, 2 or 3");
    if (p5_layout(a.gadget)) {
      s.push_back(p5_vertex(i, c == 1 ? kV1p : kV1));
      s.push_back(p5_vertex(i, c == 3 ? kV3p : kV3));
    } else {
      for (int other = 1; other <= 3; ++other) {
        if (other != c) s.push_back(a.gadget == GadgetKind::TriangleApex ? tri_vertex(i, other) : bw4_vertex(i, other));
      }
    }
  }
  return normalized(std::move(s));
}

std::vector<int> extract_coloring(const ReductionArtifact& a, const Solution& sol_in) {
  if (!is_coloring_gadget(a.gadget)) throw NotAColoringGadget("artifact is not a 3-coloring gadget");
  const Solution sol = normalized(sol_in);
  if (!verify_solution(a.instance, sol).feasible()) throw ExtractionFailed("solution does not verify on the gadget");

  std::vector<char> in_s(a.instance.vertex_count(), 0);
  for (Vertex v : sol) in_s[v] = 1;
  std::vector<int> color(a.source_vertices, 0);
  std::size_t accounted = 0;
  for (int i = 0; i < a.source_vertices; ++i) {
    const VertexSet own = color_class_vertices(a, i);
    const auto mine = set_intersection(own, sol);
    accounted += mine.size();
    if (p5_layout(a.gadget)) {
      const bool v1 = in_s[p5_vertex(i, kV1)], v1p = in_s[p5_vertex(i, kV1p)];
      const bool v3 = in_s[p5_vertex(i, kV3)], v3p = in_s[p5_vertex(i, kV3p)];
      if (v1 == v1p || v3 == v3p || in_s[p5_vertex(i, kV2)]) {
        throw ExtractionFailed("gadget of source vertex " + std::to_string(i) + " is not hit as the budget forces");
      }
      color[i] = !v1 ? 1 : (!v3 ? 3 : 2);
    } else {
      if (mine.size() != 2) {
        throw ExtractionFailed("triangle of source vertex " + std::to_string(i) + " does not hold exactly two picks");
      }
      for (int c = 1; c <= 3; ++c) {
        if (!contains(mine, own[c - 1])) color[i] = c;
      }
    }
  }
  if (accounted != sol.size()) throw ExtractionFailed("solution picks a vertex outside the color gadgets");
  for (const auto& e : a.source_edges) {
    if (color[e.first] == color[e.second]) {
      throw ExtractionFailed("extracted coloring gives edge {" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + "} one color");
    }
  }
  return color;
}

VertexSet extract_hitting_set(const ReductionArtifact& a, const HsInstance& src, const Solution& sol_in) {
  if (!is_hs_gadget(a.gadget)) throw NotAHittingSetGadget("artifact is not a hitting set gadget");
  if (a.source_sets != static_cast<int>(src.family.size()) || a.source_vertices != src.universe_size ||
      a.source_budget != src.budget) {
    throw NotAHittingSetGadget("artifact was not generated from this source");
  }
  const Solution sol = normalized(sol_in);
  if (!verify_solution(a.instance, sol).feasible()) throw ExtractionFailed("solution does not verify on the gadget");
  const HsLayout lay{a.source_sets, a.source_vertices, a.source_budget};
  VertexSet hs;
  for (Vertex v : sol) {
    if (v < lay.element(0)) hs.push_back(src.family[v].front());
    else if (v < lay.w(0)) hs.push_back(v - lay.element(0));
  }
  hs = normalized(std::move(hs));
  if (static_cast<int>(hs.size()) > src.budget || !src.is_hit_by(hs)) {
    throw ExtractionFailed("normalized solution is not a hitting set of size at most h");
  }
  return hs;
}

std::string serialize_certificate(const ReductionArtifact& a) {
  std::ostringstream out;
  auto list = [&](const char* key, const std::vector<Vertex>& vs) {
    out << key;
    for (Vertex v : vs) out << ' ' << v;
    out << '\n';
  };
  out << "gadget " << to_string(a.gadget) << '\n';
  out << "shape " << a.certificate.shape << '\n';
  if (a.certificate.apex) out << "apex " << *a.certificate.apex << '\n';
  if (!a.certificate.ordering.empty()) list("ordering", a.certificate.ordering);
  if (a.certificate.bandwidth >= 0) out << "bandwidth " << a.certificate.bandwidth << '\n';
  if (a.certificate.max_degree >= 0) out << "max_degree " << a.certificate.max_degree << '\n';
  if (!a.certificate.witness.empty()) list("witness", a.certificate.witness);
  for (const auto& [label, vs] : a.vertex_map) {
    out << "map " << label;
    for (Vertex v : vs) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace geohit
