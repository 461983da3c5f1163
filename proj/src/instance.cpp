#include "geohit/instance.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "text_reader.hpp"

namespace geohit {

namespace {

void check_pairs(int n, const std::vector<VertexPair>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (p.first < 0 || p.second >= n) {
      throw InvalidInstance("terminal pair {" + std::to_string(p.first) + "," +
                            std::to_string(p.second) + "} is out of range");
    }
    if (p.first == p.second) {
      throw InvalidInstance("terminal pair {" + std::to_string(p.first) + "," +
                            std::to_string(p.first) + "} is a self-pair");
    }
    if (i > 0 && pairs[i - 1] == p) {
      throw InvalidInstance("duplicate terminal pair {" + std::to_string(p.first) + "," +
                            std::to_string(p.second) + "}");
    }
  }
}

}  // namespace

SpiInstance::SpiInstance(WeightedGraph graph, std::vector<VertexPair> pairs, int budget)
    : graph_(std::move(graph)), pairs_(std::move(pairs)), budget_(budget) {
  if (budget < 0) throw InvalidInstance("budget must be nonnegative");
  std::sort(pairs_.begin(), pairs_.end());
  check_pairs(graph_.vertex_count(), pairs_);
}

SpiInstance SpiInstance::pairwise(WeightedGraph graph, VertexSet q, int budget) {
  if (budget < 0) throw InvalidInstance("budget must be nonnegative");
  std::sort(q.begin(), q.end());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0 || q[i] >= graph.vertex_count()) {
      throw InvalidInstance("Q vertex " + std::to_string(q[i]) + " is out of range");
    }
    if (i > 0 && q[i] == q[i - 1]) {
      throw InvalidInstance("Q lists vertex " + std::to_string(q[i]) + " twice");
    }
  }
  SpiInstance inst;
  inst.graph_ = std::move(graph);
  inst.variant_ = Variant::Pairwise;
  inst.q_ = std::move(q);
  inst.budget_ = budget;
  return inst;
}

std::vector<VertexPair> SpiInstance::terminal_pairs() const {
  if (variant_ == Variant::Standard) return pairs_;
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    for (std::size_t j = i + 1; j < q_.size(); ++j) out.emplace_back(q_[i], q_[j]);
  }
  return out;
}

VertexSet SpiInstance::terminals() const {
  if (variant_ == Variant::Pairwise) return q_.size() >= 2 ? q_ : VertexSet{};
  VertexSet out;
  for (const auto& p : pairs_) {
    out.push_back(p.first);
    out.push_back(p.second);
  }
  return normalized(std::move(out));
}

SpiInstance SpiInstance::materialized() const {
  return SpiInstance(graph_, terminal_pairs(), budget_);
}

SpiInstance SpiInstance::with_budget(int budget) const {
  SpiInstance out = *this;
  if (budget < 0) throw InvalidInstance("budget must be nonnegative");
  out.budget_ = budget;
  return out;
}

using namespace detail;

SpiInstance parse_instance(std::string_view text) {
  LineReader reader(text);
  std::vector<Token> tok;
  if (!reader.next(tok)) syntax(reader.line() + 1, 1, "missing 'p spi' header");
  const std::size_t header_line = reader.line();
  if (tok[0].text != "p") syntax(header_line, tok[0].column, "expected 'p spi' header");
  if (tok.size() != 6) syntax(header_line, tok[0].column, "header must be 'p spi <n> <m> <t> <k>'");
  if (tok[1].text != "spi") syntax(header_line, tok[1].column, "expected format tag 'spi'");
  const Token header[4] = {tok[2], tok[3], tok[4], tok[5]};
  long long fields[4];
  for (int i = 0; i < 4; ++i) {
    fields[i] = to_int(header[i], header_line);
    if (fields[i] < 0) semantic(header_line, header[i].column, "header fields must be nonnegative");
  }
  const int n = static_cast<int>(fields[0]);
  const long long m = fields[1];
  const long long t = fields[2];
  const int k = static_cast<int>(fields[3]);

  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen_edges;
  std::vector<VertexPair> pairs;
  std::set<VertexPair> seen_pairs;
  std::optional<VertexSet> q;

  while (reader.next(tok)) {
    const std::size_t line = reader.line();
    const auto tag = tok[0].text;
    if (tag == "e") {
      if (tok.size() != 3 && tok.size() != 4) syntax(line, tok[0].column, "edge line must be 'e <u> <v> [w]'");
      Vertex u = to_vertex(tok[1], line, n);
      Vertex v = to_vertex(tok[2], line, n);
      Weight w = 1;
      if (tok.size() == 4) {
        w = to_int(tok[3], line);
        if (w < 0) semantic(line, tok[3].column, "negative edge weight");
      }
      if (u == v) semantic(line, tok[2].column, "self-loop at vertex " + std::to_string(u));
      if (!seen_edges.insert({std::min(u, v), std::max(u, v)}).second) {
        semantic(line, tok[1].column, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
      edges.push_back({u, v, w});
    } else if (tag == "t") {
      if (tok.size() != 3) syntax(line, tok[0].column, "pair line must be 't <u> <v>'");
      if (q) semantic(line, tok[0].column, "'t' lines cannot be combined with a 'q' line");
      Vertex u = to_vertex(tok[1], line, n);
      Vertex v = to_vertex(tok[2], line, n);
      if (u == v) semantic(line, tok[2].column, "self-pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
      VertexPair pr(u, v);
      if (!seen_pairs.insert(pr).second) {
        semantic(line, tok[1].column, "duplicate pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
      pairs.push_back(pr);
    } else if (tag == "q") {
      if (q) semantic(line, tok[0].column, "more than one 'q' line");
      if (!pairs.empty()) semantic(line, tok[0].column, "'q' line cannot be combined with 't' lines");
      if (t != 0) semantic(line, tok[0].column, "pairwise instances must declare t = 0 in the header");
      VertexSet qs;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        Vertex v = to_vertex(tok[i], line, n);
        if (std::find(qs.begin(), qs.end(), v) != qs.end()) {
          semantic(line, tok[i].column, "vertex " + std::to_string(v) + " repeated in Q");
        }
        qs.push_back(v);
      }
      q = std::move(qs);
    } else if (tag == "p") {
      semantic(line, tok[0].column, "duplicate header");
    } else {
      syntax(line, tok[0].column, "unknown line type '" + std::string(tag) + "'");
    }
  }

  if (static_cast<long long>(edges.size()) != m) {
    semantic(header_line, header[1].column, "header declares " + std::to_string(m) + " edges, found " +
                                                std::to_string(edges.size()));
  }
  if (!q && static_cast<long long>(pairs.size()) != t) {
    semantic(header_line, header[2].column, "header declares " + std::to_string(t) + " pairs, found " +
                                                std::to_string(pairs.size()));
  }

  WeightedGraph g(n, std::move(edges));
  if (q) return SpiInstance::pairwise(std::move(g), std::move(*q), k);
  return SpiInstance(std::move(g), std::move(pairs), k);
}

std::string serialize_instance(const SpiInstance& inst) {
  std::ostringstream out;
  const auto& g = inst.graph();
  const bool pairwise = inst.variant() == Variant::Pairwise;
  out << "p spi " << g.vertex_count() << ' ' << g.edge_count() << ' '
      << (pairwise ? 0 : inst.stored_pairs().size()) << ' ' << inst.budget() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  if (pairwise) {
    out << 'q';
    for (Vertex v : inst.q()) out << ' ' << v;
    out << '\n';
  } else {
    for (const auto& p : inst.stored_pairs()) out << "t " << p.first << ' ' << p.second << '\n';
  }
  return out.str();
}

Solution parse_solution(std::string_view text) {
  LineReader reader(text);
  std::vector<Token> tok;
  std::optional<Solution> sol;
  while (reader.next(tok)) {
    if (tok[0].text != "s") syntax(reader.line(), tok[0].column, "expected an 's' line");
    if (sol) semantic(reader.line(), tok[0].column, "more than one 's' line");
    Solution s;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      long long v = to_int(tok[i], reader.line());
      if (v < 0) semantic(reader.line(), tok[i].column, "negative vertex");
      s.push_back(static_cast<Vertex>(v));
    }
    sol = normalized(std::move(s));
  }
  if (!sol) syntax(reader.line() + 1, 1, "missing 's' line");
  return *sol;
}

std::string serialize_solution(const Solution& sol) {
  std::string out = "s";
  for (Vertex v : sol) out += ' ' + std::to_string(v);
  return out;
}

VerifyResult verify_solution(const SpiInstance& inst, const Solution& sol) {
  return verify_solution(inst, apsp(inst.graph()), sol);
}

VerifyResult verify_solution(const SpiInstance& inst, const DistanceMatrix& dist, const Solution& sol) {
  Solution s = normalized(sol);
  for (Vertex v : s) {
    if (v < 0 || v >= inst.vertex_count()) {
      throw InvalidInstance("solution vertex " + std::to_string(v) + " is out of range");
    }
  }
  VerifyResult result;
  result.size = s.size();
  result.over_budget = static_cast<int>(s.size()) > inst.budget();
  for (const auto& pr : inst.terminal_pairs()) {
    if (!interrupts(inst.graph(), dist, s, pr)) result.violated.push_back(pr);
  }
  return result;
}

}  // namespace geohit
