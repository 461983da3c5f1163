#include "geohit/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "geohit/hitting_set.hpp"
#include "geohit/modular.hpp"
#include "geohit/reductions.hpp"
#include "geohit/separator_solver.hpp"
#include "geohit/separators.hpp"
#include "geohit/solvers.hpp"
#include "text_reader.hpp"

namespace geohit {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write '" + path + "'");
}

// Flat key/value report printed either as `key value` lines or as one JSON object.
class Report {
 public:
  explicit Report(bool json) : json_(json) {}

  Report& set(const std::string& key, Json value) {
    fields_[key] = std::move(value);
    return *this;
  }

  void print(std::ostream& out) const {
    if (json_) {
      out << fields_.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : fields_.items()) {
      out << key;
      if (value.is_array()) {
        for (const auto& x : value) out << ' ' << plain(x);
      } else {
        out << ' ' << plain(value);
      }
      out << '\n';
    }
  }

 private:
  static std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  bool json_;
  Json fields_ = Json::object();
};

struct SeparatorChoice {
  VertexSet z;
  int p = 0;
  int q = 0;
};

// `z v1 v2 ...` with optional `p P` and `q Q` lines that state the promise to check.
SeparatorChoice parse_separator_file(std::string_view text, const SpiInstance& inst) {
  using namespace detail;
  LineReader reader(text);
  std::vector<Token> tok;
  std::optional<VertexSet> z;
  std::optional<int> p, q;
  while (reader.next(tok)) {
    const std::size_t line = reader.line();
    if (tok[0].text == "z") {
      if (z) semantic(line, tok[0].column, "second 'z' line");
      VertexSet vs;
      for (std::size_t i = 1; i < tok.size(); ++i) vs.push_back(to_vertex(tok[i], line, inst.vertex_count()));
      z = std::move(vs);
    } else if ((tok[0].text == "p" || tok[0].text == "q") && tok.size() == 2) {
      const long long v = to_int(tok[1], line);
      if (v < 0) semantic(line, tok[1].column, "bound must be nonnegative");
      (tok[0].text == "p" ? p : q) = static_cast<int>(v);
    } else {
      syntax(line, tok[0].column, "expected 'z <v>...', 'p <n>' or 'q <n>'");
    }
  }
  if (!z) syntax(reader.line() + 1, 1, "missing 'z' line");
  SeparatorChoice c;
  c.z = *z;
  c.p = p.value_or(static_cast<int>(normalized(*z).size()));
  c.q = q.value_or(max_terminals_per_component(inst.graph(), normalized(*z), inst.terminals()));
  return c;
}

constexpr int kAutoMaxP = 3;
constexpr int kAutoMaxQ = 2;
constexpr int kSeparatorSearchCap = 24;

// Smallest Z leaving at most min(2, |V(T)|) terminals per component.
std::optional<SeparatorChoice> derive_separator(const SpiInstance& inst, int max_p, const Deadline& deadline) {
  const VertexSet terminals = inst.terminals();
  const int q = std::min<int>(kAutoMaxQ, static_cast<int>(terminals.size()));
  auto cert = pq_separator(inst.graph(), terminals, max_p, q, kSeparatorSearchCap, deadline);
  if (!cert) return std::nullopt;
  return SeparatorChoice{cert->z, cert->p, q};
}

struct SolveOutcome {
  std::optional<Solution> solution;
  std::string algorithm;
};

SolveOutcome run_algorithm(const std::string& algo, const SpiInstance& inst, const std::optional<std::string>& sep_file,
                           const Deadline& deadline) {
  if (algo == "bruteforce") return {solve_bruteforce(inst, {default_brute_cap()}, deadline), algo};
  if (algo == "hitting-bb") return {solve_via_hitting_set(inst, HittingEngine::BranchAndBound, deadline), algo};
  if (algo == "hitting-fdp") return {solve_via_hitting_set(inst, HittingEngine::FamilyDp, deadline), algo};
  if (algo == "tree") return {solve_tree(inst), algo};
  if (algo == "modular") return {solve_modular(inst.materialized(), deadline), algo};
  if (algo == "separator") {
    std::optional<SeparatorChoice> sep;
    if (sep_file) {
      sep = parse_separator_file(read_file(*sep_file), inst);
    } else {
      sep = derive_separator(inst, inst.vertex_count(), deadline);
    }
    if (!sep) throw SeparatorInvalid("no separator found");
    return {solve_with_separator(inst, sep->z, sep->p, sep->q, deadline), algo};
  }
  if (algo == "auto") {
    if (is_tree(inst.graph())) return {solve_tree(inst), "auto:tree"};
    if (inst.vertex_count() <= kSeparatorSearchCap) {
      if (auto sep = derive_separator(inst, kAutoMaxP, deadline)) {
        return {solve_with_separator(inst, sep->z, sep->p, sep->q, deadline), "auto:separator"};
      }
    }
    return {solve_via_hitting_set(inst, HittingEngine::BranchAndBound, deadline), "auto:hitting-bb"};
  }
  throw Error("unknown algorithm '" + algo + "'");
}

struct Common {
  bool json = false;
  bool no_meta = false;
};

int cmd_solve(const std::string& input, const std::string& algo, const std::optional<std::string>& sep_file,
              std::optional<double> time_limit, const Common& common, std::ostream& out) {
  const SpiInstance inst = parse_instance(read_file(input));
  const Deadline deadline = time_limit ? Deadline(std::chrono::duration<double>(*time_limit)) : Deadline();
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome outcome;
  bool timed_out = false;
  try {
    outcome = run_algorithm(algo, inst, sep_file, deadline);
  } catch (const TimedOut&) {
    timed_out = true;
    outcome.algorithm = algo;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (common.json) {
    Json j;
    j["verdict"] = timed_out ? "UNKNOWN-timeout" : (outcome.solution ? "FEASIBLE" : "INFEASIBLE");
    if (outcome.solution) {
      j["size"] = outcome.solution->size();
      j["solution"] = *outcome.solution;
    }
    j["algorithm"] = outcome.algorithm;
    if (!common.no_meta) j["wall_time_s"] = seconds;
    out << j.dump(2) << '\n';
  } else {
    if (timed_out) out << "UNKNOWN-timeout\n";
    else if (outcome.solution) out << "FEASIBLE size " << outcome.solution->size() << '\n' << serialize_solution(*outcome.solution) << '\n';
    else out << "INFEASIBLE\n";
    out << "algorithm " << outcome.algorithm << '\n';
    if (!common.no_meta) out << "time " << seconds << "s\n";
  }
  if (timed_out) return kExitTimeout;
  return outcome.solution ? kExitOk : kExitInfeasible;
}

int cmd_verify(const std::string& input, const std::string& solution_path, const Common& common, std::ostream& out) {
  const SpiInstance inst = parse_instance(read_file(input));
  const Solution sol = parse_solution(read_file(solution_path));
  const VerifyResult r = verify_solution(inst, sol);
  Report report(common.json);
  report.set("verdict", r.feasible() ? "FEASIBLE" : "INFEASIBLE").set("size", r.size).set("budget", inst.budget());
  if (r.over_budget) {
    report.set("budget_exceeded", "solution has " + std::to_string(r.size) + " vertices, budget is " +
                                      std::to_string(inst.budget()));
  }
  if (common.json) {
    Json pairs = Json::array();
    for (const auto& pr : r.violated) pairs.push_back({pr.first, pr.second});
    report.set("violated", pairs);
    report.print(out);
  } else {
    report.print(out);
    for (const auto& pr : r.violated) out << "violated " << pr.first << ' ' << pr.second << '\n';
  }
  return r.feasible() ? kExitOk : kExitInfeasible;
}

std::string cert_path_for(const std::string& out_path) {
  const std::string ext = ".spi";
  if (out_path.size() > ext.size() && out_path.compare(out_path.size() - ext.size(), ext.size(), ext) == 0) {
    return out_path.substr(0, out_path.size() - ext.size()) + ".cert";
  }
  return out_path + ".cert";
}

int cmd_generate(const std::string& gadget_name, const std::string& source, const std::string& out_path,
                 std::optional<int> k, const Common& common, std::ostream& out) {
  const auto kind = parse_gadget_kind(gadget_name);
  if (!kind) throw Error("unknown gadget '" + gadget_name + "'");
  SpiInstance inst;
  std::string cert;
  if (*kind == GadgetKind::VcPairs || *kind == GadgetKind::VcComplete) {
    if (!k) throw Error("gadget " + gadget_name + " needs --k");
    const auto src = parse_coloring_source(read_file(source));
    inst = *kind == GadgetKind::VcPairs ? gen_vc_pairs(src.graph, *k) : gen_vc_complete(src.graph, *k);
    cert = "gadget " + gadget_name + "\nshape none\n";
  } else {
    const ReductionArtifact a = is_coloring_gadget(*kind)
                                    ? generate_coloring_gadget(*kind, parse_coloring_source(read_file(source)))
                                    : generate_hs_gadget(*kind, parse_hs_source(read_file(source)));
    inst = a.instance;
    cert = serialize_certificate(a);
  }
  const std::string cert_path = cert_path_for(out_path);
  write_file(out_path, serialize_instance(inst));
  write_file(cert_path, cert);
  Report(common.json)
      .set("gadget", gadget_name)
      .set("vertices", inst.vertex_count())
      .set("edges", inst.graph().edge_count())
      .set("pairs", inst.terminal_pairs().size())
      .set("budget", inst.budget())
      .set("instance", out_path)
      .set("certificate", cert_path)
      .print(out);
  return kExitOk;
}

int cmd_kernelize(const std::string& input, int d, const Common& common, std::ostream& out) {
  const SpiInstance inst = parse_instance(read_file(input));
  const HitFamily fam = intervals_of(inst);
  const KernelResult kr = sunflower_kernelize(fam, d);
  const std::uint64_t bound = kernel_bound(inst.budget(), d);
  Report report(common.json);
  report.set("sets_before", fam.sets.size())
      .set("sets_after", kr.family.sets.size())
      .set("max_set_size", fam.max_set_size())
      .set("d", d)
      .set("budget", inst.budget())
      .set("verdict", kr.verdict == KernelVerdict::Reduced ? "reduced" : "no-instance");
  if (bound == std::numeric_limits<std::uint64_t>::max()) report.set("bound", "saturated");
  else report.set("bound", bound);
  report.print(out);
  return kExitOk;
}

int cmd_params(const std::string& input, int cap, std::optional<double> time_limit, const Common& common,
               std::ostream& out) {
  const SpiInstance inst = parse_instance(read_file(input));
  const Deadline deadline = time_limit ? Deadline(std::chrono::duration<double>(*time_limit)) : Deadline();
  const auto& g = inst.graph();
  const auto pairs = inst.terminal_pairs();
  Report report(common.json);
  const auto vi = vertex_integrity(g, deadline);
  report.set("vertex_integrity", vi.iota).set("vi_witness", vi.witness.z);

  auto describe = [&](const std::string& key, auto compute) {
    try {
      auto cert = compute();
      if (cert) {
        report.set(key, cert->z.size()).set(key + "_witness", cert->z);
      } else {
        report.set(key, "more-than-" + std::to_string(cap));
      }
    } catch (const TerminalAdjacent&) {
      report.set(key, "none-adjacent-terminals");
    } catch (const PairAdjacent&) {
      report.set(key, "none-adjacent-pair");
    }
  };
  describe("multiway_cut", [&] { return multiway_cut(g, inst.terminals(), cap, deadline); });
  describe("multicut", [&] { return multicut(g, pairs, cap, deadline); });
  report.set("cap", cap).print(out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest-path interruption solver toolkit", "geohit"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "machine-readable output");
  app.add_flag("--no-meta", common.no_meta, "omit wall-clock time from reports");

  std::string input, algo = "auto", solution_path, gadget, source, out_path;
  std::optional<std::string> sep_file;
  std::optional<double> time_limit;
  std::optional<int> k;
  int d = 0, cap = 8;

  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("--input", input, "instance file (.spi)")->required();
  solve->add_option("--algo", algo, "algorithm")
      ->check(CLI::IsMember({"auto", "bruteforce", "hitting-bb", "hitting-fdp", "tree", "modular", "separator"}));
  solve->add_option("--sep-file", sep_file, "separator file with a 'z' line");
  solve->add_option("--time-limit", time_limit, "seconds")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "check a solution");
  verify->add_option("--input", input)->required();
  verify->add_option("--solution", solution_path)->required();

  auto* generate = app.add_subcommand("generate", "build a reduction instance");
  generate->add_option("--gadget", gadget)
      ->required()
      ->check(CLI::IsMember({"p5-apex", "path-apex", "triangle-apex", "bw4", "vc-pairs", "vc-complete", "hs-multicut",
                             "hs-pairwise"}));
  generate->add_option("--source", source, "source graph or hitting set file")->required();
  generate->add_option("--out", out_path, "output .spi path")->required();
  generate->add_option("--k", k, "budget for the vertex cover gadgets")->check(CLI::NonNegativeNumber);

  auto* kernelize = app.add_subcommand("kernelize", "sunflower-reduce the interval family");
  kernelize->add_option("--input", input)->required();
  kernelize->add_option("--d", d, "maximum set size")->required()->check(CLI::PositiveNumber);

  auto* params = app.add_subcommand("params", "separator parameters of an instance");
  params->add_option("--input", input)->required();
  params->add_option("--cap", cap, "largest cut size searched")->check(CLI::NonNegativeNumber);
  params->add_option("--time-limit", time_limit, "seconds")->check(CLI::NonNegativeNumber);

  for (auto* sub : {solve, verify, generate, kernelize, params}) {
    sub->add_flag("--json", common.json, "machine-readable output");
    sub->add_flag("--no-meta", common.no_meta, "omit wall-clock time from reports");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) return cmd_solve(input, algo, sep_file, time_limit, common, out);
    if (*verify) return cmd_verify(input, solution_path, common, out);
    if (*generate) return cmd_generate(gadget, source, out_path, k, common, out);
    if (*kernelize) return cmd_kernelize(input, d, common, out);
    if (*params) return cmd_params(input, cap, time_limit, common, out);
  } catch (const TimedOut& e) {
    err << "error: " << e.what() << '\n';
    return kExitTimeout;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace geohit
