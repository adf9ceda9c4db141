// earpack command-line tool. Every verb prints one JSON document carrying
// "schema": 1. Exit status: 0 success, 1 usage or input error, 2 failed
// verification or an inconsistent sweep.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "earpack/connectivity.h"
#include "earpack/constructions.h"
#include "earpack/ears.h"
#include "earpack/generators.h"
#include "earpack/graph.h"
#include "earpack/graph_io.h"
#include "earpack/harness.h"
#include "earpack/json_io.h"
#include "earpack/matching.h"

namespace earpack::cli {
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("bad " + what + " \"" + text + "\"");
  return value;
}

// EARPACK_BUDGET="cycles=N,pairs=N,nodes=N"; any subset of the keys.
SearchBudget budget_from_env(SearchBudget budget) {
  const char* raw = std::getenv("EARPACK_BUDGET");
  if (raw == nullptr || *raw == '\0') return budget;
  std::stringstream items(raw);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("EARPACK_BUDGET item \"" + item + "\" is not key=value");
    const std::string key = item.substr(0, eq);
    const std::uint64_t value = parse_count(item.substr(eq + 1), "EARPACK_BUDGET value");
    if (key == "cycles") {
      budget.max_cycles = value;
    } else if (key == "pairs") {
      budget.max_cycle_pairs = value;
    } else if (key == "nodes") {
      budget.max_ear_nodes = value;
    } else {
      throw UsageError("EARPACK_BUDGET key \"" + key + "\" is not cycles, pairs or nodes");
    }
  }
  return budget;
}

std::optional<GraphFormat> format_option(const std::string& name) {
  if (name.empty()) return std::nullopt;
  const auto format = format_from_name(name);
  if (!format) throw UsageError("unknown format \"" + name + "\"");
  return format;
}

Graph load_graph(const std::string& path, const std::string& format) {
  const auto chosen = format_option(format);
  if (!chosen && !format_from_extension(path)) {
    throw UsageError("cannot infer the format of \"" + path + "\"; pass --format");
  }
  return read_graph_file(path, chosen);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

Json with_schema(const Json& body) {
  Json out;
  out["schema"] = kSchemaVersion;
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out;
}

void emit(const Json& body, const std::string& out_path, std::ostream& out) {
  const std::string text = dump_json(with_schema(body));
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw UsageError("cannot write \"" + out_path + "\"");
  file << text;
}

Matching matching_option(const Graph& g, const std::string& text) {
  Matching m = parse_matching_text(text);
  require_matching_of(g, m);
  return m;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = static_cast<int>(parse_count(text, "--n"));
    return {n, n};
  }
  return {static_cast<int>(parse_count(text.substr(0, dots), "--n")),
          static_cast<int>(parse_count(text.substr(dots + 2), "--n"))};
}

std::string sidecar_path(const std::string& graph_path) {
  return std::filesystem::path(graph_path).replace_extension(".json").string();
}

struct Options {
  std::string graph;
  std::string format;
  std::string out;
  std::string matching;
  std::string u;
  std::string barrier;
  std::string sidecar;
  std::string packing;
  std::string family;
  std::string n_range = "8..14";
  std::string degrees = "3";
  std::string bundle_dir;
  std::uint64_t seed = 1;
  int size = 2;
  int r = 3;
  int samples = 100;
  int cap = 200;
  int target = -1;
  bool odd = false;
  bool single_edges = false;
  bool bipartite = false;
};

int analyze(const Options& o, const SearchBudget& budget, std::ostream& out) {
  const Graph g = load_graph(o.graph, o.format);
  Json j;
  j["n"] = g.order();
  j["edges"] = g.size();
  const auto degree = is_regular(g);
  j["r"] = degree ? Json(*degree) : Json(nullptr);
  j["girth"] = int_or_inf(girth(g));
  j["bipartite"] = bipartition(g).has_value();
  j["connected"] = is_connected(g);
  const ConnectivityEstimate lc = estimate_lambda_c(g, budget);
  const ConnectivityEstimate loc = estimate_lambda_oc(g, budget);
  j["lambda_c"] = lc.value ? int_or_inf(lc.value->value) : Json("unknown");
  j["lambda_oc"] = loc.value ? int_or_inf(loc.value->value) : Json("unknown");
  if (!lc.known()) j["lambda_c_upper_bound"] = int_or_inf(lc.upper_bound);
  if (!loc.known()) j["lambda_oc_upper_bound"] = int_or_inf(loc.upper_bound);
  emit(j, o.out, out);
  return kOk;
}

int extend(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph, o.format);
  const Matching m = matching_option(g, o.matching);
  emit(extension_json(extend_matching(g, m)), o.out, out);
  return kOk;
}

int barrier_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph, o.format);
  const Matching m = matching_option(g, o.matching);
  Json file = load_json(o.barrier);
  if (file.contains("barrier")) file = file.at("barrier");
  const BarrierCertificate cert = barrier_from_json(file);
  const Verification check = verify_barrier(g, m, cert);
  Json j;
  j["ok"] = check.ok;
  j["reason"] = check.reason;
  emit(j, o.out, out);
  return check.ok ? kOk : kFailed;
}

int lambda(const Options& o, const SearchBudget& budget, std::ostream& out) {
  const Graph g = load_graph(o.graph, o.format);
  const ConnectivityEstimate e = o.odd ? estimate_lambda_oc(g, budget) : estimate_lambda_c(g, budget);
  Json j;
  j["kind"] = o.odd ? "odd-cyclic" : "cyclic";
  j["value"] = e.value ? int_or_inf(e.value->value) : Json("unknown");
  j["upper_bound"] = int_or_inf(e.upper_bound);
  j["cut"] = e.value && e.value->certificate ? cut_json(*e.value->certificate) : Json(nullptr);
  emit(j, o.out, out);
  return kOk;
}

VertexSet parse_vertices(const std::string& text) {
  VertexSet u;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) u.push_back(static_cast<Vertex>(parse_count(item, "vertex")));
  return normalize(u);
}

int ears(const Options& o, const SearchBudget& budget, std::ostream& out) {
  const Graph g = load_graph(o.graph, o.format);
  if (!o.packing.empty()) {
    const EarPacking p = packing_from_json(load_json(o.packing));
    const Verification check = verify_packing(g, p);
    Json j;
    j["ok"] = check.ok;
    j["reason"] = check.reason;
    j["k"] = p.k();
    emit(j, o.out, out);
    return check.ok ? kOk : kFailed;
  }
  VertexSet u;
  if (!o.u.empty()) {
    u = parse_vertices(o.u);
  } else if (!o.matching.empty()) {
    u = matching_option(g, o.matching).covered();
  } else {
    throw UsageError("ears needs --u, --matching or --packing");
  }
  const std::optional<int> target = o.target >= 0 ? std::optional<int>(o.target) : std::nullopt;
  const PackingResult result = max_odd_ear_packing(g, u, target, budget.max_ear_nodes);
  Json j;
  j["k"] = result.packing.k();
  j["outcome"] = outcome_name(result.outcome);
  j["exact"] = result.exact();
  j["nodes"] = result.nodes;
  j["packing"] = packing_json(result.packing);
  emit(j, o.out, out);
  return kOk;
}

int construct(const Options& o, std::ostream& out) {
  const auto family = family_from_name(o.family);
  if (!family) throw UsageError("unknown family \"" + o.family + "\"");
  const ConstructionOutput c = build_family(*family, o.size, o.r, o.seed);
  Json j;
  j["family"] = c.family;
  j["n"] = c.graph.order();
  j["edges"] = c.graph.size();
  if (o.out.empty()) {
    j["graph6"] = serialize_graph(c.graph, GraphFormat::kGraph6);
    j["sidecar"] = construction_sidecar_json(c);
    emit(j, "", out);
    return kOk;
  }
  GraphFormat format = GraphFormat::kGraph6;
  if (const auto chosen = format_option(o.format)) {
    format = *chosen;
  } else if (const auto inferred = format_from_extension(o.out)) {
    format = *inferred;
  }
  write_graph_file(o.out, c.graph, format);
  const std::string sidecar = sidecar_path(o.out);
  std::ofstream file(sidecar);
  if (!file) throw UsageError("cannot write \"" + sidecar + "\"");
  file << dump_json(with_schema(construction_sidecar_json(c)));
  j["graph"] = o.out;
  j["format"] = format_name(format);
  j["sidecar_path"] = sidecar;
  emit(j, "", out);
  return kOk;
}

int verify(const Options& o, const HarnessBudget& budget, std::ostream& out) {
  const Graph g = load_graph(o.graph, o.format);
  if (!o.sidecar.empty()) {
    const ConstructionOutput c = construction_from_sidecar(g, load_json(o.sidecar));
    VerifyOptions options;
    options.budget = budget.search;
    const ExpectationReport report = verify_expectations(c, options);
    emit(expectations_json(report), o.out, out);
    return report.ok() ? kOk : kFailed;
  }
  if (o.matching.empty()) throw UsageError("verify needs --sidecar or --matching");
  const Matching m = matching_option(g, o.matching);
  const TheoremVerdict verdict = check_theorem(g, m, budget);
  Json j = verdict_json(verdict);
  bool ok = verdict.consistent;
  if (verdict.extension.barrier) {
    const ClaimReport claims = claim_invariants(g, m, *verdict.extension.barrier,
                                                verdict.hypothesis_met, verdict.report.packing);
    j["claims"] = claims_json(claims);
    ok = ok && claims.ok();
  }
  emit(j, o.out, out);
  return ok ? kOk : kFailed;
}

int sweep(const Options& o, const HarnessBudget& budget, std::ostream& out) {
  SweepParams params;
  std::tie(params.n_min, params.n_max) = parse_range(o.n_range);
  params.degrees.clear();
  std::stringstream items(o.degrees);
  std::string item;
  while (std::getline(items, item, ',')) params.degrees.push_back(static_cast<int>(parse_count(item, "--r")));
  params.samples = o.samples;
  params.seed = o.seed;
  params.budget = budget;
  params.matching_cap = o.cap;
  params.include_single_edges = o.single_edges;
  params.bipartite_only = o.bipartite;
  params.bundle_dir = o.bundle_dir;
  const SweepSummary summary = falsification_sweep(params);
  Json j = sweep_json(summary);
  j["params"] = {{"n_min", params.n_min},   {"n_max", params.n_max},
                 {"r", params.degrees},     {"samples", params.samples},
                 {"seed", params.seed},     {"matching_cap", params.matching_cap},
                 {"single_edges", params.include_single_edges},
                 {"bipartite", params.bipartite_only}};
  emit(j, o.out, out);
  return summary.ok() ? kOk : kFailed;
}

int convert(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph);
  if (o.out.empty()) throw UsageError("convert needs --out");
  const auto chosen = format_option(o.format);
  const auto inferred = format_from_extension(o.out);
  if (!chosen && !inferred) throw UsageError("cannot infer the output format; pass --format");
  const GraphFormat format = chosen ? *chosen : *inferred;
  write_graph_file(o.out, g, format);
  Json j;
  j["n"] = g.order();
  j["edges"] = g.size();
  j["out"] = o.out;
  j["format"] = format_name(format);
  emit(j, "", out);
  return kOk;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-restricted matching extension toolkit"};
  app.require_subcommand(1);
  Options o;

  auto graph_input = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Graph file (.g6 or .edges)")->required();
    sub->add_option("--format", o.format, "Graph format: graph6 or edgelist");
  };
  auto json_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the JSON result to this file");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Order, degree, girth and connectivity");
  graph_input(analyze_cmd);
  json_output(analyze_cmd);

  CLI::App* extend_cmd = app.add_subcommand("extend", "Extend a matching or return a barrier");
  graph_input(extend_cmd);
  json_output(extend_cmd);
  extend_cmd->add_option("--matching", o.matching, "Edges as u-v,u-v,...")->required();

  CLI::App* barrier_cmd = app.add_subcommand("barrier-verify", "Check a barrier certificate");
  graph_input(barrier_cmd);
  json_output(barrier_cmd);
  barrier_cmd->add_option("--matching", o.matching, "Edges as u-v,u-v,...")->required();
  barrier_cmd->add_option("--barrier", o.barrier, "Barrier JSON file")->required();

  CLI::App* lambda_cmd = app.add_subcommand("lambda", "Cyclic edge-connectivity with a cut");
  graph_input(lambda_cmd);
  json_output(lambda_cmd);
  lambda_cmd->add_flag("--odd", o.odd, "Odd-cyclic edge-connectivity");

  CLI::App* ears_cmd = app.add_subcommand("ears", "Pack or verify odd ears");
  graph_input(ears_cmd);
  json_output(ears_cmd);
  ears_cmd->add_option("--u", o.u, "Vertex set as v,v,...");
  ears_cmd->add_option("--matching", o.matching, "Use U = V(M)");
  ears_cmd->add_option("--target", o.target, "Stop once this many ears are packed");
  ears_cmd->add_option("--packing", o.packing, "Verify this packing JSON instead of searching");

  CLI::App* construct_cmd = app.add_subcommand("construct", "Build a sharpness construction");
  construct_cmd->add_option("--family", o.family,
                            "lemma3-counterexample, sharpness-i, sharpness-lambda, sharpness-ii")
      ->required();
  construct_cmd->add_option("--size", o.size, "k for the counterexample, m otherwise");
  construct_cmd->add_option("--r", o.r, "Degree");
  construct_cmd->add_option("--seed", o.seed, "Seed");
  construct_cmd->add_option("--out", o.out, "Graph file; the sidecar goes next to it as .json");
  construct_cmd->add_option("--format", o.format, "Graph format for --out");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check construction expectations or the theorem");
  graph_input(verify_cmd);
  json_output(verify_cmd);
  verify_cmd->add_option("--sidecar", o.sidecar, "Construction sidecar JSON");
  verify_cmd->add_option("--matching", o.matching, "Check the theorem for this matching");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Falsification sweep over random regular graphs");
  json_output(sweep_cmd);
  sweep_cmd->add_option("--r", o.degrees, "Degrees as r or r,r,...");
  sweep_cmd->add_option("--n", o.n_range, "Order range a..b");
  sweep_cmd->add_option("--samples", o.samples, "Number of graphs");
  sweep_cmd->add_option("--seed", o.seed, "Seed");
  sweep_cmd->add_option("--cap", o.cap, "Matchings per graph");
  sweep_cmd->add_option("--bundle-dir", o.bundle_dir, "Directory for reproduction bundles");
  sweep_cmd->add_flag("--single-edges", o.single_edges, "Also extend every single edge");
  sweep_cmd->add_flag("--bipartite", o.bipartite, "Sample bipartite regular graphs only");

  CLI::App* convert_cmd = app.add_subcommand("convert", "Convert between graph formats");
  convert_cmd->add_option("graph", o.graph, "Input graph file")->required();
  convert_cmd->add_option("--out", o.out, "Output graph file")->required();
  convert_cmd->add_option("--format", o.format, "Output format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    SearchBudget search = budget_from_env(SearchBudget{});
    HarnessBudget harness;
    harness.search = search;
    if (*analyze_cmd) return analyze(o, search, out);
    if (*extend_cmd) return extend(o, out);
    if (*barrier_cmd) return barrier_verify(o, out);
    if (*lambda_cmd) return lambda(o, search, out);
    if (*ears_cmd) return ears(o, search, out);
    if (*construct_cmd) return construct(o, out);
    if (*verify_cmd) return verify(o, harness, out);
    if (*sweep_cmd) {
      SweepParams defaults;
      harness = defaults.budget;
      if (std::getenv("EARPACK_BUDGET") != nullptr) harness.search = budget_from_env(harness.search);
      return sweep(o, harness, out);
    }
    if (*convert_cmd) return convert(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace earpack::cli

int main(int argc, char** argv) { return earpack::cli::run(argc, argv, std::cout, std::cerr); }
