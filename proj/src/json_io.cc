#include "earpack/json_io.h"

#include <charconv>
#include <stdexcept>

namespace earpack {

namespace {

Json vertex_list(const std::vector<Vertex>& vertices) {
  Json out = Json::array();
  for (Vertex v : vertices) out.push_back(v);
  return out;
}

Json edge_list(const EdgeSet& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Vertex> vertices_from(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + " must hold integers");
    }
    out.push_back(v.get<Vertex>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

Vertex parse_index(std::string_view text) {
  Vertex v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || v < 0) {
    throw std::invalid_argument("bad vertex index \"" + std::string(text) + "\"");
  }
  return v;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json int_or_inf(long long value) {
  if (value == kInfinity) return "inf";
  return value;
}

Json matching_json(const Matching& m) { return edge_list(m.edges()); }

Matching matching_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matching must be an array of pairs");
  EdgeSet edges;
  for (const Json& pair : j) {
    const auto ends = vertices_from(pair, "matching edge");
    if (ends.size() != 2) throw std::invalid_argument("matching edge must have two ends");
    if (ends[0] == ends[1]) throw std::invalid_argument("matching edge is a loop");
    edges.push_back(make_edge(ends[0], ends[1]));
  }
  return Matching(normalize(std::move(edges)));
}

Matching parse_matching_text(std::string_view text) {
  EdgeSet edges;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("matching edge \"" + std::string(item) + "\" is not u-v");
    }
    const Vertex a = parse_index(item.substr(0, dash));
    const Vertex b = parse_index(item.substr(dash + 1));
    if (a == b) throw std::invalid_argument("matching edge is a loop");
    edges.push_back(make_edge(a, b));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("trailing comma in matching");
  }
  return Matching(normalize(std::move(edges)));
}

Json barrier_json(const BarrierCertificate& cert) {
  Json out;
  out["S"] = vertex_list(cert.s);
  Json components = Json::array();
  for (const auto& c : cert.all_components) components.push_back(vertex_list(c));
  out["components"] = components;
  Json odd = Json::array();
  for (const auto& c : cert.odd_components) odd.push_back(vertex_list(c));
  out["odd"] = odd;
  out["m_star"] = cert.m_star;
  out["mu"] = cert.mu;
  out["q1"] = cert.q1;
  out["q2"] = cert.q2;
  return out;
}

BarrierCertificate barrier_from_json(const Json& j) {
  BarrierCertificate cert;
  cert.s = vertices_from(field(j, "S"), "S");
  for (const Json& c : field(j, "components")) {
    cert.all_components.push_back(vertices_from(c, "component"));
  }
  for (const Json& c : field(j, "odd")) {
    cert.odd_components.push_back(vertices_from(c, "odd component"));
  }
  cert.m_star = int_field(j, "m_star");
  cert.mu = int_field(j, "mu");
  cert.q1 = int_field(j, "q1");
  cert.q2 = int_field(j, "q2");
  return cert;
}

Json cut_json(const CutCertificate& cert) {
  Json out;
  out["F"] = edge_list(cert.f);
  out["side_a"] = vertex_list(cert.side_a);
  out["side_b"] = vertex_list(cert.side_b);
  out["cycle_a"] = vertex_list(cert.cycle_a);
  out["cycle_b"] = vertex_list(cert.cycle_b);
  out["odd"] = cert.odd;
  return out;
}

Json connectivity_json(const ConnectivityValue& value) {
  Json out;
  out["value"] = int_or_inf(value.value);
  out["cut"] = value.certificate ? cut_json(*value.certificate) : Json(nullptr);
  return out;
}

Json estimate_json(const ConnectivityEstimate& estimate) {
  Json out;
  out["value"] = estimate.value ? int_or_inf(estimate.value->value) : Json("unknown");
  out["upper_bound"] = int_or_inf(estimate.upper_bound);
  return out;
}

Json ear_json(const Ear& ear) {
  Json out;
  out["kind"] = ear.kind == EarKind::kPath ? "path" : "cycle";
  out["vertices"] = vertex_list(ear.vertices);
  return out;
}

Json packing_json(const EarPacking& packing) {
  Json out;
  out["U"] = vertex_list(packing.u);
  Json ears = Json::array();
  for (const Ear& ear : packing.ears) ears.push_back(ear_json(ear));
  out["ears"] = ears;
  return out;
}

EarPacking packing_from_json(const Json& j) {
  EarPacking packing;
  packing.u = normalize(vertices_from(field(j, "U"), "U"));
  const Json& ears = field(j, "ears");
  if (!ears.is_array()) throw std::invalid_argument("ears must be an array");
  for (const Json& e : ears) {
    Ear ear;
    const Json& kind = field(e, "kind");
    if (kind == "path") {
      ear.kind = EarKind::kPath;
    } else if (kind == "cycle") {
      ear.kind = EarKind::kCycle;
    } else {
      throw std::invalid_argument("ear kind must be \"path\" or \"cycle\"");
    }
    ear.vertices = vertices_from(field(e, "vertices"), "ear vertices");
    packing.ears.push_back(std::move(ear));
  }
  return packing;
}

Json extension_json(const ExtensionResult& result) {
  Json out;
  out["outcome"] = result.extended() ? "extended" : "blocked";
  if (result.perfect_matching) out["perfect_matching"] = matching_json(*result.perfect_matching);
  if (result.barrier) out["barrier"] = barrier_json(*result.barrier);
  return out;
}

Json hypothesis_json(const HypothesisReport& report) {
  Json out;
  out["r"] = report.r;
  out["m"] = report.m;
  out["even_order"] = report.even_order;
  out["distance3"] = report.distance3;
  out["heavy_neighbor"] = report.heavy_neighbor ? Json(*report.heavy_neighbor) : Json(nullptr);
  out["side_condition"] = report.side_condition();
  out["k_found"] = report.k_found;
  out["k_exact"] = report.k_exact;
  out["k_outcome"] = outcome_name(report.k_outcome);
  out["lambda_c"] = estimate_json(report.lambda_c);
  out["lambda_oc"] = estimate_json(report.lambda_oc);
  out["theta"] = report.theta;
  out["ears_needed_i"] = report.ears_needed_i();
  out["lambda_c_needed"] = report.lambda_c_needed();
  out["ears_needed_ii"] = report.ears_needed_ii();
  out["lambda_oc_needed"] = report.lambda_oc_needed();
  out["case_i"] = report.case_i;
  out["case_ii"] = report.case_ii;
  out["hypothesis_met"] = report.hypothesis_met();
  out["packing"] = report.packing ? packing_json(*report.packing) : Json(nullptr);
  return out;
}

Json verdict_json(const TheoremVerdict& verdict) {
  Json out;
  out["hypothesis_met"] = verdict.hypothesis_met;
  out["consistent"] = verdict.consistent;
  out["extension"] = extension_json(verdict.extension);
  out["report"] = hypothesis_json(verdict.report);
  return out;
}

Json lemma10_json(const Lemma10Result& result) {
  Json out;
  out["lhs"] = result.lhs;
  out["rhs"] = result.rhs;
  out["holds"] = result.holds;
  return out;
}

Json claims_json(const ClaimReport& report) {
  Json out;
  out["hypotheses_met"] = report.hypotheses_met;
  out["ok"] = report.ok();
  out["f_size"] = report.f_size < 0 ? Json(nullptr) : Json(report.f_size);
  Json rows = Json::array();
  for (const ClaimRow& row : report.rows) {
    Json j;
    j["name"] = row.name;
    j["component"] = row.component < 0 ? Json(nullptr) : Json(row.component);
    j["lhs"] = row.lhs;
    j["rhs"] = row.rhs;
    j["holds"] = row.holds;
    j["asserted"] = row.asserted;
    rows.push_back(j);
  }
  out["rows"] = rows;
  return out;
}

Json sweep_json(const SweepSummary& summary) {
  Json out;
  out["samples"] = summary.samples;
  out["hypothesis_met"] = summary.hypothesis_met;
  out["consistent"] = summary.consistent;
  out["inconsistent"] = summary.inconsistent;
  out["bundles"] = summary.bundles;
  out["matchings"] = summary.matchings;
  out["case_i"] = summary.case_i;
  out["case_ii"] = summary.case_ii;
  out["capped_graphs"] = summary.capped_graphs;
  out["single_edges"] = summary.single_edges;
  out["single_edges_blocked"] = summary.single_edges_blocked;
  out["lemma3_checked"] = summary.lemma3_checked;
  out["lemma3_violations"] = summary.lemma3_violations;
  out["errors"] = summary.errors;
  return out;
}

Json expectation_json(const Expectation& e) {
  Json out;
  out["property"] = property_name(e.property);
  out["predicted"] = e.predicted;
  out["basis"] = basis_name(e.basis);
  return out;
}

Json expectations_json(const ExpectationReport& report) {
  Json out;
  out["ok"] = report.ok();
  Json rows = Json::array();
  for (const ExpectationRow& row : report.rows) {
    Json j = expectation_json(row.expectation);
    j["measured"] = row.measured;
    j["status"] = status_name(row.status);
    j["holds"] = row.holds ? Json(*row.holds) : Json(nullptr);
    rows.push_back(j);
  }
  out["rows"] = rows;
  return out;
}

Json construction_sidecar_json(const ConstructionOutput& out) {
  Json j;
  j["family"] = out.family;
  Json parameters = Json::object();
  for (const auto& [key, value] : out.parameters) parameters[key] = value;
  j["parameters"] = parameters;
  j["r"] = out.r;
  j["matching"] = matching_json(out.matching);
  Json names = Json::object();
  for (const auto& [key, value] : out.names) names[key] = value;
  j["names"] = names;
  Json expectations = Json::array();
  for (const Expectation& e : out.expectations) expectations.push_back(expectation_json(e));
  j["expectations"] = expectations;
  j["barrier_s"] = vertex_list(out.barrier_s);
  Json components = Json::array();
  for (const VertexSet& c : out.expected_components) components.push_back(vertex_list(c));
  j["expected_components"] = components;
  j["remainder_sides"] = {vertex_list(out.remainder_sides.first),
                          vertex_list(out.remainder_sides.second)};
  j["cut_side"] = vertex_list(out.cut_side);
  return j;
}

Expectation expectation_from_json(const Json& j) {
  Expectation e;
  const Json& property = field(j, "property");
  const Json& basis = field(j, "basis");
  bool found = false;
  for (int p = 0; p <= static_cast<int>(Property::kLambdaCAtLeast); ++p) {
    if (property == property_name(static_cast<Property>(p))) {
      e.property = static_cast<Property>(p);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown property " + property.dump());
  if (basis == basis_name(Basis::kGuaranteed)) {
    e.basis = Basis::kGuaranteed;
  } else if (basis == basis_name(Basis::kPaperAsymptotic)) {
    e.basis = Basis::kPaperAsymptotic;
  } else {
    throw std::invalid_argument("unknown basis " + basis.dump());
  }
  const Json& predicted = field(j, "predicted");
  if (!predicted.is_number_integer()) throw std::invalid_argument("predicted must be an integer");
  e.predicted = predicted.get<long long>();
  return e;
}

ConstructionOutput construction_from_sidecar(const Graph& g, const Json& j) {
  ConstructionOutput out;
  out.graph = g;
  if (j.contains("family")) out.family = field(j, "family").get<std::string>();
  if (j.contains("parameters")) {
    for (const auto& [key, value] : field(j, "parameters").items()) {
      out.parameters[key] = value.get<long long>();
    }
  }
  const auto degree = is_regular(g);
  out.r = j.contains("r") ? int_field(j, "r") : degree.value_or(0);
  out.matching = matching_from_json(field(j, "matching"));
  if (j.contains("names")) {
    for (const auto& [key, value] : field(j, "names").items()) {
      if (!value.is_number_integer()) throw std::invalid_argument("names must map to vertices");
      out.names[key] = value.get<Vertex>();
    }
  }
  for (const Json& e : field(j, "expectations")) out.expectations.push_back(expectation_from_json(e));
  if (j.contains("barrier_s")) out.barrier_s = normalize(vertices_from(j.at("barrier_s"), "barrier_s"));
  if (j.contains("expected_components")) {
    for (const Json& c : j.at("expected_components")) {
      out.expected_components.push_back(normalize(vertices_from(c, "component")));
    }
  }
  if (j.contains("remainder_sides")) {
    const Json& sides = j.at("remainder_sides");
    if (!sides.is_array() || sides.size() != 2) {
      throw std::invalid_argument("remainder_sides must hold two vertex lists");
    }
    out.remainder_sides = {normalize(vertices_from(sides[0], "remainder side")),
                           normalize(vertices_from(sides[1], "remainder side"))};
  }
  if (j.contains("cut_side")) out.cut_side = normalize(vertices_from(j.at("cut_side"), "cut_side"));
  return out;
}

}  // namespace earpack
