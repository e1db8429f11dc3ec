#include "cactuslab/certify.hpp"

#include <algorithm>
#include <set>

#include "cactuslab/cactus.hpp"
#include "cactuslab/graph_io.hpp"
#include "cactuslab/lemmas.hpp"
#include "cactuslab/verify.hpp"

namespace cactuslab {

using nlohmann::json;

Graph find_kA(const Budget& budget) {
  const auto A = fragment_A();
  CactusConstraints c;
  c.required_block_degree_1 = {"u1", "u3"};
  const auto o = spanning_even_cactus(A.graph, c, budget);
  if (!o.found()) throw Error("no spanning good even cactus of A with b(u1) = b(u3) = 1 (" + to_string(o.status) + ")");
  return spanning_subgraph(A.graph, o.witness_edges);
}

namespace {

CactusConstraints good_even() { return CactusConstraints{}; }

std::string describe_failure(const Graph& host, const Graph& k) {
  if (!is_connected(k)) return "not connected";
  const auto report = analyze_cactus(k);
  if (!report.is_cactus) return "not a cactus";
  if (!report.is_even) return "has an odd cycle block";
  if (report.classification != Goodness::good) return "some vertex lies in three or more blocks";
  if (k.num_vertices() != host.num_vertices()) return "not spanning";
  return "fails verification";
}

}  // namespace

CactusCertification certify_cactus_GC(int n, const Graph& kA, const Budget& budget) {
  const auto chart = build_G(FragmentType::C, n);
  const auto& g = chart.graph;
  CactusCertification out;
  const auto formula = gc_formula_apex_edges(n);

  try {
    const auto verbatim = certificate_cactus_GC(chart, kA, formula);
    if (satisfies_constraints(g, verbatim, good_even())) {
      out.cactus = verbatim;
      out.method = "formula";
      out.detail = "printed apex edges";
      out.log.push_back("formula: verified");
      return out;
    }
    out.log.push_back("formula: " + describe_failure(g, verbatim));
  } catch (const Error& e) {
    out.log.push_back(std::string("formula: ") + e.what());
  }

  {
    const auto k = adjusted_cactus_GC(chart, kA);
    if (satisfies_constraints(g, k, good_even())) {
      out.cactus = k;
      out.method = "formula";
      out.detail = "adjusted display: s w_{n+1}^5, t r^5, and B^7 minus l v1 closed by t l^7, t v1^7";
      out.log.push_back("adjusted display: verified");
      return out;
    }
    out.log.push_back("adjusted display: " + describe_failure(g, k));
  }

  // One-edge repairs of the apex list.
  std::set<LabelPair> in_formula;
  for (auto [a, b] : formula) in_formula.insert(a < b ? LabelPair{a, b} : LabelPair{b, a});
  const auto s = *chart.s;
  const auto t = *chart.t;
  std::vector<LabelPair> apex_edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(static_cast<int>(e));
    if (ed.u != s && ed.v != s && ed.u != t && ed.v != t) continue;
    const auto labels = g.edge_labels(static_cast<int>(e));
    if (!in_formula.contains(labels)) apex_edges.push_back(labels);
  }
  // Formula edges missing from G must be replaced; with more than one missing
  // no single substitution can help.
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < formula.size(); ++i)
    if (!g.has_edge(formula[i].first, formula[i].second)) missing.push_back(i);
  for (std::size_t i = 0; i < formula.size() && missing.size() <= 1; ++i) {
    if (!missing.empty() && missing[0] != i) continue;
    for (const auto& cand : apex_edges) {
      auto apex = formula;
      apex[i] = cand;
      const auto k = certificate_cactus_GC(chart, kA, apex);
      if (!satisfies_constraints(g, k, good_even())) continue;
      out.cactus = k;
      out.method = "search";
      out.detail = "apex edge " + formula[i].first + "-" + formula[i].second + " replaced by " + cand.first + "-" +
                   cand.second;
      out.log.push_back("repair: " + out.detail);
      return out;
    }
  }
  out.log.push_back("repair: no single apex edge substitution verifies");

  // K_A fixed in every copy of A; the B edges are free and s, t may only
  // attach to vertices of the B copies (junctions included).
  CactusConstraints pinned = good_even();
  std::set<LabelPair> ka_edges;
  for (int i = 1; i <= 8; ++i)
    for (auto [a, b] : map_into_copy(chart, i, 'A', edge_label_list(kA))) {
      pinned.required_edges.emplace_back(a, b);
      ka_edges.insert(a < b ? LabelPair{a, b} : LabelPair{b, a});
    }
  auto on_b_copy = [&](VertexId v) {
    const auto& l = g.label(v);
    return l[0] == 'B' || l[0] == 'J' || l[0] == 'L';
  };
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(static_cast<int>(e));
    const auto labels = g.edge_labels(static_cast<int>(e));
    const bool apex = ed.u == s || ed.v == s || ed.u == t || ed.v == t;
    if (apex) {
      const auto other = ed.u == s || ed.u == t ? ed.v : ed.u;
      if (!on_b_copy(other)) pinned.forbidden_edges.push_back(labels);
    } else if (!on_b_copy(ed.u) || !on_b_copy(ed.v)) {
      if (!ka_edges.contains(labels)) pinned.forbidden_edges.push_back(labels);
    }
  }
  auto o = spanning_even_cactus(g, pinned, budget);
  out.log.push_back("search with K_A fixed and apex edges on the B copies: " + to_string(o.status));
  if (o.found()) {
    out.cactus = spanning_subgraph(g, o.witness_edges);
    out.method = "search";
    out.detail = "K_A fixed in every copy of A, B copies and apex edges searched";
    return out;
  }
  o = spanning_even_cactus(g, good_even(), budget);
  out.log.push_back("unconstrained search: " + to_string(o.status));
  if (o.found()) {
    out.cactus = spanning_subgraph(g, o.witness_edges);
    out.method = "search";
    out.detail = "unconstrained search";
    return out;
  }
  std::string joined;
  for (const auto& l : out.log) joined += (joined.empty() ? "" : "; ") + l;
  throw Error("no spanning good even cactus of G(C_" + std::to_string(n) + ") found: " + joined);
}

Graph short_chain_cactus(int a_count, const Graph& kA, const Budget& budget) {
  const auto chart = build_G_with(FragmentType::C, 1, a_count);
  CactusConstraints c;
  const auto local = edge_label_list(kA);
  for (int i = 1; i <= a_count; ++i) {
    const auto mapped = map_into_copy(chart, i, 'A', local);
    c.required_edges.insert(c.required_edges.end(), mapped.begin(), mapped.end());
  }
  const auto o = spanning_even_cactus(chart.graph, c, budget);
  if (!o.found())
    throw Error("no spanning good even cactus of the short chain with " + std::to_string(a_count) + " copies of A (" +
                to_string(o.status) + ")");
  return spanning_subgraph(chart.graph, o.witness_edges);
}

FragmentChart build_family(const std::string& kind, std::optional<int> n) {
  const bool needs_n = kind == "C" || kind == "D" || kind == "GC" || kind == "GD";
  if (kind == "I" || kind == "A") {
    if (n) throw Error("kind " + kind + " takes no n");
    return kind == "I" ? gadget_I() : fragment_A();
  }
  if (!needs_n) throw Error("unknown kind '" + kind + "' (expected I, A, C, D, GC or GD)");
  if (!n) throw Error("kind " + kind + " needs n");
  if (*n < 1) throw Error("n must be a positive integer");
  if (kind == "C") return fragment_C(*n);
  if (kind == "D") return fragment_D(*n);
  return build_G(kind == "GC" ? FragmentType::C : FragmentType::D, *n);
}

// ------------------------------------------------------------ certificates

namespace {

const std::set<std::string>& known_claims() {
  static const std::set<std::string> claims{"spanning_good_even_cactus", "hamilton_cycle", "hamilton_path", "k_walk",
                                            "k_tree", "prism_hamilton", "lemma_check"};
  return claims;
}

struct SchemaError : Error {
  using Error::Error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw SchemaError(what);
}

std::vector<LabelPair> read_edges(const json& j) {
  require(j.is_array(), "witness edges must be an array");
  std::vector<LabelPair> out;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string(),
            "witness edges must be pairs of labels");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

std::vector<std::string> read_sequence(const json& j) {
  require(j.is_array(), "witness sequence must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    require(v.is_string(), "witness sequence entries must be labels");
    out.push_back(v.get<std::string>());
  }
  return out;
}

void require_labels(const Graph& g, const std::vector<std::string>& labels) {
  for (const auto& l : labels) require(g.contains(l), "unknown vertex label '" + l + "'");
}

void require_labels(const Graph& g, const std::vector<LabelPair>& edges) {
  for (const auto& [a, b] : edges) {
    require(g.contains(a), "unknown vertex label '" + a + "'");
    require(g.contains(b), "unknown vertex label '" + b + "'");
  }
}

void check_cactus(const Graph& g, const std::vector<LabelPair>& edges, const json& params,
                  std::map<std::string, bool>& checks) {
  bool in_graph = true;
  std::set<LabelPair> seen;
  for (auto [a, b] : edges) {
    if (a == b || !g.has_edge(a, b)) in_graph = false;
    if (b < a) std::swap(a, b);
    if (!seen.insert({a, b}).second) in_graph = false;
  }
  checks["edges_in_graph"] = in_graph;
  std::vector<LabelPair> valid;
  for (const auto& e : edges)
    if (e.first != e.second && g.has_edge(e.first, e.second)) valid.push_back(e);
  const auto q = spanning_subgraph(g, valid);
  checks["connected"] = is_connected(q);
  bool covered = true;
  if (q.num_vertices() > 1)
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
      if (q.degree(static_cast<VertexId>(v)) == 0) covered = false;
  checks["spanning"] = covered;
  if (!checks["connected"]) {
    checks["cactus"] = checks["even"] = checks["good"] = false;
  } else {
    const auto report = analyze_cactus(q);
    checks["cactus"] = report.is_cactus;
    checks["even"] = report.is_even;
    checks["good"] = report.is_cactus && report.classification == Goodness::good;
    if (params.contains("required_block_degree_1")) {
      bool ok = true;
      for (const auto& l : params["required_block_degree_1"]) {
        require(l.is_string() && g.contains(l.get<std::string>()), "bad required_block_degree_1 entry");
        if (report.block_degrees[static_cast<std::size_t>(q.id(l.get<std::string>()))] != 1) ok = false;
      }
      checks["required_block_degree_1"] = ok;
    }
  }
  if (params.contains("max_degree") && !params["max_degree"].is_null()) {
    require(params["max_degree"].is_number_integer(), "max_degree must be an integer");
    checks["max_degree"] = static_cast<int>(q.max_degree()) <= params["max_degree"].get<int>();
  }
  if (params.contains("min_max_degree")) {
    require(params["min_max_degree"].is_number_integer(), "min_max_degree must be an integer");
    checks["min_max_degree"] = static_cast<int>(q.max_degree()) >= params["min_max_degree"].get<int>();
  }
}

void store_cycle_checks(const CycleCheck& c, std::map<std::string, bool>& checks) {
  checks["edges_in_graph"] = c.edges_in_graph;
  checks["spanning"] = c.spanning;
  checks["two_regular"] = c.two_regular;
  checks["connected"] = c.connected;
}

int read_k(const json& params) {
  require(params.contains("k") && params["k"].is_number_integer(), "parameters.k must be an integer");
  return params["k"].get<int>();
}

}  // namespace

bool VerifyReport::holds() const {
  if (!schema_ok || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

json make_certificate(const CertificateInput& in) {
  json cert;
  cert["schema_version"] = kCertificateSchemaVersion;
  cert["tool_version"] = CACTUSLAB_VERSION;
  cert["claim"] = in.claim;
  json graph = json::object();
  if (in.family) {
    graph["family"] = {{"kind", in.family->first}};
    if (in.family->second > 0) graph["family"]["n"] = in.family->second;
  }
  graph["inline"] = graph_to_json(in.graph);
  cert["graph"] = std::move(graph);
  cert["parameters"] = in.parameters;
  json witness = json::object();
  if (in.sequence_witness) {
    witness["sequence"] = in.witness_sequence;
  } else {
    json edges = json::array();
    for (const auto& [a, b] : in.witness_edges) edges.push_back({a, b});
    witness["edges"] = std::move(edges);
  }
  cert["witness"] = std::move(witness);
  cert["provenance"] = {{"method", in.provenance}};
  if (!in.provenance_detail.is_null()) cert["provenance"]["detail"] = in.provenance_detail;
  if (in.seconds) cert["timing"] = {{"seconds", *in.seconds}};
  const auto report = verify_certificate(cert);
  if (!report.schema_ok) throw Error("internal: certificate violates its own schema: " + report.schema_error);
  cert["verification"] = report.checks;
  return cert;
}

VerifyReport verify_certificate(const json& cert) {
  VerifyReport report;
  try {
    require(cert.is_object(), "certificate must be a JSON object");
    for (const char* key : {"schema_version", "tool_version", "claim", "graph", "parameters", "witness", "provenance"})
      require(cert.contains(key), std::string("missing field '") + key + "'");
    require(cert["schema_version"].is_number_integer() && cert["schema_version"].get<int>() == kCertificateSchemaVersion,
            "unsupported schema_version");
    require(cert["tool_version"].is_string(), "tool_version must be a string");
    require(cert["claim"].is_string() && known_claims().contains(cert["claim"].get<std::string>()), "unknown claim");
    require(cert["parameters"].is_object(), "parameters must be an object");
    require(cert["provenance"].is_object() && cert["provenance"].contains("method") &&
                cert["provenance"]["method"].is_string(),
            "provenance.method missing");
    const auto method = cert["provenance"]["method"].get<std::string>();
    require(method == "formula" || method == "search" || method == "external", "unknown provenance method");
    const auto& gj = cert["graph"];
    require(gj.is_object() && (gj.contains("family") || gj.contains("inline")), "graph needs 'family' or 'inline'");
    const auto& wj = cert["witness"];
    require(wj.is_object() && (wj.contains("edges") || wj.contains("sequence")), "witness needs 'edges' or 'sequence'");

    Graph g;
    std::optional<Graph> inline_graph;
    if (gj.contains("inline")) {
      try {
        inline_graph = graph_from_json(gj["inline"]);
      } catch (const Error& e) {
        throw SchemaError(std::string("inline graph: ") + e.what());
      }
    }
    if (gj.contains("family")) {
      const auto& f = gj["family"];
      require(f.is_object() && f.contains("kind") && f["kind"].is_string(), "graph.family.kind missing");
      std::optional<int> n;
      if (f.contains("n")) {
        require(f["n"].is_number_integer(), "graph.family.n must be an integer");
        n = f["n"].get<int>();
      }
      try {
        g = build_family(f["kind"].get<std::string>(), n).graph;
      } catch (const Error& e) {
        throw SchemaError(std::string("graph.family: ") + e.what());
      }
      if (inline_graph) report.checks["graph_matches_family"] = same_graph(g, *inline_graph);
    } else {
      g = *inline_graph;
    }

    const auto claim = cert["claim"].get<std::string>();
    const auto& params = cert["parameters"];
    auto edges = [&]() {
      require(wj.contains("edges"), "claim '" + claim + "' needs witness edges");
      return read_edges(wj["edges"]);
    };
    auto sequence = [&]() {
      require(wj.contains("sequence"), "claim '" + claim + "' needs a witness sequence");
      return read_sequence(wj["sequence"]);
    };

    if (claim == "spanning_good_even_cactus") {
      const auto e = edges();
      require_labels(g, e);
      check_cactus(g, e, params, report.checks);
    } else if (claim == "hamilton_cycle") {
      const auto s = sequence();
      require_labels(g, s);
      store_cycle_checks(check_hamilton_cycle(g, s), report.checks);
    } else if (claim == "prism_hamilton") {
      const auto s = sequence();
      const Graph p = prism(g);
      require_labels(p, s);
      store_cycle_checks(check_hamilton_cycle(p, s), report.checks);
    } else if (claim == "hamilton_path") {
      const auto s = sequence();
      require_labels(g, s);
      std::optional<std::pair<std::string, std::string>> ends;
      if (params.contains("endpoints") && !params["endpoints"].is_null()) {
        const auto& e = params["endpoints"];
        require(e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string(), "endpoints must be a pair");
        ends = {{e[0].get<std::string>(), e[1].get<std::string>()}};
      }
      report.checks["hamilton_path"] = is_hamilton_path(g, s, ends);
    } else if (claim == "k_walk") {
      const auto s = sequence();
      require_labels(g, s);
      report.checks["k_walk"] = is_k_walk(g, s, read_k(params));
    } else if (claim == "k_tree") {
      const auto e = edges();
      require_labels(g, e);
      report.checks["k_tree"] = is_k_tree(g, e, read_k(params));
    } else if (claim == "lemma_check") {
      require(params.contains("lemma") && params["lemma"].is_string(), "parameters.lemma missing");
      const auto id = params["lemma"].get<std::string>();
      const int n = params.contains("n") && params["n"].is_number_integer() ? params["n"].get<int>() : 0;
      const auto seed = params.contains("seed") && params["seed"].is_number_unsigned() ? params["seed"].get<std::uint64_t>() : 1;
      const int samples = params.contains("samples") && params["samples"].is_number_integer() ? params["samples"].get<int>() : 100;
      LemmaResult r;
      try {
        r = check_lemma(id, n, {}, seed, samples);
      } catch (const SchemaError&) {
        throw;
      } catch (const Error& e) {
        throw SchemaError(std::string("lemma_check: ") + e.what());
      }
      report.checks["confirmed"] = r.confirmed;
    }
  } catch (const SchemaError& e) {
    report.schema_ok = false;
    report.schema_error = e.what();
    report.checks.clear();
  }
  return report;
}

CertificateInput standard_certificate(const std::string& target, int n, const Budget& budget) {
  CertificateInput in;
  if (target == "kA") {
    if (n) throw Error("kA takes no n");
    const auto kA = find_kA(budget);
    in.claim = "spanning_good_even_cactus";
    in.family = {{"A", 0}};
    in.graph = fragment_A().graph;
    in.parameters = {{"required_block_degree_1", {"u1", "u3"}}};
    in.witness_edges = edge_label_list(kA);
    in.provenance = "search";
    in.provenance_detail = "spanning_even_cactus on A";
  } else if (target == "cactus_GC") {
    if (n < 1) throw Error("cactus_GC needs n >= 1");
    const auto cert = certify_cactus_GC(n, find_kA(budget), budget);
    in.claim = "spanning_good_even_cactus";
    in.family = {{"GC", n}};
    in.graph = build_G(FragmentType::C, n).graph;
    in.witness_edges = edge_label_list(cert.cactus);
    in.provenance = cert.method;
    in.provenance_detail = {{"detail", cert.detail}, {"log", cert.log}};
  } else if (target == "prism_GD") {
    if (n < 1) throw Error("prism_GD needs n >= 1");
    const auto r = stitch_hamilton_GD(n, find_kA(budget), budget);
    in.claim = "prism_hamilton";
    in.family = {{"GD", n}};
    in.graph = build_G(FragmentType::D, n).graph;
    in.witness_sequence = r.cycle;
    in.sequence_witness = true;
    in.provenance = "search";
    in.provenance_detail = {{"detail", "stitched from searched fragment path systems"}, {"notes", r.notes}};
  } else {
    throw Error("unknown target '" + target + "' (expected kA, cactus_GC or prism_GD)");
  }
  return in;
}

}  // namespace cactuslab
