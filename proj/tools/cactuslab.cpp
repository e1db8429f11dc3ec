// Command-line front end. Exit codes: 0 ok, 1 claim fails, 2 usage or
// schema error, 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cactuslab/cactus.hpp"
#include "cactuslab/certify.hpp"
#include "cactuslab/families.hpp"
#include "cactuslab/graph_io.hpp"
#include "cactuslab/lemmas.hpp"
#include "cactuslab/prism.hpp"
#include "cactuslab/search.hpp"

using namespace cactuslab;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kClaimFails = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool deterministic = false;
  std::string budget_text;
};

Budget resolve_budget(const Globals& g, const std::string& local) {
  std::string text = local.empty() ? g.budget_text : local;
  if (text.empty()) {
    const char* env = std::getenv("CACTUSLAB_BUDGET");
    text = env && *env ? env : "5m";
  }
  try {
    return Budget::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<int> optional_n(int n) { return n > 0 ? std::optional<int>(n) : std::nullopt; }

FragmentChart family_or_usage(const std::string& kind, int n) {
  try {
    return build_family(kind, n == 0 ? std::nullopt : std::optional<int>(n));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::optional<double> timing(const Globals& g, double seconds) {
  if (g.deterministic) return std::nullopt;
  return seconds;
}

// ------------------------------------------------------------------ build

struct BuildArgs {
  std::string kind;
  int n = 0;
  std::string out;
  std::string format = "json";
};

int cmd_build(const BuildArgs& a) {
  const auto chart = family_or_usage(a.kind, a.n);
  if (a.format == "dot")
    write_output(a.out, chart_to_dot(chart));
  else
    write_output(a.out, chart_to_json(chart).dump(2));
  if (!a.out.empty() && a.out != "-")
    std::cerr << a.kind << (a.n ? " " + std::to_string(a.n) : "") << ": " << chart.graph.num_vertices()
              << " vertices, " << chart.graph.num_edges() << " edges\n";
  return kOk;
}

// ------------------------------------------------------------------ check

struct CheckArgs {
  std::string id;
  int n = 0;
  std::string budget;
  std::uint64_t seed = 1;
  int samples = 100;
  bool json_out = false;
};

int cmd_check(const Globals& g, const CheckArgs& a) {
  if (std::find(lemma_ids().begin(), lemma_ids().end(), a.id) == lemma_ids().end())
    throw UsageError("unknown lemma id '" + a.id + "'");
  if (lemma_needs_n(a.id) && a.n < 1) throw UsageError(a.id + " needs n >= 1");
  if (a.samples < 1) throw UsageError("--samples must be positive");
  const auto r = check_lemma(a.id, a.n, resolve_budget(g, a.budget), a.seed, a.samples);
  if (a.json_out) {
    json j{{"lemma", r.id},           {"confirmed", r.confirmed}, {"exhaustive", r.exhaustive},
           {"status", to_string(r.status)}, {"nodes", r.nodes},   {"summary", r.summary},
           {"counterexample", r.counterexample}};
    if (r.n) j["n"] = r.n;
    if (!g.deterministic) j["seconds"] = r.seconds;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << r.id << (r.n ? " n=" + std::to_string(r.n) : "") << ": " << r.summary << '\n';
    std::cout << "exhaustive=" << (r.exhaustive ? "true" : "false") << " nodes=" << r.nodes;
    if (!g.deterministic) std::cout << " seconds=" << r.seconds;
    std::cout << '\n';
    if (!r.counterexample.is_null()) std::cout << "counterexample: " << r.counterexample.dump() << '\n';
  }
  if (r.status == SearchStatus::timeout) return kBudget;
  return r.confirmed ? kOk : kClaimFails;
}

// ---------------------------------------------------------------- certify

struct CertifyArgs {
  std::string target;
  int n = 0;
  std::string out;
  std::string budget;
};

int cmd_certify(const Globals& g, const CertifyArgs& a) {
  const auto budget = resolve_budget(g, a.budget);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  if (a.target != "kA" && a.target != "cactus_GC" && a.target != "prism_GD")
    throw UsageError("unknown target '" + a.target + "' (expected kA, cactus_GC or prism_GD)");
  if (a.target == "kA" && a.n) throw UsageError("kA takes no n");
  if (a.target != "kA" && a.n < 1) throw UsageError(a.target + " needs n >= 1");
  CertificateInput in;
  try {
    in = standard_certificate(a.target, a.n, budget);
  } catch (const Error& e) {
    std::cerr << "certify " << a.target << ": " << e.what() << '\n';
    const std::string what = e.what();
    return what.find("TIMEOUT") != std::string::npos ? kBudget : kClaimFails;
  }
  in.seconds = timing(g, elapsed());
  const auto cert = make_certificate(in);
  const auto report = verify_certificate(cert);
  write_output(a.out, cert.dump(2));
  if (!a.out.empty() && a.out != "-")
    std::cerr << "certify " << a.target << (a.n ? " " + std::to_string(a.n) : "") << ": "
              << (report.holds() ? "verified" : "NOT verified") << " (" << in.provenance << ")\n";
  return report.holds() ? kOk : kClaimFails;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const std::string& path, bool quiet) {
  const auto cert = read_json_file(path);
  const auto report = verify_certificate(cert);
  if (!report.schema_ok) {
    std::cerr << "schema error: " << report.schema_error << '\n';
    return kUsage;
  }
  if (!quiet) {
    for (const auto& [name, ok] : report.checks) std::cout << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    std::cout << (report.holds() ? "certificate holds" : "certificate does not hold") << '\n';
  }
  return report.holds() ? kOk : kClaimFails;
}

// ----------------------------------------------------------------- search

struct SearchArgs {
  std::string problem;
  std::string graph_file;
  std::string kind;
  int n = 0;
  int k = 3;
  std::vector<std::string> endpoints;
  int max_degree = 0;
  std::vector<std::string> block_degree_1;
  std::string budget;
  std::string out;
};

int cmd_search(const Globals& g, const SearchArgs& a) {
  if (a.graph_file.empty() == a.kind.empty()) throw UsageError("give exactly one of --graph or --family");
  Graph graph;
  std::optional<std::pair<std::string, int>> family;
  if (!a.graph_file.empty()) {
    const auto j = read_json_file(a.graph_file);
    try {
      graph = graph_from_json(j.contains("graph") && j["graph"].is_object() ? j["graph"] : j);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  } else {
    graph = family_or_usage(a.kind, a.n).graph;
    family = {{a.kind, a.n}};
  }
  for (const auto& v : a.endpoints)
    if (!graph.contains(v)) throw UsageError("unknown vertex '" + v + "'");
  for (const auto& v : a.block_degree_1)
    if (!graph.contains(v)) throw UsageError("unknown vertex '" + v + "'");
  if (!a.endpoints.empty() && a.endpoints.size() != 2) throw UsageError("--endpoints takes two labels");
  const auto budget = resolve_budget(g, a.budget);

  CertificateInput in;
  in.family = family;
  in.graph = graph;
  SearchOutcome o;
  if (a.problem == "hamilton_cycle") {
    in.claim = "hamilton_cycle";
    in.sequence_witness = true;
    o = hamilton_cycle(graph, budget);
  } else if (a.problem == "hamilton_path") {
    in.claim = "hamilton_path";
    in.sequence_witness = true;
    std::optional<std::pair<std::string, std::string>> ends;
    if (!a.endpoints.empty()) {
      ends = {{a.endpoints[0], a.endpoints[1]}};
      in.parameters["endpoints"] = a.endpoints;
    }
    o = hamilton_path(graph, ends, budget);
  } else if (a.problem == "k_walk" || a.problem == "k_tree") {
    if (a.k < 1) throw UsageError("--k must be positive");
    in.claim = a.problem;
    in.parameters["k"] = a.k;
    in.sequence_witness = a.problem == "k_walk";
    o = a.problem == "k_walk" ? k_walk(graph, a.k, budget) : k_tree(graph, a.k, budget);
  } else if (a.problem == "cactus") {
    in.claim = "spanning_good_even_cactus";
    CactusConstraints c;
    c.required_block_degree_1 = a.block_degree_1;
    if (!a.block_degree_1.empty()) in.parameters["required_block_degree_1"] = a.block_degree_1;
    if (a.max_degree > 0) {
      c.max_degree = a.max_degree;
      in.parameters["max_degree"] = a.max_degree;
    }
    o = spanning_even_cactus(graph, c, budget);
  } else {
    throw UsageError("unknown problem '" + a.problem +
                     "' (expected hamilton_cycle, hamilton_path, k_walk, k_tree or cactus)");
  }

  std::cout << a.problem << ": " << to_string(o.status) << " nodes=" << o.nodes_explored
            << " exhaustive=" << (o.exhaustive ? "true" : "false");
  if (!g.deterministic) std::cout << " seconds=" << o.elapsed.count();
  std::cout << '\n';
  if (o.status == SearchStatus::timeout) return kBudget;
  if (!o.found()) return kClaimFails;
  in.witness_edges = o.witness_edges;
  in.witness_sequence = o.witness_sequence;
  in.provenance = "search";
  in.seconds = timing(g, o.elapsed.count());
  if (!a.out.empty()) write_output(a.out, make_certificate(in).dump(2));
  return kOk;
}

// ----------------------------------------------------------------- export

struct ExportArgs {
  std::string input;
  std::string kind;
  int n = 0;
  std::string out;
  std::string format = "dot";
};

int cmd_export(const ExportArgs& a) {
  if (a.input.empty() == a.kind.empty()) throw UsageError("give exactly one of a certificate file or --family");
  if (!a.kind.empty()) {
    const auto chart = family_or_usage(a.kind, a.n);
    write_output(a.out, a.format == "dot" ? chart_to_dot(chart) : chart_to_json(chart).dump(2));
    return kOk;
  }
  const auto cert = read_json_file(a.input);
  const auto report = verify_certificate(cert);
  if (!report.schema_ok) {
    std::cerr << "schema error: " << report.schema_error << '\n';
    return kUsage;
  }
  if (a.format == "json") {
    write_output(a.out, cert.dump(2));
    return kOk;
  }
  // Rebuild the graph the certificate talks about and highlight its witness.
  FragmentChart chart;
  const auto& gj = cert["graph"];
  if (gj.contains("family")) {
    const auto& f = gj["family"];
    chart = build_family(f["kind"].get<std::string>(), f.contains("n") ? optional_n(f["n"].get<int>()) : std::nullopt);
  } else {
    chart.graph = graph_from_json(gj["inline"]);
  }
  std::vector<LabelPair> highlight;
  const auto& w = cert["witness"];
  if (w.contains("edges")) {
    for (const auto& e : w["edges"]) highlight.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  } else {
    const auto seq = w["sequence"].get<std::vector<std::string>>();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) highlight.emplace_back(seq[i], seq[i + 1]);
    const auto claim = cert["claim"].get<std::string>();
    if (claim != "hamilton_path" && seq.size() > 2) highlight.emplace_back(seq.back(), seq.front());
  }
  if (cert["claim"] == "prism_hamilton") {
    const Graph p = prism(chart.graph);
    DotStyle style;
    style.highlight_edges = highlight;
    write_output(a.out, graph_to_dot(p, style));
  } else {
    write_output(a.out, chart_to_dot(chart, highlight));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cactuslab: spanning cacti, prism Hamiltonicity and the fragment constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CACTUSLAB_VERSION);
  Globals globals;
  app.add_flag("--deterministic", globals.deterministic,
               "single-threaded search and no timing fields, so output is byte-identical across runs");
  app.add_option("--budget", globals.budget_text, "default search budget, e.g. 30s, 10m (env CACTUSLAB_BUDGET, default 5m)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "build a family graph (I, A, C, D, GC, GD)");
  b->add_option("kind", build.kind, "I, A, C, D, GC or GD")->required();
  b->add_option("n", build.n, "size parameter for C, D, GC, GD");
  b->add_option("--out,-o", build.out, "output file (default stdout)");
  b->add_option("--format", build.format)->check(CLI::IsMember({"json", "dot"}));

  CheckArgs check;
  auto* c = app.add_subcommand("check", "run one built-in check (L3, L4, L5C, L5D, L6, L7, L8, L9, L10)");
  c->add_option("lemma", check.id)->required();
  c->add_option("n", check.n, "n for L5C, L5D (and the G(C_n) instance for L8-L10)");
  c->add_option("--budget", check.budget);
  c->add_option("--seed", check.seed, "seed for the random suites");
  c->add_option("--samples", check.samples, "sample count for the random suites");
  c->add_flag("--json", check.json_out);

  CertifyArgs certify;
  auto* ce = app.add_subcommand("certify", "build and verify a certificate (kA, cactus_GC, prism_GD)");
  ce->add_option("target", certify.target)->required();
  ce->add_option("n", certify.n);
  ce->add_option("--out,-o", certify.out);
  ce->add_option("--budget", certify.budget);

  std::string verify_path;
  bool verify_quiet = false;
  auto* v = app.add_subcommand("verify", "re-check a certificate from scratch");
  v->add_option("certificate", verify_path)->required();
  v->add_flag("--quiet,-q", verify_quiet);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "budgeted exact search on a graph");
  s->add_option("problem", search.problem, "hamilton_cycle, hamilton_path, k_walk, k_tree or cactus")->required();
  s->add_option("--graph", search.graph_file, "graph JSON file");
  s->add_option("--family", search.kind, "family kind instead of a file");
  s->add_option("n", search.n, "family size parameter");
  s->add_option("--k", search.k, "k for k_walk and k_tree");
  s->add_option("--endpoints", search.endpoints, "two endpoint labels for hamilton_path")->expected(2);
  s->add_option("--max-degree", search.max_degree, "degree cap for cactus");
  s->add_option("--block-degree-1", search.block_degree_1, "vertices that must have block degree one");
  s->add_option("--budget", search.budget);
  s->add_option("--out,-o", search.out, "write a certificate when found");

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "DOT (or JSON) rendering of a certificate or a family");
  e->add_option("certificate", exp.input);
  e->add_option("--family", exp.kind);
  e->add_option("--n", exp.n, "family size parameter");
  e->add_option("--out,-o", exp.out);
  e->add_option("--format", exp.format)->check(CLI::IsMember({"json", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*b) return cmd_build(build);
    if (*c) return cmd_check(globals, check);
    if (*ce) return cmd_certify(globals, certify);
    if (*v) return cmd_verify(verify_path, verify_quiet);
    if (*s) return cmd_search(globals, search);
    if (*e) return cmd_export(exp);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kClaimFails;
  }
  return kUsage;
}
