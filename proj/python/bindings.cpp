#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cactuslab/cactus.hpp"
#include "cactuslab/certify.hpp"
#include "cactuslab/families.hpp"
#include "cactuslab/graph_io.hpp"
#include "cactuslab/lemmas.hpp"
#include "cactuslab/prism.hpp"
#include "cactuslab/random.hpp"
#include "cactuslab/search.hpp"

namespace py = pybind11;
using namespace cactuslab;

namespace {

// JSON crosses the boundary as text; the payloads are small.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Graph graph_arg(const py::object& o) { return graph_from_json(from_py(o)); }

py::dict outcome(const SearchOutcome& o) {
  py::dict d;
  d["status"] = to_string(o.status);
  std::vector<std::vector<std::string>> edges;
  for (const auto& [a, b] : o.witness_edges) edges.push_back({a, b});
  d["edges"] = edges;
  d["sequence"] = o.witness_sequence;
  d["nodes"] = o.nodes_explored;
  d["seconds"] = o.elapsed.count();
  d["exhaustive"] = o.exhaustive;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spanning cacti, prism Hamilton cycles and certificates for the cactus counterexample families";
  m.attr("__version__") = CACTUSLAB_VERSION;

  py::register_exception<Error>(m, "CactusError", PyExc_ValueError);

  m.def(
      "build_family",
      [](const std::string& kind, std::optional<int> n) { return to_py(chart_to_json(build_family(kind, n))); },
      py::arg("kind"), py::arg("n") = py::none());

  m.def(
      "check_lemma",
      [](const std::string& id, int n, const std::string& budget, std::uint64_t seed, int samples) {
        LemmaResult r;
        {
          py::gil_scoped_release release;
          r = check_lemma(id, n, Budget::parse(budget), seed, samples);
        }
        py::dict d;
        d["id"] = r.id;
        d["n"] = r.n;
        d["confirmed"] = r.confirmed;
        d["exhaustive"] = r.exhaustive;
        d["status"] = to_string(r.status);
        d["nodes"] = r.nodes;
        d["seconds"] = r.seconds;
        d["summary"] = r.summary;
        d["counterexample"] = to_py(r.counterexample);
        return d;
      },
      py::arg("id"), py::arg("n") = 0, py::arg("budget") = "5m", py::arg("seed") = 1, py::arg("samples") = 100);

  m.def(
      "certify",
      [](const std::string& target, int n, const std::string& budget) {
        nlohmann::json cert;
        {
          py::gil_scoped_release release;
          cert = make_certificate(standard_certificate(target, n, Budget::parse(budget)));
        }
        return to_py(cert);
      },
      py::arg("target"), py::arg("n") = 0, py::arg("budget") = "5m");

  m.def(
      "verify",
      [](const py::object& cert) {
        const auto r = verify_certificate(from_py(cert));
        py::dict d;
        d["holds"] = r.holds();
        d["schema_ok"] = r.schema_ok;
        d["schema_error"] = r.schema_error;
        d["checks"] = r.checks;
        return d;
      },
      py::arg("certificate"));

  m.def(
      "hamilton_cycle",
      [](const py::object& g, const std::string& budget) { return outcome(hamilton_cycle(graph_arg(g), Budget::parse(budget))); },
      py::arg("graph"), py::arg("budget") = "5m");

  m.def(
      "hamilton_path",
      [](const py::object& g, std::optional<std::pair<std::string, std::string>> ends, const std::string& budget) {
        return outcome(hamilton_path(graph_arg(g), ends, Budget::parse(budget)));
      },
      py::arg("graph"), py::arg("endpoints") = py::none(), py::arg("budget") = "5m");

  m.def(
      "k_tree", [](const py::object& g, int k, const std::string& budget) { return outcome(k_tree(graph_arg(g), k, Budget::parse(budget))); },
      py::arg("graph"), py::arg("k"), py::arg("budget") = "5m");

  m.def(
      "k_walk", [](const py::object& g, int k, const std::string& budget) { return outcome(k_walk(graph_arg(g), k, Budget::parse(budget))); },
      py::arg("graph"), py::arg("k"), py::arg("budget") = "5m");

  m.def(
      "spanning_even_cactus",
      [](const py::object& g, std::optional<int> max_degree, std::vector<std::string> block_degree_1,
         const std::string& budget) {
        CactusConstraints c;
        c.max_degree = max_degree;
        c.required_block_degree_1 = std::move(block_degree_1);
        const Graph graph = graph_arg(g);
        SearchOutcome o;
        {
          py::gil_scoped_release release;
          o = spanning_even_cactus(graph, c, Budget::parse(budget));
        }
        return outcome(o);
      },
      py::arg("graph"), py::arg("max_degree") = py::none(), py::arg("block_degree_1") = std::vector<std::string>{},
      py::arg("budget") = "5m");

  m.def(
      "analyze_cactus",
      [](const py::object& g) {
        const Graph q = graph_arg(g);
        const auto r = analyze_cactus(q);
        py::dict d;
        d["is_cactus"] = r.is_cactus;
        d["is_even"] = r.is_even;
        py::dict degrees;
        for (std::size_t v = 0; v < r.block_degrees.size(); ++v)
          degrees[py::str(q.label(static_cast<VertexId>(v)))] = r.block_degrees[v];
        d["block_degrees"] = degrees;
        d["classification"] = to_string(r.classification);
        std::vector<std::vector<std::string>> paths;
        for (const auto& p : r.witness_paths) paths.push_back(p.vertices);
        d["witness_paths"] = paths;
        return d;
      },
      py::arg("graph"));

  m.def(
      "prism_hamilton",
      [](const py::object& g, const std::vector<std::string>& required) {
        return cactus_prism_hamilton(graph_arg(g), required);
      },
      py::arg("cactus"), py::arg("required") = std::vector<std::string>{});

  m.def(
      "random_good_cactus",
      [](std::uint64_t seed, int max_vertices, bool even, bool max_degree_3) {
        std::mt19937_64 rng(seed);
        return to_py(graph_to_json(random_good_cactus(rng, {max_vertices, even, max_degree_3})));
      },
      py::arg("seed"), py::arg("max_vertices") = 20, py::arg("even") = true, py::arg("max_degree_3") = false);
}
