#include "cactuslab/lemmas.hpp"

#include <chrono>
#include <random>

#include "cactuslab/cactus.hpp"
#include "cactuslab/certify.hpp"
#include "cactuslab/families.hpp"
#include "cactuslab/graph_io.hpp"
#include "cactuslab/random.hpp"

namespace cactuslab {

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"L3", "L4", "L5C", "L5D", "L6", "L7", "L8", "L9", "L10"};
  return ids;
}

bool lemma_needs_n(const std::string& id) { return id == "L5C" || id == "L5D"; }

namespace {

using Clock = std::chrono::steady_clock;

void from_outcome(LemmaResult& r, const SearchOutcome& o, const Graph& g) {
  r.status = o.status;
  r.nodes = o.nodes_explored;
  r.exhaustive = o.exhaustive;
  r.confirmed = o.status == SearchStatus::none;
  if (o.found()) r.counterexample = graph_to_json(spanning_subgraph(g, o.witness_edges));
}

LemmaResult lemma3(const Budget& budget) {
  LemmaResult r;
  const auto I = gadget_I();
  CactusConstraints c;
  c.goodness = CactusGoodness::off_path_good;
  c.required_edge_path_endpoints = {{"u1", "u2"}};
  std::uint64_t bad = 0;
  const auto res = enumerate_spanning_even_cacti(
      I.graph, c,
      [&](const Graph& q) {
        const auto report = analyze_cactus(q);
        const auto b1 = report.block_degrees[static_cast<std::size_t>(q.id("u1"))];
        const auto b2 = report.block_degrees[static_cast<std::size_t>(q.id("u2"))];
        if (b1 != 2 || b2 != 2) {
          ++bad;
          if (r.counterexample.is_null()) r.counterexample = graph_to_json(q);
        }
        return true;
      },
      budget);
  r.nodes = res.nodes_explored;
  r.exhaustive = res.complete;
  r.status = res.complete ? SearchStatus::none : SearchStatus::timeout;
  r.confirmed = res.complete && res.count > 0 && bad == 0;
  r.summary = std::to_string(res.count) + " spanning even cacti of I with an edge path u1-u2 visited, " +
              std::to_string(bad) + " with b(u1) or b(u2) different from 2";
  return r;
}

LemmaResult lemma4(const Budget& budget) {
  LemmaResult r;
  const auto A = fragment_A();
  CactusConstraints c;
  c.goodness = CactusGoodness::p_good;
  c.required_edge_path_endpoints = {{"u1", "u3"}};
  const auto o = spanning_even_cactus(A.graph, c, budget);
  from_outcome(r, o, A.graph);
  r.summary = "spanning P-good even cactus of A with P from u1 to u3: " + to_string(o.status);
  return r;
}

LemmaResult lemma5(FragmentType type, int n, const Budget& budget) {
  LemmaResult r;
  const auto B = fragment_B(type, n);
  CactusConstraints c;
  c.required_block_degree_1 = {"l", "r"};
  const auto o = spanning_even_cactus(B.graph, c, budget);
  from_outcome(r, o, B.graph);
  r.summary = "spanning good even cactus of " + to_string(type) + "_" + std::to_string(n) +
              " with b(l) = b(r) = 1: " + to_string(o.status);
  return r;
}

LemmaResult deletion_suite(bool max_degree_3, std::uint64_t seed, int samples) {
  LemmaResult r;
  std::mt19937_64 rng(seed);
  int passed = 0;
  for (int i = 0; i < samples; ++i) {
    RandomCactusOptions opt;
    opt.max_vertices = 20;
    opt.even = false;
    opt.max_degree_3 = max_degree_3;
    const auto k = random_good_cactus(rng, opt);
    std::uniform_int_distribution<std::size_t> pick(0, k.num_vertices() - 1);
    const auto s = pick(rng);
    auto t = pick(rng);
    while (t == s) t = pick(rng);
    const auto& sl = k.label(static_cast<VertexId>(s));
    const auto& tl = k.label(static_cast<VertexId>(t));
    const auto report = classify_deletion(k, sl, tl, max_degree_3);
    if (report.deletion_case != DeletionCase::violated) {
      ++passed;
    } else if (r.counterexample.is_null()) {
      r.counterexample = {{"graph", graph_to_json(k)}, {"s", sl}, {"t", tl}};
    }
  }
  r.confirmed = passed == samples;
  r.exhaustive = false;
  r.summary = std::to_string(passed) + "/" + std::to_string(samples) + " random good cacti" +
              (max_degree_3 ? " with maximum degree three" : "") + " satisfy one of the two cases";
  return r;
}

LemmaResult bag_suite(const std::string& id, int n, const Budget& budget) {
  LemmaResult r;
  const Goodness target = id == "L8" ? Goodness::good : id == "L9" ? Goodness::one_good : Goodness::two_good;
  const auto kA = find_kA(budget);
  struct Instance {
    std::string name;
    FragmentChart chart;
    Graph cactus;
  };
  std::vector<Instance> instances;
  const auto cert = certify_cactus_GC(n, kA, budget);
  instances.push_back({"G(C_" + std::to_string(n) + ")", build_G(FragmentType::C, n), cert.cactus});
  instances.push_back({"short chain", build_G_with(FragmentType::C, 1, 2), short_chain_cactus(2, kA, budget)});

  int checked = 0;
  int failed = 0;
  for (const auto& inst : instances) {
    for (const auto& c : check_bag_bounds(inst.cactus, inst.chart)) {
      if (c.goodness == Goodness::none) {
        ++failed;
        if (r.counterexample.is_null())
          r.counterexample = {{"instance", inst.name}, {"component", c.component}, {"reason", "not even 2-good"}};
        continue;
      }
      if (c.goodness != target) continue;
      ++checked;
      const bool ok = c.bound_holds && (target != Goodness::one_good || c.inner_path_clause_holds);
      if (!ok) {
        ++failed;
        if (r.counterexample.is_null())
          r.counterexample = {{"instance", inst.name}, {"component", c.component},
                              {"interval", {c.interval.a, c.interval.b}}, {"bags", c.bag_count},
                              {"lower_bound", c.lower_bound}};
      }
    }
  }
  r.confirmed = failed == 0;
  r.summary = std::to_string(checked) + " " + to_string(target) + " components checked on " +
              std::to_string(instances.size()) + " certified cacti, " + std::to_string(failed) + " failures";
  return r;
}

}  // namespace

LemmaResult check_lemma(const std::string& id, int n, const Budget& budget, std::uint64_t seed, int samples) {
  if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end())
    throw Error("unknown lemma id '" + id + "'");
  if (lemma_needs_n(id) && n < 1) throw Error(id + " needs n >= 1");
  if (samples < 1) throw Error("sample count must be positive");
  const auto start = Clock::now();
  LemmaResult r;
  if (id == "L3")
    r = lemma3(budget);
  else if (id == "L4")
    r = lemma4(budget);
  else if (id == "L5C")
    r = lemma5(FragmentType::C, n, budget);
  else if (id == "L5D")
    r = lemma5(FragmentType::D, n, budget);
  else if (id == "L6")
    r = deletion_suite(true, seed, samples);
  else if (id == "L7")
    r = deletion_suite(false, seed, samples);
  else
    r = bag_suite(id, n < 1 ? 1 : n, budget);
  r.id = id;
  r.n = n;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace cactuslab
