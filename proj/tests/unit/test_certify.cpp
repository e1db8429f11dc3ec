#include <doctest.h>

#include "cactuslab/certify.hpp"
#include "cactuslab/graph_io.hpp"
#include "cactuslab/lemmas.hpp"
#include "cactuslab/search.hpp"

using namespace cactuslab;
using nlohmann::json;

namespace {

json cactus_certificate_GC1() {
  const auto kA = find_kA();
  const auto cert = certify_cactus_GC(1, kA);
  CertificateInput in;
  in.claim = "spanning_good_even_cactus";
  in.family = {{"GC", 1}};
  in.graph = build_G(FragmentType::C, 1).graph;
  in.witness_edges = edge_label_list(cert.cactus);
  in.provenance = cert.method;
  return make_certificate(in);
}

}  // namespace

TEST_CASE("family builder by name") {
  CHECK(build_family("I", std::nullopt).graph.num_vertices() == 14);
  CHECK(build_family("D", 2).graph.num_vertices() == 13);
  CHECK(build_family("GC", 1).graph.num_vertices() == 239);
  CHECK_THROWS_AS(build_family("GC", std::nullopt), Error);
  CHECK_THROWS_AS(build_family("C", 0), Error);
  CHECK_THROWS_AS(build_family("A", 1), Error);
  CHECK_THROWS_AS(build_family("Q", 1), Error);
}

TEST_CASE("K_A has block degree one at both ends") {
  const auto kA = find_kA();
  CactusConstraints c;
  c.required_block_degree_1 = {"u1", "u3"};
  CHECK(satisfies_constraints(fragment_A().graph, kA, c));
}

TEST_CASE("certified cactus of G(C_n) is good, even and needs degree four") {
  const auto kA = find_kA();
  for (int n = 1; n <= 3; ++n) {
    const auto cert = certify_cactus_GC(n, kA);
    const auto g = build_G(FragmentType::C, n).graph;
    CHECK(satisfies_constraints(g, cert.cactus, CactusConstraints{}));
    CHECK(cert.cactus.max_degree() >= 4);
    CHECK_FALSE(cert.log.empty());
  }
}

TEST_CASE("short chains have a cactus with K_A pinned") {
  const auto kA = find_kA();
  const auto k = short_chain_cactus(2, kA);
  const auto chart = build_G_with(FragmentType::C, 1, 2);
  CHECK(satisfies_constraints(chart.graph, k, CactusConstraints{}));
}

TEST_CASE("certificate round trip") {
  const auto cert = cactus_certificate_GC1();
  CHECK(cert["schema_version"] == kCertificateSchemaVersion);
  CHECK(cert["verification"]["good"] == true);
  CHECK_FALSE(cert.contains("timing"));
  const auto report = verify_certificate(cert);
  CHECK(report.schema_ok);
  CHECK(report.holds());
  CHECK(report.checks.at("graph_matches_family"));
}

TEST_CASE("verification never trusts stored booleans") {
  auto cert = cactus_certificate_GC1();
  cert["witness"]["edges"].erase(cert["witness"]["edges"].size() - 1);
  cert["verification"]["spanning"] = true;
  const auto report = verify_certificate(cert);
  CHECK(report.schema_ok);
  CHECK_FALSE(report.holds());
}

TEST_CASE("schema violations") {
  const auto good = cactus_certificate_GC1();
  auto bad_label = good;
  bad_label["witness"]["edges"][0][0] = "no-such-vertex";
  CHECK_FALSE(verify_certificate(bad_label).schema_ok);

  auto bad_claim = good;
  bad_claim["claim"] = "is_nice";
  CHECK_FALSE(verify_certificate(bad_claim).schema_ok);

  auto bad_version = good;
  bad_version["schema_version"] = 99;
  CHECK_FALSE(verify_certificate(bad_version).schema_ok);

  auto bad_method = good;
  bad_method["provenance"]["method"] = "guess";
  CHECK_FALSE(verify_certificate(bad_method).schema_ok);

  auto missing = good;
  missing.erase("witness");
  CHECK_FALSE(verify_certificate(missing).schema_ok);

  CHECK_FALSE(verify_certificate(json::array()).schema_ok);
}

TEST_CASE("inline graphs must match their family") {
  auto cert = cactus_certificate_GC1();
  cert["graph"]["inline"] = graph_to_json(build_G(FragmentType::C, 2).graph);
  const auto report = verify_certificate(cert);
  CHECK(report.schema_ok);
  CHECK_FALSE(report.checks.at("graph_matches_family"));
}

TEST_CASE("other claims") {
  const auto k4 = Graph::from_labels({"a", "b", "c", "d"},
                                     {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}, {"b", "d"}});
  CertificateInput in;
  in.graph = k4;
  in.claim = "hamilton_cycle";
  in.sequence_witness = true;
  in.witness_sequence = {"a", "b", "c", "d"};
  CHECK(verify_certificate(make_certificate(in)).holds());

  in.claim = "hamilton_path";
  in.parameters = {{"endpoints", {"a", "d"}}};
  CHECK(verify_certificate(make_certificate(in)).holds());
  in.parameters = {{"endpoints", {"a", "c"}}};
  CHECK_FALSE(verify_certificate(make_certificate(in)).holds());

  in.claim = "k_walk";
  in.parameters = {{"k", 1}};
  CHECK(verify_certificate(make_certificate(in)).holds());

  in.claim = "k_tree";
  in.sequence_witness = false;
  in.parameters = {{"k", 2}};
  in.witness_edges = {{"a", "b"}, {"b", "c"}, {"c", "d"}};
  CHECK(verify_certificate(make_certificate(in)).holds());
  in.parameters = {{"k", 1}};
  CHECK_FALSE(verify_certificate(make_certificate(in)).holds());

  in.claim = "lemma_check";
  in.parameters = {{"lemma", "L5C"}, {"n", 1}};
  CHECK(verify_certificate(make_certificate(in)).holds());
}

TEST_CASE("built-in checks") {
  CHECK(check_lemma("L3", 0).confirmed);
  CHECK(check_lemma("L5C", 2).confirmed);
  CHECK(check_lemma("L5D", 2).exhaustive);
  CHECK(check_lemma("L6", 0, {}, 3, 30).confirmed);
  CHECK(check_lemma("L7", 0, {}, 4, 30).confirmed);
  for (const char* id : {"L8", "L9", "L10"}) CHECK(check_lemma(id, 1).confirmed);
  CHECK_THROWS_AS(check_lemma("L11", 1), Error);
  CHECK_THROWS_AS(check_lemma("L5C", 0), Error);
  Budget tiny;
  tiny.nodes = 5;
  const auto r = check_lemma("L4", 0, tiny);
  CHECK(r.status == SearchStatus::timeout);
  CHECK_FALSE(r.confirmed);
}
