#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cactuslab/families.hpp"
#include "cactuslab/graph.hpp"
#include "cactuslab/prism.hpp"
#include "cactuslab/search.hpp"

namespace cactuslab {

inline constexpr int kCertificateSchemaVersion = 1;

/// Spanning good even cactus of A with b(u1) = b(u3) = 1, by search.
Graph find_kA(const Budget& budget = {});

struct CactusCertification {
  Graph cactus;
  std::string method;  // "formula" or "search"
  std::string detail;
  std::vector<std::string> log;
};

/// Spanning good even cactus of G(C_n): the printed formula first, then a
/// one-edge repair of the apex list, then a search with the formula's chain
/// edges fixed, then an unconstrained search. Throws if all stages fail.
CactusCertification certify_cactus_GC(int n, const Graph& kA, const Budget& budget = {});

/// Spanning good even cactus of G_with(C_1, a_count) with K_A pinned into
/// every copy of A (the short test chains).
Graph short_chain_cactus(int a_count, const Graph& kA, const Budget& budget = {});

/// Family graphs by kind name: I, A, C, D, GC, GD (n required for the last
/// four). Throws on bad input.
FragmentChart build_family(const std::string& kind, std::optional<int> n);

struct CertificateInput {
  std::string claim;
  std::optional<std::pair<std::string, int>> family;  // (kind, n); n = 0 when unused
  Graph graph;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<LabelPair> witness_edges;
  std::vector<std::string> witness_sequence;
  bool sequence_witness = false;
  std::string provenance = "search";
  nlohmann::json provenance_detail;
  std::optional<double> seconds;  // omitted in deterministic output
};

nlohmann::json make_certificate(const CertificateInput& in);

/// Certificate content for one of the standard targets: "kA", "cactus_GC"
/// or "prism_GD" (the last two need n >= 1). Timing is left unset. Throws
/// Error on a bad target or when the witness cannot be produced.
CertificateInput standard_certificate(const std::string& target, int n, const Budget& budget = {});

struct VerifyReport {
  bool schema_ok = true;
  std::string schema_error;
  std::map<std::string, bool> checks;
  bool holds() const;
};

/// Recomputes every predicate from the certificate content. Stored
/// verification booleans are ignored.
VerifyReport verify_certificate(const nlohmann::json& cert);

}  // namespace cactuslab
