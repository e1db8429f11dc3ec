#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cactuslab/search.hpp"

namespace cactuslab {

struct LemmaResult {
  std::string id;
  int n = 0;
  bool confirmed = false;
  bool exhaustive = false;
  SearchStatus status = SearchStatus::none;  // timeout when the budget ran out
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::string summary;
  nlohmann::json counterexample;  // null unless a counterexample was found
};

/// Known ids: L3, L4, L5C, L5D (need n), L6, L7, L8, L9, L10.
const std::vector<std::string>& lemma_ids();
bool lemma_needs_n(const std::string& id);

/// Runs the exhaustive or property check behind a lemma. Random suites use
/// `seed`; `samples` overrides their default size of 100. Throws Error on
/// an unknown id or a missing n.
LemmaResult check_lemma(const std::string& id, int n, const Budget& budget = {}, std::uint64_t seed = 1,
                        int samples = 100);

}  // namespace cactuslab
