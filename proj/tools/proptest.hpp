#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gaugenorm::cli {

struct ProptestOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string suite = "all";
  // Negates the triangle-inequality assertion; used by the harness sanity build.
  bool negate_triangle = false;
};

struct ProptestResult {
  nlohmann::json report;
  // One entry per failed invariant, with the sampled input that broke it.
  nlohmann::json witnesses = nlohmann::json::array();
  bool passed() const { return witnesses.empty(); }
};

const std::vector<std::string>& suite_names();
ProptestResult run_proptest(const ProptestOptions& options);

}  // namespace gaugenorm::cli
