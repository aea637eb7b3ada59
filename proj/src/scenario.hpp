#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "topology.hpp"

namespace crb {

inline constexpr const char* kToolName = "crbuilding";
inline constexpr const char* kToolVersion = "0.1.0";

struct Caps {
  long long order = 1'000'000;     // group closure / element enumeration
  long long subspaces = 200'000;   // building simplices, oracle subspace scans
  long long corpus_group = 200;    // ambient order bound for subgroup corpora
};

// One building-automorphism generator in a scenario file, a composition of
// primitive parts applied right to left.
struct AutoSpecPart {
  std::string kind;  // "inner" | "frobenius" | "duality"
  int power = 0;
  std::vector<std::vector<long long>> mat;
};
using AutoSpec = std::vector<AutoSpecPart>;

using RawMat = std::vector<std::vector<long long>>;

struct Scenario {
  std::string id;
  std::string analysis;
  int n = 0, p = 0, m = 1;
  std::vector<RawMat> gens;
  std::vector<RawMat> ngens;           // clifford: generators of the normal subgroup
  std::vector<AutoSpec> autos;         // sigma_variant_cr
  std::vector<int> k_blocks;           // relative_cr
  std::optional<RawMat> k_conj;
  std::vector<int> blocks;             // levi_sphere
  int r = 0;                           // extension degree (0 = analysis default)
  int frob = 0;                        // Frobenius power (0 = analysis default)
  int r_max = 0;                       // tau_search bound
  std::optional<long long> cap_order;
  std::optional<long long> cap_subspaces;
};

Scenario parse_scenario(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

// Runs the scenario and produces the canonical report. The report is fully
// deterministic apart from the "timings" object; seed only feeds randomized
// spot checks, never verdicts.
nlohmann::json run_scenario(const Scenario& sc, const Caps& caps, std::uint64_t seed);

// True when no internal cross-check in the report failed.
bool report_consistent(const nlohmann::json& report);

// Canonical serialization helpers shared with tests.
nlohmann::json flag_to_json(const Building& b, const Flag& f);
nlohmann::json verdict_to_json(const Building& b, const CrVerdict& v);
nlohmann::json homology_to_json(const HomologyProfile& hp);
nlohmann::json topo_class_to_json(const TopoClass& tc);

}  // namespace crb
