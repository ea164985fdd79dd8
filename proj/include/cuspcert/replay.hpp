#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuspcert/manifold_spec.hpp"
#include "cuspcert/report.hpp"

namespace cuspcert {

struct WitnessSpec {
  Word word;
  std::array<long long, 4> target;
};

struct IdealChoice {
  std::uint64_t p;
  std::uint64_t root;
};

/// Printed values the replay compares against.
struct PrintedValues {
  std::optional<ZPoly> min_poly;
  std::optional<BigInt> discriminant;
  std::map<std::uint64_t, std::vector<int>> inertia_degrees;
  // prime -> name ("a", "mu", "lambda", ...) -> matrix
  std::map<std::uint64_t, std::map<std::string, std::array<long long, 4>>> images;
  std::map<std::uint64_t, std::size_t> group_orders;
  std::optional<std::size_t> gassmann_subgroup_order;
};

struct ReplayConfig {
  std::vector<IdealChoice> ideals;
  std::map<std::uint64_t, std::vector<WitnessSpec>> witnesses;
  std::uint64_t gassmann_q = 7;
  std::size_t gassmann_index = 7;
  std::uint64_t index_subgroup_q = 11;
  std::size_t index_subgroup_index = 11;
  std::uint64_t sweep_p_max = 100'000;
  std::vector<int> sweep_f_set{1, 2, 4, 5, 7, 8};
  PrintedValues printed;
};

ReplayConfig parse_config(std::string_view text);
// The configuration shipped as data/replay_config.json, compiled in.
std::string_view default_config_text();

enum ExitCode : int { kExitPass = 0, kExitMismatch = 1, kExitInputError = 2 };

struct ReplayResult {
  report::Json report;
  int exit_code = kExitPass;
  std::string error;  // empty on success
};

// Runs every stage in order and assembles the certificate report. Hard
// errors abort the run; the partial report is marked incomplete.
ReplayResult replay_all(std::string_view spec_text, std::string_view config_text);

// Single-purpose commands behind the CLI; each returns a JSON document.
report::Json run_split(const ManifoldSpec& spec, std::uint64_t p);
report::Json run_reduce(const ManifoldSpec& spec, std::uint64_t p, std::uint64_t root);
report::Json run_prep(const ManifoldSpec& spec, std::uint64_t p, std::uint64_t root);
report::Json run_gassmann(std::uint64_t q, std::size_t index);
report::Json run_cusps(std::uint64_t q, std::size_t subgroup_order, std::size_t peripheral_order);
report::Json run_sweep(std::uint64_t p_max, const std::vector<int>& f_set);

}  // namespace cuspcert
