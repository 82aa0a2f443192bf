#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "leadsel/graph.hpp"

namespace leadsel {

enum class SweepMethod { Optimal, Greedy, Exhaustive };

std::string_view to_string(SweepMethod m);
SweepMethod parse_sweep_method(std::string_view name);

struct ExperimentRow {
  int n = 0;
  Topology topology = Topology::Path;
  std::uint64_t seed = 0;
  int k = 0;
  SweepMethod method = SweepMethod::Optimal;
  double R = 0.0;
  // R / R(S*) when optimal or exhaustive ran on the same cell, else NaN.
  double ratio_to_optimal = 0.0;
  double elapsed_ms = 0.0;
  bool failed = false;
  std::string error;
};

struct SweepConfig {
  Topology topology = Topology::Path;
  int n = 0;
  int k_max = 1;
  std::vector<std::uint64_t> seeds;
  std::vector<SweepMethod> methods;
};

inline constexpr std::string_view kSweepCsvHeader =
    "n,topology,seed,k,method,R,ratio_to_optimal,elapsed_ms";

// Runs each method for k = 1..k_max on the graph drawn from every seed
// (variances from random_variances(edge count, seed)). A method that throws
// yields a row with failed = true; the sweep carries on. Rows come back
// in (seed, k, method) order, each as listed in the config.
std::vector<ExperimentRow> run_sweep(const SweepConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace leadsel
