#include "leadsel/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "leadsel/errors.hpp"
#include "leadsel/solvers.hpp"

namespace leadsel {

std::string_view to_string(SweepMethod m) {
  switch (m) {
    case SweepMethod::Optimal: return "optimal";
    case SweepMethod::Greedy: return "greedy";
    case SweepMethod::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

SweepMethod parse_sweep_method(std::string_view name) {
  if (name == "optimal") return SweepMethod::Optimal;
  if (name == "greedy") return SweepMethod::Greedy;
  if (name == "exhaustive") return SweepMethod::Exhaustive;
  throw ValidationError("unknown method '" + std::string(name) +
                        "' (expected optimal, greedy or exhaustive)");
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SelectionResult run_method(const GraphSpec& g, int k, SweepMethod m) {
  switch (m) {
    case SweepMethod::Optimal: return select_leaders_optimal(g, k);
    case SweepMethod::Greedy: return greedy_select(g, k);
    case SweepMethod::Exhaustive: return exhaustive_select(g, k);
  }
  throw ValidationError("unknown sweep method");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<ExperimentRow> run_sweep(const SweepConfig& config) {
  if (config.k_max < 1) throw ValidationError("k_max must be >= 1");
  if (config.seeds.empty()) throw ValidationError("sweep needs at least one seed");
  if (config.methods.empty()) throw ValidationError("sweep needs at least one method");

  std::vector<ExperimentRow> rows;
  for (std::uint64_t seed : config.seeds) {
    const GraphSpec g = build_graph(
        config.topology, config.n,
        random_variances(edge_count_for(config.topology, config.n), seed));
    for (int k = 1; k <= config.k_max; ++k) {
      const std::size_t first = rows.size();
      double reference = kNaN;
      for (SweepMethod m : config.methods) {
        ExperimentRow row;
        row.n = config.n;
        row.topology = config.topology;
        row.seed = seed;
        row.k = k;
        row.method = m;
        const auto start = std::chrono::steady_clock::now();
        try {
          row.R = run_method(g, k, m).total_variance;
          if (m != SweepMethod::Greedy && std::isnan(reference)) reference = row.R;
        } catch (const Error& e) {
          row.failed = true;
          row.error = e.what();
          row.R = kNaN;
        }
        row.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        rows.push_back(std::move(row));
      }
      for (std::size_t i = first; i < rows.size(); ++i) {
        auto& row = rows[i];
        if (row.failed || std::isnan(reference)) {
          row.ratio_to_optimal = kNaN;
        } else if (reference == 0.0) {
          row.ratio_to_optimal =
              row.R == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
        } else {
          row.ratio_to_optimal = row.R / reference;
        }
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << to_string(r.topology) << ',' << r.seed << ',' << r.k
        << ',' << to_string(r.method) << ',' << format_double(r.R) << ','
        << format_double(r.ratio_to_optimal) << ','
        << format_double(r.elapsed_ms) << '\n';
  }
}

}  // namespace leadsel
