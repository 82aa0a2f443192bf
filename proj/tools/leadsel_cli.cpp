// leadsel: leader selection for noisy consensus on weighted paths and rings.
//
//   leadsel gen --topology path --n 400 --seed 7 --out g.json
//   leadsel solve --graph g.json --k 3 --method optimal
//   leadsel sweep --topology ring --n 400 --k-max 10 --seeds 1,2,3 --out r.csv
//   leadsel simulate --graph g.json --leaders 2,7
//   leadsel dump-digraph --graph g.json
//
// Exit codes: 0 success, 1 usage/validation, 2 computational error,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leadsel/digraph.hpp"
#include "leadsel/dynamics.hpp"
#include "leadsel/errors.hpp"
#include "leadsel/experiment.hpp"
#include "leadsel/graph.hpp"
#include "leadsel/io.hpp"
#include "leadsel/solvers.hpp"
#include "leadsel/variance.hpp"

namespace {

using namespace leadsel;

constexpr int kExitUsage = 1;
constexpr int kExitCompute = 2;
constexpr int kExitIo = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("error writing " + path);
}

struct GenArgs {
  std::string topology;
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  const Topology t = parse_topology(a.topology);
  const GraphSpec g =
      build_graph(t, a.n, random_variances(edge_count_for(t, a.n), a.seed));
  save_graph(g, a.out);
  return 0;
}

struct SolveArgs {
  std::string graph;
  int k = 0;
  std::string method = "optimal";
  bool pretty = false;
};

int run_solve(const SolveArgs& a) {
  const GraphSpec g = load_graph(a.graph);
  SelectionResult r = [&] {
    switch (parse_sweep_method(a.method)) {
      case SweepMethod::Optimal: return select_leaders_optimal(g, a.k);
      case SweepMethod::Greedy: return greedy_select(g, a.k);
      case SweepMethod::Exhaustive: return exhaustive_select(g, a.k);
    }
    throw ValidationError("unknown method");
  }();
  std::cout << selection_to_json(r, a.pretty) << '\n';
  return 0;
}

struct SweepArgs {
  std::string topology;
  int n = 0;
  int k_max = 10;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> methods{"optimal", "greedy"};
  std::string out;
};

int run_sweep_cmd(const SweepArgs& a) {
  SweepConfig cfg;
  cfg.topology = parse_topology(a.topology);
  cfg.n = a.n;
  cfg.k_max = a.k_max;
  cfg.seeds = a.seeds;
  for (const auto& m : a.methods) cfg.methods.push_back(parse_sweep_method(m));
  // Validate the instance shape up front so a bad n is a usage error rather
  // than a sweep full of failed rows.
  build_graph(cfg.topology, cfg.n,
              std::vector<double>(edge_count_for(cfg.topology, cfg.n), 1.0));

  const auto rows = run_sweep(cfg);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_text(a.out, csv.str());
  int failures = 0;
  for (const auto& r : rows) {
    if (r.failed) {
      ++failures;
      std::cerr << "seed " << r.seed << " k " << r.k << " "
                << to_string(r.method) << ": " << r.error << '\n';
    }
  }
  return failures == 0 ? 0 : kExitCompute;
}

struct SimulateArgs {
  std::string graph;
  std::vector<int> leaders;
  double dt = 0.0;
  double burn_in = -1.0;
  double horizon = 0.0;
  int ensemble = 8;
  std::uint64_t seed = 0;
  double target_stderr = 0.01;
  bool zero_noise = false;
  bool pretty = false;
};

int run_simulate(const SimulateArgs& a) {
  const GraphSpec g = load_graph(a.graph);
  const LeaderSet s = LeaderSet::make(a.leaders, g.n());
  if (a.ensemble < 1) throw ValidationError("--ensemble must be >= 1");
  SimulationConfig c =
      default_config(g, s, a.target_stderr, a.ensemble, a.seed);
  if (a.dt > 0.0) c.dt = a.dt;
  if (a.burn_in >= 0.0) c.burn_in = a.burn_in;
  if (a.horizon > 0.0) c.horizon = a.horizon;
  if (a.zero_noise) c.noise_scale = 0.0;
  const SimulationReport rep =
      simulate(g, s, FormationSpec::consensus(g, s), c);
  auto j = nlohmann::ordered_json::parse(simulation_to_json(rep));
  j["analytic_total"] = total_variance(g, s).total;
  std::cout << j.dump(a.pretty ? 2 : -1) << '\n';
  return 0;
}

struct DumpArgs {
  std::string graph;
  int initial_leader = 1;
  std::string out;
};

int run_dump(const DumpArgs& a) {
  const GraphSpec g = load_graph(a.graph);
  const ReductionDigraph d = g.is_ring()
                                 ? build_ring_digraph(g, a.initial_leader)
                                 : build_path_digraph(g);
  write_text(a.out, digraph_to_csv(d));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal and greedy k-leader selection on weighted path and "
               "ring consensus networks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph file");
  gen_cmd->add_option("--topology", gen.topology, "path or ring")->required();
  gen_cmd->add_option("--n", gen.n, "Node count")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output graph JSON")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Select up to k leaders");
  solve_cmd->add_option("--graph", solve.graph, "Graph JSON")->required();
  solve_cmd->add_option("--k", solve.k, "Leader budget")
      ->required()
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--method", solve.method,
                        "optimal, greedy or exhaustive")
      ->capture_default_str();
  solve_cmd->add_flag("--pretty", solve.pretty, "Indent JSON output");

  SweepArgs sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Run methods for k = 1..k_max over seeds");
  sweep_cmd->add_option("--topology", sweep.topology, "path or ring")->required();
  sweep_cmd->add_option("--n", sweep.n, "Node count")->required();
  sweep_cmd->add_option("--k-max", sweep.k_max, "Largest k")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seeds", sweep.seeds, "Comma-separated seeds")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--methods", sweep.methods,
                        "Comma-separated subset of optimal,greedy,exhaustive")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output CSV (default stdout)");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Simulate the noisy dynamics for a fixed leader set");
  sim_cmd->add_option("--graph", sim.graph, "Graph JSON")->required();
  sim_cmd->add_option("--leaders", sim.leaders, "Comma-separated leader IDs")
      ->required()
      ->delimiter(',');
  sim_cmd->add_option("--dt", sim.dt, "Time step (default: automatic)");
  sim_cmd->add_option("--burn-in", sim.burn_in,
                      "Discarded duration (default: automatic)");
  sim_cmd->add_option("--horizon", sim.horizon,
                      "Measured duration (default: automatic)");
  sim_cmd->add_option("--ensemble", sim.ensemble, "Independent runs")
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
  sim_cmd->add_option("--target-stderr", sim.target_stderr,
                      "Relative standard error used to size the horizon")
      ->capture_default_str();
  sim_cmd->add_flag("--zero-noise", sim.zero_noise, "Disable the noise");
  sim_cmd->add_flag("--pretty", sim.pretty, "Indent JSON output");

  DumpArgs dump;
  auto* dump_cmd = app.add_subcommand(
      "dump-digraph", "Write the reduction digraph edges as CSV");
  dump_cmd->add_option("--graph", dump.graph, "Graph JSON")->required();
  dump_cmd->add_option("--initial-leader", dump.initial_leader,
                       "Fixed leader for ring graphs")
      ->capture_default_str();
  dump_cmd->add_option("--out", dump.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*sweep_cmd) return run_sweep_cmd(sweep);
    if (*sim_cmd) return run_simulate(sim);
    if (*dump_cmd) return run_dump(dump);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UnstableStep& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitUsage;
}
