#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "leadsel/graph.hpp"
#include "leadsel/variance.hpp"

namespace leadsel {

// Desired relative positions and leader reference values.
// offsets[e] is Delta for edge e oriented from its lower endpoint to its
// clockwise successor: at equilibrium x_a - x_b = offsets[e].
struct FormationSpec {
  std::vector<double> offsets;
  std::map<int, double> leader_states;

  // All offsets zero; every leader pinned at `reference`.
  static FormationSpec consensus(const GraphSpec& g, const LeaderSet& s,
                                 double reference = 0.0);
};

struct SimulationConfig {
  double dt = 0.01;
  double burn_in = 100.0;
  double horizon = 1000.0;
  std::uint64_t seed = 0;
  int ensemble = 8;
  // Multiplies every noise increment; 0 gives the noise-free dynamics.
  double noise_scale = 1.0;
  // Initial x - xbar per node (length n) or empty for x(0) = xbar.
  std::vector<double> initial_deviation;
  unsigned threads = 1;
};

struct SimulationReport {
  std::map<int, double> empirical_r;  // follower ID -> mean squared deviation
  std::map<int, double> stderr_r;
  double empirical_total = 0.0;
  double total_stderr = 0.0;
  // x - xbar at the end of ensemble member 0, per node.
  std::vector<double> final_deviation;
  SimulationConfig config;
};

// Node states (index i-1 for node i) satisfying every edge offset with the
// leaders at their reference values. Throws InconsistentOffsets.
std::vector<double> equilibrium(const GraphSpec& g, const FormationSpec& f);

// Largest stable Euler step, 2 / (Gershgorin bound on the spectrum of the
// follower drift D^{-1} L_ff).
double stability_limit(const GraphSpec& g, const LeaderSet& s);

// Smallest eigenvalue of D^{-1} L_ff (slowest relaxation rate).
double slowest_rate(const GraphSpec& g, const LeaderSet& s);

// Predicted standard error of empirical_total for a given measured horizon
// and ensemble size, from the continuous-time stationary autocovariance of
// |x - xbar|^2 (requires horizon much longer than the slowest time
// constant).
double predicted_total_stderr(const GraphSpec& g, const LeaderSet& s,
                              double horizon, int ensemble);

// dt = 1e-2 / drift bound, burn-in = 10 slowest time constants, horizon
// sized so the predicted relative standard error is target_rel_stderr.
SimulationConfig default_config(const GraphSpec& g, const LeaderSet& s,
                                double target_rel_stderr = 0.01,
                                int ensemble = 8, std::uint64_t seed = 0);

// Called after every Euler step of ensemble member 0 with x - xbar for all
// nodes (leaders included, always 0).
using DeviationObserver =
    std::function<void(std::int64_t step, std::span<const double> deviation)>;

// Euler-Maruyama integration of the noisy follower dynamics
//   dx_i = -sum_j W_ij (x_i - x_j - Delta_ij) dt - sum_j W_ij sqrt(nu_ij) dB_ij
// with W_ij = (1/nu_ij) / d_i and an independent Brownian motion for every
// directed edge. Leaders never move. Member m draws from a stream seeded by
// (seed, m). Throws UnstableStep, ValidationError, InconsistentOffsets.
SimulationReport simulate(const GraphSpec& g, const LeaderSet& s,
                          const FormationSpec& f, const SimulationConfig& c,
                          const DeviationObserver& observer = {});

}  // namespace leadsel
