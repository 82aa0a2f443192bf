#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>

#include "leadsel/graph.hpp"
#include "leadsel/variance.hpp"

namespace leadsel {

enum class Method { OptimalPath, OptimalRing, Greedy, Exhaustive };

std::string_view to_string(Method m);

struct SelectionResult {
  LeaderSet leaders;
  double total_variance = 0.0;
  Method method = Method::OptimalPath;
  int k_requested = 0;
  std::chrono::duration<double> elapsed{};
};

// Optimal leader set of size <= k on a path: one reduction digraph plus a
// hop-bounded search with k+1 edges. O(n^3).
SelectionResult select_leaders_path(const GraphSpec& g, int k);

// Optimal leader set of size <= k on a ring: for every initial leader i, a
// hop-bounded search with k edges on the reduction digraph for i. O(k n^3).
// The per-leader searches run on up to `threads` workers; results merge by
// (weight, initial leader) so the answer does not depend on scheduling.
SelectionResult select_leaders_ring(const GraphSpec& g, int k,
                                    unsigned threads = 1);

// Dispatches on topology.
SelectionResult select_leaders_optimal(const GraphSpec& g, int k);

// Adds the node with the smallest R(S + v) (lowest ID on ties) until k
// leaders are chosen or no candidate strictly lowers R(S).
SelectionResult greedy_select(const GraphSpec& g, int k);

inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;

// Enumerates every leader set of size 1..k. Among equal minima the
// lexicographically smallest set wins. Throws TooLarge when the number of
// candidate sets exceeds `limit`.
SelectionResult exhaustive_select(const GraphSpec& g, int k,
                                  std::uint64_t limit = kExhaustiveLimit);

// Number of leader sets exhaustive_select would visit (saturates at
// UINT64_MAX).
std::uint64_t exhaustive_candidates(int n, int k);

// R(S_greedy) <= (1 - ((k-1)/k)^k) R* + R_max / e, R_max = max_i R({i}).
struct GreedyBoundReport {
  int k = 0;
  double greedy = 0.0;
  double optimal = 0.0;
  double r_max = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - greedy
  bool holds = true;
};

GreedyBoundReport greedy_bound_check(const GraphSpec& g, int k);

}  // namespace leadsel
