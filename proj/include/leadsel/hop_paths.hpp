#pragma once

#include <limits>
#include <vector>

#include "leadsel/digraph.hpp"

namespace leadsel {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();
inline constexpr int kNoPredecessor = -1;

// dist[m][v]: weight of the lightest s->v walk with exactly m edges
// (kUnreachable if none). pred[m][v]: the vertex before v on that walk.
struct HopBoundedPathTable {
  int source = 0;
  int max_hops = 0;
  std::vector<std::vector<double>> dist;
  std::vector<std::vector<int>> pred;
};

struct PathResult {
  std::vector<int> vertices;  // source first, target last
  double weight = 0.0;
  int hops = 0;
};

// Bellman-Ford indexed by exact edge count, O(max_hops * |E|). Ties in a
// relaxation go to the lowest predecessor ID. Throws ValidationError on a
// negative edge weight.
HopBoundedPathTable hop_bounded_table(const WeightedDigraph& g, int source,
                                      int max_hops);

// Best s->t path using at most max_hops edges of an already built table
// (max_hops <= table.max_hops). Ties go to fewer hops. Throws NoPath.
PathResult best_path(const HopBoundedPathTable& table, int target,
                     int max_hops);

PathResult hop_bounded_min_path(const WeightedDigraph& g, int source,
                                int target, int max_hops);

}  // namespace leadsel
