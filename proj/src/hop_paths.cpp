#include "leadsel/hop_paths.hpp"

#include <algorithm>
#include <string>

#include "leadsel/errors.hpp"

namespace leadsel {

HopBoundedPathTable hop_bounded_table(const WeightedDigraph& g, int source,
                                      int max_hops) {
  if (max_hops < 0) throw ValidationError("hop bound must be >= 0");
  const int nv = g.vertex_count();
  if (source < 0 || source >= nv) throw ValidationError("source out of range");
  for (int v = 0; v < nv; ++v) {
    for (const Arc& a : g.incoming(v)) {
      if (!(a.weight >= 0.0)) {
        throw ValidationError("negative or NaN edge weight into vertex " +
                              std::to_string(v));
      }
    }
  }

  HopBoundedPathTable t;
  t.source = source;
  t.max_hops = max_hops;
  t.dist.assign(max_hops + 1, std::vector<double>(nv, kUnreachable));
  t.pred.assign(max_hops + 1, std::vector<int>(nv, kNoPredecessor));
  t.dist[0][source] = 0.0;

  for (int m = 1; m <= max_hops; ++m) {
    const auto& prev = t.dist[m - 1];
    auto& cur = t.dist[m];
    auto& pred = t.pred[m];
    for (int v = 0; v < nv; ++v) {
      double best = kUnreachable;
      int best_pred = kNoPredecessor;
      for (const Arc& a : g.incoming(v)) {
        const double cand = prev[a.from] + a.weight;
        if (cand == kUnreachable) continue;
        if (cand < best || (cand == best && a.from < best_pred)) {
          best = cand;
          best_pred = a.from;
        }
      }
      cur[v] = best;
      pred[v] = best_pred;
    }
  }
  return t;
}

PathResult best_path(const HopBoundedPathTable& t, int target, int max_hops) {
  if (max_hops < 0 || max_hops > t.max_hops) {
    throw ValidationError("hop bound exceeds table size");
  }
  int best_m = -1;
  double best = kUnreachable;
  for (int m = 0; m <= max_hops; ++m) {
    if (t.dist[m][target] < best) {
      best = t.dist[m][target];
      best_m = m;
    }
  }
  if (best_m < 0) {
    throw NoPath("no path to vertex " + std::to_string(target) +
                 " within " + std::to_string(max_hops) + " edges");
  }
  PathResult r;
  r.weight = best;
  r.hops = best_m;
  r.vertices.resize(best_m + 1);
  int v = target;
  for (int m = best_m; m >= 0; --m) {
    r.vertices[m] = v;
    if (m > 0) v = t.pred[m][v];
  }
  return r;
}

PathResult hop_bounded_min_path(const WeightedDigraph& g, int source,
                                int target, int max_hops) {
  if (target < 0 || target >= g.vertex_count()) {
    throw ValidationError("target out of range");
  }
  return best_path(hop_bounded_table(g, source, max_hops), target, max_hops);
}

}  // namespace leadsel
