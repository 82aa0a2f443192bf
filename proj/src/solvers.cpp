#include "leadsel/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "leadsel/digraph.hpp"
#include "leadsel/errors.hpp"
#include "leadsel/hop_paths.hpp"

namespace leadsel {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::OptimalPath: return "optimal_path";
    case Method::OptimalRing: return "optimal_ring";
    case Method::Greedy: return "greedy";
    case Method::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

void check_k(const GraphSpec& g, int k) {
  if (k < 1 || k > g.n()) {
    throw ValidationError("k must lie in 1.." + std::to_string(g.n()) +
                          ", got " + std::to_string(k));
  }
}

// Re-evaluates R(S) through the block decomposition; a mismatch means the
// reduction and the direct evaluation disagree, which is a bug.
void verify_total(const GraphSpec& g, const LeaderSet& s, double reported) {
  const double direct = total_variance_value(g, s);
  const double scale = std::max(std::abs(direct), std::abs(reported));
  if (std::abs(direct - reported) > 1e-9 * scale + 1e-15) {
    throw std::logic_error("reported R(S) " + std::to_string(reported) +
                           " does not match direct evaluation " +
                           std::to_string(direct));
  }
}

std::vector<int> interior(const ReductionDigraph& d,
                          const std::vector<int>& path) {
  std::vector<int> out;
  for (int v : path) {
    if (d.is_payload(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

SelectionResult select_leaders_path(const GraphSpec& g, int k) {
  if (g.is_ring()) throw ValidationError("select_leaders_path needs a path");
  check_k(g, k);
  const auto start = Clock::now();
  const ReductionDigraph d = build_path_digraph(g);
  const PathResult p =
      hop_bounded_min_path(d.graph(), d.source(), d.target(), k + 1);
  SelectionResult r{LeaderSet::make(interior(d, p.vertices), g.n()), p.weight,
                    Method::OptimalPath, k, Clock::now() - start};
  verify_total(g, r.leaders, r.total_variance);
  return r;
}

SelectionResult select_leaders_ring(const GraphSpec& g, int k,
                                    unsigned threads) {
  if (!g.is_ring()) throw ValidationError("select_leaders_ring needs a ring");
  check_k(g, k);
  const auto start = Clock::now();
  const int n = g.n();
  const RingSegmentWeights weights(g);

  struct Candidate {
    double weight = kUnreachable;
    std::vector<int> leaders;
  };
  std::vector<Candidate> per_leader(n);
  const auto solve_range = [&](int first, int stride) {
    for (int i = first; i <= n; i += stride) {
      const ReductionDigraph d = build_ring_digraph(weights, i);
      const PathResult p =
          hop_bounded_min_path(d.graph(), d.source(), d.target(), k);
      auto leaders = interior(d, p.vertices);
      leaders.push_back(i);
      per_leader[i - 1] = {p.weight, std::move(leaders)};
    }
  };
  const unsigned workers = std::clamp<unsigned>(threads, 1, n);
  if (workers == 1) {
    solve_range(1, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(solve_range, static_cast<int>(w) + 1,
                        static_cast<int>(workers));
    }
  }

  // Strict < keeps the lowest initial leader among equal weights.
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (per_leader[i].weight < per_leader[best].weight) best = i;
  }
  SelectionResult r{LeaderSet::make(per_leader[best].leaders, n),
                    per_leader[best].weight, Method::OptimalRing, k,
                    Clock::now() - start};
  verify_total(g, r.leaders, r.total_variance);
  return r;
}

SelectionResult select_leaders_optimal(const GraphSpec& g, int k) {
  return g.is_ring() ? select_leaders_ring(g, k) : select_leaders_path(g, k);
}

SelectionResult greedy_select(const GraphSpec& g, int k) {
  check_k(g, k);
  const auto start = Clock::now();
  const int n = g.n();
  std::vector<int> chosen;
  std::vector<char> in_set(n + 1, 0);
  SegmentEvaluator eval(g);
  double current = kUnreachable;  // R of the empty set
  for (int iter = 0; iter < k; ++iter) {
    int best_node = 0;
    double best = kUnreachable;
    for (int v = 1; v <= n; ++v) {
      if (in_set[v]) continue;
      auto trial = chosen;
      trial.push_back(v);
      const double r = eval.total(LeaderSet::make(trial, n));
      if (r < best) {
        best = r;
        best_node = v;
      }
    }
    if (best_node == 0 || !(best < current)) break;
    chosen.push_back(best_node);
    in_set[best_node] = 1;
    current = best;
  }
  return {LeaderSet::make(chosen, n), current, Method::Greedy, k,
          Clock::now() - start};
}

std::uint64_t exhaustive_candidates(int n, int k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(n, 0)
  for (int i = 1; i <= std::min(k, n); ++i) {
    // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact in 128 bits.
    const unsigned __int128 next =
        static_cast<unsigned __int128>(c) * (n - i + 1) / i;
    if (next > kMax) return kMax;
    c = static_cast<std::uint64_t>(next);
    if (total > kMax - c) return kMax;
    total += c;
  }
  return total;
}

SelectionResult exhaustive_select(const GraphSpec& g, int k,
                                  std::uint64_t limit) {
  check_k(g, k);
  const int n = g.n();
  const std::uint64_t count = exhaustive_candidates(n, k);
  if (count > limit) {
    throw TooLarge("exhaustive search over " + std::to_string(count) +
                   " leader sets exceeds the limit of " +
                   std::to_string(limit));
  }
  const auto start = Clock::now();
  SegmentEvaluator eval(g);
  double best = kUnreachable;
  std::vector<int> best_set;
  std::vector<int> idx;
  for (int size = 1; size <= k; ++size) {
    idx.resize(size);
    for (int j = 0; j < size; ++j) idx[j] = j + 1;
    while (true) {
      const double r = eval.total(LeaderSet::make(idx, n));
      if (r < best || (r == best && std::lexicographical_compare(
                                        idx.begin(), idx.end(),
                                        best_set.begin(), best_set.end()))) {
        best = r;
        best_set = idx;
      }
      // Next combination in lexicographic order.
      int j = size - 1;
      while (j >= 0 && idx[j] == n - size + j + 1) --j;
      if (j < 0) break;
      ++idx[j];
      for (int t = j + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return {LeaderSet::make(best_set, n), best, Method::Exhaustive, k,
          Clock::now() - start};
}

GreedyBoundReport greedy_bound_check(const GraphSpec& g, int k) {
  GreedyBoundReport rep;
  rep.k = k;
  rep.optimal = exhaustive_select(g, k).total_variance;
  rep.greedy = greedy_select(g, k).total_variance;
  for (int v = 1; v <= g.n(); ++v) {
    rep.r_max = std::max(rep.r_max,
                         total_variance_value(g, LeaderSet::make({v}, g.n())));
  }
  const double ratio = static_cast<double>(k - 1) / k;
  rep.bound = (1.0 - std::pow(ratio, k)) * rep.optimal +
              rep.r_max / std::numbers::e;
  rep.slack = rep.bound - rep.greedy;
  rep.holds = rep.greedy <= rep.bound * (1.0 + 1e-12);
  return rep;
}

}  // namespace leadsel
