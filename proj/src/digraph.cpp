#include "leadsel/digraph.hpp"

#include <algorithm>
#include <cmath>

#include "leadsel/errors.hpp"
#include "leadsel/variance.hpp"

namespace leadsel {

WeightedDigraph::WeightedDigraph(int vertex_count) : incoming_(vertex_count) {}

void WeightedDigraph::add_edge(int from, int to, double weight) {
  if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count()) {
    throw ValidationError("edge endpoint out of range");
  }
  incoming_[to].push_back({from, weight});
  ++edge_count_;
}

std::optional<double> WeightedDigraph::weight(int from, int to) const {
  for (const Arc& a : incoming_[to]) {
    if (a.from == from) return a.weight;
  }
  return std::nullopt;
}

RingSegmentWeights::RingSegmentWeights(const GraphSpec& g)
    : n_(g.n()), table_(static_cast<std::size_t>(g.n()) * g.n()) {
  if (!g.is_ring()) throw ValidationError("RingSegmentWeights needs a ring");
  SegmentEvaluator eval(g);
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      const int count = u == v ? n_ - 1 : ((v - u - 1) % n_ + n_) % n_;
      table_[(u - 1) * n_ + (v - 1)] = eval.variance(g.next(u), count);
    }
  }
}

ReductionDigraph::ReductionDigraph(Topology topology, int n,
                                   int initial_leader)
    : topology_(topology), n_(n), initial_leader_(initial_leader),
      graph_(n + 2) {}

std::string ReductionDigraph::label(int v) const {
  if (v == source()) return "s";
  if (v == target()) return "t";
  return std::to_string(v);
}

std::vector<std::tuple<int, int, double>> ReductionDigraph::edges() const {
  std::vector<std::tuple<int, int, double>> out;
  out.reserve(graph_.edge_count());
  for (int to = 0; to < graph_.vertex_count(); ++to) {
    for (const Arc& a : graph_.incoming(to)) out.emplace_back(a.from, to, a.weight);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<1>(a), std::get<0>(a)) <
           std::tie(std::get<1>(b), std::get<0>(b));
  });
  return out;
}

ReductionDigraph build_path_digraph(const GraphSpec& g) {
  if (g.is_ring()) throw ValidationError("build_path_digraph needs a path");
  const int n = g.n();
  ReductionDigraph d(Topology::Path, n, 0);
  auto& graph = d.graph();
  SegmentEvaluator eval(g);
  for (int v = 1; v <= n; ++v) {
    graph.add_edge(d.source(), v, eval.variance(1, v - 1));
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      graph.add_edge(u, v, eval.variance(u + 1, v - u - 1));
    }
    graph.add_edge(u, d.target(), u == n ? 0.0 : eval.variance(u + 1, n - u));
  }
  return d;
}

ReductionDigraph build_ring_digraph(const RingSegmentWeights& w,
                                    int initial_leader) {
  const int n = w.n();
  const int i = initial_leader;
  if (i < 1 || i > n) throw ValidationError("initial leader out of range");
  ReductionDigraph d(Topology::Ring, n, i);
  auto& graph = d.graph();
  // Clockwise rank of a node after i: 1 for i+1, ..., n-1 for i-1.
  const auto rank = [&](int v) { return ((v - i) % n + n) % n; };

  graph.add_edge(d.source(), d.target(), w.weight(i, i));
  for (int v = 1; v <= n; ++v) {
    if (v == i) continue;
    graph.add_edge(d.source(), v, w.weight(i, v));
    graph.add_edge(v, d.target(), w.weight(v, i));
    for (int u = 1; u <= n; ++u) {
      if (u == i || u == v || rank(u) > rank(v)) continue;
      graph.add_edge(u, v, w.weight(u, v));
    }
  }
  return d;
}

ReductionDigraph build_ring_digraph(const GraphSpec& g, int initial_leader) {
  return build_ring_digraph(RingSegmentWeights(g), initial_leader);
}

double edge_weight_oracle(const GraphSpec& g, Boundary from, Boundary to) {
  using K = Boundary::Kind;
  const int n = g.n();
  const auto valid = [n](const Boundary& b) {
    return b.kind != K::Node || (b.node >= 1 && b.node <= n);
  };
  if (!valid(from) || !valid(to)) {
    throw ValidationError("boundary node out of range");
  }
  if (g.is_ring()) {
    if (from.kind != K::Node || to.kind != K::Node) {
      throw ValidationError("ring boundaries must both be nodes");
    }
    const int u = from.node;
    const int v = to.node;
    const int count = u == v ? n - 1 : ((v - u - 1) % n + n) % n;
    return segment_variance(g, g.next(u), count);
  }
  if (from.kind == K::Target || to.kind == K::Source ||
      (from.kind == K::Source && to.kind == K::Target)) {
    throw ValidationError("invalid path boundary pair");
  }
  const int lo = from.kind == K::Source ? 0 : from.node;
  const int hi = to.kind == K::Target ? n + 1 : to.node;
  if (lo >= hi) throw ValidationError("path boundaries must satisfy from < to");
  const int count = hi - lo - 1;
  return count == 0 ? 0.0 : segment_variance(g, lo + 1, count);
}

}  // namespace leadsel
