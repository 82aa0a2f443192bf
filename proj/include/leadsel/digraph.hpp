#pragma once

#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "leadsel/graph.hpp"

namespace leadsel {

struct Arc {
  int from;
  double weight;
};

// Directed graph on vertices 0..vertex_count-1 stored as per-target
// in-neighbour lists, which is what the hop-indexed relaxation walks.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(int vertex_count);

  void add_edge(int from, int to, double weight);

  int vertex_count() const { return static_cast<int>(incoming_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Arc> incoming(int v) const { return incoming_[v]; }
  std::optional<double> weight(int from, int to) const;

 private:
  std::vector<std::vector<Arc>> incoming_;
  std::size_t edge_count_ = 0;
};

// Ordered-pair segment weights of a ring, shared by every per-leader
// reduction digraph. weight(u, v) for u != v is 1/2 tr of the inverse of the
// block holding the nodes strictly clockwise between u and v (0 when they
// are adjacent). weight(u, u) covers every node except u.
class RingSegmentWeights {
 public:
  explicit RingSegmentWeights(const GraphSpec& g);

  int n() const { return n_; }
  double weight(int u, int v) const { return table_[(u - 1) * n_ + (v - 1)]; }

 private:
  int n_;
  std::vector<double> table_;
};

// Reduction digraph whose s->t paths correspond to leader sets. Vertex 0 is
// the source, n+1 the target and 1..n the graph nodes. For a ring with
// initial leader i the source and target stand in for i (outgoing and
// incoming side), vertex i itself is isolated, and a direct s->t edge
// represents the singleton set {i}.
class ReductionDigraph {
 public:
  ReductionDigraph(Topology topology, int n, int initial_leader);

  Topology topology() const { return topology_; }
  int n() const { return n_; }
  // 0 for the path variant.
  int initial_leader() const { return initial_leader_; }

  int source() const { return 0; }
  int target() const { return n_ + 1; }
  bool is_payload(int v) const {
    return v >= 1 && v <= n_ && v != initial_leader_;
  }
  std::string label(int v) const;

  const WeightedDigraph& graph() const { return graph_; }
  WeightedDigraph& graph() { return graph_; }

  // (from, to, weight) triples ordered by target, then source.
  std::vector<std::tuple<int, int, double>> edges() const;

 private:
  Topology topology_;
  int n_;
  int initial_leader_;
  WeightedDigraph graph_;
};

// w(s,v), w(u,v) for u < v, and w(v,t), each 1/2 tr of the corresponding
// grounded block; O(n^3) total.
ReductionDigraph build_path_digraph(const GraphSpec& g);

ReductionDigraph build_ring_digraph(const GraphSpec& g, int initial_leader);
ReductionDigraph build_ring_digraph(const RingSegmentWeights& weights,
                                    int initial_leader);

// Endpoint of a reduction edge, for looking a single weight up directly.
struct Boundary {
  enum class Kind { Source, Node, Target };
  Kind kind = Kind::Node;
  int node = 0;

  static Boundary source() { return {Kind::Source, 0}; }
  static Boundary target() { return {Kind::Target, 0}; }
  static Boundary at(int node) { return {Kind::Node, node}; }
};

// Weight of a single reduction edge computed straight from its grounded
// segment. Path: (source|node, node|target) with from < to. Ring: two
// nodes, interior taken clockwise from `from` to `to` (equal nodes mean the
// whole ring minus that node).
double edge_weight_oracle(const GraphSpec& g, Boundary from, Boundary to);

}  // namespace leadsel
