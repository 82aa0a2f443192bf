#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace leadsel {

enum class Topology { Path, Ring };

std::string_view to_string(Topology t);
// Accepts "path" or "ring"; throws ValidationError otherwise.
Topology parse_topology(std::string_view name);

// A weighted path or ring on nodes 1..n. Edge e (0-based) joins node e+1 and
// node e+2; on a ring the last edge joins node n back to node 1. Every edge
// carries a measurement noise variance nu_e > 0, and its Laplacian weight is
// the conductance 1/nu_e.
class GraphSpec {
 public:
  // Validates and builds; throws ValidationError on bad input.
  static GraphSpec build(Topology topology, int n,
                         std::vector<double> variances);

  Topology topology() const { return topology_; }
  bool is_ring() const { return topology_ == Topology::Ring; }
  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(variances_.size()); }
  std::span<const double> variances() const { return variances_; }

  // Noise variance of edge e (0-based edge index).
  double variance(int e) const { return variances_[e]; }
  // Conductance 1/nu of the edge between node and its clockwise successor.
  // For a path, node must be < n.
  double conductance_after(int node) const;
  // Weighted degree d_i = sum of incident conductances (1-based node).
  double degree(int node) const { return degree_[node - 1]; }

  // Clockwise successor / predecessor on a ring (wraps); on a path the
  // caller must stay in range.
  int next(int node) const { return node == n_ ? 1 : node + 1; }
  int prev(int node) const { return node == 1 ? n_ : node - 1; }

  bool operator==(const GraphSpec&) const = default;

 private:
  GraphSpec(Topology topology, int n, std::vector<double> variances);

  Topology topology_;
  int n_;
  std::vector<double> variances_;
  std::vector<double> degree_;
};

inline GraphSpec build_graph(Topology topology, int n,
                             std::vector<double> variances) {
  return GraphSpec::build(topology, n, std::move(variances));
}

// Number of edge variances a topology needs for n nodes.
int edge_count_for(Topology topology, int n);

// count i.i.d. draws from the open interval (0, 1), deterministic in seed.
// Draws below 1e-12 are resampled.
std::vector<double> random_variances(int count, std::uint64_t seed);

// Weighted Laplacian in banded form. For a path it is tridiagonal; for a
// ring the (1,n)/(n,1) corner entry is also set.
struct Laplacian {
  Topology topology;
  std::vector<double> diag;  // L_ii, length n
  std::vector<double> off;   // L_{i,i+1}, length n-1
  double corner = 0.0;       // L_{1,n}; zero for a path

  int n() const { return static_cast<int>(diag.size()); }
  // 1-based element access.
  double at(int i, int j) const;
  Eigen::MatrixXd dense() const;
};

Laplacian laplacian(const GraphSpec& g);

}  // namespace leadsel
