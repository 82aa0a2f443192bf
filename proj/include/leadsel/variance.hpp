#pragma once

#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "leadsel/graph.hpp"
#include "leadsel/tridiag.hpp"

namespace leadsel {

// Nonempty, strictly increasing set of 1-based leader IDs.
class LeaderSet {
 public:
  // Sorts ids; throws ValidationError on empty input, duplicates, or IDs
  // outside 1..n.
  static LeaderSet make(std::vector<int> ids, int n);

  std::span<const int> ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  int front() const { return ids_.front(); }
  bool contains(int node) const;

  bool operator==(const LeaderSet&) const = default;
  auto operator<=>(const LeaderSet&) const = default;

 private:
  explicit LeaderSet(std::vector<int> ids) : ids_(std::move(ids)) {}
  std::vector<int> ids_;
};

struct VarianceReport {
  std::map<int, double> per_follower;  // node ID -> r_i
  double total = 0.0;                  // R(S)
};

// A maximal run of followers between two leaders: count nodes starting at
// first, walking clockwise (ring) or upward (path).
struct Segment {
  int first = 1;
  int count = 0;
};

// Rows/columns of L for the count consecutive nodes starting at first. On a
// ring the run may wrap past node n; the resulting block is always
// tridiagonal as long as count < n.
TridiagonalMatrix grounded_segment(const GraphSpec& g, int first, int count);

// 1/2 tr of grounded_segment(g, first, count)^{-1}; 0 when count == 0.
double segment_variance(const GraphSpec& g, int first, int count);

// Segment variances on one graph with reused buffers; the reduction
// digraphs and the greedy/exhaustive searches evaluate O(n^2) of them.
class SegmentEvaluator {
 public:
  explicit SegmentEvaluator(const GraphSpec& g) : g_(&g) {}
  double variance(int first, int count);
  double total(const LeaderSet& s);

 private:
  const GraphSpec* g_;
  std::vector<double> diag_;
  std::vector<double> off_;
  TridiagonalWorkspace ws_;
};

// Follower runs in block order. Path: before l_1, between consecutive
// leaders, after l_k (k+1 runs). Ring: the k clockwise runs starting after
// each leader.
std::vector<Segment> follower_segments(const GraphSpec& g, const LeaderSet& s);

std::vector<TridiagonalMatrix> follower_blocks(const GraphSpec& g,
                                               const LeaderSet& s);

VarianceReport total_variance(const GraphSpec& g, const LeaderSet& s);

// Same total as total_variance(g, s).total without building the map.
double total_variance_value(const GraphSpec& g, const LeaderSet& s);

// Dense L_ff (leader rows/columns removed), followers in increasing ID order.
Eigen::MatrixXd grounded_laplacian(const GraphSpec& g, const LeaderSet& s);

}  // namespace leadsel
