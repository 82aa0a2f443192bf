#include "leadsel/variance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "leadsel/errors.hpp"

namespace leadsel {

LeaderSet LeaderSet::make(std::vector<int> ids, int n) {
  if (ids.empty()) throw ValidationError("leader set must be nonempty");
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw ValidationError("leader set has duplicate IDs");
  }
  if (ids.front() < 1 || ids.back() > n) {
    throw ValidationError("leader IDs must lie in 1.." + std::to_string(n));
  }
  return LeaderSet(std::move(ids));
}

bool LeaderSet::contains(int node) const {
  return std::binary_search(ids_.begin(), ids_.end(), node);
}

namespace {

void check_segment(const GraphSpec& g, int first, int count) {
  if (count < 0 || count >= g.n() || first < 1 || first > g.n() ||
      (!g.is_ring() && first + count - 1 > g.n())) {
    throw ValidationError("segment (" + std::to_string(first) + ", " +
                          std::to_string(count) + ") out of range");
  }
}

void fill_segment(const GraphSpec& g, int first, int count,
                  std::vector<double>& diag, std::vector<double>& off) {
  diag.resize(count);
  off.resize(count > 0 ? count - 1 : 0);
  int node = first;
  for (int i = 0; i < count; ++i) {
    diag[i] = g.degree(node);
    if (i + 1 < count) off[i] = -g.conductance_after(node);
    node = g.next(node);
  }
}

}  // namespace

TridiagonalMatrix grounded_segment(const GraphSpec& g, int first, int count) {
  check_segment(g, first, count);
  TridiagonalMatrix t;
  fill_segment(g, first, count, t.diag, t.off);
  return t;
}

double segment_variance(const GraphSpec& g, int first, int count) {
  return SegmentEvaluator(g).variance(first, count);
}

double SegmentEvaluator::variance(int first, int count) {
  check_segment(*g_, first, count);
  if (count == 0) return 0.0;
  fill_segment(*g_, first, count, diag_, off_);
  return 0.5 * ws_.trace_of_inverse(diag_, off_);
}

double SegmentEvaluator::total(const LeaderSet& s) {
  double total = 0.0;
  for (const Segment& seg : follower_segments(*g_, s)) {
    total += variance(seg.first, seg.count);
  }
  return total;
}

std::vector<Segment> follower_segments(const GraphSpec& g,
                                       const LeaderSet& s) {
  const auto ids = s.ids();
  const int n = g.n();
  std::vector<Segment> out;
  if (!g.is_ring()) {
    out.reserve(ids.size() + 1);
    out.push_back({1, ids.front() - 1});
    for (std::size_t j = 0; j + 1 < ids.size(); ++j) {
      out.push_back({ids[j] + 1, ids[j + 1] - ids[j] - 1});
    }
    out.push_back({ids.back() + 1, n - ids.back()});
    // A leader at node n leaves an empty trailing run starting past the
    // end; anchor it at n so the segment stays in range.
    if (out.back().count == 0) out.back().first = n;
  } else {
    out.reserve(ids.size());
    for (std::size_t j = 0; j < ids.size(); ++j) {
      const int from = ids[j];
      const int to = ids[(j + 1) % ids.size()];
      out.push_back({g.next(from), ((to - from - 1) % n + n) % n});
    }
  }
  return out;
}

std::vector<TridiagonalMatrix> follower_blocks(const GraphSpec& g,
                                               const LeaderSet& s) {
  std::vector<TridiagonalMatrix> out;
  for (const Segment& seg : follower_segments(g, s)) {
    out.push_back(grounded_segment(g, seg.first, seg.count));
  }
  return out;
}

VarianceReport total_variance(const GraphSpec& g, const LeaderSet& s) {
  VarianceReport report;
  for (const Segment& seg : follower_segments(g, s)) {
    if (seg.count == 0) continue;
    const auto inv = inverse_diagonal(grounded_segment(g, seg.first, seg.count));
    int node = seg.first;
    for (double d : inv) {
      report.per_follower[node] = 0.5 * d;
      report.total += 0.5 * d;
      node = g.next(node);
    }
  }
  return report;
}

double total_variance_value(const GraphSpec& g, const LeaderSet& s) {
  return SegmentEvaluator(g).total(s);
}

Eigen::MatrixXd grounded_laplacian(const GraphSpec& g, const LeaderSet& s) {
  const Eigen::MatrixXd full = laplacian(g).dense();
  std::vector<int> followers;
  for (int v = 1; v <= g.n(); ++v) {
    if (!s.contains(v)) followers.push_back(v - 1);
  }
  const int m = static_cast<int>(followers.size());
  Eigen::MatrixXd out(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out(i, j) = full(followers[i], followers[j]);
  }
  return out;
}

}  // namespace leadsel
