#include "leadsel/graph.hpp"

#include <cmath>
#include <random>
#include <string>

#include "leadsel/errors.hpp"

namespace leadsel {

std::string_view to_string(Topology t) {
  return t == Topology::Path ? "path" : "ring";
}

Topology parse_topology(std::string_view name) {
  if (name == "path") return Topology::Path;
  if (name == "ring") return Topology::Ring;
  throw ValidationError("unknown topology '" + std::string(name) +
                        "' (expected path or ring)");
}

int edge_count_for(Topology topology, int n) {
  return topology == Topology::Path ? n - 1 : n;
}

GraphSpec GraphSpec::build(Topology topology, int n,
                           std::vector<double> variances) {
  const int min_n = topology == Topology::Path ? 2 : 3;
  if (n < min_n) {
    throw ValidationError(std::string(to_string(topology)) + " needs n >= " +
                          std::to_string(min_n) + ", got " +
                          std::to_string(n));
  }
  const int expected = edge_count_for(topology, n);
  if (static_cast<int>(variances.size()) != expected) {
    throw ValidationError("expected " + std::to_string(expected) +
                          " edge variances, got " +
                          std::to_string(variances.size()));
  }
  for (std::size_t e = 0; e < variances.size(); ++e) {
    const double v = variances[e];
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw ValidationError("edge " + std::to_string(e) +
                            " has non-positive or non-finite variance " +
                            std::to_string(v));
    }
  }
  return GraphSpec(topology, n, std::move(variances));
}

GraphSpec::GraphSpec(Topology topology, int n, std::vector<double> variances)
    : topology_(topology), n_(n), variances_(std::move(variances)),
      degree_(n, 0.0) {
  for (int e = 0; e < edge_count(); ++e) {
    const double c = 1.0 / variances_[e];
    degree_[e] += c;
    degree_[(e + 1) % n_] += c;
  }
}

double GraphSpec::conductance_after(int node) const {
  return 1.0 / variances_[node - 1];
}

std::vector<double> random_variances(int count, std::uint64_t seed) {
  if (count < 1) throw ValidationError("random_variances: count must be >= 1");
  constexpr double kFloor = 1e-12;
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    // 53 random mantissa bits -> [0, 1); spelled out so the stream does not
    // depend on the standard library's distribution implementation.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u >= kFloor) out.push_back(u);
  }
  return out;
}

double Laplacian::at(int i, int j) const {
  if (i == j) return diag[i - 1];
  if (j == i + 1) return off[i - 1];
  if (i == j + 1) return off[j - 1];
  if ((i == 1 && j == n()) || (i == n() && j == 1)) return corner;
  return 0.0;
}

Eigen::MatrixXd Laplacian::dense() const {
  const int m = n();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) out(i, i) = diag[i];
  for (int i = 0; i + 1 < m; ++i) {
    out(i, i + 1) = off[i];
    out(i + 1, i) = off[i];
  }
  if (topology == Topology::Ring) {
    out(0, m - 1) = corner;
    out(m - 1, 0) = corner;
  }
  return out;
}

Laplacian laplacian(const GraphSpec& g) {
  Laplacian l;
  l.topology = g.topology();
  const int n = g.n();
  l.diag.resize(n);
  for (int i = 1; i <= n; ++i) l.diag[i - 1] = g.degree(i);
  l.off.resize(n - 1);
  for (int e = 0; e + 1 < n; ++e) l.off[e] = -1.0 / g.variance(e);
  if (g.is_ring()) l.corner = -1.0 / g.variance(n - 1);
  return l;
}

}  // namespace leadsel
