#include "leadsel/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "leadsel/errors.hpp"

namespace leadsel {

FormationSpec FormationSpec::consensus(const GraphSpec& g, const LeaderSet& s,
                                       double reference) {
  FormationSpec f;
  f.offsets.assign(g.edge_count(), 0.0);
  for (int id : s.ids()) f.leader_states[id] = reference;
  return f;
}

std::vector<double> equilibrium(const GraphSpec& g, const FormationSpec& f) {
  const int n = g.n();
  if (static_cast<int>(f.offsets.size()) != g.edge_count()) {
    throw ValidationError("formation needs " + std::to_string(g.edge_count()) +
                          " offsets, got " + std::to_string(f.offsets.size()));
  }
  if (f.leader_states.empty()) {
    throw ValidationError("formation needs at least one leader state");
  }
  double scale = 1.0;
  for (double d : f.offsets) {
    if (!std::isfinite(d)) throw ValidationError("non-finite offset");
    scale += std::abs(d);
  }
  for (const auto& [id, x] : f.leader_states) {
    if (id < 1 || id > n) throw ValidationError("leader state ID out of range");
    if (!std::isfinite(x)) throw ValidationError("non-finite leader state");
    scale = std::max(scale, 1.0 + std::abs(x));
  }
  const double tol = 1e-9 * scale;

  // Offset of edge e is x_a - x_b with b the clockwise successor of a.
  std::vector<double> x(n);
  const auto [anchor, ref] = *f.leader_states.begin();
  x[anchor - 1] = ref;
  if (g.is_ring()) {
    int v = anchor;
    for (int step = 1; step < n; ++step) {
      x[g.next(v) - 1] = x[v - 1] - f.offsets[v - 1];
      v = g.next(v);
    }
    // v is now the clockwise predecessor of the anchor.
    const double closure = x[v - 1] - f.offsets[v - 1] - x[anchor - 1];
    if (std::abs(closure) > tol) {
      throw InconsistentOffsets("ring offsets sum to " +
                                std::to_string(-closure) + ", not 0");
    }
  } else {
    for (int v = anchor; v < n; ++v) x[v] = x[v - 1] - f.offsets[v - 1];
    for (int v = anchor; v > 1; --v) x[v - 2] = x[v - 1] + f.offsets[v - 2];
  }
  for (const auto& [id, ref_x] : f.leader_states) {
    if (std::abs(x[id - 1] - ref_x) > tol) {
      throw InconsistentOffsets("leader " + std::to_string(id) +
                                " reference disagrees with the offsets");
    }
  }
  return x;
}

namespace {

constexpr double kInfiniteStep = std::numeric_limits<double>::infinity();

struct Neighbor {
  int node;        // 0-based
  double weight;   // W_ij
  double offset;   // Delta_ij: desired x_i - x_j
  double noise;    // W_ij * sqrt(nu_ij)
};

// Incident edges of node v (1-based) as seen from v: predecessor edge
// first, then successor edge. offsets may be empty (all zero).
std::vector<Neighbor> neighbors(const GraphSpec& g, int v,
                                std::span<const double> offsets = {}) {
  std::vector<Neighbor> out;
  const double d = g.degree(v);
  const auto add = [&](int u, int edge, double sign) {
    const double nu = g.variance(edge);
    const double w = (1.0 / nu) / d;
    const double delta = offsets.empty() ? 0.0 : sign * offsets[edge];
    out.push_back({u - 1, w, delta, w * std::sqrt(nu)});
  };
  // offsets[e] is x_a - x_b for edge a -> b = next(a), so the edge into v
  // contributes -offsets[e] to the desired x_v - x_prev.
  if (g.is_ring() || v > 1) add(g.prev(v), g.prev(v) - 1, -1.0);
  if (g.is_ring() || v < g.n()) add(g.next(v), v - 1, 1.0);
  return out;
}

std::vector<int> followers_of(const GraphSpec& g, const LeaderSet& s) {
  std::vector<int> out;
  for (int v = 1; v <= g.n(); ++v) {
    if (!s.contains(v)) out.push_back(v);
  }
  return out;
}

double drift_bound(const GraphSpec& g, const LeaderSet& s) {
  // Rows of D^{-1} L_ff: diagonal 1, off-diagonals -W_ij for follower j.
  double bound = 0.0;
  for (int v : followers_of(g, s)) {
    double row = 1.0;
    for (const auto& e : neighbors(g, v)) {
      if (!s.contains(e.node + 1)) row += e.weight;
    }
    bound = std::max(bound, row);
  }
  return bound;
}

struct Spectral {
  Eigen::VectorXd eigenvalues;  // of D^{-1/2} L_ff D^{-1/2}, ascending
  Eigen::MatrixXd eigenvectors;
  Eigen::VectorXd degree;       // d_i of each follower
};

Spectral drift_spectrum(const GraphSpec& g, const LeaderSet& s) {
  const Eigen::MatrixXd lff = grounded_laplacian(g, s);
  const auto fol = followers_of(g, s);
  Eigen::VectorXd d(fol.size());
  for (std::size_t i = 0; i < fol.size(); ++i) d(i) = g.degree(fol[i]);
  const Eigen::VectorXd inv_sqrt = d.cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd m = inv_sqrt.asDiagonal() * lff * inv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return {es.eigenvalues(), es.eigenvectors(), d};
}

}  // namespace

double stability_limit(const GraphSpec& g, const LeaderSet& s) {
  const double b = drift_bound(g, s);
  return b > 0.0 ? 2.0 / b : kInfiniteStep;
}

double slowest_rate(const GraphSpec& g, const LeaderSet& s) {
  if (s.size() == g.n()) return kInfiniteStep;
  return drift_spectrum(g, s).eigenvalues(0);
}

double predicted_total_stderr(const GraphSpec& g, const LeaderSet& s,
                              double horizon, int ensemble) {
  if (s.size() == g.n()) return 0.0;
  if (!(horizon > 0.0) || ensemble < 1) {
    throw ValidationError("predicted_total_stderr needs horizon > 0, ensemble >= 1");
  }
  // Deviations y follow dy = -A y dt + noise with A = D^{-1} L_ff and
  // stationary covariance S = L_ff^{-1} / 2. For q = |y|^2,
  //   integral_0^inf Cov(q(0), q(tau)) dtau = 2 tr(S X S),
  // where A^T X + X A = I. With A = P Lambda P^{-1}, P = D^{-1/2} Q,
  //   X = D^{1/2} Q Y Q^T D^{1/2},  Y_ab = (Q^T D^{-1} Q)_ab / (l_a + l_b).
  const Spectral sp = drift_spectrum(g, s);
  const Eigen::MatrixXd& q = sp.eigenvectors;
  const Eigen::VectorXd& lam = sp.eigenvalues;
  Eigen::MatrixXd y = q.transpose() * sp.degree.cwiseInverse().asDiagonal() * q;
  for (Eigen::Index a = 0; a < y.rows(); ++a) {
    for (Eigen::Index b = 0; b < y.cols(); ++b) y(a, b) /= lam(a) + lam(b);
  }
  const Eigen::VectorXd sqrt_d = sp.degree.cwiseSqrt();
  const Eigen::MatrixXd x =
      sqrt_d.asDiagonal() * q * y * q.transpose() * sqrt_d.asDiagonal();
  const Eigen::MatrixXd cov =
      0.5 * grounded_laplacian(g, s).llt().solve(
                Eigen::MatrixXd::Identity(lam.size(), lam.size()));
  const double integral = 2.0 * (cov * x * cov).trace();
  // Var of a time average over T is 2/T times the integrated autocovariance.
  return std::sqrt(2.0 * integral / (horizon * ensemble));
}

SimulationConfig default_config(const GraphSpec& g, const LeaderSet& s,
                                double target_rel_stderr, int ensemble,
                                std::uint64_t seed) {
  SimulationConfig c;
  c.seed = seed;
  c.ensemble = ensemble;
  if (s.size() == g.n()) return c;
  c.dt = 1e-2 / drift_bound(g, s);
  c.burn_in = 10.0 / slowest_rate(g, s);
  const double total = total_variance_value(g, s);
  // stderr scales as 1/sqrt(horizon): solve for the target.
  const double se_unit = predicted_total_stderr(g, s, 1.0, ensemble);
  const double want = target_rel_stderr * total;
  c.horizon = std::max(c.burn_in, (se_unit / want) * (se_unit / want));
  return c;
}

SimulationReport simulate(const GraphSpec& g, const LeaderSet& s,
                          const FormationSpec& f, const SimulationConfig& c,
                          const DeviationObserver& observer) {
  const int n = g.n();
  if (c.ensemble < 1) throw ValidationError("ensemble must be >= 1");
  if (!(c.dt > 0.0) || !std::isfinite(c.dt)) {
    throw ValidationError("dt must be positive and finite");
  }
  if (!(c.horizon > 0.0) || !std::isfinite(c.horizon) || !(c.burn_in >= 0.0) ||
      !std::isfinite(c.burn_in)) {
    throw ValidationError("horizon must be > 0 and burn-in >= 0");
  }
  if (!(c.noise_scale >= 0.0) || !std::isfinite(c.noise_scale)) {
    throw ValidationError("noise scale must be finite and >= 0");
  }
  if (!c.initial_deviation.empty() &&
      static_cast<int>(c.initial_deviation.size()) != n) {
    throw ValidationError("initial deviation needs one entry per node");
  }
  if (static_cast<int>(f.leader_states.size()) != s.size()) {
    throw ValidationError("formation must pin exactly the leader set");
  }
  for (int id : s.ids()) {
    if (!f.leader_states.contains(id)) {
      throw ValidationError("leader " + std::to_string(id) +
                            " has no reference state");
    }
  }
  const double limit = stability_limit(g, s);
  if (c.dt >= limit) {
    const double suggested = 1e-2 * limit / 2.0;
    throw UnstableStep("dt " + std::to_string(c.dt) +
                           " exceeds the stability limit " +
                           std::to_string(limit) + "; try dt = " +
                           std::to_string(suggested),
                       suggested);
  }

  const std::vector<double> xbar = equilibrium(g, f);
  SimulationReport report;
  report.config = c;
  report.final_deviation.assign(n, 0.0);
  const auto fol = followers_of(g, s);
  if (fol.empty()) return report;

  std::vector<std::vector<Neighbor>> nbrs;
  for (int v : fol) nbrs.push_back(neighbors(g, v, f.offsets));
  const std::size_t nf = fol.size();
  const auto burn_steps =
      static_cast<std::int64_t>(std::ceil(c.burn_in / c.dt));
  const auto meas_steps = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(c.horizon / c.dt)));
  constexpr int kBatches = 10;
  const int batches = static_cast<int>(std::min<std::int64_t>(kBatches, meas_steps));
  const double sqrt_dt = std::sqrt(c.dt) * c.noise_scale;

  // batch_means[member][batch][follower]
  std::vector<std::vector<std::vector<double>>> batch_means(
      c.ensemble, std::vector<std::vector<double>>(
                      batches, std::vector<double>(nf, 0.0)));

  const auto run_member = [&](int member) {
    std::seed_seq seq{static_cast<std::uint32_t>(c.seed),
                      static_cast<std::uint32_t>(c.seed >> 32),
                      static_cast<std::uint32_t>(member)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::vector<double> x = xbar;
    if (!c.initial_deviation.empty()) {
      for (int v : fol) x[v - 1] += c.initial_deviation[v - 1];
    }
    std::vector<double> next_x = x;
    std::vector<double> dev(n, 0.0);
    auto& means = batch_means[member];
    int batch = 0;
    std::int64_t batch_end = meas_steps * (batch + 1) / batches;
    std::int64_t batch_len = batch_end;

    for (std::int64_t step = 0; step < burn_steps + meas_steps; ++step) {
      for (std::size_t i = 0; i < nf; ++i) {
        const int v = fol[i] - 1;
        double drift = 0.0;
        double noise = 0.0;
        for (const Neighbor& e : nbrs[i]) {
          drift -= e.weight * (x[v] - x[e.node] - e.offset);
          noise -= e.noise * normal(rng);
        }
        next_x[v] = x[v] + c.dt * drift + sqrt_dt * noise;
      }
      std::swap(x, next_x);
      if (member == 0 && observer) {
        for (int v = 0; v < n; ++v) dev[v] = x[v] - xbar[v];
        observer(step, dev);
      }
      if (step >= burn_steps) {
        const std::int64_t m = step - burn_steps;
        for (std::size_t i = 0; i < nf; ++i) {
          const double y = x[fol[i] - 1] - xbar[fol[i] - 1];
          means[batch][i] += y * y;
        }
        if (m + 1 == batch_end) {
          for (double& v : means[batch]) v /= static_cast<double>(batch_len);
          if (++batch < batches) {
            const std::int64_t start = batch_end;
            batch_end = meas_steps * (batch + 1) / batches;
            batch_len = batch_end - start;
          }
        }
      }
    }
    if (member == 0) {
      for (int v = 0; v < n; ++v) report.final_deviation[v] = x[v] - xbar[v];
    }
  };

  const unsigned workers =
      std::clamp<unsigned>(c.threads, 1, static_cast<unsigned>(c.ensemble));
  if (workers == 1) {
    for (int m = 0; m < c.ensemble; ++m) run_member(m);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int m = static_cast<int>(w); m < c.ensemble;
             m += static_cast<int>(workers)) {
          run_member(m);
        }
      });
    }
  }

  // Every batch of every member is one sample; batches are long compared to
  // the relaxation time when the horizon is chosen by default_config.
  const double samples = static_cast<double>(c.ensemble) * batches;
  std::vector<double> totals;
  totals.reserve(c.ensemble * batches);
  for (const auto& member : batch_means) {
    for (const auto& b : member) {
      double t = 0.0;
      for (double v : b) t += v;
      totals.push_back(t);
    }
  }
  const auto mean_and_se = [samples](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double v : xs) mean += v;
    mean /= samples;
    double ss = 0.0;
    for (double v : xs) ss += (v - mean) * (v - mean);
    const double se = samples > 1 ? std::sqrt(ss / (samples - 1) / samples) : 0.0;
    return std::pair{mean, se};
  };
  for (std::size_t i = 0; i < nf; ++i) {
    std::vector<double> xs;
    xs.reserve(totals.size());
    for (const auto& member : batch_means) {
      for (const auto& b : member) xs.push_back(b[i]);
    }
    const auto [mean, se] = mean_and_se(xs);
    report.empirical_r[fol[i]] = mean;
    report.stderr_r[fol[i]] = se;
  }
  const auto [total, total_se] = mean_and_se(totals);
  report.empirical_total = total;
  report.total_stderr = total_se;
  return report;
}

}  // namespace leadsel
