#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leadsel/errors.hpp"
#include "leadsel/tridiag.hpp"
#include "oracles.hpp"

using namespace leadsel;
using doctest::Approx;

namespace {

// Grounded-Laplacian-shaped block: a chain of m nodes with random
// conductances, each end optionally tied to a leader.
TridiagonalMatrix random_grounded_block(int m, std::mt19937_64& rng,
                                        bool ground_left, bool ground_right) {
  std::uniform_real_distribution<double> nu(1e-3, 1.0);
  std::vector<double> c(m + 1);
  for (double& x : c) x = 1.0 / nu(rng);
  if (!ground_left) c[0] = 0.0;
  if (!ground_right) c[m] = 0.0;
  std::vector<double> diag(m), off(m - 1);
  for (int i = 0; i < m; ++i) diag[i] = c[i] + c[i + 1];
  for (int i = 0; i + 1 < m; ++i) off[i] = -c[i + 1];
  return {diag, off};
}

}  // namespace

TEST_CASE("inverse_diagonal small cases") {
  const auto two = inverse_diagonal(TridiagonalMatrix({2, 2}, {-1}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(two[1] == Approx(2.0 / 3.0).epsilon(1e-15));

  CHECK(inverse_diagonal(TridiagonalMatrix({1}, {})) == std::vector<double>{1.0});

  const auto three = inverse_diagonal(TridiagonalMatrix({2, 2, 2}, {-1, -1}));
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Approx(0.75).epsilon(1e-15));
  CHECK(three[1] == Approx(1.0).epsilon(1e-15));
  CHECK(three[2] == Approx(0.75).epsilon(1e-15));

  CHECK(inverse_diagonal(TridiagonalMatrix{}).empty());
}

TEST_CASE("trace_of_inverse small cases") {
  CHECK(trace_of_inverse(TridiagonalMatrix{}) == 0.0);
  CHECK(trace_of_inverse(TridiagonalMatrix({2, 2}, {-1})) ==
        Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(trace_of_inverse(TridiagonalMatrix({2, 2, 2}, {-1, -1})) ==
        Approx(2.5).epsilon(1e-15));
  CHECK(trace_of_inverse(TridiagonalMatrix({4}, {})) == 0.25);
}

TEST_CASE("dense_trace_of_inverse") {
  CHECK(dense_trace_of_inverse(Eigen::MatrixXd::Identity(4, 4)) ==
        Approx(4.0).epsilon(1e-15));
  Eigen::Matrix2d a;
  a << 2, -1, -1, 1;
  CHECK(dense_trace_of_inverse(a) == Approx(3.0).epsilon(1e-14));
  const TridiagonalMatrix t({2, 2, 2}, {-1, -1});
  CHECK(std::abs(dense_trace_of_inverse(t.dense()) - trace_of_inverse(t)) <= 1e-12);

  Eigen::Matrix2d indefinite;
  indefinite << 1, 2, 2, 1;
  CHECK_THROWS_AS(dense_trace_of_inverse(indefinite), NotPositiveDefinite);
  CHECK_THROWS_AS(dense_trace_of_inverse(Eigen::MatrixXd(2, 3)), ValidationError);
}

TEST_CASE("non positive definite and malformed input") {
  CHECK_THROWS_AS(inverse_diagonal(TridiagonalMatrix({1, 1}, {-2})),
                  NotPositiveDefinite);
  CHECK_THROWS_AS(inverse_diagonal(TridiagonalMatrix({0}, {})),
                  NotPositiveDefinite);
  CHECK_THROWS_AS(inverse_diagonal(TridiagonalMatrix({-1, 3}, {0})),
                  NotPositiveDefinite);
  CHECK_THROWS_AS(TridiagonalMatrix({1, 2}, {}), ValidationError);
  CHECK_THROWS_AS(TridiagonalMatrix({}, {1.0}), ValidationError);
}

TEST_CASE("matches the dense oracle on random grounded blocks") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 200);
  TridiagonalWorkspace ws;
  for (int trial = 0; trial < 500; ++trial) {
    const int m = size(rng);
    // At least one end grounded keeps the block positive definite.
    const bool left = trial % 3 != 0;
    const bool right = !left || trial % 2 == 0;
    const auto t = random_grounded_block(m, rng, left, right);
    const double fast = trace_of_inverse(t);
    const double dense = oracle::inverse(t.dense()).trace();
    CHECK(std::abs(fast - dense) / dense <= 1e-8);
    CHECK(ws.trace_of_inverse(t.diag, t.off) == fast);
    for (double d : inverse_diagonal(t)) CHECK(d > 0.0);
  }
}

TEST_CASE("grounding a boundary node never increases the remaining variance") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 5;
    const auto t = random_grounded_block(m, rng, true, trial % 2 == 0);
    const Eigen::MatrixXd full_inv = oracle::inverse(t.dense());
    // Ground the last node: its row/column leaves the block.
    const TridiagonalMatrix shrunk(
        std::vector<double>(t.diag.begin(), t.diag.end() - 1),
        std::vector<double>(t.off.begin(), t.off.end() - 1));
    const double before = full_inv.diagonal().head(m - 1).sum();
    CHECK(trace_of_inverse(shrunk) <= before * (1 + 1e-12));
  }
}

TEST_CASE("long chains stay finite") {
  // Unit chain grounded at one end: (T^-1)_ii = i, so the trace is
  // m(m+1)/2. Plain continuants would overflow long before m = 1e5.
  const int m = 100000;
  std::vector<double> diag(m, 2.0), off(m - 1, -1.0);
  diag.back() = 1.0;
  const TridiagonalMatrix t(diag, off);
  const auto d = inverse_diagonal(t);
  CHECK(d.front() == Approx(1.0).epsilon(1e-9));
  CHECK(d.back() == Approx(m).epsilon(1e-7));  // condition number ~ m^2
  CHECK(trace_of_inverse(t) ==
        Approx(0.5 * m * (m + 1.0)).epsilon(1e-8));
}
