#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "leadsel/errors.hpp"
#include "leadsel/solvers.hpp"
#include "oracles.hpp"

using namespace leadsel;
using doctest::Approx;

namespace {

std::vector<int> ids(const SelectionResult& r) {
  return {r.leaders.ids().begin(), r.leaders.ids().end()};
}

}  // namespace

TEST_CASE("optimal path examples") {
  const auto p3 = oracle::unit_graph(Topology::Path, 3);
  auto r = select_leaders_path(p3, 1);
  CHECK(ids(r) == std::vector<int>{2});
  CHECK(r.total_variance == Approx(1.0).epsilon(1e-15));
  CHECK(r.method == Method::OptimalPath);
  CHECK(r.k_requested == 1);

  r = select_leaders_path(p3, 2);
  CHECK(ids(r) == std::vector<int>{1, 3});
  CHECK(r.total_variance == Approx(0.25).epsilon(1e-15));

  r = select_leaders_path(oracle::unit_graph(Topology::Path, 2), 2);
  CHECK(ids(r) == std::vector<int>{1, 2});
  CHECK(r.total_variance == 0.0);
}

TEST_CASE("optimal ring examples") {
  auto r = select_leaders_ring(oracle::unit_graph(Topology::Ring, 3), 1);
  CHECK(ids(r) == std::vector<int>{1});
  CHECK(r.total_variance == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(r.method == Method::OptimalRing);

  r = select_leaders_ring(oracle::unit_graph(Topology::Ring, 4), 2);
  CHECK(ids(r) == std::vector<int>{1, 3});
  CHECK(r.total_variance == Approx(0.5).epsilon(1e-15));

  r = select_leaders_ring(oracle::unit_graph(Topology::Ring, 3), 3);
  CHECK(r.total_variance == 0.0);
}

TEST_CASE("k and topology validation") {
  const auto p = oracle::unit_graph(Topology::Path, 4);
  const auto q = oracle::unit_graph(Topology::Ring, 4);
  CHECK_THROWS_AS(select_leaders_path(p, 0), ValidationError);
  CHECK_THROWS_AS(select_leaders_path(p, 5), ValidationError);
  CHECK_THROWS_AS(select_leaders_path(q, 1), ValidationError);
  CHECK_THROWS_AS(select_leaders_ring(p, 1), ValidationError);
  CHECK_THROWS_AS(select_leaders_ring(q, 0), ValidationError);
  CHECK_THROWS_AS(greedy_select(p, 0), ValidationError);
  CHECK_THROWS_AS(exhaustive_select(p, 5), ValidationError);
}

TEST_CASE("greedy examples") {
  const auto p3 = oracle::unit_graph(Topology::Path, 3);
  auto r = greedy_select(p3, 1);
  CHECK(ids(r) == std::vector<int>{2});
  CHECK(r.total_variance == Approx(1.0).epsilon(1e-15));

  r = greedy_select(p3, 2);
  CHECK(ids(r) == std::vector<int>{1, 2});
  CHECK(r.total_variance == Approx(0.5).epsilon(1e-15));
  CHECK(r.total_variance / select_leaders_path(p3, 2).total_variance ==
        Approx(2.0).epsilon(1e-14));

  r = greedy_select(oracle::unit_graph(Topology::Path, 2), 2);
  CHECK(ids(r) == std::vector<int>{1, 2});
  CHECK(r.total_variance == 0.0);

  // Once R hits 0 nothing can strictly improve, so greedy stops early.
  r = greedy_select(oracle::unit_graph(Topology::Path, 2), 2);
  CHECK(r.leaders.size() == 2);
  r = greedy_select(oracle::unit_graph(Topology::Ring, 3), 3);
  CHECK(r.total_variance == 0.0);
  CHECK(r.leaders.size() == 3);
}

TEST_CASE("exhaustive examples and guard") {
  auto r = exhaustive_select(oracle::unit_graph(Topology::Path, 3), 2);
  CHECK(ids(r) == std::vector<int>{1, 3});
  CHECK(r.total_variance == Approx(0.25).epsilon(1e-15));

  r = exhaustive_select(oracle::unit_graph(Topology::Ring, 4), 2);
  CHECK(r.total_variance == Approx(0.5).epsilon(1e-15));
  CHECK(ids(r) == std::vector<int>{1, 3});  // lexicographically before {2,4}

  std::mt19937_64 rng(1);
  const auto g = oracle::random_graph(Topology::Path, 7, rng);
  r = exhaustive_select(g, 7);
  CHECK(r.total_variance == 0.0);
  // The lexicographically smallest zero-variance set is 1..7 itself.
  CHECK(r.leaders.size() == 7);

  CHECK(exhaustive_candidates(5, 2) == 15);
  CHECK(exhaustive_candidates(12, 4) == 793);
  CHECK(exhaustive_candidates(400, 10) > kExhaustiveLimit);
  const auto big = build_graph(Topology::Path, 400, random_variances(399, 1));
  CHECK_THROWS_AS(exhaustive_select(big, 5), TooLarge);
  CHECK_NOTHROW(exhaustive_select(big, 1));
}

TEST_CASE("greedy bound examples") {
  auto rep = greedy_bound_check(oracle::unit_graph(Topology::Path, 3), 2);
  CHECK(rep.greedy == Approx(0.5).epsilon(1e-15));
  CHECK(rep.optimal == Approx(0.25).epsilon(1e-15));
  CHECK(rep.r_max == Approx(1.5).epsilon(1e-15));
  CHECK(rep.bound == Approx(0.75 * 0.25 + 1.5 / std::numbers::e).epsilon(1e-15));
  CHECK(rep.bound == Approx(0.7393).epsilon(1e-4));
  CHECK(rep.holds);

  std::mt19937_64 rng(2);
  for (int n = 3; n <= 8; ++n) {
    rep = greedy_bound_check(oracle::random_graph(Topology::Ring, n, rng), 1);
    CHECK(rep.greedy == rep.optimal);
    CHECK(rep.bound == Approx(rep.optimal + rep.r_max / std::numbers::e));
    CHECK(rep.holds);
  }

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = build_graph(Topology::Path, 8, random_variances(7, seed));
    rep = greedy_bound_check(g, 3);
    CHECK(rep.holds);
    CHECK(rep.slack >= 0.0);
  }

  const auto big = build_graph(Topology::Path, 400, random_variances(399, 1));
  CHECK_THROWS_AS(greedy_bound_check(big, 5), TooLarge);
}

TEST_CASE("optimal solvers match the dense brute-force oracle") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = trial % 2 ? Topology::Ring : Topology::Path;
    const int n = (t == Topology::Ring ? 3 : 2) + trial % 9;
    const auto g = oracle::random_graph(t, n, rng);
    const auto table = oracle::all_subsets_R(g);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= std::min(n, 5); ++k) {
      const double want = oracle::best_R(table, n, k);
      const auto opt = select_leaders_optimal(g, k);
      const auto ex = exhaustive_select(g, k);
      const auto gr = greedy_select(g, k);
      CHECK(opt.leaders.size() <= k);
      CHECK(oracle::close_rel(opt.total_variance, want, 1e-9, 1e-12));
      CHECK(oracle::close_rel(ex.total_variance, want, 1e-9, 1e-12));
      CHECK(gr.total_variance >= opt.total_variance * (1 - 1e-9));
      if (k == 1) CHECK(oracle::close_rel(gr.total_variance, want, 1e-9));
      CHECK(opt.total_variance <= prev);
      prev = opt.total_variance;
      CHECK(ids(select_leaders_optimal(g, k)) == ids(opt));
    }
  }
}

TEST_CASE("ring solver result does not depend on the worker count") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_graph(Topology::Ring, 20 + trial, rng);
    for (int k : {1, 3, 5}) {
      const auto one = select_leaders_ring(g, k, 1);
      const auto four = select_leaders_ring(g, k, 4);
      CHECK(ids(one) == ids(four));
      CHECK(one.total_variance == four.total_variance);
    }
  }
}
