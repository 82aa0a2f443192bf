#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "leadsel/errors.hpp"
#include "leadsel/experiment.hpp"
#include "leadsel/io.hpp"
#include "oracles.hpp"

using namespace leadsel;

TEST_CASE("graph json roundtrip") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = trial % 2 ? Topology::Ring : Topology::Path;
    const auto g = oracle::random_graph(t, 3 + trial, rng);
    CHECK(parse_graph_json(graph_to_json(g)) == g);
    CHECK(parse_graph_json(graph_to_json(g, true)) == g);
  }
}

TEST_CASE("graph json validation") {
  CHECK_NOTHROW(parse_graph_json(R"({"topology":"path","n":2,"variances":[1]})"));
  CHECK_THROWS_AS(
      parse_graph_json(R"({"topology":"path","n":2,"variances":[1],"x":1})"),
      ValidationError);
  CHECK_THROWS_AS(parse_graph_json(R"({"topology":"path","n":2})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_graph_json(R"({"topology":"tree","n":2,"variances":[1]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_graph_json(R"({"topology":"ring","n":3,"variances":[1,1]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_graph_json(R"({"topology":"path","n":2,"variances":[0]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_graph_json(R"({"topology":"path","n":"2","variances":[1]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_graph_json("not json"), ValidationError);
}

TEST_CASE("graph file io") {
  const auto dir = std::filesystem::temp_directory_path() / "leadsel_test_io";
  std::filesystem::create_directories(dir);
  const auto g = build_graph(Topology::Ring, 5, random_variances(5, 3));
  save_graph(g, dir / "g.json");
  CHECK(load_graph(dir / "g.json") == g);
  CHECK_THROWS_AS(load_graph(dir / "missing.json"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("selection json has the expected keys") {
  const auto g = oracle::unit_graph(Topology::Path, 3);
  const auto r = select_leaders_optimal(g, 2);
  const std::string j = selection_to_json(r);
  CHECK(j.find("\"leaders\":[1,3]") != std::string::npos);
  CHECK(j.find("\"method\":\"optimal_path\"") != std::string::npos);
  CHECK(j.find("\"k\":2") != std::string::npos);
  CHECK(j.find("\"R\":0.25") != std::string::npos);
}

TEST_CASE("sweep csv") {
  SweepConfig cfg;
  cfg.topology = Topology::Path;
  cfg.n = 4;
  cfg.k_max = 4;
  cfg.seeds = {1, 2};
  cfg.methods = {SweepMethod::Optimal, SweepMethod::Greedy, SweepMethod::Exhaustive};
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 2 * 4 * 3);
  for (std::size_t i = 0; i < rows.size(); i += 3) {
    CHECK(rows[i].method == SweepMethod::Optimal);
    CHECK(oracle::close_rel(rows[i].R, rows[i + 2].R, 1e-12, 1e-15));
    CHECK(rows[i].ratio_to_optimal == 1.0);
    CHECK(rows[i + 1].ratio_to_optimal >= 1.0 - 1e-12);
    if (rows[i].k == 1) CHECK(rows[i + 1].ratio_to_optimal == doctest::Approx(1.0));
    CHECK(!rows[i].failed);
  }
  std::ostringstream out;
  write_sweep_csv(out, rows);
  const std::string s = out.str();
  CHECK(s.rfind(std::string(kSweepCsvHeader) + "\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 1 + 24);

  cfg.n = 400;
  cfg.k_max = 3;
  cfg.seeds = {1};
  cfg.methods = {SweepMethod::Greedy, SweepMethod::Exhaustive};
  const auto bad = run_sweep(cfg);
  REQUIRE(bad.size() == 6);
  CHECK(!bad[4].failed);
  CHECK(bad[5].failed);
  CHECK(std::isnan(bad[5].R));
  CHECK(std::isnan(bad[4].ratio_to_optimal));
}

TEST_CASE("digraph csv") {
  const auto g = oracle::unit_graph(Topology::Path, 3);
  const std::string csv = digraph_to_csv(build_path_digraph(g));
  CHECK(csv.rfind("from,to,weight\n", 0) == 0);
  CHECK(csv.find("s,1,0\n") != std::string::npos);
  CHECK(csv.find("1,3,0.25\n") != std::string::npos);
}
