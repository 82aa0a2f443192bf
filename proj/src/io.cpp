#include "leadsel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "leadsel/errors.hpp"

namespace leadsel {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j, bool pretty) {
  return j.dump(pretty ? 2 : -1);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

GraphSpec parse_graph_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("graph file is not valid JSON: ") +
                          e.what());
  }
  if (!j.is_object()) throw ValidationError("graph file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "topology" && key != "n" && key != "variances") {
      throw ValidationError("graph file has unknown key '" + key + "'");
    }
  }
  for (const char* key : {"topology", "n", "variances"}) {
    if (!j.contains(key)) {
      throw ValidationError(std::string("graph file is missing '") + key + "'");
    }
  }
  if (!j["topology"].is_string()) throw ValidationError("'topology' must be a string");
  if (!j["n"].is_number_integer()) throw ValidationError("'n' must be an integer");
  if (!j["variances"].is_array()) throw ValidationError("'variances' must be an array");
  std::vector<double> variances;
  for (const auto& v : j["variances"]) {
    if (!v.is_number()) throw ValidationError("variances must be numbers");
    variances.push_back(v.get<double>());
  }
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 1'000'000) throw ValidationError("'n' out of range");
  return GraphSpec::build(parse_topology(j["topology"].get<std::string>()),
                          static_cast<int>(n), std::move(variances));
}

std::string graph_to_json(const GraphSpec& g, bool pretty) {
  ordered_json j;
  j["topology"] = std::string(to_string(g.topology()));
  j["n"] = g.n();
  j["variances"] = std::vector<double>(g.variances().begin(), g.variances().end());
  return dump(j, pretty);
}

GraphSpec load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading graph file " + path.string());
  try {
    return parse_graph_json(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void save_graph(const GraphSpec& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << graph_to_json(g) << '\n';
  out.close();
  if (!out) throw IoError("error writing " + path.string());
}

std::string selection_to_json(const SelectionResult& r, bool pretty) {
  ordered_json j;
  j["leaders"] = std::vector<int>(r.leaders.ids().begin(), r.leaders.ids().end());
  j["R"] = r.total_variance;
  j["method"] = std::string(to_string(r.method));
  j["k"] = r.k_requested;
  j["elapsed_ms"] = r.elapsed.count() * 1e3;
  return dump(j, pretty);
}

std::string simulation_to_json(const SimulationReport& r, bool pretty) {
  ordered_json j;
  j["empirical_total"] = r.empirical_total;
  j["total_stderr"] = r.total_stderr;
  auto nodes = ordered_json::array();
  for (const auto& [id, value] : r.empirical_r) {
    ordered_json node;
    node["id"] = id;
    node["empirical_r"] = value;
    node["stderr"] = r.stderr_r.at(id);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  ordered_json cfg;
  cfg["dt"] = r.config.dt;
  cfg["burn_in"] = r.config.burn_in;
  cfg["horizon"] = r.config.horizon;
  cfg["seed"] = r.config.seed;
  cfg["ensemble"] = r.config.ensemble;
  cfg["noise_scale"] = r.config.noise_scale;
  j["config"] = std::move(cfg);
  return dump(j, pretty);
}

std::string digraph_to_csv(const ReductionDigraph& d) {
  std::string out = "from,to,weight\n";
  for (const auto& [from, to, w] : d.edges()) {
    out += d.label(from) + ',' + d.label(to) + ',' + format_double(w) + '\n';
  }
  return out;
}

}  // namespace leadsel
