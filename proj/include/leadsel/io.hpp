#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "leadsel/digraph.hpp"
#include "leadsel/dynamics.hpp"
#include "leadsel/graph.hpp"
#include "leadsel/solvers.hpp"

namespace leadsel {

// Graph file: {"topology": "path"|"ring", "n": int, "variances": [...]}.
// Unknown keys are rejected. Throws ValidationError.
GraphSpec parse_graph_json(std::string_view text);
std::string graph_to_json(const GraphSpec& g, bool pretty = false);

// Throw IoError (with the path in the message) or ValidationError.
GraphSpec load_graph(const std::filesystem::path& path);
void save_graph(const GraphSpec& g, const std::filesystem::path& path);

// {"leaders":[...],"R":..,"method":..,"k":..,"elapsed_ms":..}
std::string selection_to_json(const SelectionResult& r, bool pretty = false);

std::string simulation_to_json(const SimulationReport& r, bool pretty = false);

// "from,to,weight" rows; source/target labelled s and t.
std::string digraph_to_csv(const ReductionDigraph& d);

}  // namespace leadsel
