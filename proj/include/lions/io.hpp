#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lions/cops.hpp"
#include "lions/engine.hpp"
#include "lions/graph.hpp"
#include "lions/search.hpp"
#include "lions/width.hpp"

namespace lions::io {

using Json = nlohmann::ordered_json;

/// Graph plus its external string ids; indices are dense and follow the
/// document's vertex order.
struct GraphDocument {
  Graph graph;
  std::vector<std::string> labels;
  Json metadata = Json::object();

  Vertex index_of(const std::string& label) const;
};

GraphDocument parse_graph(const std::string& text);
std::string serialize_graph(const GraphDocument& doc);
GraphDocument wrap_graph(const Graph& g);  // decimal-index labels

Schedule parse_schedule(const std::string& text, const GraphDocument& doc);
Json schedule_to_json(const Schedule& s, const GraphDocument& doc);
Schedule schedule_from_json(const Json& j, const GraphDocument& doc);

/// Re-simulates the schedule and emits per-step records plus a summary; the
/// write path always re-validates against a fresh replay.
Json trace_to_json(const GraphDocument& doc, const Schedule& s);

Json decomposition_to_json(const PathDecomposition& d, const GraphDocument& doc);
Json solve_result_to_json(const char* value_key, const SolveResult& r,
                          const GraphDocument& doc);

Json cop_schedule_to_json(const CopSchedule& cs, const GraphDocument& doc);
CopSchedule cop_schedule_from_json(const Json& j, const GraphDocument& doc);

/// Undirected DOT output; with a state, lions / cleared / contaminated render
/// as three distinct style classes.
std::string export_dot(const GraphDocument& doc, const GameState* state = nullptr);

}  // namespace lions::io
