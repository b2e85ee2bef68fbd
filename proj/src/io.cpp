#include "lions/io.hpp"

#include <algorithm>
#include <unordered_map>

namespace lions::io {

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::unordered_map<std::string, Vertex> label_index(
    const std::vector<std::string>& labels) {
  std::unordered_map<std::string, Vertex> out;
  for (size_t i = 0; i < labels.size(); ++i)
    out.emplace(labels[i], static_cast<Vertex>(i));
  return out;
}

Vertex lookup(const std::unordered_map<std::string, Vertex>& index,
              const std::string& label, const char* what) {
  auto it = index.find(label);
  if (it == index.end())
    throw ParseError(std::string(what) + " references undeclared vertex \"" +
                     label + "\"");
  return it->second;
}

std::vector<Vertex> parse_vertex_list(const Json& j,
                                      const std::unordered_map<std::string, Vertex>& index,
                                      const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw ParseError(std::string(what) + " entries must be vertex ids");
    out.push_back(lookup(index, item.get<std::string>(), what));
  }
  return out;
}

Json vertex_set_to_json(const VertexSet& s, const GraphDocument& doc) {
  Json out = Json::array();
  s.for_each([&](Vertex v) { out.push_back(doc.labels[v]); });
  return out;
}

}  // namespace

Vertex GraphDocument::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<Vertex>(i);
  throw ParseError("unknown vertex id \"" + label + "\"");
}

GraphDocument parse_graph(const std::string& text) {
  Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("graph document must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("graph document needs a \"vertices\" array");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("graph document needs an \"edges\" array");

  GraphDocument doc;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    doc.labels.push_back(v.get<std::string>());
  }
  auto index = label_index(doc.labels);
  if (index.size() != doc.labels.size()) {
    for (size_t i = 0; i < doc.labels.size(); ++i)
      for (size_t k = i + 1; k < doc.labels.size(); ++k)
        if (doc.labels[i] == doc.labels[k])
          throw ParseError("duplicate vertex id \"" + doc.labels[i] + "\"");
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("edges must be [id, id] pairs");
    Vertex a = lookup(index, e[0].get<std::string>(), "edge");
    Vertex b = lookup(index, e[1].get<std::string>(), "edge");
    edges.emplace_back(a, b);
  }
  try {
    doc.graph = Graph(static_cast<int>(doc.labels.size()), edges);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
  if (j.contains("metadata")) doc.metadata = j["metadata"];
  return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& label : doc.labels) j["vertices"].push_back(label);
  j["edges"] = Json::array();
  for (auto [u, v] : doc.graph.edges())
    j["edges"].push_back(Json::array({doc.labels[u], doc.labels[v]}));
  j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

GraphDocument wrap_graph(const Graph& g) {
  GraphDocument doc;
  doc.graph = g;
  for (int v = 0; v < g.vertex_count(); ++v) doc.labels.push_back(std::to_string(v));
  return doc;
}

Schedule schedule_from_json(const Json& j, const GraphDocument& doc) {
  if (!j.is_object()) throw ParseError("schedule must be a JSON object");
  if (!j.contains("initial")) throw ParseError("schedule needs an \"initial\" array");
  auto index = label_index(doc.labels);
  Schedule s;
  s.initial = parse_vertex_list(j["initial"], index, "schedule initial positions");
  const int n0 = doc.graph.vertex_count();
  if (j.contains("initial_remote_clears") && !j["initial_remote_clears"].empty()) {
    VertexSet rc(n0);
    for (Vertex v :
         parse_vertex_list(j["initial_remote_clears"], index, "initial remote clear"))
      rc.set(v);
    s.initial_remote_clears = std::move(rc);
  }
  if (j.contains("initial_remote_contaminations") &&
      !j["initial_remote_contaminations"].empty()) {
    VertexSet rw(n0);
    for (Vertex v : parse_vertex_list(j["initial_remote_contaminations"], index,
                                      "initial remote contamination"))
      rw.set(v);
    s.initial_remote_contaminations = std::move(rw);
  }
  if (j.contains("steps")) {
    if (!j["steps"].is_array()) throw ParseError("schedule steps must be an array");
    for (const auto& js : j["steps"]) {
      StepAction action;
      if (!js.contains("moves") || !js["moves"].is_array())
        throw ParseError("schedule step needs a \"moves\" array");
      for (const auto& m : js["moves"]) {
        if (!m.is_array() || m.size() != 2 || !m[0].is_string() || !m[1].is_string())
          throw ParseError("moves must be [from, to] pairs of vertex ids");
        action.moves.push_back(
            {lookup(index, m[0].get<std::string>(), "move"),
             lookup(index, m[1].get<std::string>(), "move")});
      }
      const int n = doc.graph.vertex_count();
      if (js.contains("remote_clears") && !js["remote_clears"].empty()) {
        VertexSet rc(n);
        for (Vertex v : parse_vertex_list(js["remote_clears"], index, "remote clear"))
          rc.set(v);
        action.remote_clears = std::move(rc);
      }
      if (js.contains("remote_contaminations") &&
          !js["remote_contaminations"].empty()) {
        VertexSet rw(n);
        for (Vertex v :
             parse_vertex_list(js["remote_contaminations"], index, "remote contamination"))
          rw.set(v);
        action.remote_contaminations = std::move(rw);
      }
      s.steps.push_back(std::move(action));
    }
  }
  return s;
}

Schedule parse_schedule(const std::string& text, const GraphDocument& doc) {
  return schedule_from_json(parse_json(text), doc);
}

Json schedule_to_json(const Schedule& s, const GraphDocument& doc) {
  Json j;
  j["initial"] = Json::array();
  for (Vertex v : s.initial) j["initial"].push_back(doc.labels[v]);
  if (s.initial_remote_clears && !s.initial_remote_clears->empty())
    j["initial_remote_clears"] = vertex_set_to_json(*s.initial_remote_clears, doc);
  if (s.initial_remote_contaminations && !s.initial_remote_contaminations->empty())
    j["initial_remote_contaminations"] =
        vertex_set_to_json(*s.initial_remote_contaminations, doc);
  j["steps"] = Json::array();
  for (const auto& action : s.steps) {
    Json js;
    js["moves"] = Json::array();
    for (const auto& m : action.moves)
      js["moves"].push_back(Json::array({doc.labels[m.from], doc.labels[m.to]}));
    if (action.remote_clears && !action.remote_clears->empty())
      js["remote_clears"] = vertex_set_to_json(*action.remote_clears, doc);
    if (action.remote_contaminations && !action.remote_contaminations->empty())
      js["remote_contaminations"] =
          vertex_set_to_json(*action.remote_contaminations, doc);
    j["steps"].push_back(std::move(js));
  }
  return j;
}

Json trace_to_json(const GraphDocument& doc, const Schedule& s) {
  Trace trace = simulate(doc.graph, s, {.record_states = true});
  Json j;
  j["schedule"] = schedule_to_json(s, doc);
  j["steps"] = Json::array();
  for (size_t t = 0; t < trace.states.size(); ++t) {
    const GameState& st = trace.states[t];
    Json step;
    step["time"] = t;
    step["moves"] = Json::array();
    if (t >= 1)
      for (const auto& m : s.steps[t - 1].moves)
        step["moves"].push_back(Json::array({doc.labels[m.from], doc.labels[m.to]}));
    Json lions = Json::array();
    for (Vertex v : st.lions) lions.push_back(doc.labels[v]);
    step["lions"] = std::move(lions);
    step["cleared"] = vertex_set_to_json(st.cleared(), doc);
    step["contaminated"] = vertex_set_to_json(st.contaminated, doc);
    j["steps"].push_back(std::move(step));
  }
  j["summary"] = {{"cleared", trace.cleared},
                  {"monotone", trace.monotone},
                  {"lions", trace.lions},
                  {"steps", trace.steps}};
  return j;
}

Json decomposition_to_json(const PathDecomposition& d, const GraphDocument& doc) {
  Json j;
  j["bags"] = Json::array();
  for (const auto& bag : d.bags) j["bags"].push_back(vertex_set_to_json(bag, doc));
  j["width"] = d.width();
  return j;
}

Json solve_result_to_json(const char* value_key, const SolveResult& r,
                          const GraphDocument& doc) {
  Json j;
  j[value_key] = r.value;
  j["witness"] = schedule_to_json(r.witness, doc);
  j["stats"] = {{"nodes", r.nodes_expanded}, {"elapsed_ms", r.elapsed_ms}};
  return j;
}

Json cop_schedule_to_json(const CopSchedule& cs, const GraphDocument& doc) {
  Json j;
  j["initial"] = Json::array();
  for (Vertex v : cs.initial) j["initial"].push_back(doc.labels[v]);
  j["steps"] = Json::array();
  for (const auto& step : cs.steps) {
    Json js = Json::array();
    for (Vertex v : step) js.push_back(doc.labels[v]);
    j["steps"].push_back(std::move(js));
  }
  return j;
}

CopSchedule cop_schedule_from_json(const Json& j, const GraphDocument& doc) {
  if (!j.is_object()) throw ParseError("cop schedule must be a JSON object");
  auto index = label_index(doc.labels);
  CopSchedule cs;
  if (!j.contains("initial")) throw ParseError("cop schedule needs \"initial\"");
  cs.initial = parse_vertex_list(j["initial"], index, "cop initial positions");
  if (j.contains("steps"))
    for (const auto& js : j["steps"])
      cs.steps.push_back(parse_vertex_list(js, index, "cop step"));
  return cs;
}

std::string export_dot(const GraphDocument& doc, const GameState* state) {
  std::string out = "graph lions {\n  node [style=filled, fillcolor=white];\n";
  VertexSet lion_mask(doc.graph.vertex_count());
  if (state)
    for (Vertex v : state->lions) lion_mask.set(v);
  for (int v = 0; v < doc.graph.vertex_count(); ++v) {
    out += "  \"" + doc.labels[v] + "\"";
    if (state) {
      if (lion_mask.test(v))
        out += " [fillcolor=gold, shape=doublecircle, class=lion]";
      else if (state->contaminated.test(v))
        out += " [fillcolor=gray, class=contaminated]";
      else
        out += " [fillcolor=palegreen, class=cleared]";
    }
    out += ";\n";
  }
  for (auto [u, v] : doc.graph.edges())
    out += "  \"" + doc.labels[u] + "\" -- \"" + doc.labels[v] + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace lions::io
