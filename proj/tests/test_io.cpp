#include <string>

#include "doctest.h"
#include "lions/io.hpp"
#include "lions/synthesis.hpp"

using namespace lions;
using lions::io::Json;

TEST_CASE("parse_graph on the named examples") {
  auto doc = io::parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"]]})");
  CHECK(doc.graph.vertex_count() == 2);
  CHECK(doc.graph.edge_count() == 1);
  CHECK(doc.labels == std::vector<std::string>{"a", "b"});

  try {
    io::parse_graph(R"({"vertices":["a","b"],"edges":[["a","z"]]})");
    FAIL("expected dangling-edge parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("\"z\"") != std::string::npos);
  }

  CHECK_THROWS_AS(io::parse_graph(R"({"vertices":["a","a"],"edges":[]})"), ParseError);
  CHECK_THROWS_AS(io::parse_graph("not json"), ParseError);
  CHECK_THROWS_AS(io::parse_graph(R"({"edges":[]})"), ParseError);
}

TEST_CASE("graph round-trip is canonical") {
  std::string canonical = io::serialize_graph(
      io::parse_graph(R"({"vertices":["a","b","c"],"edges":[["b","c"],["a","b"]]})"));
  // a second round trip is the identity
  CHECK(io::serialize_graph(io::parse_graph(canonical)) == canonical);
  Json j = Json::parse(canonical);
  CHECK(j["edges"].size() == 2);
  CHECK(j["edges"][0][0] == "a");
}

TEST_CASE("schedule round-trip with remote ops") {
  auto doc = io::parse_graph(
      R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
  std::string text = R"({
    "initial": ["a"],
    "steps": [
      {"moves": [["a","b"]], "remote_clears": ["c"]},
      {"moves": [["b","c"]], "remote_contaminations": ["a"]}
    ]})";
  Schedule s = io::parse_schedule(text, doc);
  CHECK(s.lion_count() == 1);
  CHECK(s.has_remote_ops());
  Json echoed = io::schedule_to_json(s, doc);
  Schedule again = io::schedule_from_json(echoed, doc);
  CHECK(again.initial == s.initial);
  CHECK(again.steps.size() == s.steps.size());
  CHECK(io::schedule_to_json(again, doc) == echoed);

  CHECK_THROWS_AS(io::parse_schedule(R"({"steps":[]})", doc), ParseError);
  CHECK_THROWS_AS(io::parse_schedule(R"({"initial":["q"]})", doc), ParseError);
}

TEST_CASE("trace document carries per-step records and a summary") {
  auto doc = io::parse_graph(
      R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
  Schedule s = io::parse_schedule(
      R"({"initial":["a"],"steps":[{"moves":[["a","b"]]},{"moves":[["b","c"]]}]})",
      doc);
  Json t = io::trace_to_json(doc, s);
  CHECK(t["summary"]["cleared"] == true);
  CHECK(t["summary"]["monotone"] == true);
  CHECK(t["summary"]["lions"] == 1);
  CHECK(t["steps"].size() == 3);
  CHECK(t["steps"][0]["contaminated"].size() == 2);
  CHECK(t["steps"][2]["contaminated"].size() == 0);
}

TEST_CASE("cop schedule round-trip") {
  auto doc = io::parse_graph(
      R"({"vertices":["c","x","y","z"],"edges":[["c","x"],["c","y"],["c","z"]]})");
  CopSchedule cs;
  cs.initial = {0};
  cs.steps = {{1}, {0}, {2}, {0}, {3}};
  Json j = io::cop_schedule_to_json(cs, doc);
  CopSchedule back = io::cop_schedule_from_json(j, doc);
  CHECK(back.initial == cs.initial);
  CHECK(back.steps == cs.steps);
  CHECK(io::cop_schedule_to_json(back, doc) == j);
}

TEST_CASE("dot export shapes") {
  auto k1 = io::wrap_graph(Graph(1, {}));
  std::string dot = io::export_dot(k1);
  CHECK(dot.find("graph lions {") == 0);
  CHECK(dot.find("digraph") == std::string::npos);
  CHECK(dot.find("\"0\";") != std::string::npos);

  auto p2 = io::wrap_graph(path_graph(2));
  GameState st{{0}, VertexSet::of(2, {1})};
  std::string styled = io::export_dot(p2, &st);
  CHECK(styled.find("class=lion") != std::string::npos);
  CHECK(styled.find("class=contaminated") != std::string::npos);
  CHECK(styled.find("--") != std::string::npos);

  // counterexample G_2 exports syntactically sane DOT
  auto inst = counterexample_family(2);
  auto doc = io::wrap_graph(inst.supergraph);
  std::string big = io::export_dot(doc);
  CHECK(std::count(big.begin(), big.end(), '{') == 1);
  CHECK(std::count(big.begin(), big.end(), '}') == 1);
  long edge_lines = std::count(big.begin(), big.end(), '-') / 2;
  CHECK(edge_lines == inst.supergraph.edge_count());
}
