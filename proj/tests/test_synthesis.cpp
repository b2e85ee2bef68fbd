#include <random>

#include "doctest.h"
#include "lions/census.hpp"
#include "lions/engine.hpp"
#include "lions/search.hpp"
#include "lions/synthesis.hpp"
#include "lions/tree.hpp"
#include "lions/width.hpp"

using namespace lions;

namespace {

PathDecomposition bags(int n, std::vector<std::vector<Vertex>> raw) {
  PathDecomposition d;
  for (const auto& b : raw) {
    VertexSet s(n);
    for (Vertex v : b) s.set(v);
    d.bags.push_back(s);
  }
  return d;
}

}  // namespace

TEST_CASE("clear_via_decomposition on the named examples") {
  Graph p3 = path_graph(3);
  Schedule s = clear_via_decomposition(p3, bags(3, {{0, 1}, {1, 2}}));
  CHECK(s.lion_count() == 2);
  CHECK(simulate(p3, s).cleared);

  Graph k13 = star(3);
  Schedule s2 = clear_via_decomposition(
      k13, bags(4, {{1, 0}, {2, 0}, {3, 0}}));
  CHECK(s2.lion_count() == 2);
  CHECK(simulate(k13, s2).cleared);

  // single-bag decomposition: everything occupied at t = 0
  Graph k4 = complete(4);
  Schedule s3 = clear_via_decomposition(k4, bags(4, {{0, 1, 2, 3}}));
  CHECK(s3.steps.empty());
  CHECK(simulate(k4, s3).cleared);

  CHECK_THROWS_AS(clear_via_decomposition(p3, bags(3, {{0, 1}})), DomainError);
}

TEST_CASE("clear_via_decomposition: cleared prefix survives each bag transition") {
  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
    auto pw = pathwidth_exact(g);
    PathDecomposition proper = normalize_proper(g, pw.witness);
    Schedule s = clear_via_decomposition(g, proper);
    CHECK(s.lion_count() <= pw.width + 1);
    Trace t = simulate(g, s);
    CHECK(t.cleared);

    // tau_i = first time bag i is fully occupied; between tau_i and tau_{i+1}
    // the prefix U_i = (B_1 ∪ .. ∪ B_i) \ B_{i+1} must stay cleared.
    auto occupied_at = [&](size_t time) {
      VertexSet lions(g.vertex_count());
      for (Vertex v : t.states[time].lions) lions.set(v);
      return lions;
    };
    std::vector<size_t> tau(proper.bags.size(), 0);
    for (size_t i = 0; i < proper.bags.size(); ++i) {
      size_t from = i == 0 ? 0 : tau[i - 1];
      size_t at = from;
      while (at < t.states.size() && !occupied_at(at).contains(proper.bags[i])) ++at;
      REQUIRE(at < t.states.size());
      tau[i] = at;
    }
    VertexSet seen(g.vertex_count());
    for (size_t i = 0; i + 1 < proper.bags.size(); ++i) {
      seen |= proper.bags[i];
      VertexSet u_i = seen - proper.bags[i + 1];
      for (size_t time = tau[i]; time <= tau[i + 1]; ++time)
        CHECK(t.states[time].cleared().contains(u_i));
    }
  }
}

TEST_CASE("clear_monotone_via_connected_decomposition is monotone and polite") {
  Graph p6 = path_graph(6);
  auto cpw = connected_pathwidth_exact(p6);
  Schedule s = clear_monotone_via_connected_decomposition(p6, cpw.witness);
  CHECK(s.lion_count() == 2);
  Trace t = simulate(p6, s);
  CHECK(t.cleared);
  CHECK(t.monotone);

  Graph k4 = complete(4);
  auto cpw4 = connected_pathwidth_exact(k4);
  Schedule s4 = clear_monotone_via_connected_decomposition(k4, cpw4.witness);
  CHECK(s4.lion_count() == 4);
  Trace t4 = simulate(k4, s4);
  CHECK(t4.cleared);
  CHECK(t4.monotone);

  // non-connected-prefix input is rejected: {0,1,4} induces an isolated 4
  Graph p6b = path_graph(6);
  CHECK_THROWS_AS(clear_monotone_via_connected_decomposition(
                      p6b, bags(6, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {4, 5}})),
                  DomainError);
}

TEST_CASE("monotone synthesis over random cpw witnesses") {
  std::mt19937_64 rng(83);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.4, rng);
    auto cpw = connected_pathwidth_exact(g);
    Schedule s = clear_monotone_via_connected_decomposition(g, cpw.witness);
    CHECK(s.lion_count() <= cpw.width + 1);
    Trace t = simulate(g, s);
    CHECK(t.cleared);
    CHECK(t.monotone);
    for (const auto& action : s.steps) {
      int moved = 0;
      for (const auto& m : action.moves)
        if (!m.is_stay()) ++moved;
      CHECK(moved <= 1);
    }
  }
}

TEST_CASE("decomposition_from_monotone on anchors") {
  // K_3 with an optimal polite monotone witness (k = 2)
  Graph k3 = complete(3);
  auto mono = monotone_lion_number(k3);
  CHECK(mono.value == 2);
  Trace t = simulate(k3, mono.witness);
  PathDecomposition d = decomposition_from_monotone(k3, t);
  CHECK(validate_decomposition(k3, d).ok);
  CHECK(d.width() <= mono.value);

  // single-vertex graph
  Graph k1(1, {});
  Schedule s;
  s.initial = {0};
  PathDecomposition d1 = decomposition_from_monotone(k1, simulate(k1, s));
  REQUIRE(d1.bags.size() == 1);
  CHECK(d1.bags[0] == VertexSet::of(1, {0}));
}

TEST_CASE("decomposition_from_monotone rejects bad traces") {
  // non-monotone trace: star abandoned center
  Graph k13 = star(3);
  Schedule s;
  s.initial = {0, 1};
  StepAction a;
  a.moves = {{0, 2}, {1, 1}};  // center vacated, recontaminated
  s.steps = {a};
  Trace t = simulate(k13, s);
  CHECK_FALSE(t.monotone);
  CHECK_THROWS_AS(decomposition_from_monotone(k13, t), DomainError);

  // impolite trace: two lions move at once
  Graph p4 = path_graph(4);
  Schedule s2;
  s2.initial = {1, 2};
  StepAction b;
  b.moves = {{1, 0}, {2, 3}};
  s2.steps = {b};
  Trace t2 = simulate(p4, s2);
  CHECK(t2.cleared);
  CHECK_THROWS_AS(decomposition_from_monotone(p4, t2), DomainError);
}

TEST_CASE("extractor round-trip over solver witnesses") {
  std::mt19937_64 rng(89);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
    auto mono = monotone_lion_number(g);
    Trace t = simulate(g, mono.witness);
    REQUIRE(t.monotone);
    PathDecomposition d = decomposition_from_monotone(g, t);
    CHECK(validate_decomposition(g, d).ok);
    CHECK(d.width() <= mono.value);
  }
}

TEST_CASE("counterexample level 1") {
  auto inst = counterexample_family(1);
  CHECK(inst.tree.vertex_count() == 3);
  CHECK(inst.supergraph.vertex_count() == 4);
  CHECK(inst.duration == 1);
  CHECK(inst.schedule.lion_count() == 3);
  Trace t = simulate(inst.supergraph, inst.schedule);
  CHECK(t.cleared);
  CHECK(static_cast<int>(inst.schedule.steps.size()) == inst.duration);
}

TEST_CASE("counterexample levels 2..4 replay with 3 lions and recontaminate by design") {
  for (int i = 2; i <= 4; ++i) {
    auto inst = counterexample_family(i);
    Trace t = simulate(inst.supergraph, inst.schedule, {.record_states = false});
    CHECK(t.cleared);
    CHECK_FALSE(t.monotone);
    CHECK(inst.schedule.lion_count() == 3);
    CHECK(static_cast<int>(inst.schedule.steps.size()) == inst.duration);
    // timing: the left path is exposed for t_{i-1}+4 steps against a
    // t_{i-1}+6 edge distance
    int gap = inst.left_reguard_step - inst.left_vacate_step + 1;
    CHECK(gap + 2 == inst.left_path_edges);
    CHECK(gap < inst.left_path_edges);
  }
}

TEST_CASE("counterexample size guard refuses with the required order") {
  CHECK_THROWS_AS(counterexample_family(9, 100000), GuardError);
  CHECK_THROWS_AS(counterexample_family(0), DomainError);
}

TEST_CASE("root blocker schedule: monotone polite h-lion clearing of T_h") {
  for (int h = 1; h <= 6; ++h) {
    Graph t = complete_binary_tree(h);
    Schedule s = monotone_root_blocker_schedule(h);
    CHECK(s.lion_count() == h);
    Trace trace = simulate(t, s);
    CHECK(trace.cleared);
    CHECK(trace.monotone);
    for (const auto& action : s.steps) {
      int moved = 0;
      for (const auto& m : action.moves)
        if (!m.is_stay()) ++moved;
      CHECK(moved <= 1);
    }
  }
}
