#include <random>

#include "doctest.h"
#include "lions/census.hpp"
#include "lions/cops.hpp"
#include "lions/engine.hpp"
#include "lions/search.hpp"
#include "lions/tree.hpp"

using namespace lions;

TEST_CASE("cop_step follows the two update equations") {
  // star 0; leaves 1,2,3 — one cop sweep 0->1->0->2->0->3 cleans
  Graph k13 = star(3);
  CopSchedule cs;
  cs.initial = {0};
  cs.steps = {{1}, {0}, {2}, {0}, {3}};
  CopTrace t = simulate_cops(k13, cs);
  CHECK(t.cleared);
  // replay the equations by hand for the first turn
  CopState s0 = initial_cop_state(k13, {0});
  CHECK(s0.dirty_post == VertexSet::of(4, {1, 2, 3}));
  CopState s1 = cop_step(k13, s0, {1});
  CHECK(s1.dirty_pre == VertexSet::of(4, {1, 2, 3}));
  CHECK(s1.dirty_post == VertexSet::of(4, {2, 3}));
}

TEST_CASE("cop_step: path sweep and fixed point") {
  Graph p3 = path_graph(3);
  CopSchedule cs;
  cs.initial = {0};
  cs.steps = {{1}, {2}};
  CHECK(simulate_cops(p3, cs).cleared);

  Graph k1(1, {});
  CopSchedule trivial;
  trivial.initial = {0};
  CHECK(simulate_cops(k1, trivial).cleared);

  CopState s0 = initial_cop_state(p3, {0});
  CHECK_THROWS_AS(cop_step(p3, s0, {2}), DomainError);
}

TEST_CASE("cop_number_exact anchors") {
  for (int n = 2; n <= 8; ++n) CHECK(cop_number_exact(path_graph(n)).value == 1);
  CHECK(cop_number_exact(star(3)).value == 1);
  CHECK(lion_number(star(3)).value == 2);  // c0 < L here, consistent with c0 <= L
  CHECK_THROWS_AS(cop_number_exact(Graph(3, {{0, 1}})), DomainError);
}

TEST_CASE("cop witnesses replay to clearings") {
  std::mt19937_64 rng(97);
  for (int iter = 0; iter < 30; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.4, rng);
    auto r = cop_number_exact(g);
    CHECK(simulate_cops(g, r.witness).cleared);
    CHECK(r.witness.cop_count() == r.value);
  }
}

TEST_CASE("lions_from_cops: trailing pair clears, W_t inside S_t") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 30; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.4, rng);
    auto cops = cop_number_exact(g);
    Schedule lions = lions_from_cops(g, cops.witness);
    CHECK(lions.lion_count() == 2 * cops.value);
    Trace lt = simulate(g, lions);
    CHECK(lt.cleared);
    CopTrace ct = simulate_cops(g, cops.witness);
    REQUIRE(lt.states.size() == ct.states.size());
    for (size_t t = 0; t < lt.states.size(); ++t)
      CHECK(ct.states[t].dirty_post.contains(lt.states[t].contaminated));
  }
}

TEST_CASE("cops_from_lions: identical trajectories clear, S_t inside W_t") {
  std::mt19937_64 rng(103);
  for (int iter = 0; iter < 30; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.4, rng);
    auto plain = lion_number(g);
    CopSchedule cs = cops_from_lions(g, plain.witness);
    CopTrace ct = simulate_cops(g, cs);
    CHECK(ct.cleared);
    Trace lt = simulate(g, plain.witness);
    REQUIRE(lt.states.size() == ct.states.size());
    for (size_t t = 0; t < lt.states.size(); ++t)
      CHECK(lt.states[t].contaminated.contains(ct.states[t].dirty_post));
  }

  // remote-tagged schedules are rejected
  Graph p2 = path_graph(2);
  Schedule s;
  s.initial = {0};
  StepAction a;
  a.moves = {{0, 1}};
  VertexSet rc(2);
  rc.set(0);
  a.remote_clears = rc;
  s.steps = {a};
  CHECK_THROWS_AS(cops_from_lions(p2, s), DomainError);
}

TEST_CASE("single lion on K_1 maps to a single cop") {
  Graph k1(1, {});
  Schedule s;
  s.initial = {0};
  CopSchedule cs = cops_from_lions(k1, s);
  CHECK(cs.initial == std::vector<Vertex>{0});
  CHECK(simulate_cops(k1, cs).cleared);
}

TEST_CASE("cop sandwich c0 <= L <= 2 c0 on random graphs") {
  std::mt19937_64 rng(107);
  for (int iter = 0; iter < 25; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
    int c0 = cop_number_exact(g).value;
    int lions = lion_number(g).value;
    CHECK(c0 <= lions);
    CHECK(lions <= 2 * c0);
  }
}

TEST_CASE("tree cop bounds: ceil(pw/2) <= c0 <= pw") {
  std::mt19937_64 rng(109);
  for (int iter = 0; iter < 20; ++iter) {
    Graph t = census::random_tree(2 + static_cast<int>(rng() % 8), rng);
    int c0 = cop_number_exact(t).value;
    int pw = tree_pathwidth(t).value;
    CHECK((pw + 1) / 2 <= c0);
    CHECK(c0 <= pw);
  }
}
