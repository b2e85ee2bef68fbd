#include <random>

#include "doctest.h"
#include "lions/census.hpp"
#include "lions/engine.hpp"
#include "lions/search.hpp"

using namespace lions;

namespace {

// Replays a witness and checks the claimed mode flags.
void check_witness(const Graph& g, const SolveResult& r, bool monotone_required) {
  CHECK(r.witness.lion_count() == r.value);
  CHECK_FALSE(r.witness.has_remote_ops());
  Trace t = simulate(g, r.witness);
  CHECK(t.cleared);
  if (monotone_required) CHECK(t.monotone);
}

}  // namespace

TEST_CASE("clearable: path with one lion, star needs two") {
  Graph p5 = path_graph(5);
  auto r1 = clearable(p5, 1);
  CHECK(r1.status == Clearability::kYes);
  Trace t = simulate(p5, *r1.witness);
  CHECK(t.cleared);

  Graph k13 = star(3);
  CHECK(clearable(k13, 1).status == Clearability::kNo);
  CHECK(clearable(k13, 2).status == Clearability::kYes);
}

TEST_CASE("clearable: complete binary tree of height 2 with 2 monotone polite lions") {
  Graph t2 = complete_binary_tree(2);
  auto r = clearable(t2, 2, /*monotone=*/true, /*polite=*/true);
  CHECK(r.status == Clearability::kYes);
  Trace t = simulate(t2, *r.witness);
  CHECK(t.cleared);
  CHECK(t.monotone);
}

TEST_CASE("clearable: guards and errors") {
  CHECK_THROWS_AS(clearable(Graph(3, {{0, 1}}), 1), DomainError);  // disconnected
  CHECK_THROWS_AS(clearable(path_graph(5), 0), DomainError);
  CHECK_THROWS_AS(lion_number(path_graph(13)), GuardError);  // default guard 12
  SearchLimits relaxed;
  relaxed.override_size_guard = true;
  CHECK(lion_number(path_graph(13), relaxed).value == 1);
  // exhausted budget is indeterminate, not "no"
  SearchLimits tiny;
  tiny.node_budget = 1;
  CHECK(clearable(star(3), 1, false, false, tiny).status == Clearability::kUnknown);
}

TEST_CASE("lion_number on small anchors") {
  CHECK(lion_number(Graph(1, {})).value == 1);
  CHECK(lion_number(star(3)).value == 2);
  CHECK(lion_number(path_graph(8)).value == 1);
  Graph k4 = complete(4);
  CHECK(lion_number(k4).value == 3);
}

TEST_CASE("monotone_lion_number on small anchors") {
  CHECK(monotone_lion_number(path_graph(8)).value == 1);
  for (int m = 2; m <= 5; ++m)
    CHECK(monotone_lion_number(complete(m)).value == m - 1);
}

TEST_CASE("witness soundness and minimality on random small graphs") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 5), 0.45, rng);
    SolveResult plain = lion_number(g);
    check_witness(g, plain, false);
    if (plain.value > 1)
      CHECK(clearable(g, plain.value - 1).status == Clearability::kNo);

    SolveResult mono = monotone_lion_number(g);
    check_witness(g, mono, true);
    CHECK(mono.value >= plain.value);
    if (mono.value > 1)
      CHECK(clearable(g, mono.value - 1, true, true).status == Clearability::kNo);
  }
}

TEST_CASE("polite witnesses move at most one lion per step") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 25; ++iter) {
    Graph g = census::random_connected_graph(3 + static_cast<int>(rng() % 4), 0.5, rng);
    SolveResult mono = monotone_lion_number(g);
    for (const auto& action : mono.witness.steps) {
      int moved = 0;
      for (const auto& m : action.moves)
        if (!m.is_stay()) ++moved;
      CHECK(moved <= 1);
    }
  }
}

TEST_CASE("isometric monotonicity spot checks (random subtrees of trees)") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 30; ++iter) {
    Graph t = census::random_tree(4 + static_cast<int>(rng() % 4), rng);
    // random connected subtree
    VertexSet sub(t.vertex_count());
    sub.set(static_cast<Vertex>(rng() % t.vertex_count()));
    for (int grow = 0; grow < t.vertex_count() - 1; ++grow) {
      auto nbrs = neighborhood(t, sub).to_vector();
      if (nbrs.empty() || (rng() & 3) == 0) break;
      sub.set(nbrs[rng() % nbrs.size()]);
    }
    Graph h = induced_subgraph(t, sub).graph;
    CHECK(lion_number(h).value <= lion_number(t).value);
  }
}
