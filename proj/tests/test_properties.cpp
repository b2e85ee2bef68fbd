// Randomized invariant suites. The full-size (>= 1000 cases) runs live in the
// acceptance binary; here the same generators run at reduced counts, plus a
// few independent spot properties.

#include <random>

#include "doctest.h"
#include "lions/census.hpp"
#include "lions/engine.hpp"
#include "lions/search.hpp"
#include "lions/verify.hpp"

using namespace lions;

namespace {

verify::SuiteOptions quick_options() {
  verify::SuiteOptions opts;
  opts.replay_cases = 120;
  opts.graph_max_n = 6;
  opts.tree_max_n = 8;
  opts.sample_count = 60;
  opts.full_census = true;
  return opts;
}

}  // namespace

TEST_CASE("engine property suites find no violations (reduced case counts)") {
  for (const auto& check : verify::run_suite("engine-properties", quick_options())) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.detail.find(" 0 violations") != std::string::npos);
  }
}

TEST_CASE("boundary suite on the reduced census") {
  for (const auto& check : verify::run_suite("boundary", quick_options())) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.pass);
  }
}

TEST_CASE("remote clears compose: clearing schedules stay clearing") {
  // Independent of the verify generators: take solver witnesses and shower
  // them with remote clears; the schedule must still clear.
  std::mt19937_64 rng(113);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.4, rng);
    Schedule s = lion_number(g).witness;
    for (auto& a : s.steps) {
      if (rng() & 1) continue;
      VertexSet rc(g.vertex_count());
      rc.set(static_cast<Vertex>(rng() % g.vertex_count()));
      a.remote_clears = rc;
    }
    CHECK(simulate(g, s, {.record_states = false}).cleared);
  }
}

TEST_CASE("remote contaminations removed: clearing schedules stay clearing") {
  // If π' = π + remote contaminations clears, then π clears: equivalently,
  // stripping the injections from a clearing schedule cannot break it.
  std::mt19937_64 rng(127);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.4, rng);
    Schedule contaminated = lion_number(g).witness;
    bool any = false;
    for (auto& a : contaminated.steps) {
      if (rng() & 1) continue;
      VertexSet rw(g.vertex_count());
      rw.set(static_cast<Vertex>(rng() % g.vertex_count()));
      a.remote_contaminations = rw;
      any = true;
    }
    if (!any) continue;
    Schedule stripped = contaminated;
    for (auto& a : stripped.steps) a.remote_contaminations.reset();
    bool injected_clears = simulate(g, contaminated, {.record_states = false}).cleared;
    if (injected_clears)
      CHECK(simulate(g, stripped, {.record_states = false}).cleared);
  }
}

TEST_CASE("determinism: identical inputs give identical traces and witnesses") {
  std::mt19937_64 rng(131);
  for (int iter = 0; iter < 10; ++iter) {
    Graph g = census::random_connected_graph(3 + static_cast<int>(rng() % 4), 0.5, rng);
    SolveResult a = lion_number(g);
    SolveResult b = lion_number(g);
    CHECK(a.value == b.value);
    CHECK(a.witness.initial == b.witness.initial);
    REQUIRE(a.witness.steps.size() == b.witness.steps.size());
    for (size_t t = 0; t < a.witness.steps.size(); ++t)
      CHECK(a.witness.steps[t].moves == b.witness.steps[t].moves);
  }
}
