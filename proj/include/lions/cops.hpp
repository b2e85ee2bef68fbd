#pragma once

#include "lions/engine.hpp"
#include "lions/graph.hpp"
#include "lions/search.hpp"

namespace lions {

/// Zero-visibility cops-and-robber state around the cops' t-th turn:
/// dirty_pre = R_t (before the turn), dirty_post = S_t = R_t \ P_t.
struct CopState {
  std::vector<Vertex> cops;
  VertexSet dirty_post;
  VertexSet dirty_pre;
};

/// Per-turn target list, index-aligned with the cop roster; staying is
/// encoded by repeating the current vertex.
struct CopSchedule {
  std::vector<Vertex> initial;
  std::vector<std::vector<Vertex>> steps;
  int cop_count() const { return static_cast<int>(initial.size()); }
};

CopState initial_cop_state(const Graph& g, const std::vector<Vertex>& cops);

/// One turn: the robber spreads first (R_{t+1} = (N(S_t) ∪ S_t) \ P_t), then
/// the cops move and capture (S_{t+1} = R_{t+1} \ P_{t+1}). No edge blocking
/// exists in this game.
CopState cop_step(const Graph& g, const CopState& state,
                  const std::vector<Vertex>& moves);

struct CopTrace {
  std::vector<CopState> states;
  bool cleared = false;
};
CopTrace simulate_cops(const Graph& g, const CopSchedule& schedule,
                       bool record_states = true);

struct CopSolveResult {
  int value = 0;
  CopSchedule witness;
  long nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

/// Exact c0(G) by breadth-first search over (sorted cop multiset, dirty set).
CopSolveResult cop_number_exact(const Graph& g, const SearchLimits& limits = {});

/// Two lions per cop trailing its trajectory one step apart; clears the graph
/// with twice the cops.
Schedule lions_from_cops(const Graph& g, const CopSchedule& cs);

/// Identical trajectories reinterpreted as a cop schedule; rejects schedules
/// carrying remote operations.
CopSchedule cops_from_lions(const Graph& g, const Schedule& s);

}  // namespace lions
