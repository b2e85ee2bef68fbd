#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lions/graph.hpp"

namespace lions {

/// One lion's movement in a step: to == from encodes a stay.
struct Move {
  Vertex from = 0;
  Vertex to = 0;
  bool is_stay() const { return from == to; }
  bool operator==(const Move&) const = default;
};

/// Simultaneous actions of one time step. `moves` is index-aligned with the
/// lion roster. The remote sets are analytical injections; schedules carrying
/// them are not valid witnesses for lion-number claims.
struct StepAction {
  std::vector<Move> moves;
  std::optional<VertexSet> remote_clears;
  std::optional<VertexSet> remote_contaminations;
  bool has_remote_ops() const {
    return (remote_clears && !remote_clears->empty()) ||
           (remote_contaminations && !remote_contaminations->empty());
  }
};

struct Schedule {
  std::vector<Vertex> initial;  // lion placement multiset at t = 0
  // Analytical injections applied to W_0 = V \ L_0 before any step (a remote
  // clear "at every time step" includes time zero).
  std::optional<VertexSet> initial_remote_clears;
  std::optional<VertexSet> initial_remote_contaminations;
  std::vector<StepAction> steps;
  int lion_count() const { return static_cast<int>(initial.size()); }
  bool has_remote_ops() const {
    if (initial_remote_clears && !initial_remote_clears->empty()) return true;
    if (initial_remote_contaminations && !initial_remote_contaminations->empty())
      return true;
    for (const auto& s : steps)
      if (s.has_remote_ops()) return true;
    return false;
  }
};

/// (L_t, W_t) at one time step; cleared is the complement of contaminated.
struct GameState {
  std::vector<Vertex> lions;
  VertexSet contaminated;
  VertexSet cleared() const { return contaminated.complement(); }
};

struct Violation {
  int time = 0;
  std::string invariant;
  std::string detail;
};

struct Trace {
  std::vector<GameState> states;  // index = time; empty when not recorded
  bool monotone = true;           // W_t subset of W_{t-1} for all t >= 1
  bool cleared = false;           // final W empty
  int steps = 0;
  int lions = 0;
  std::vector<Violation> violations;
};

/// Incremental engine for the spread rule
///   W_t = (W_{t-1} \ L_t) ∪ { v ∉ L_t | ∃ w ∈ W_{t-1} ∩ N(v),
///                             (v,w) ∉ π_t ∧ (w,v) ∉ π_t }
/// followed by remote clears, then remote contaminations. Per-vertex
/// contaminated-neighbor counts make a step cost proportional to the change,
/// not the graph, which keeps the counterexample replays (10^4+ vertices and
/// steps) cheap.
class Simulation {
 public:
  Simulation(const Graph& g, std::vector<Vertex> initial_lions,
             const VertexSet* initial_remote_clears = nullptr,
             const VertexSet* initial_remote_contaminations = nullptr);

  const std::vector<Vertex>& lions() const { return lions_; }
  const VertexSet& contaminated() const { return w_; }
  bool cleared() const { return w_.empty(); }
  // Applies one step; returns true when no vertex became contaminated (the
  // step was monotone). step_index is only used in error messages.
  bool apply(const StepAction& action, int step_index);
  GameState state() const { return {lions_, w_}; }

 private:
  void set_contaminated(Vertex v, bool value);

  const Graph* g_;
  std::vector<Vertex> lions_;
  VertexSet w_;
  VertexSet spread_reach_;              // { v : contaminated_nbrs_[v] > 0 }
  std::vector<int> contaminated_nbrs_;  // |N(v) ∩ W|
  std::vector<int> occupancy_;          // lions per vertex
};

struct SimulateOptions {
  bool record_states = true;
  bool check_component_invariant = false;
};

GameState step(const Graph& g, const GameState& state, const StepAction& action);
Trace simulate(const Graph& g, const Schedule& schedule,
               const SimulateOptions& opts = {});

/// Runtime invariant: every connected contaminated component must
/// have a lion in its neighborhood. Returns one violation per offending
/// component.
std::vector<Violation> check_component_invariant(const Graph& g,
                                                 const GameState& state,
                                                 int time = 0);

/// Reinterprets a schedule confined to the induced subgraph on h_vertices:
/// remote clears outside H are dropped, moves are relabeled to the induced
/// indices (sorted order of h_vertices). Throws if a lion trajectory or a
/// remote contamination leaves H.
Schedule restrict_to_subgraph(const Schedule& schedule, const Graph& g,
                              const VertexSet& h_vertices);

}  // namespace lions
