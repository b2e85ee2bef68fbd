#include "lions/engine.hpp"

#include <algorithm>
#include <string>

namespace lions {

Simulation::Simulation(const Graph& g, std::vector<Vertex> initial_lions,
                       const VertexSet* initial_remote_clears,
                       const VertexSet* initial_remote_contaminations)
    : g_(&g),
      lions_(std::move(initial_lions)),
      w_(g.vertex_count()),
      spread_reach_(g.vertex_count()),
      contaminated_nbrs_(g.vertex_count(), 0),
      occupancy_(g.vertex_count(), 0) {
  if (lions_.empty()) throw DomainError("at least one lion is required");
  for (Vertex v : lions_) {
    if (v < 0 || v >= g.vertex_count())
      throw DomainError("initial lion position " + std::to_string(v) +
                        " outside graph");
    occupancy_[v]++;
  }
  // W_0 = V \ L_0, then the time-zero analytical injections.
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (occupancy_[v] == 0) set_contaminated(v, true);
  if (initial_remote_clears) {
    if (initial_remote_clears->universe() != g.vertex_count())
      throw DomainError("initial remote clear set universe mismatch");
    initial_remote_clears->for_each([&](Vertex v) { set_contaminated(v, false); });
  }
  if (initial_remote_contaminations) {
    if (initial_remote_contaminations->universe() != g.vertex_count())
      throw DomainError("initial remote contamination set universe mismatch");
    initial_remote_contaminations->for_each([&](Vertex v) {
      if (occupancy_[v] == 0) set_contaminated(v, true);
    });
  }
}

void Simulation::set_contaminated(Vertex v, bool value) {
  if (w_.test(v) == value) return;
  if (value)
    w_.set(v);
  else
    w_.reset(v);
  int delta = value ? 1 : -1;
  for (Vertex u : g_->neighbors(v)) {
    contaminated_nbrs_[u] += delta;
    if (contaminated_nbrs_[u] == (value ? 1 : 0)) {
      if (value)
        spread_reach_.set(u);
      else
        spread_reach_.reset(u);
    }
  }
}

bool Simulation::apply(const StepAction& action, int step_index) {
  const auto where = [&] { return " at step " + std::to_string(step_index); };
  if (action.moves.size() != lions_.size())
    throw DomainError("expected " + std::to_string(lions_.size()) + " moves, got " +
                      std::to_string(action.moves.size()) + where());

  // Validate and stage the move tuple.
  for (size_t i = 0; i < action.moves.size(); ++i) {
    const Move& m = action.moves[i];
    if (m.from != lions_[i])
      throw DomainError("illegal move: lion " + std::to_string(i) + " is at " +
                        std::to_string(lions_[i]) + ", not " +
                        std::to_string(m.from) + where());
    if (!m.is_stay() && !g_->has_edge(m.from, m.to))
      throw DomainError("illegal move: no edge {" + std::to_string(m.from) + "," +
                        std::to_string(m.to) + "}" + where());
  }

  // Traversed edges of this step, as (endpoint, partner) pairs. The tuple is
  // small, so linear scans beat a map.
  std::vector<std::pair<Vertex, Vertex>> partners;
  std::vector<Vertex> targets(lions_.size());
  for (size_t i = 0; i < action.moves.size(); ++i) {
    targets[i] = action.moves[i].to;
    if (!action.moves[i].is_stay()) {
      partners.emplace_back(action.moves[i].from, action.moves[i].to);
      partners.emplace_back(action.moves[i].to, action.moves[i].from);
    }
  }

  // Shift occupancy_ to the post-move positions; lions_ still holds the old
  // ones until commit.
  for (Vertex v : lions_) occupancy_[v]--;
  for (Vertex v : targets) occupancy_[v]++;

  // Candidate contamination after the move: previous W plus everything with a
  // contaminated neighbor, minus L_t. Only endpoints of traversed edges can
  // deviate from the candidate set and need the exact rule.
  std::vector<Vertex> to_contaminate;
  std::vector<Vertex> to_clear;
  spread_reach_.for_each([&](Vertex v) {
    if (w_.test(v) || occupancy_[v] > 0) return;
    bool is_endpoint = false;
    for (const auto& [e, p] : partners)
      if (e == v) {
        is_endpoint = true;
        break;
      }
    if (is_endpoint) {
      // Exact rule: some contaminated neighbor reached over an untraversed edge.
      bool contaminated = false;
      for (Vertex u : g_->neighbors(v)) {
        if (!w_.test(u)) continue;
        bool blocked = false;
        for (const auto& [e, p] : partners)
          if (e == v && p == u) {
            blocked = true;
            break;
          }
        if (!blocked) {
          contaminated = true;
          break;
        }
      }
      if (!contaminated) return;
    }
    to_contaminate.push_back(v);
  });
  for (Vertex v : targets)
    if (w_.test(v)) to_clear.push_back(v);

  bool monotone_step = to_contaminate.empty();
  for (Vertex v : to_clear) set_contaminated(v, false);
  for (Vertex v : to_contaminate) set_contaminated(v, true);

  // Remote operations apply after the spread rule: a remote clear at t
  // guarantees v ∈ C_t.
  if (action.remote_clears) {
    if (action.remote_clears->universe() != g_->vertex_count())
      throw DomainError("remote clear set universe mismatch" + where());
    action.remote_clears->for_each([&](Vertex v) { set_contaminated(v, false); });
  }
  if (action.remote_contaminations) {
    if (action.remote_contaminations->universe() != g_->vertex_count())
      throw DomainError("remote contamination set universe mismatch" + where());
    action.remote_contaminations->for_each([&](Vertex v) {
      if (occupancy_[v] > 0) return;  // W excludes L_t
      if (!w_.test(v)) monotone_step = false;
      set_contaminated(v, true);
    });
  }

  lions_ = std::move(targets);
  return monotone_step;
}

// Direct one-shot evaluation of the rule from an arbitrary valid state. The
// incremental Simulation serves replays; this serves spot checks and tests.
GameState step(const Graph& g, const GameState& state, const StepAction& action) {
  if (state.contaminated.universe() != g.vertex_count())
    throw DomainError("state universe does not match graph");
  for (Vertex v : state.lions)
    if (state.contaminated.test(v))
      throw DomainError("invalid state: lion on contaminated vertex " +
                        std::to_string(v));
  const int n = g.vertex_count();
  std::vector<char> occupied_now(n, 0);
  if (action.moves.size() != state.lions.size())
    throw DomainError("expected " + std::to_string(state.lions.size()) +
                      " moves, got " + std::to_string(action.moves.size()));
  for (size_t i = 0; i < action.moves.size(); ++i) {
    const Move& m = action.moves[i];
    if (m.from != state.lions[i])
      throw DomainError("illegal move: lion " + std::to_string(i) + " is at " +
                        std::to_string(state.lions[i]) + ", not " +
                        std::to_string(m.from));
    if (!m.is_stay() && !g.has_edge(m.from, m.to))
      throw DomainError("illegal move: no edge {" + std::to_string(m.from) + "," +
                        std::to_string(m.to) + "}");
  }
  std::vector<Vertex> targets(state.lions.size());
  for (size_t i = 0; i < action.moves.size(); ++i) {
    targets[i] = action.moves[i].to;
    occupied_now[targets[i]] = 1;
  }
  auto traversed = [&](Vertex a, Vertex b) {
    for (const Move& m : action.moves)
      if (!m.is_stay() && ((m.from == a && m.to == b) || (m.from == b && m.to == a)))
        return true;
    return false;
  };
  VertexSet w(n);
  for (Vertex v = 0; v < n; ++v) {
    if (occupied_now[v]) continue;
    if (state.contaminated.test(v)) {
      w.set(v);
      continue;
    }
    for (Vertex u : g.neighbors(v)) {
      if (state.contaminated.test(u) && !traversed(v, u)) {
        w.set(v);
        break;
      }
    }
  }
  if (action.remote_clears) {
    if (action.remote_clears->universe() != n)
      throw DomainError("remote clear set universe mismatch");
    w -= *action.remote_clears;
  }
  if (action.remote_contaminations) {
    if (action.remote_contaminations->universe() != n)
      throw DomainError("remote contamination set universe mismatch");
    action.remote_contaminations->for_each([&](Vertex v) {
      if (!occupied_now[v]) w.set(v);
    });
  }
  return {std::move(targets), std::move(w)};
}

Trace simulate(const Graph& g, const Schedule& schedule,
               const SimulateOptions& opts) {
  Trace trace;
  trace.lions = schedule.lion_count();
  trace.steps = static_cast<int>(schedule.steps.size());

  Simulation sim(g, schedule.initial,
                 schedule.initial_remote_clears ? &*schedule.initial_remote_clears
                                                : nullptr,
                 schedule.initial_remote_contaminations
                     ? &*schedule.initial_remote_contaminations
                     : nullptr);
  auto record = [&](int time) {
    if (opts.record_states) trace.states.push_back(sim.state());
    if (opts.check_component_invariant) {
      auto v = check_component_invariant(g, sim.state(), time);
      trace.violations.insert(trace.violations.end(), v.begin(), v.end());
    }
  };
  record(0);
  for (size_t t = 0; t < schedule.steps.size(); ++t) {
    bool monotone_step = sim.apply(schedule.steps[t], static_cast<int>(t + 1));
    if (!monotone_step) trace.monotone = false;
    record(static_cast<int>(t + 1));
  }
  trace.cleared = sim.cleared();
  return trace;
}

std::vector<Violation> check_component_invariant(const Graph& g,
                                                 const GameState& state,
                                                 int time) {
  std::vector<Violation> out;
  VertexSet lion_mask(g.vertex_count());
  for (Vertex v : state.lions) lion_mask.set(v);
  for (const VertexSet& comp : components(g, state.contaminated)) {
    VertexSet nbrs = neighborhood(g, comp);
    if (!nbrs.intersects(lion_mask)) {
      out.push_back({time, "component-without-neighboring-lion",
                     "contaminated component of size " +
                         std::to_string(comp.count()) + " has no adjacent lion"});
    }
  }
  return out;
}

Schedule restrict_to_subgraph(const Schedule& schedule, const Graph& g,
                              const VertexSet& h_vertices) {
  auto sub = induced_subgraph(g, h_vertices);
  const auto map_vertex = [&](Vertex v, const char* what, int step_index) {
    if (v < 0 || v >= g.vertex_count() || sub.from_original[v] < 0)
      throw DomainError(std::string("restriction error: ") + what + " touches " +
                        std::to_string(v) + " outside the subgraph at step " +
                        std::to_string(step_index));
    return sub.from_original[v];
  };

  Schedule out;
  out.initial.reserve(schedule.initial.size());
  for (Vertex v : schedule.initial)
    out.initial.push_back(map_vertex(v, "initial position", 0));
  if (schedule.initial_remote_clears) {
    VertexSet rc(sub.graph.vertex_count());
    schedule.initial_remote_clears->for_each([&](Vertex v) {
      if (sub.from_original[v] >= 0) rc.set(sub.from_original[v]);
    });
    if (!rc.empty()) out.initial_remote_clears = std::move(rc);
  }
  if (schedule.initial_remote_contaminations) {
    VertexSet rw(sub.graph.vertex_count());
    schedule.initial_remote_contaminations->for_each([&](Vertex v) {
      rw.set(map_vertex(v, "initial remote contamination", 0));
    });
    if (!rw.empty()) out.initial_remote_contaminations = std::move(rw);
  }
  int t = 0;
  for (const StepAction& action : schedule.steps) {
    ++t;
    StepAction mapped;
    mapped.moves.reserve(action.moves.size());
    for (const Move& m : action.moves)
      mapped.moves.push_back(
          {map_vertex(m.from, "lion trajectory", t), map_vertex(m.to, "lion trajectory", t)});
    if (action.remote_clears) {
      VertexSet rc(sub.graph.vertex_count());
      action.remote_clears->for_each([&](Vertex v) {
        if (sub.from_original[v] >= 0) rc.set(sub.from_original[v]);
      });
      if (!rc.empty()) mapped.remote_clears = std::move(rc);
    }
    if (action.remote_contaminations) {
      VertexSet rw(sub.graph.vertex_count());
      action.remote_contaminations->for_each([&](Vertex v) {
        // A remote contamination outside H cannot be reinterpreted over H.
        rw.set(map_vertex(v, "remote contamination", t));
      });
      if (!rw.empty()) mapped.remote_contaminations = std::move(rw);
    }
    out.steps.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace lions
