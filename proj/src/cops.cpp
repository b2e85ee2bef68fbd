#include "lions/cops.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_map>

namespace lions {

CopState initial_cop_state(const Graph& g, const std::vector<Vertex>& cops) {
  if (cops.empty()) throw DomainError("at least one cop is required");
  CopState s;
  s.cops = cops;
  s.dirty_pre = VertexSet::full(g.vertex_count());
  s.dirty_post = s.dirty_pre;
  for (Vertex v : cops) {
    if (v < 0 || v >= g.vertex_count())
      throw DomainError("cop position outside graph");
    s.dirty_post.reset(v);
  }
  return s;
}

CopState cop_step(const Graph& g, const CopState& state,
                  const std::vector<Vertex>& moves) {
  if (moves.size() != state.cops.size())
    throw DomainError("expected " + std::to_string(state.cops.size()) +
                      " cop moves, got " + std::to_string(moves.size()));
  for (size_t i = 0; i < moves.size(); ++i) {
    if (moves[i] != state.cops[i] && !g.has_edge(state.cops[i], moves[i]))
      throw DomainError("illegal move for cop " + std::to_string(i) + ": no edge {" +
                        std::to_string(state.cops[i]) + "," +
                        std::to_string(moves[i]) + "}");
  }
  CopState next;
  next.cops = moves;
  // R_{t+1} = (N(S_t) ∪ S_t) \ P_t
  next.dirty_pre = state.dirty_post | neighborhood(g, state.dirty_post);
  for (Vertex v : state.cops) next.dirty_pre.reset(v);
  // S_{t+1} = R_{t+1} \ P_{t+1}
  next.dirty_post = next.dirty_pre;
  for (Vertex v : next.cops) next.dirty_post.reset(v);
  return next;
}

CopTrace simulate_cops(const Graph& g, const CopSchedule& schedule,
                       bool record_states) {
  CopTrace trace;
  CopState state = initial_cop_state(g, schedule.initial);
  if (record_states) trace.states.push_back(state);
  for (const auto& moves : schedule.steps) {
    state = cop_step(g, state, moves);
    if (record_states) trace.states.push_back(state);
  }
  trace.cleared = state.dirty_post.empty();
  return trace;
}

namespace {

using U128 = unsigned __int128;

struct CopKey {
  U128 cops;
  uint64_t dirty;
  bool operator==(const CopKey&) const = default;
};

struct CopKeyHash {
  size_t operator()(const CopKey& k) const {
    uint64_t h = k.dirty * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<uint64_t>(k.cops) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<uint64_t>(k.cops >> 64) + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

U128 pack_sorted(const std::vector<Vertex>& sorted) {
  U128 p = 0;
  for (size_t i = 0; i < sorted.size(); ++i)
    p |= static_cast<U128>(sorted[i]) << (6 * i);
  return p;
}

struct CopRec {
  CopKey key;
  int32_t parent;
};

// BFS over (sorted cop multiset, S_t) with witness reconstruction, mirroring
// the lion searcher.
class CopSearcher {
 public:
  CopSearcher(const Graph& g, int k, long budget)
      : g_(g), n_(g.vertex_count()), k_(k), budget_(budget) {
    adj_mask_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : g.neighbors(v)) adj_mask_[v] |= 1ull << u;
    full_mask_ = n_ == 64 ? ~0ull : (1ull << n_) - 1;
  }

  std::optional<CopSchedule> run(long* nodes) {
    std::vector<Vertex> tuple(k_, 0);
    while (true) {
      uint64_t pmask = 0;
      for (Vertex v : tuple) pmask |= 1ull << v;
      uint64_t dirty = full_mask_ & ~pmask;
      if (try_insert(pack_sorted(tuple), dirty, -1) && dirty == 0) {
        *nodes = expanded_;
        return reconstruct(static_cast<int32_t>(states_.size() - 1));
      }
      int i = k_ - 1;
      while (i >= 0 && tuple[i] == n_ - 1) --i;
      if (i < 0) break;
      ++tuple[i];
      for (int j = i + 1; j < k_; ++j) tuple[j] = tuple[i];
    }

    size_t head = 0;
    while (head < queue_.size()) {
      int32_t idx = queue_[head++];
      ++expanded_;
      if (budget_ > 0 && expanded_ > budget_) {
        *nodes = expanded_;
        throw GuardError("cop search budget exhausted; result indeterminate");
      }
      CopKey key = states_[idx].key;
      Vertex froms[32];
      for (int i = 0; i < k_; ++i)
        froms[i] = static_cast<Vertex>((key.cops >> (6 * i)) & 63);
      std::optional<CopSchedule> found;
      for_each_tuple(froms, [&](const Vertex* targets) {
        uint64_t next = next_dirty(key.dirty, froms, targets);
        Vertex sorted[32];
        std::copy(targets, targets + k_, sorted);
        std::sort(sorted, sorted + k_);
        std::vector<Vertex> sv(sorted, sorted + k_);
        if (!try_insert(pack_sorted(sv), next, idx)) return false;
        if (next == 0) {
          found = reconstruct(static_cast<int32_t>(states_.size() - 1));
          return true;
        }
        return false;
      });
      if (found) {
        *nodes = expanded_;
        return found;
      }
    }
    *nodes = expanded_;
    return std::nullopt;
  }

 private:
  uint64_t next_dirty(uint64_t s, const Vertex* froms, const Vertex* targets) const {
    uint64_t spread = s;
    uint64_t m = s;
    while (m) {
      spread |= adj_mask_[__builtin_ctzll(m)];
      m &= m - 1;
    }
    uint64_t pmask_old = 0, pmask_new = 0;
    for (int i = 0; i < k_; ++i) {
      pmask_old |= 1ull << froms[i];
      pmask_new |= 1ull << targets[i];
    }
    return (spread & ~pmask_old) & ~pmask_new;
  }

  template <typename F>
  bool for_each_tuple(const Vertex* froms, F&& f) const {
    Vertex targets[32];
    int opt[32];
    for (int i = 0; i < k_; ++i) {
      opt[i] = 0;
      targets[i] = froms[i];
    }
    if (f(targets)) return true;  // all-stay is meaningful here: capture after spread
    while (true) {
      int i = k_ - 1;
      while (i >= 0) {
        const auto& nbrs = g_.neighbors(froms[i]);
        if (opt[i] < static_cast<int>(nbrs.size())) {
          targets[i] = nbrs[opt[i]];
          ++opt[i];
          break;
        }
        opt[i] = 0;
        targets[i] = froms[i];
        --i;
      }
      if (i < 0) return false;
      if (f(targets)) return true;
    }
  }

  bool try_insert(U128 cops_packed, uint64_t dirty, int32_t parent) {
    CopKey key{cops_packed, dirty};
    auto [it, inserted] = visited_.try_emplace(key, static_cast<int32_t>(states_.size()));
    if (!inserted) return false;
    states_.push_back({key, parent});
    queue_.push_back(it->second);
    return true;
  }

  CopSchedule reconstruct(int32_t goal) const {
    std::vector<int32_t> chain;
    for (int32_t at = goal; at >= 0; at = states_[at].parent) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());

    CopSchedule out;
    Vertex buf[32];
    for (int i = 0; i < k_; ++i)
      buf[i] = static_cast<Vertex>((states_[chain[0]].key.cops >> (6 * i)) & 63);
    out.initial.assign(buf, buf + k_);

    std::vector<Vertex> engine_order = out.initial;
    for (size_t si = 1; si < chain.size(); ++si) {
      const CopKey& child = states_[chain[si]].key;
      Vertex froms[32];
      for (int i = 0; i < k_; ++i)
        froms[i] = static_cast<Vertex>((states_[chain[si - 1]].key.cops >> (6 * i)) & 63);
      Vertex found_targets[32];
      bool found = false;
      for_each_tuple(froms, [&](const Vertex* targets) {
        uint64_t next = next_dirty(states_[chain[si - 1]].key.dirty, froms, targets);
        Vertex sorted[32];
        std::copy(targets, targets + k_, sorted);
        std::sort(sorted, sorted + k_);
        std::vector<Vertex> sv(sorted, sorted + k_);
        if (next == child.dirty && pack_sorted(sv) == child.cops) {
          std::copy(targets, targets + k_, found_targets);
          found = true;
          return true;
        }
        return false;
      });
      if (!found) throw DomainError("internal error: cop witness reconstruction failed");

      std::vector<Vertex> step(k_);
      std::vector<bool> used(k_, false);
      for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) {
          if (!used[j] && froms[j] == engine_order[i]) {
            used[j] = true;
            step[i] = found_targets[j];
            break;
          }
        }
      }
      engine_order = step;
      out.steps.push_back(std::move(step));
    }
    return out;
  }

  const Graph& g_;
  int n_;
  int k_;
  long budget_;
  long expanded_ = 0;
  uint64_t full_mask_ = 0;
  std::vector<uint64_t> adj_mask_;
  std::unordered_map<CopKey, int32_t, CopKeyHash> visited_;
  std::vector<CopRec> states_;
  std::vector<int32_t> queue_;
};

}  // namespace

CopSolveResult cop_number_exact(const Graph& g, const SearchLimits& limits) {
  if (g.vertex_count() == 0) throw DomainError("empty graph");
  if (!g.is_connected()) throw DomainError("cop solver requires a connected graph");
  if (g.vertex_count() > 64) throw GuardError("cop solver supports at most 64 vertices");
  if (!limits.override_size_guard && g.vertex_count() > limits.size_guard)
    throw GuardError("graph order " + std::to_string(g.vertex_count()) +
                     " exceeds size guard " + std::to_string(limits.size_guard));

  auto start = std::chrono::steady_clock::now();
  CopSolveResult out;
  for (int k = 1;; ++k) {
    if (k >= g.vertex_count()) {
      out.value = k;
      out.witness.initial.clear();
      for (Vertex v = 0; v < g.vertex_count(); ++v) out.witness.initial.push_back(v);
      while (static_cast<int>(out.witness.initial.size()) < k)
        out.witness.initial.push_back(0);
      break;
    }
    if (k > 21) throw GuardError("cop solver supports at most 21 cops");
    CopSearcher searcher(g, k, limits.node_budget);
    long nodes = 0;
    auto witness = searcher.run(&nodes);
    out.nodes_expanded += nodes;
    if (witness) {
      out.value = k;
      out.witness = std::move(*witness);
      break;
    }
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

Schedule lions_from_cops(const Graph& g, const CopSchedule& cs) {
  auto trace = simulate_cops(g, cs, /*record_states=*/false);
  if (!trace.cleared)
    throw DomainError("lions_from_cops: cop schedule does not clear the graph");

  const int c = cs.cop_count();
  const int T = static_cast<int>(cs.steps.size());
  // trajectory[j][t] = cop j's vertex after turn t
  std::vector<std::vector<Vertex>> traj(c, std::vector<Vertex>(T + 1));
  for (int j = 0; j < c; ++j) traj[j][0] = cs.initial[j];
  for (int t = 1; t <= T; ++t)
    for (int j = 0; j < c; ++j) traj[j][t] = cs.steps[t - 1][j];

  // Lions 2j and 2j+1 shadow cop j at offsets -1 and 0, with v_{-1} = v_0.
  Schedule s;
  for (int j = 0; j < c; ++j) {
    s.initial.push_back(traj[j][0]);
    s.initial.push_back(traj[j][0]);
  }
  for (int t = 1; t <= T; ++t) {
    StepAction action;
    for (int j = 0; j < c; ++j) {
      Vertex vm2 = t >= 2 ? traj[j][t - 2] : traj[j][0];
      Vertex vm1 = traj[j][t - 1];
      action.moves.push_back({vm2, vm1});
      action.moves.push_back({vm1, traj[j][t]});
    }
    s.steps.push_back(std::move(action));
  }
  return s;
}

CopSchedule cops_from_lions(const Graph& g, const Schedule& s) {
  if (s.has_remote_ops())
    throw DomainError("cops_from_lions: schedule carries remote operations");
  auto trace = simulate(g, s, {.record_states = false});
  if (!trace.cleared)
    throw DomainError("cops_from_lions: lion schedule does not clear the graph");

  CopSchedule cs;
  cs.initial = s.initial;
  for (const auto& action : s.steps) {
    std::vector<Vertex> step(action.moves.size());
    for (size_t i = 0; i < action.moves.size(); ++i) step[i] = action.moves[i].to;
    cs.steps.push_back(std::move(step));
  }
  return cs;
}

}  // namespace lions
