#include "lions/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

namespace lions {

namespace {

using U128 = unsigned __int128;

// Canonical state: lions packed 6 bits each in sorted order, plus the
// contaminated mask.
struct StateKey {
  U128 lions;
  uint64_t w;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  size_t operator()(const StateKey& k) const {
    uint64_t h = k.w * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<uint64_t>(k.lions) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<uint64_t>(k.lions >> 64) + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

U128 pack_sorted(const std::vector<Vertex>& sorted) {
  U128 p = 0;
  for (size_t i = 0; i < sorted.size(); ++i)
    p |= static_cast<U128>(sorted[i]) << (6 * i);
  return p;
}

struct StateRec {
  StateKey key;
  int32_t parent;  // -1 for roots
};

class Searcher {
 public:
  Searcher(const Graph& g, int k, bool monotone, bool polite, long budget)
      : g_(g), n_(g.vertex_count()), k_(k), monotone_(monotone), polite_(polite),
        budget_(budget) {
    adj_mask_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : g.neighbors(v)) adj_mask_[v] |= 1ull << u;
    full_mask_ = n_ == 64 ? ~0ull : (1ull << n_) - 1;
    if (n_ <= 16) {
      spread_table_.assign(1ull << n_, 0);
      for (uint64_t m = 1; m < spread_table_.size(); ++m) {
        int b = __builtin_ctzll(m);
        spread_table_[m] = spread_table_[m & (m - 1)] | adj_mask_[b];
      }
    }
  }

  ClearableResult run() {
    ClearableResult result;
    if (seed_initial_states(result)) return result;
    size_t head = 0;
    while (head < queue_.size()) {
      int32_t idx = queue_[head++];
      ++expanded_;
      if (budget_ > 0 && expanded_ > budget_) {
        result.status = Clearability::kUnknown;
        result.nodes_expanded = expanded_;
        return result;
      }
      if (expand(idx, result)) return result;
    }
    result.status = Clearability::kNo;
    result.nodes_expanded = expanded_;
    return result;
  }

 private:
  uint64_t neighborhood_mask(uint64_t w) const {
    if (!spread_table_.empty()) return spread_table_[w];
    uint64_t out = 0;
    while (w) {
      out |= adj_mask_[__builtin_ctzll(w)];
      w &= w - 1;
    }
    return out;
  }

  // W after a move tuple from state w. targets/froms are tuple-ordered.
  uint64_t next_w(uint64_t w, const Vertex* froms, const Vertex* targets) const {
    uint64_t lmask = 0;
    for (int i = 0; i < k_; ++i) lmask |= 1ull << targets[i];
    uint64_t base = (w | neighborhood_mask(w)) & ~lmask;
    uint64_t fresh = base & ~w;
    if (fresh) {
      for (int i = 0; i < k_; ++i) {
        if (froms[i] == targets[i]) continue;
        for (Vertex v : {froms[i], targets[i]}) {
          if (!((fresh >> v) & 1)) continue;
          // Exact rule at a traversed endpoint.
          uint64_t sources = adj_mask_[v] & w;
          for (int j = 0; j < k_; ++j) {
            if (froms[j] == targets[j]) continue;
            if (froms[j] == v) sources &= ~(1ull << targets[j]);
            if (targets[j] == v) sources &= ~(1ull << froms[j]);
          }
          if (!sources) {
            base &= ~(1ull << v);
            fresh &= ~(1ull << v);
          }
        }
      }
    }
    return base;
  }

  // Returns true when the goal was found and `result` is filled.
  bool seed_initial_states(ClearableResult& result) {
    std::vector<Vertex> tuple(k_, 0);
    while (true) {
      uint64_t lmask = 0;
      for (Vertex v : tuple) lmask |= 1ull << v;
      uint64_t w = full_mask_ & ~lmask;
      if (try_insert(pack_sorted(tuple), w, -1)) {
        if (w == 0) {
          result.status = Clearability::kYes;
          result.witness = reconstruct(static_cast<int32_t>(states_.size() - 1));
          result.nodes_expanded = expanded_;
          return true;
        }
      }
      // next non-decreasing tuple
      int i = k_ - 1;
      while (i >= 0 && tuple[i] == n_ - 1) --i;
      if (i < 0) break;
      ++tuple[i];
      for (int j = i + 1; j < k_; ++j) tuple[j] = tuple[i];
    }
    return false;
  }

  bool try_insert(U128 lions_packed, uint64_t w, int32_t parent) {
    StateKey key{lions_packed, w};
    auto [it, inserted] = visited_.try_emplace(key, static_cast<int32_t>(states_.size()));
    if (!inserted) return false;
    states_.push_back({key, parent});
    queue_.push_back(it->second);
    return true;
  }

  void unpack(U128 packed, Vertex* out) const {
    for (int i = 0; i < k_; ++i) out[i] = static_cast<Vertex>((packed >> (6 * i)) & 63);
  }

  // Enumerates successor tuples of a state in lexicographic order, calling
  // f(froms, targets). Returns true if f returned true (stop).
  template <typename F>
  bool for_each_successor(const Vertex* froms, F&& f) const {
    if (polite_) {
      Vertex targets[32];
      std::copy(froms, froms + k_, targets);
      for (int i = 0; i < k_; ++i) {
        for (Vertex to : g_.neighbors(froms[i])) {
          targets[i] = to;
          if (f(targets)) return true;
        }
        targets[i] = froms[i];
      }
      return false;
    }
    // Odometer over per-lion options: stay first, then neighbors ascending.
    Vertex targets[32];
    int opt[32];
    for (int i = 0; i < k_; ++i) {
      opt[i] = 0;
      targets[i] = froms[i];
    }
    while (true) {
      // advance odometer (skips the initial all-stay combination)
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

  bool expand(int32_t idx, ClearableResult& result) {
    StateKey key = states_[idx].key;  // copy: states_ may reallocate
    Vertex froms[32];
    unpack(key.lions, froms);
    Vertex sorted[32];
    return for_each_successor(froms, [&](const Vertex* targets) {
      uint64_t w = next_w(key.w, froms, targets);
      if (monotone_ && (w & ~key.w)) return false;
      std::copy(targets, targets + k_, sorted);
      std::sort(sorted, sorted + k_);
      std::vector<Vertex> sorted_vec(sorted, sorted + k_);
      if (!try_insert(pack_sorted(sorted_vec), w, idx)) return false;
      if (w == 0) {
        result.status = Clearability::kYes;
        result.witness = reconstruct(static_cast<int32_t>(states_.size() - 1));
        result.nodes_expanded = expanded_;
        return true;
      }
      return false;
    });
  }

  // Rebuilds the move tuples along the parent chain by re-enumerating each
  // parent's successors (deterministic order makes the first producer of the
  // child state the one that set its parent pointer).
  Schedule reconstruct(int32_t goal) const {
    std::vector<int32_t> chain;
    for (int32_t at = goal; at >= 0; at = states_[at].parent) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());

    Schedule schedule;
    Vertex buf[32];
    unpack(states_[chain[0]].key.lions, buf);
    schedule.initial.assign(buf, buf + k_);

    std::vector<Vertex> engine_order = schedule.initial;
    for (size_t si = 1; si < chain.size(); ++si) {
      const StateKey& child = states_[chain[si]].key;
      Vertex froms[32];
      unpack(states_[chain[si - 1]].key.lions, froms);
      Vertex found_targets[32];
      bool found = false;
      for_each_successor(froms, [&](const Vertex* targets) {
        uint64_t w = next_w(states_[chain[si - 1]].key.w, froms, targets);
        if (monotone_ && (w & ~states_[chain[si - 1]].key.w)) return false;
        Vertex sorted[32];
        std::copy(targets, targets + k_, sorted);
        std::sort(sorted, sorted + k_);
        std::vector<Vertex> sv(sorted, sorted + k_);
        if (w == child.w && pack_sorted(sv) == child.lions) {
          std::copy(targets, targets + k_, found_targets);
          found = true;
          return true;
        }
        return false;
      });
      if (!found) throw DomainError("internal error: witness reconstruction failed");

      // Permute the tuple (froms -> targets) onto the engine's lion order.
      StepAction action;
      action.moves.resize(k_);
      std::vector<bool> used(k_, false);
      for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) {
          if (!used[j] && froms[j] == engine_order[i]) {
            used[j] = true;
            action.moves[i] = {engine_order[i], found_targets[j]};
            break;
          }
        }
      }
      for (int i = 0; i < k_; ++i) engine_order[i] = action.moves[i].to;
      schedule.steps.push_back(std::move(action));
    }
    return schedule;
  }

  const Graph& g_;
  int n_;
  int k_;
  bool monotone_;
  bool polite_;
  long budget_;
  long expanded_ = 0;
  uint64_t full_mask_ = 0;
  std::vector<uint64_t> adj_mask_;
  std::vector<uint64_t> spread_table_;
  std::unordered_map<StateKey, int32_t, StateKeyHash> visited_;
  std::vector<StateRec> states_;
  std::vector<int32_t> queue_;
};

void check_solver_input(const Graph& g, const SearchLimits& limits) {
  if (g.vertex_count() == 0) throw DomainError("empty graph");
  if (!g.is_connected()) throw DomainError("solver requires a connected graph");
  if (g.vertex_count() > 64)
    throw GuardError("solver supports at most 64 vertices");
  if (!limits.override_size_guard && g.vertex_count() > limits.size_guard)
    throw GuardError("graph order " + std::to_string(g.vertex_count()) +
                     " exceeds size guard " + std::to_string(limits.size_guard) +
                     " (pass an explicit override to proceed)");
}

Schedule trivial_cover_schedule(const Graph& g, int k) {
  // k >= n: occupy every vertex at t = 0.
  Schedule s;
  for (Vertex v = 0; v < g.vertex_count(); ++v) s.initial.push_back(v);
  while (static_cast<int>(s.initial.size()) < k) s.initial.push_back(0);
  return s;
}

SolveResult solve_minimum(const Graph& g, bool monotone, bool polite,
                          const SearchLimits& limits) {
  check_solver_input(g, limits);
  auto start = std::chrono::steady_clock::now();
  SolveResult out;
  for (int k = 1;; ++k) {
    if (k >= g.vertex_count()) {
      out.value = k;
      out.witness = trivial_cover_schedule(g, k);
      break;
    }
    ClearableResult r = clearable(g, k, monotone, polite, limits);
    out.nodes_expanded += r.nodes_expanded;
    if (r.status == Clearability::kYes) {
      out.value = k;
      out.witness = std::move(*r.witness);
      break;
    }
    if (r.status == Clearability::kUnknown)
      throw GuardError("search budget exhausted at k = " + std::to_string(k) +
                       "; result indeterminate");
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

}  // namespace

ClearableResult clearable(const Graph& g, int k, bool monotone, bool polite,
                          const SearchLimits& limits) {
  check_solver_input(g, limits);
  if (k < 1) throw DomainError("lion count must be >= 1");
  if (k >= g.vertex_count()) {
    ClearableResult r;
    r.status = Clearability::kYes;
    r.witness = trivial_cover_schedule(g, k);
    return r;
  }
  if (k > 21) throw GuardError("solver supports at most 21 lions");
  Searcher searcher(g, k, monotone, polite, limits.node_budget);
  return searcher.run();
}

SolveResult lion_number(const Graph& g, const SearchLimits& limits) {
  return solve_minimum(g, /*monotone=*/false, /*polite=*/false, limits);
}

SolveResult monotone_lion_number(const Graph& g, const SearchLimits& limits) {
  return solve_minimum(g, /*monotone=*/true, /*polite=*/true, limits);
}

}  // namespace lions
