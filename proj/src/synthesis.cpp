#include "lions/synthesis.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace lions {

namespace {

// BFS path with lexicographically smallest parents; optionally restricted.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const VertexSet* within = nullptr) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::queue<Vertex> q;
  parent[from] = from;
  q.push(from);
  while (!q.empty() && parent[to] < 0) {
    Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (parent[u] >= 0) continue;
      if (within && !within->test(u)) continue;
      parent[u] = v;
      q.push(u);
    }
  }
  if (parent[to] < 0)
    throw DomainError("synthesis error: no route from " + std::to_string(from) +
                      " to " + std::to_string(to) + " inside the allowed region");
  std::vector<Vertex> path;
  for (Vertex at = to;; at = parent[at]) {
    path.push_back(at);
    if (at == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

class ScheduleBuilder {
 public:
  ScheduleBuilder(const Graph& g, std::vector<Vertex> initial)
      : g_(g), pos_(std::move(initial)) {
    schedule_.initial = pos_;
  }

  const std::vector<Vertex>& positions() const { return pos_; }

  void emit(const std::vector<std::pair<int, Vertex>>& movers) {
    StepAction action;
    action.moves.resize(pos_.size());
    for (size_t i = 0; i < pos_.size(); ++i) action.moves[i] = {pos_[i], pos_[i]};
    for (auto [lion, to] : movers) {
      action.moves[lion] = {pos_[lion], to};
      pos_[lion] = to;
    }
    schedule_.steps.push_back(std::move(action));
  }

  // All assigned lions advance simultaneously along their paths; early
  // arrivals wait.
  void walk_simultaneous(const std::vector<std::pair<int, std::vector<Vertex>>>& paths) {
    size_t longest = 0;
    for (const auto& [lion, path] : paths) longest = std::max(longest, path.size());
    for (size_t step = 1; step < longest; ++step) {
      std::vector<std::pair<int, Vertex>> movers;
      for (const auto& [lion, path] : paths)
        if (step < path.size()) movers.emplace_back(lion, path[step]);
      if (!movers.empty()) emit(movers);
    }
  }

  // One lion walks alone, one edge per step.
  void walk_single(int lion, const std::vector<Vertex>& path) {
    for (size_t step = 1; step < path.size(); ++step) emit({{lion, path[step]}});
  }

  Schedule take() { return std::move(schedule_); }

 private:
  const Graph& g_;
  std::vector<Vertex> pos_;
  Schedule schedule_;
};

std::vector<Vertex> bag_placement(const PathDecomposition& d, int lion_count) {
  std::vector<Vertex> initial = d.bags.front().to_vector();
  while (static_cast<int>(initial.size()) < lion_count)
    initial.push_back(initial.front());
  return initial;
}

void require_valid(const Graph& g, const PathDecomposition& d, const char* op) {
  auto check = validate_decomposition(g, d);
  if (!check.ok)
    throw DomainError(std::string(op) + ": invalid decomposition: " +
                      check.violations.front().condition + " — " +
                      check.violations.front().detail);
}

}  // namespace

Schedule clear_via_decomposition(const Graph& g, const PathDecomposition& d_in) {
  if (!g.is_connected())
    throw DomainError("clear_via_decomposition requires a connected graph");
  require_valid(g, d_in, "clear_via_decomposition");
  PathDecomposition d = normalize_proper(g, d_in);
  const int k = d.width() + 1;
  ScheduleBuilder builder(g, bag_placement(d, k));

  for (size_t i = 0; i + 1 < d.bags.size(); ++i) {
    VertexSet hold = d.bags[i] & d.bags[i + 1];
    VertexSet targets_set = d.bags[i + 1] - d.bags[i];

    // One resident lion per held vertex; everyone else is free to walk.
    std::vector<int> free_lions;
    {
      VertexSet unguarded = hold;
      for (int lion = 0; lion < k; ++lion) {
        Vertex at = builder.positions()[lion];
        if (unguarded.test(at))
          unguarded.reset(at);
        else
          free_lions.push_back(lion);
      }
      if (!unguarded.empty())
        throw DomainError("internal error: bag boundary not fully occupied");
    }

    // Greedy matching of free lions to new-bag targets by BFS distance.
    std::vector<Vertex> targets = targets_set.to_vector();
    std::vector<std::vector<int>> dist;
    for (int lion : free_lions)
      dist.push_back(bfs_distances(g, builder.positions()[lion]));
    std::vector<bool> lion_used(free_lions.size(), false);
    std::vector<bool> target_used(targets.size(), false);
    std::vector<std::pair<int, std::vector<Vertex>>> routes;
    for (size_t round = 0; round < targets.size(); ++round) {
      int best_lion = -1, best_target = -1;
      int best_dist = std::numeric_limits<int>::max();
      for (size_t a = 0; a < free_lions.size(); ++a) {
        if (lion_used[a]) continue;
        for (size_t b = 0; b < targets.size(); ++b) {
          if (target_used[b]) continue;
          int dd = dist[a][targets[b]];
          if (dd >= 0 && dd < best_dist) {
            best_dist = dd;
            best_lion = static_cast<int>(a);
            best_target = static_cast<int>(b);
          }
        }
      }
      if (best_lion < 0)
        throw DomainError("internal error: not enough free lions for new bag");
      lion_used[best_lion] = true;
      target_used[best_target] = true;
      routes.emplace_back(free_lions[best_lion],
                          shortest_path(g, builder.positions()[free_lions[best_lion]],
                                        targets[best_target]));
    }
    builder.walk_simultaneous(routes);
  }
  return builder.take();
}

Schedule clear_monotone_via_connected_decomposition(const Graph& g,
                                                    const PathDecomposition& d_in) {
  if (!g.is_connected())
    throw DomainError(
        "clear_monotone_via_connected_decomposition requires a connected graph");
  require_valid(g, d_in, "clear_monotone_via_connected_decomposition");
  PathDecomposition d = normalize_proper(g, d_in);

  // Connected-prefix requirement.
  VertexSet prefix(g.vertex_count());
  for (size_t i = 0; i < d.bags.size(); ++i) {
    prefix |= d.bags[i];
    if (components(g, prefix).size() != 1)
      throw DomainError(
          "clear_monotone_via_connected_decomposition: bag prefix " +
          std::to_string(i + 1) + " does not induce a connected subgraph");
  }

  const int k = d.width() + 1;
  ScheduleBuilder builder(g, bag_placement(d, k));
  VertexSet cleared = d.bags.front();

  for (size_t i = 0; i + 1 < d.bags.size(); ++i) {
    VertexSet hold = d.bags[i] & d.bags[i + 1];
    std::vector<int> free_lions;
    {
      VertexSet unguarded = hold;
      for (int lion = 0; lion < k; ++lion) {
        Vertex at = builder.positions()[lion];
        if (unguarded.test(at))
          unguarded.reset(at);
        else
          free_lions.push_back(lion);
      }
      if (!unguarded.empty())
        throw DomainError("internal error: bag boundary not fully occupied");
    }

    // Fill B_{i+1} \ B_i one target at a time, in BFS order from the cleared
    // region, each route confined to cleared vertices plus the target.
    VertexSet remaining = d.bags[i + 1] - d.bags[i];
    size_t next_free = 0;
    while (!remaining.empty()) {
      // nearest remaining target adjacent to the cleared region
      Vertex target = -1;
      remaining.for_each([&](Vertex t) {
        if (target >= 0) return;
        for (Vertex u : g.neighbors(t))
          if (cleared.test(u)) {
            target = t;
            return;
          }
      });
      if (target < 0)
        throw DomainError(
            "synthesis error: no remaining target touches the cleared region "
            "(non-connected-prefix input)");
      if (next_free >= free_lions.size())
        throw DomainError("internal error: free lions exhausted");
      int lion = free_lions[next_free++];
      VertexSet allowed = cleared;
      allowed.set(target);
      builder.walk_single(lion,
                          shortest_path(g, builder.positions()[lion], target, &allowed));
      cleared.set(target);
      remaining.reset(target);
    }
  }
  return builder.take();
}

PathDecomposition decomposition_from_monotone(const Graph& g, const Trace& trace) {
  if (trace.states.empty())
    throw DomainError("decomposition_from_monotone: trace has no recorded states");
  if (!trace.cleared)
    throw DomainError("decomposition_from_monotone: trace does not clear the graph");
  const int n = g.vertex_count();

  for (size_t t = 1; t < trace.states.size(); ++t) {
    const auto& prev = trace.states[t - 1];
    const auto& cur = trace.states[t];
    VertexSet regrowth = cur.contaminated - prev.contaminated;
    if (!regrowth.empty())
      throw DomainError("decomposition_from_monotone: trace not monotone at step " +
                        std::to_string(t));
    int moved = 0;
    for (size_t i = 0; i < cur.lions.size(); ++i)
      if (cur.lions[i] != prev.lions[i]) ++moved;
    if (moved > 1)
      throw DomainError("decomposition_from_monotone: trace not polite at step " +
                        std::to_string(t));
  }

  PathDecomposition d;
  VertexSet b0(n);
  for (Vertex v : trace.states.front().lions) b0.set(v);
  d.bags.push_back(b0);
  for (size_t t = 1; t < trace.states.size(); ++t) {
    const auto& prev = trace.states[t - 1];
    const auto& cur = trace.states[t];
    VertexSet bag = boundary(g, prev.contaminated.complement());
    for (Vertex v : cur.lions)
      if (prev.contaminated.test(v)) bag.set(v);
    if (bag != d.bags.back()) d.bags.push_back(std::move(bag));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Counterexample family (trees T_i and supergraphs G_i).

namespace {

// Worker plan relative to one level's tree indexing; -1 stands for the
// universal vertex.
struct WorkerScript {
  std::array<int, 2> initial{};
  std::vector<std::array<std::pair<int, int>, 2>> steps;
};

struct LevelBuild {
  std::vector<std::pair<Vertex, Vertex>> edges;
  long n = 0;  // tree order
  long t = 0;  // schedule steps
  WorkerScript script;
  Vertex left_root = -1;
  int left_vacate_step = -1;
  int left_reguard_step = -1;
};

LevelBuild build_level(int index) {
  if (index == 1) {
    LevelBuild b;
    b.n = 3;
    b.t = 1;
    b.edges = {{0, 1}, {0, 2}};
    b.script.initial = {1, 2};
    b.script.steps.push_back({std::make_pair(1, 0), std::make_pair(2, 0)});
    return b;
  }
  LevelBuild inner = build_level(index - 1);
  const long t = inner.t;
  const long path_len = t + 5;  // internal vertices per connecting path

  LevelBuild b;
  // Layout: root 0; left path 1..path_len; left copy at OL; right path; right copy.
  const long OL = 1 + path_len;
  const long ORp = OL + inner.n;           // right path start
  const long OR = ORp + path_len;          // right copy root
  b.n = OR + inner.n;
  b.left_root = static_cast<Vertex>(OL);

  auto map_left = [&](int v) { return v < 0 ? -1 : static_cast<int>(v + OL); };
  auto map_right = [&](int v) { return v < 0 ? -1 : static_cast<int>(v + OR); };

  b.edges.reserve(static_cast<size_t>(b.n - 1));
  // left path: 0 - 1 - 2 - ... - path_len - OL
  b.edges.emplace_back(0, 1);
  for (long i = 1; i < path_len; ++i) b.edges.emplace_back(i, i + 1);
  b.edges.emplace_back(path_len, OL);
  // left copy
  for (auto [u, v] : inner.edges) b.edges.emplace_back(u + OL, v + OL);
  // right path: 0 - ORp - ORp+1 - ... - OR
  b.edges.emplace_back(0, ORp);
  for (long i = ORp; i + 1 < ORp + path_len; ++i) b.edges.emplace_back(i, i + 1);
  b.edges.emplace_back(ORp + path_len - 1, OR);
  // right copy
  for (auto [u, v] : inner.edges) b.edges.emplace_back(u + OR, v + OR);

  auto& s = b.script;
  s.initial = {map_left(inner.script.initial[0]), map_left(inner.script.initial[1])};
  // Step 2: mimic the inner schedule on the left copy.
  for (const auto& step : inner.script.steps)
    s.steps.push_back({std::make_pair(map_left(step[0].first), map_left(step[0].second)),
                       std::make_pair(map_left(step[1].first), map_left(step[1].second))});
  // Step 3: both workers ride up the left path to the child of the root.
  {
    std::vector<int> up{static_cast<int>(OL)};
    for (long i = path_len; i >= 1; --i) up.push_back(static_cast<int>(i));
    for (size_t i = 0; i + 1 < up.size(); ++i)
      s.steps.push_back({std::make_pair(up[i], up[i + 1]), std::make_pair(up[i], up[i + 1])});
  }
  // Step 4: both jump to the universal vertex, exposing the left path.
  s.steps.push_back({std::make_pair(1, -1), std::make_pair(1, -1)});
  b.left_vacate_step = static_cast<int>(s.steps.size());
  // Step 5: jump to the inner starting positions inside the right copy.
  s.steps.push_back(
      {std::make_pair(-1, map_right(inner.script.initial[0])),
       std::make_pair(-1, map_right(inner.script.initial[1]))});
  // Step 6: mimic the inner schedule on the right copy.
  for (const auto& step : inner.script.steps)
    s.steps.push_back({std::make_pair(map_right(step[0].first), map_right(step[0].second)),
                       std::make_pair(map_right(step[1].first), map_right(step[1].second))});
  // Step 7: worker 0 hops to the left copy's root via the universal vertex.
  s.steps.push_back({std::make_pair(map_right(0), -1),
                     std::make_pair(map_right(0), map_right(0))});
  s.steps.push_back({std::make_pair(-1, static_cast<int>(OL)),
                     std::make_pair(map_right(0), map_right(0))});
  b.left_reguard_step = static_cast<int>(s.steps.size());
  // Step 8: both workers slide up their paths, meeting at the root.
  {
    std::vector<int> left_up{static_cast<int>(OL)};
    for (long i = path_len; i >= 1; --i) left_up.push_back(static_cast<int>(i));
    left_up.push_back(0);
    std::vector<int> right_up{static_cast<int>(OR)};
    for (long i = ORp + path_len - 1; i >= ORp; --i) right_up.push_back(static_cast<int>(i));
    right_up.push_back(0);
    for (size_t i = 0; i + 1 < left_up.size(); ++i)
      s.steps.push_back({std::make_pair(left_up[i], left_up[i + 1]),
                         std::make_pair(right_up[i], right_up[i + 1])});
  }
  b.t = static_cast<long>(s.steps.size());
  return b;
}

long level_order(int index) {
  long n = 3, t = 1;
  for (int i = 2; i <= index; ++i) {
    n = 1 + 2 * (t + 5) + 2 * n;
    t = 4 * t + 15;
  }
  return n;
}

}  // namespace

CounterexampleInstance counterexample_family(int index, long max_vertices) {
  if (index < 1) throw DomainError("counterexample index must be >= 1");
  long needed = level_order(index);
  if (needed + 1 > max_vertices)
    throw GuardError("counterexample level " + std::to_string(index) + " needs " +
                     std::to_string(needed + 1) +
                     " vertices, above the guard of " + std::to_string(max_vertices));

  LevelBuild b = build_level(index);
  CounterexampleInstance inst;
  inst.index = index;
  inst.tree = Graph(static_cast<int>(b.n), b.edges);
  inst.supergraph = add_universal_vertex(inst.tree);
  inst.duration = static_cast<int>(b.t);
  inst.left_root = b.left_root;
  inst.left_vacate_step = b.left_vacate_step;
  inst.left_reguard_step = b.left_reguard_step;
  if (index >= 2) {
    // distance from root 0 to the left copy's root
    auto dist = bfs_distances(inst.tree, 0);
    inst.left_path_edges = dist[b.left_root];
  }

  const Vertex u = inst.tree.vertex_count();
  auto real = [&](int v) { return v < 0 ? u : static_cast<Vertex>(v); };
  Schedule& sched = inst.schedule;
  sched.initial = {u, real(b.script.initial[0]), real(b.script.initial[1])};
  for (const auto& step : b.script.steps) {
    StepAction action;
    action.moves = {Move{u, u},
                    Move{real(step[0].first), real(step[0].second)},
                    Move{real(step[1].first), real(step[1].second)}};
    sched.steps.push_back(std::move(action));
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Monotone root-blocker schedule on complete binary trees.

namespace {

class RootBlockerBuilder {
 public:
  explicit RootBlockerBuilder(int height) : h_(height) {}

  Schedule build() {
    if (h_ == 1) {
      ScheduleBuilder builder(complete_binary_tree(1), {1});
      builder.emit({{0, 0}});
      builder.emit({{0, 2}});
      return builder.take();
    }
    Graph t = complete_binary_tree(h_);
    std::vector<Vertex> spine{0};
    for (int j = 1; j <= h_ - 1; ++j) spine.push_back(2 * spine.back() + 1);

    std::vector<Vertex> initial(h_);
    for (int j = 1; j <= h_ - 1; ++j) initial[j - 1] = spine[j];
    Vertex bottom = spine[h_ - 1];
    initial[h_ - 1] = 2 * bottom + 1;  // left leaf under the spine bottom

    builder_.emplace(t, initial);
    // Bottom height-1 subtree: sweep leaf -> root -> leaf -> root.
    emit_move(h_ - 1, bottom);
    emit_move(h_ - 1, 2 * bottom + 2);
    emit_move(h_ - 1, bottom);

    // Levels h-2 .. 1, then the root.
    for (int j = h_ - 2; j >= 1; --j) {
      move_stack(j, h_ - 1, spine[j + 1], spine[j]);
      enter_and_clear(j, h_ - 1, spine[j], 2 * spine[j] + 2, h_ - j - 1);
      move_stack(j, h_ - 1, 2 * spine[j] + 2, spine[j]);
    }
    move_stack(0, h_ - 1, spine[1], 0);
    enter_and_clear(0, h_ - 1, 0, 2, h_ - 1);
    move_stack(0, h_ - 1, 2, 0);
    return builder_->take();
  }

 private:
  void emit_move(int lion, Vertex to) { builder_->emit({{lion, to}}); }

  void move_stack(int first, int last, Vertex from, Vertex to) {
    for (int lion = first; lion <= last; ++lion) {
      if (builder_->positions()[lion] != from)
        throw DomainError("internal error: stack member misplaced");
      emit_move(lion, to);
    }
  }

  // Root-entry clearing of the height-d subtree rooted at `target`, entered
  // from `parent`, using lions first..last (d+1 of them) stacked at parent.
  // Ends with all of them stacked at `target`.
  void enter_and_clear(int first, int last, Vertex parent, Vertex target, int d) {
    if (last - first != d)
      throw DomainError("internal error: wrong team size for root entry");
    (void)parent;
    emit_move(first, target);  // blocker enters
    if (d == 0) return;
    for (int lion = first + 1; lion <= last; ++lion) emit_move(lion, target);
    enter_and_clear(first + 1, last, target, 2 * target + 1, d - 1);
    move_stack(first + 1, last, 2 * target + 1, target);
    enter_and_clear(first + 1, last, target, 2 * target + 2, d - 1);
    move_stack(first + 1, last, 2 * target + 2, target);
  }

  int h_;
  std::optional<ScheduleBuilder> builder_;
};

}  // namespace

Schedule monotone_root_blocker_schedule(int height) {
  if (height < 1) throw DomainError("height must be >= 1");
  if (height > 12) throw GuardError("root-blocker schedule guard: height <= 12");
  RootBlockerBuilder builder(height);
  return builder.build();
}

}  // namespace lions
