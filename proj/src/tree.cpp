#include "lions/tree.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace lions {

namespace {

enum class TreeValueKind { kLion, kPathwidth };

using Adj = std::vector<std::vector<int>>;

bool adj_is_path(const Adj& t) {
  for (const auto& nb : t)
    if (nb.size() > 2) return false;
  return true;
}

int path_base(TreeValueKind kind, size_t n) {
  if (kind == TreeValueKind::kLion) return 1;
  return n >= 2 ? 1 : 0;
}

// Minimal vertex count of a tree with value >= k. Both recursions satisfy
// N(k+1) = 3 N(k) + 1 from the three-branch rule.
long min_size_for_value(TreeValueKind kind, int k) {
  long n = kind == TreeValueKind::kLion ? 1 : (k >= 1 ? 2 : 1);
  int base = kind == TreeValueKind::kLion ? 1 : 1;
  if (kind == TreeValueKind::kPathwidth && k <= 0) return 1;
  for (int i = base; i < k; ++i) n = 3 * n + 1;
  return n;
}

int max_value_for_size(TreeValueKind kind, size_t n) {
  int k = kind == TreeValueKind::kLion ? 1 : 1;
  while (min_size_for_value(kind, k + 1) <= static_cast<long>(n)) ++k;
  return k;
}

// Replaces every maximal chain of degree-2 vertices by a chain of
// min(length, 3) edges. Values of both recursions are invariant under this
// (chain-length classes 1 / 2 / >=3 are all that the base cases can see), and
// it is what makes the memoization collapse the self-similar counterexample
// trees. labels[i] = original vertex of anchor i, or -1 for chain filler.
struct Smoothed {
  Adj adj;
  std::vector<int> labels;
};

Smoothed smooth_cap3(const Adj& t, const std::vector<int>& labels_in) {
  const int n = static_cast<int>(t.size());
  Smoothed out;
  std::vector<int> anchor_id(n, -1);
  for (int v = 0; v < n; ++v) {
    if (t[v].size() != 2) {
      anchor_id[v] = static_cast<int>(out.adj.size());
      out.adj.emplace_back();
      out.labels.push_back(labels_in[v]);
    }
  }
  if (out.adj.empty()) {
    // Degenerate: every vertex has degree 2 — impossible in a tree.
    throw DomainError("internal error: tree with all degrees 2");
  }
  auto add_edge = [&](int a, int b) {
    out.adj[a].push_back(b);
    out.adj[b].push_back(a);
  };
  // Walk each chain once, from its lower-indexed anchor endpoint.
  std::vector<char> done(n, 0);
  for (int a = 0; a < n; ++a) {
    if (anchor_id[a] < 0) continue;
    for (int start : t[a]) {
      int prev = a, cur = start, len = 1;
      if (anchor_id[start] >= 0) {
        if (a < start) add_edge(anchor_id[a], anchor_id[start]);
        continue;
      }
      if (done[start]) continue;
      while (anchor_id[cur] < 0) {
        done[cur] = 1;
        int nxt = (t[cur][0] == prev) ? t[cur][1] : t[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      if (anchor_id[a] <= anchor_id[cur] || anchor_id[cur] < 0) {
        int capped = std::min(len, 3);
        int from = anchor_id[a];
        for (int i = 1; i < capped; ++i) {
          int mid = static_cast<int>(out.adj.size());
          out.adj.emplace_back();
          out.labels.push_back(-1);
          add_edge(from, mid);
          from = mid;
        }
        add_edge(from, anchor_id[cur]);
      }
    }
  }
  return out;
}

// Canonical code of a free tree: AHU strings rooted at the center (or the
// sorted pair of half-codes for bicentral trees).
std::string rooted_code(const Adj& t, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int u : t[v])
    if (u != parent) child_codes.push_back(rooted_code(t, u, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (auto& c : child_codes) out += c;
  out += ")";
  return out;
}

std::vector<int> tree_centers(const Adj& t) {
  const int n = static_cast<int>(t.size());
  if (n == 1) return {0};
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(t[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int u : t[v])
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  return layer;
}

std::string canonical_code(const Adj& t) {
  auto centers = tree_centers(t);
  if (centers.size() == 1) return "C" + rooted_code(t, centers[0], -1);
  std::string a = rooted_code(t, centers[0], centers[1]);
  std::string b = rooted_code(t, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "B" + a + b;
}

struct SplitComponent {
  std::vector<int> vertices;  // indices in the parent's adjacency
  int root = -1;              // the member adjacent to the removed vertex
};

std::vector<SplitComponent> split_at(const Adj& t, int v) {
  const int n = static_cast<int>(t.size());
  std::vector<char> seen(n, 0);
  seen[v] = 1;
  std::vector<SplitComponent> comps;
  for (int root : t[v]) {
    if (seen[root]) continue;
    SplitComponent comp;
    comp.root = root;
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.vertices.push_back(x);
      for (int u : t[x])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

Adj extract_component(const Adj& t, const std::vector<int>& vertices,
                      std::vector<int>& labels_out,
                      const std::vector<int>& labels_in) {
  std::vector<int> rank(t.size(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) rank[vertices[i]] = static_cast<int>(i);
  Adj out(vertices.size());
  labels_out.resize(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    labels_out[i] = labels_in[vertices[i]];
    for (int u : t[vertices[i]])
      if (rank[u] >= 0) out[i].push_back(rank[u]);
  }
  return out;
}

class TreeValueSolver {
 public:
  explicit TreeValueSolver(TreeValueKind kind) : kind_(kind) {}

  // `t` must already be smoothed. with_witness asks for the split vertex
  // label attaining the maximum.
  int solve(const Adj& t, const std::vector<int>& labels, int* witness_label) {
    if (witness_label) *witness_label = -1;
    if (adj_is_path(t)) return path_base(kind_, t.size());
    std::string key = canonical_code(t);
    if (!witness_label) {
      auto it = memo().find(key);
      if (it != memo().end()) return it->second;
    }

    const int ub = max_value_for_size(kind_, t.size());
    // Candidate split vertices sorted by the size of their third-largest
    // component, best first; the size bound prunes hopeless candidates.
    std::vector<std::pair<long, int>> candidates;
    for (int v = 0; v < static_cast<int>(t.size()); ++v) {
      if (t[v].size() < 3) continue;
      std::array<long, 3> top{0, 0, 0};
      for (const auto& comp : split_at(t, v)) {
        long s = static_cast<long>(comp.vertices.size());
        if (s > top[0]) std::swap(s, top[0]);
        if (s > top[1]) std::swap(s, top[1]);
        if (s > top[2]) std::swap(s, top[2]);
      }
      candidates.emplace_back(-top[2], v);
    }
    std::sort(candidates.begin(), candidates.end());

    int best_third = 0;
    int best_vertex = -1;
    for (auto [neg_third_size, v] : candidates) {
      if (best_third + 1 >= ub && !witness_label) break;
      if (-neg_third_size < min_size_for_value(kind_, best_third + 1) &&
          best_vertex >= 0)
        continue;
      auto comps = split_at(t, v);
      std::vector<int> values;
      values.reserve(comps.size());
      for (const auto& comp : comps) {
        std::vector<int> comp_labels;
        Adj sub = extract_component(t, comp.vertices, comp_labels, labels);
        Smoothed sm = smooth_cap3(sub, comp_labels);
        values.push_back(solve(sm.adj, sm.labels, nullptr));
      }
      std::sort(values.begin(), values.end(), std::greater<>());
      int third = values.size() >= 3 ? values[2] : 0;
      if (third > best_third || best_vertex < 0) {
        best_third = third;
        best_vertex = v;
      }
    }

    int result = best_third >= 1 ? best_third + 1 : path_base(kind_, t.size());
    {
      std::lock_guard<std::mutex> lock(memo_mutex());
      memo().emplace(std::move(key), result);
    }
    if (witness_label && best_third >= 1) *witness_label = labels[best_vertex];
    return result;
  }

 private:
  std::unordered_map<std::string, int>& memo() {
    static std::unordered_map<std::string, int> lion_memo;
    static std::unordered_map<std::string, int> pw_memo;
    return kind_ == TreeValueKind::kLion ? lion_memo : pw_memo;
  }
  std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
  }

  TreeValueKind kind_;
};

Adj graph_to_adj(const Graph& g) {
  Adj t(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    t[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return t;
}

void check_tree(const Graph& t, const char* op) {
  if (t.vertex_count() == 0) throw DomainError(std::string(op) + ": empty graph");
  if (!t.is_tree())
    throw DomainError(std::string(op) + ": input is not a tree (connected, acyclic)");
}

TreeCert tree_value_cert(const Graph& t, TreeValueKind kind, const char* op) {
  check_tree(t, op);
  Adj adj = graph_to_adj(t);
  std::vector<int> labels(t.vertex_count());
  for (int i = 0; i < t.vertex_count(); ++i) labels[i] = i;
  TreeValueSolver solver(kind);
  if (adj_is_path(adj)) return {path_base(kind, adj.size()), std::nullopt};
  Smoothed sm = smooth_cap3(adj, labels);
  int witness = -1;
  int value = solver.solve(sm.adj, sm.labels, &witness);
  TreeCert cert;
  cert.value = value;
  if (witness >= 0) cert.witness_vertex = witness;
  return cert;
}

}  // namespace

TreeCert tree_lion_number(const Graph& t) {
  return tree_value_cert(t, TreeValueKind::kLion, "tree_lion_number");
}

TreeCert tree_pathwidth(const Graph& t) {
  return tree_value_cert(t, TreeValueKind::kPathwidth, "tree_pathwidth");
}

// ---------------------------------------------------------------------------
// Strategy construction: blocker column plus side-subtree clears.

namespace {

int component_value(const Graph& t, const VertexSet& comp) {
  auto sub = induced_subgraph(t, comp);
  return tree_lion_number(sub.graph).value;
}

// Unique tree path between two vertices.
std::vector<Vertex> tree_path(const Graph& t, Vertex from, Vertex to) {
  std::vector<int> parent(t.vertex_count(), -1);
  std::vector<Vertex> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (Vertex u : t.neighbors(v))
      if (parent[u] < 0) {
        parent[u] = v;
        stack.push_back(u);
      }
  }
  std::vector<Vertex> path;
  for (Vertex at = to;; at = parent[at]) {
    path.push_back(at);
    if (at == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

class TreeStrategyBuilder {
 public:
  TreeStrategyBuilder(const Graph& t, int k) : t_(t), k_(k) {}

  Schedule build() {
    TreeCert cert = tree_lion_number(t_);
    if (cert.value == 1) return path_sweep();

    Vertex v = pick_split_vertex();
    auto comps = ordered_components(t_.vertex_set(), v);
    int first_value = component_value(t_, comps[0]);
    if (first_value > k_)
      throw DomainError("internal error: component value exceeds tree value");

    if (first_value < k_) {
      start_at(v);
      for (const auto& c : comps) clear_component(c);
      return finish();
    }

    // Heavy first component: descend to the bottom of its k-heavy column.
    std::vector<Vertex> column = heavy_column(comps[0], neighbor_in(comps[0], v));
    start_at(column.back());
    // Bottom-up: clear side subtrees, then advance the blocker.
    for (size_t i = column.size(); i-- > 0;) {
      Vertex p = column[i];
      if (i + 1 < column.size()) emit_blocker_move(column[i + 1], p);
      Vertex toward_v = (i > 0) ? column[i - 1] : v;
      for (const auto& c : side_components(p, toward_v,
                                           i + 1 < column.size()
                                               ? std::optional<Vertex>(column[i + 1])
                                               : std::nullopt))
        clear_component(c);
    }
    emit_blocker_move(column[0], v);

    // Remaining components except the second-heaviest, then that one last.
    for (size_t i = 2; i < comps.size(); ++i) clear_component(comps[i]);
    if (comps.size() >= 2) {
      int second_value = component_value(t_, comps[1]);
      if (second_value < k_) {
        clear_component(comps[1]);
      } else {
        descend_and_clear_heavy(comps[1], v);
      }
    }
    return finish();
  }

 private:
  // --- schedule assembly ----------------------------------------------------

  void start_at(Vertex b) {
    pos_.assign(k_, b);
    schedule_.initial = pos_;
  }

  Schedule finish() { return std::move(schedule_); }

  void emit(const std::vector<std::pair<int, Vertex>>& movers) {
    StepAction action;
    action.moves.resize(k_);
    for (int i = 0; i < k_; ++i) action.moves[i] = {pos_[i], pos_[i]};
    for (auto [lion, to] : movers) {
      action.moves[lion] = {pos_[lion], to};
      pos_[lion] = to;
    }
    schedule_.steps.push_back(std::move(action));
  }

  void emit_blocker_move(Vertex from, Vertex to) {
    if (pos_[0] != from) throw DomainError("internal error: blocker misplaced");
    emit({{0, to}});
  }

  // Walks the given lions simultaneously to their targets along tree paths.
  void walk(const std::vector<std::pair<int, Vertex>>& assignments) {
    std::vector<std::vector<Vertex>> paths;
    size_t longest = 0;
    for (auto [lion, target] : assignments) {
      paths.push_back(tree_path(t_, pos_[lion], target));
      longest = std::max(longest, paths.back().size());
    }
    for (size_t step = 1; step < longest; ++step) {
      std::vector<std::pair<int, Vertex>> movers;
      for (size_t a = 0; a < assignments.size(); ++a)
        if (step < paths[a].size())
          movers.emplace_back(assignments[a].first, paths[a][step]);
      if (!movers.empty()) emit(movers);
    }
  }

  // --- component handling ---------------------------------------------------

  Vertex neighbor_in(const VertexSet& comp, Vertex v) const {
    for (Vertex u : t_.neighbors(v))
      if (comp.test(u)) return u;
    throw DomainError("internal error: component not adjacent to split vertex");
  }

  // Components of scope - v, ordered by descending lion number, then by
  // smallest root (the member adjacent to v).
  std::vector<VertexSet> ordered_components(const VertexSet& scope, Vertex v) {
    VertexSet rest = scope;
    rest.reset(v);
    auto comps = components(t_, rest);
    std::vector<std::tuple<int, Vertex, size_t>> keyed;
    for (size_t i = 0; i < comps.size(); ++i)
      keyed.emplace_back(-component_value(t_, comps[i]), neighbor_in(comps[i], v), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<VertexSet> out;
    for (auto& [negv, root, i] : keyed) out.push_back(std::move(comps[i]));
    return out;
  }

  // Maximizes the lion number of the second-heaviest component of T - v;
  // first such vertex in index order.
  Vertex pick_split_vertex() {
    Vertex best = 0;
    int best_second = -1;
    for (Vertex v = 0; v < t_.vertex_count(); ++v) {
      VertexSet rest = t_.vertex_set();
      rest.reset(v);
      std::vector<int> values;
      for (const auto& c : components(t_, rest))
        values.push_back(component_value(t_, c));
      std::sort(values.begin(), values.end(), std::greater<>());
      int second = values.size() >= 2 ? values[1] : 0;
      if (second > best_second) {
        best_second = second;
        best = v;
      }
    }
    return best;
  }

  // Starting from the root of the heavy component, follow k-heavy children to
  // the last vertex whose subtree needs k lions but whose children's subtrees
  // do not. Returns the column top-down (root first).
  std::vector<Vertex> heavy_column(VertexSet scope, Vertex root) {
    std::vector<Vertex> column{root};
    while (true) {
      VertexSet rest = scope;
      rest.reset(column.back());
      std::vector<VertexSet> heavy;
      for (const auto& c : components(t_, rest))
        if (component_value(t_, c) >= k_) heavy.push_back(c);
      if (heavy.empty()) break;
      if (heavy.size() > 1)
        throw DomainError("internal error: two k-heavy children during descent");
      scope = heavy[0];
      column.push_back(neighbor_in(heavy[0], column.back()));
    }
    return column;
  }

  // Components of T - p other than the one containing `toward_v` and, when
  // given, the one containing the already-cleared column child.
  std::vector<VertexSet> side_components(Vertex p, Vertex toward_v,
                                         std::optional<Vertex> cleared_child) {
    std::vector<VertexSet> out;
    for (const auto& c : ordered_components(t_.vertex_set(), p)) {
      if (c.test(toward_v)) continue;
      if (cleared_child && c.test(*cleared_child)) continue;
      out.push_back(c);
    }
    return out;
  }

  // Clears one component with the non-blocker lions while the blocker holds
  // its current vertex. The component value must be < k.
  void clear_component(const VertexSet& comp) {
    auto sub = induced_subgraph(t_, comp);
    int value = tree_lion_number(sub.graph).value;
    if (value >= k_)
      throw DomainError("internal error: side component needs the full team");
    Schedule inner = tree_clearing_strategy(sub.graph);
    std::vector<std::pair<int, Vertex>> entry;
    for (int i = 0; i < value; ++i)
      entry.emplace_back(i + 1, sub.to_original[inner.initial[i]]);
    walk(entry);
    for (const StepAction& a : inner.steps) {
      std::vector<std::pair<int, Vertex>> movers;
      for (int i = 0; i < value; ++i)
        if (!a.moves[i].is_stay())
          movers.emplace_back(i + 1, sub.to_original[a.moves[i].to]);
      if (!movers.empty()) emit(movers);
    }
  }

  // The proof's second-component handling: enter at the root, clear light
  // subtrees, follow the single heavy child when present.
  void descend_and_clear_heavy(VertexSet scope, Vertex v) {
    Vertex r = neighbor_in(scope, v);
    emit_blocker_move(v, r);
    while (true) {
      std::optional<VertexSet> heavy;
      for (const auto& c : ordered_components(scope, r)) {
        if (component_value(t_, c) >= k_) {
          if (heavy) throw DomainError("internal error: two k-heavy children");
          heavy = c;
        } else {
          clear_component(c);
        }
      }
      if (!heavy) break;
      Vertex next = neighbor_in(*heavy, r);
      emit_blocker_move(r, next);
      scope = *heavy;
      r = next;
    }
  }

  Schedule path_sweep() {
    Vertex start = 0;
    for (Vertex v = 0; v < t_.vertex_count(); ++v)
      if (t_.degree(v) <= 1) {
        start = v;
        break;
      }
    pos_.assign(1, start);
    schedule_.initial = pos_;
    Vertex prev = -1, cur = start;
    while (true) {
      Vertex next = -1;
      for (Vertex u : t_.neighbors(cur))
        if (u != prev) {
          next = u;
          break;
        }
      if (next < 0) break;
      emit({{0, next}});
      prev = cur;
      cur = next;
    }
    return finish();
  }

  const Graph& t_;
  int k_;
  std::vector<Vertex> pos_;
  Schedule schedule_;
};

}  // namespace

Schedule tree_clearing_strategy(const Graph& t) {
  check_tree(t, "tree_clearing_strategy");
  int k = tree_lion_number(t).value;
  TreeStrategyBuilder builder(t, k);
  return builder.build();
}

}  // namespace lions
