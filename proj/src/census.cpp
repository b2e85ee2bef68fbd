#include "lions/census.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

namespace lions::census {

namespace {

// --- labeled graphs as edge masks over vertex pairs -------------------------

struct PairIndex {
  int n;
  std::array<std::array<int, 8>, 8> bit{};
  std::vector<std::pair<int, int>> pairs;
  explicit PairIndex(int n_) : n(n_) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bit[i][j] = bit[j][i] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
  }
  int edge_bits() const { return static_cast<int>(pairs.size()); }
};

std::array<uint32_t, 8> rows_of(uint32_t mask, const PairIndex& pi) {
  std::array<uint32_t, 8> rows{};
  for (int b = 0; b < pi.edge_bits(); ++b) {
    if ((mask >> b) & 1) {
      auto [i, j] = pi.pairs[b];
      rows[i] |= 1u << j;
      rows[j] |= 1u << i;
    }
  }
  return rows;
}

bool mask_connected(uint32_t mask, const PairIndex& pi) {
  auto rows = rows_of(mask, pi);
  uint32_t seen = 1, frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < pi.n; ++v)
      if ((frontier >> v) & 1) next |= rows[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << pi.n) - 1;
}

uint32_t apply_perm(uint32_t mask, const int* perm, const PairIndex& pi) {
  uint32_t out = 0;
  uint32_t m = mask;
  while (m) {
    int b = __builtin_ctz(m);
    m &= m - 1;
    auto [i, j] = pi.pairs[b];
    out |= 1u << pi.bit[perm[i]][perm[j]];
  }
  return out;
}

// Canonical form: vertices are first sorted by an isomorphism-invariant key
// (degree, sorted neighbor degrees); the canonical mask is the minimum over
// all permutations that respect the key classes. Isomorphic graphs share the
// key multiset, so class-respecting permutations suffice.
uint32_t canonical_mask(uint32_t mask, const PairIndex& pi) {
  const int n = pi.n;
  auto rows = rows_of(mask, pi);
  std::array<int, 8> deg{};
  for (int v = 0; v < n; ++v) deg[v] = __builtin_popcount(rows[v]);

  std::array<uint64_t, 8> key{};
  for (int v = 0; v < n; ++v) {
    std::array<int, 8> nd{};
    int c = 0;
    for (int u = 0; u < n; ++u)
      if ((rows[v] >> u) & 1) nd[c++] = deg[u];
    std::sort(nd.begin(), nd.begin() + c);
    uint64_t k = static_cast<uint64_t>(deg[v]);
    for (int i = 0; i < c; ++i) k = k * 9 + static_cast<uint64_t>(nd[i] + 1);
    key[v] = k;
  }

  std::array<int, 8> base{};
  std::iota(base.begin(), base.begin() + n, 0);
  std::sort(base.begin(), base.begin() + n,
            [&](int a, int b) { return key[a] < key[b] || (key[a] == key[b] && a < b); });

  // class boundaries in the sorted order
  std::array<int, 9> class_start{};
  int classes = 0;
  for (int i = 0; i < n; ++i)
    if (i == 0 || key[base[i]] != key[base[i - 1]]) class_start[classes++] = i;
  class_start[classes] = n;

  // Iterate the product of within-class permutations.
  std::array<int, 8> arrangement = base;
  uint32_t best = ~0u;
  while (true) {
    int perm[8];  // perm[old] = new position
    for (int pos = 0; pos < n; ++pos) perm[arrangement[pos]] = pos;
    best = std::min(best, apply_perm(mask, perm, pi));

    // next: advance the last class that still has a next_permutation
    int c = classes - 1;
    for (; c >= 0; --c) {
      auto first = arrangement.begin() + class_start[c];
      auto last = arrangement.begin() + class_start[c + 1];
      if (std::next_permutation(first, last)) break;
      // next_permutation already reset this class to sorted order
    }
    if (c < 0) break;
  }
  return best;
}

Graph mask_to_graph(uint32_t mask, const PairIndex& pi) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  uint32_t m = mask;
  while (m) {
    int b = __builtin_ctz(m);
    m &= m - 1;
    edges.push_back(pi.pairs[b]);
  }
  return Graph(pi.n, edges);
}

// --- tree canonical codes ----------------------------------------------------

std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> child;
  for (int u : adj[v])
    if (u != parent) child.push_back(ahu_code(adj, u, v));
  std::sort(child.begin(), child.end());
  std::string out = "(";
  for (auto& c : child) out += c;
  return out + ")";
}

std::string tree_code(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  std::vector<int> deg(n), layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int u : adj[v])
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  if (layer.size() == 1) return "C" + ahu_code(adj, layer[0], -1);
  std::string a = ahu_code(adj, layer[0], layer[1]);
  std::string b = ahu_code(adj, layer[1], layer[0]);
  if (b < a) std::swap(a, b);
  return "B" + a + b;
}

std::vector<std::pair<Vertex, Vertex>> prufer_decode(const std::vector<int>& seq,
                                                     int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> deg(n, 1);
  for (int v : seq) deg[v]++;
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(leaf, v);
    if (--deg[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (ptr < n && deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

}  // namespace

const std::vector<Graph>& connected_graphs(int n) {
  // n = 8 works but enumerates 2^28 labeled graphs (about a minute).
  if (n < 1 || n > 8)
    throw GuardError("connected-graph census supports 1 <= n <= 8");
  static std::map<int, std::vector<Graph>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  PairIndex pi(n);
  std::unordered_set<uint32_t> seen;
  std::vector<Graph> out;
  const uint32_t limit = 1u << pi.edge_bits();
  for (uint32_t mask = 0; mask < limit; ++mask) {
    if (!mask_connected(mask, pi)) continue;
    uint32_t canon = canonical_mask(mask, pi);
    if (seen.insert(canon).second) out.push_back(mask_to_graph(canon, pi));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

const std::vector<Graph>& trees(int n) {
  if (n < 1 || n > 9) throw GuardError("tree census supports 1 <= n <= 9");
  static std::map<int, std::vector<Graph>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Graph> out;
  if (n == 1) {
    out.emplace_back(1, std::vector<std::pair<Vertex, Vertex>>{});
  } else if (n == 2) {
    out.emplace_back(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
  } else {
    std::unordered_set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    while (true) {
      auto edges = prufer_decode(seq, n);
      std::vector<std::vector<int>> adj(n);
      for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      if (seen.insert(tree_code(adj)).second) out.emplace_back(n, edges);
      int i = n - 3;
      while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> sample_connected_graphs(int n, int count, uint64_t seed) {
  if (n < 1 || n > 8)
    throw GuardError("connected-graph sampling supports 1 <= n <= 8");
  PairIndex pi(n);
  std::mt19937_64 rng(seed);
  std::unordered_set<uint32_t> seen;
  std::vector<Graph> out;
  const uint32_t limit = 1u << pi.edge_bits();
  long attempts = 0;
  const long max_attempts = 200000L + 400L * count;
  while (static_cast<int>(out.size()) < count && attempts++ < max_attempts) {
    uint32_t mask = static_cast<uint32_t>(rng()) & (limit - 1);
    if (!mask_connected(mask, pi)) continue;
    uint32_t canon = canonical_mask(mask, pi);
    if (seen.insert(canon).second) out.push_back(mask_to_graph(canon, pi));
  }
  return out;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw DomainError("random_tree requires n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = pick(rng);
  return Graph(n, prufer_decode(seq, n));
}

Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng) {
  if (n < 1) throw DomainError("random_connected_graph requires n >= 1");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < edge_prob) edges.emplace_back(i, j);
    Graph g(n, edges);
    if (g.is_connected()) return g;
  }
  // Fall back to a random tree plus extra edges.
  Graph t = random_tree(n, rng);
  auto edges = t.edges();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!t.has_edge(i, j) && coin(rng) < edge_prob) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace lions::census
