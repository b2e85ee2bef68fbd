#include "lions/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace lions {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw DomainError("vertex set universe must be >= 0");
  words_.assign((universe + 63) / 64, 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.set(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~0ull;
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() &= (1ull << (universe % 64)) - 1;
  return s;
}

void VertexSet::check_member(Vertex v) const {
  if (v < 0 || v >= universe_)
    throw DomainError("vertex " + std::to_string(v) + " outside universe [0, " +
                      std::to_string(universe_) + ")");
}

void VertexSet::check_universe(const VertexSet& o) const {
  if (universe_ != o.universe_)
    throw DomainError("vertex set universe mismatch: " + std::to_string(universe_) +
                      " vs " + std::to_string(o.universe_));
}

bool VertexSet::test(Vertex v) const {
  check_member(v);
  return (words_[v / 64] >> (v % 64)) & 1ull;
}

void VertexSet::set(Vertex v) {
  check_member(v);
  words_[v / 64] |= 1ull << (v % 64);
}

void VertexSet::reset(Vertex v) {
  check_member(v);
  words_[v / 64] &= ~(1ull << (v % 64));
}

int VertexSet::count() const {
  int c = 0;
  for (uint64_t w : words_) c += __builtin_popcountll(w);
  return c;
}

bool VertexSet::empty() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet r = VertexSet::full(universe_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~words_[i];
  return r;
}

bool VertexSet::contains(const VertexSet& o) const {
  check_universe(o);
  for (size_t i = 0; i < words_.size(); ++i)
    if (o.words_[i] & ~words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_universe(o);
  for (size_t i = 0; i < words_.size(); ++i)
    if (o.words_[i] & words_[i]) return true;
  return false;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

uint64_t VertexSet::hash() const {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(universe_);
  for (uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n) {
  if (n < 0) throw DomainError("vertex count must be >= 0");
  adj_.assign(n, {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw DomainError("edge endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v) throw DomainError("self loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw DomainError("duplicate edge {" + std::to_string(u) + "," +
                        std::to_string(v) + "}");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  m_ = static_cast<int>(seen.size());
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  if (n_ == 0) {
    connected_ = false;
  } else {
    auto dist = bfs_distances(*this, 0);
    connected_ = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " outside [0, " +
                      std::to_string(n_) + ")");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

static void check_subset_of_graph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw DomainError("vertex set universe " + std::to_string(s.universe()) +
                      " does not match graph order " +
                      std::to_string(g.vertex_count()));
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  check_subset_of_graph(g, s);
  VertexSet out(g.vertex_count());
  s.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v))
      if (!s.test(w)) out.set(w);
  });
  return out;
}

VertexSet boundary(const Graph& g, const VertexSet& s) {
  check_subset_of_graph(g, s);
  VertexSet out(g.vertex_count());
  s.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (!s.test(w)) {
        out.set(v);
        break;
      }
    }
  });
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& restrict_to) {
  check_subset_of_graph(g, restrict_to);
  std::vector<VertexSet> out;
  VertexSet remaining = restrict_to;
  remaining.for_each([&](Vertex start) {
    if (!remaining.test(start)) return;
    VertexSet comp(g.vertex_count());
    std::vector<Vertex> stack{start};
    comp.set(start);
    remaining.reset(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (remaining.test(w)) {
          remaining.reset(w);
          comp.set(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source,
                               const VertexSet* restrict_to) {
  std::vector<int> dist(g.vertex_count(), -1);
  if (restrict_to && !restrict_to->test(source)) return dist;
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      if (restrict_to && !restrict_to->test(w)) continue;
      dist[w] = dist[v] + 1;
      q.push(w);
    }
  }
  return dist;
}

bool is_isometric_subgraph(const Graph& g, const VertexSet& h_vertices,
                           const std::vector<std::pair<Vertex, Vertex>>& h_edges) {
  check_subset_of_graph(g, h_vertices);
  std::vector<Vertex> hv = h_vertices.to_vector();
  std::vector<int> rank(g.vertex_count(), -1);
  for (size_t i = 0; i < hv.size(); ++i) rank[hv[i]] = static_cast<int>(i);

  std::vector<std::pair<Vertex, Vertex>> mapped;
  mapped.reserve(h_edges.size());
  for (auto [u, v] : h_edges) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() ||
        rank[u] < 0 || rank[v] < 0 || !g.has_edge(u, v))
      throw DomainError("h is not a subgraph of g: bad edge {" +
                        std::to_string(u) + "," + std::to_string(v) + "}");
    mapped.emplace_back(rank[u], rank[v]);
  }

  Graph h(static_cast<int>(hv.size()), mapped);
  for (size_t i = 0; i < hv.size(); ++i) {
    auto dh = bfs_distances(h, static_cast<Vertex>(i));
    auto dg = bfs_distances(g, hv[i]);
    for (size_t j = 0; j < hv.size(); ++j)
      if (dh[j] != dg[hv[j]]) return false;
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
  check_subset_of_graph(g, vs);
  InducedSubgraph out;
  out.to_original = vs.to_vector();
  out.from_original.assign(g.vertex_count(), -1);
  for (size_t i = 0; i < out.to_original.size(); ++i)
    out.from_original[out.to_original[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : out.to_original)
    for (Vertex w : g.neighbors(u))
      if (u < w && vs.test(w))
        edges.emplace_back(out.from_original[u], out.from_original[w]);
  out.graph = Graph(static_cast<int>(out.to_original.size()), edges);
  return out;
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path_graph requires n >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph star(int leaves) {
  if (leaves < 1) throw DomainError("star requires at least one leaf");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph complete(int m) {
  if (m < 1) throw DomainError("complete requires m >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) e.emplace_back(i, j);
  return Graph(m, e);
}

Graph complete_binary_tree(int height) {
  if (height < 0) throw DomainError("complete_binary_tree requires height >= 0");
  int n = (1 << (height + 1)) - 1;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back((i - 1) / 2, i);
  return Graph(n, e);
}

Graph add_universal_vertex(const Graph& g) {
  int n = g.vertex_count();
  auto e = g.edges();
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, n);
  return Graph(n + 1, e);
}

}  // namespace lions
