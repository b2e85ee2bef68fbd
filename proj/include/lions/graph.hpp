#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lions/errors.hpp"

namespace lions {

using Vertex = int;

/// Membership bitset over the dense vertex range [0, n). Every set-valued
/// quantity in the game state (cleared, contaminated, bags, ...) is one of
/// these; the universe size travels with the set so mismatched operands fail
/// loudly instead of silently truncating.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet of(int universe, std::initializer_list<Vertex> members);
  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool test(Vertex v) const;
  void set(Vertex v);
  void reset(Vertex v);
  int count() const;
  bool empty() const;
  bool operator==(const VertexSet& o) const = default;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool contains(const VertexSet& other) const;  // superset-or-equal
  bool intersects(const VertexSet& other) const;

  // Iteration over members in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<Vertex>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }
  std::vector<Vertex> to_vector() const;

  uint64_t hash() const;
  const std::vector<uint64_t>& words() const { return words_; }

 private:
  void check_member(Vertex v) const;
  void check_universe(const VertexSet& o) const;

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

/// Undirected simple graph over dense vertex indices. Immutable after
/// construction; derived structures reference it, never mutate it.
/// Disconnected inputs are representable but flagged via is_connected().
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_connected() const { return connected_; }
  bool is_tree() const { return connected_ && m_ == n_ - 1; }
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  VertexSet vertex_set() const { return VertexSet::full(n_); }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  bool connected_ = false;
  std::vector<std::vector<Vertex>> adj_;
};

// Set calculus of the game definitions.
VertexSet neighborhood(const Graph& g, const VertexSet& s);
VertexSet boundary(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g, const VertexSet& restrict_to);

// True iff all pairwise distances inside H equal the distances in g. H is
// given as a vertex subset plus its own edge list and must be a subgraph of g.
bool is_isometric_subgraph(const Graph& g, const VertexSet& h_vertices,
                           const std::vector<std::pair<Vertex, Vertex>>& h_edges);

// BFS distances from source; unreachable = -1. When restrict_to is non-null
// the walk stays inside that set.
std::vector<int> bfs_distances(const Graph& g, Vertex source,
                               const VertexSet* restrict_to = nullptr);

// Induced subgraph on `vs`; new indices follow the sorted order of `vs`.
// to_original[new] = old vertex id.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;
  std::vector<int> from_original;  // -1 for vertices outside vs
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

// Graph family constructors.
Graph path_graph(int n);
Graph star(int leaves);
Graph complete(int m);
Graph complete_binary_tree(int height);
Graph add_universal_vertex(const Graph& g);

}  // namespace lions
