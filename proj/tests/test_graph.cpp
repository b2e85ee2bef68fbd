#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lions/census.hpp"
#include "lions/graph.hpp"

using namespace lions;

namespace {

// Edge-enumeration oracles, straight from the definitions.
VertexSet neighborhood_oracle(const Graph& g, const VertexSet& s) {
  VertexSet out(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    if (s.test(u) && !s.test(v)) out.set(v);
    if (s.test(v) && !s.test(u)) out.set(u);
  }
  return out;
}

VertexSet boundary_oracle(const Graph& g, const VertexSet& s) {
  VertexSet n = neighborhood_oracle(g, s);
  VertexSet out(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    if (s.test(u) && n.test(v)) out.set(u);
    if (s.test(v) && n.test(u)) out.set(v);
  }
  return out;
}

// All-pairs shortest paths by Floyd-Warshall.
std::vector<std::vector<int>> apsp_oracle(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  CHECK(s.empty());
  s.set(0);
  s.set(69);
  CHECK(s.count() == 2);
  CHECK(s.test(69));
  CHECK_THROWS_AS(s.set(70), DomainError);
  VertexSet t = VertexSet::full(70);
  CHECK(t.count() == 70);
  CHECK(t.contains(s));
  CHECK((t - s).count() == 68);
  CHECK(s.complement().count() == 68);
}

TEST_CASE("graph construction validates") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), DomainError);
  Graph g(3, {{0, 1}});
  CHECK_FALSE(g.is_connected());
  CHECK(path_graph(3).is_connected());
}

TEST_CASE("neighborhood on named examples") {
  Graph p3 = path_graph(3);
  CHECK(neighborhood(p3, VertexSet::of(3, {1})) == VertexSet::of(3, {0, 2}));
  CHECK(neighborhood(p3, VertexSet::of(3, {0, 1, 2})) == VertexSet(3));
  // star center 0, leaves 1,2,3; s = {x,y} -> {c}
  Graph k13 = star(3);
  CHECK(neighborhood(k13, VertexSet::of(4, {1, 2})) ==
        neighborhood_oracle(k13, VertexSet::of(4, {1, 2})));
  CHECK(neighborhood(k13, VertexSet::of(4, {1, 2})) == VertexSet::of(4, {0}));
  VertexSet bad(5);
  CHECK_THROWS_AS(neighborhood(k13, bad), DomainError);
}

TEST_CASE("boundary on named examples") {
  Graph p4 = path_graph(4);
  CHECK(boundary(p4, VertexSet::of(4, {0, 1})) == VertexSet::of(4, {1}));
  CHECK(boundary(p4, VertexSet::of(4, {0, 1})) ==
        boundary_oracle(p4, VertexSet::of(4, {0, 1})));
  CHECK(boundary(p4, VertexSet::full(4)) == VertexSet(4));
  Graph k13 = star(3);
  CHECK(boundary(k13, VertexSet::of(4, {0})) == VertexSet::of(4, {0}));
}

TEST_CASE("neighborhood and boundary match the edge oracle on random sets") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 9), 0.35, rng);
    VertexSet s(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() & 1) s.set(v);
    VertexSet n = neighborhood(g, s);
    CHECK(n == neighborhood_oracle(g, s));
    CHECK_FALSE(n.intersects(s));
    VertexSet b = boundary(g, s);
    CHECK(b == boundary_oracle(g, s));
    CHECK(s.contains(b));
  }
}

TEST_CASE("components partition the restricted set") {
  Graph p3 = path_graph(3);
  auto comps = components(p3, VertexSet::of(3, {0, 2}));
  CHECK(comps.size() == 2);
  CHECK(components(p3, VertexSet(3)).empty());
  Graph k13 = star(3);
  VertexSet leaves = VertexSet::of(4, {1, 2, 3});
  CHECK(components(k13, leaves).size() == 3);

  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = census::random_connected_graph(2 + static_cast<int>(rng() % 8), 0.3, rng);
    VertexSet restrict_to(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() & 1) restrict_to.set(v);
    auto parts = components(g, restrict_to);
    VertexSet unioned(g.vertex_count());
    int total = 0;
    for (const auto& part : parts) {
      CHECK_FALSE(unioned.intersects(part));
      unioned |= part;
      total += part.count();
    }
    CHECK(unioned == restrict_to);
    CHECK(total == restrict_to.count());
  }
}

TEST_CASE("isometric subgraph checks") {
  // any induced subtree of a tree is isometric
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    Graph t = census::random_tree(6 + static_cast<int>(rng() % 5), rng);
    // grow a random connected subtree
    VertexSet sub(t.vertex_count());
    Vertex start = static_cast<Vertex>(rng() % t.vertex_count());
    sub.set(start);
    for (int grow = 0; grow < t.vertex_count() / 2; ++grow) {
      auto nbrs = neighborhood(t, sub).to_vector();
      if (nbrs.empty()) break;
      sub.set(nbrs[rng() % nbrs.size()]);
    }
    std::vector<std::pair<Vertex, Vertex>> sub_edges;
    for (auto [u, v] : t.edges())
      if (sub.test(u) && sub.test(v)) sub_edges.emplace_back(u, v);
    CHECK(is_isometric_subgraph(t, sub, sub_edges));
  }

  // 4-cycle abcd with H = path a-b-c-d: d_H(a,d) = 3 != 1 = d_G(a,d)
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(is_isometric_subgraph(c4, VertexSet::full(4),
                                    {{0, 1}, {1, 2}, {2, 3}}));
  // H = G is isometric
  CHECK(is_isometric_subgraph(c4, VertexSet::full(4), c4.edges()));
  // not a subgraph -> containment error
  CHECK_THROWS_AS(
      is_isometric_subgraph(c4, VertexSet::of(4, {0, 1}), {{0, 2}}), DomainError);
}

TEST_CASE("isometric distances match the Floyd-Warshall oracle") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = census::random_connected_graph(5 + static_cast<int>(rng() % 4), 0.4, rng);
    auto apsp = apsp_oracle(g);
    // random induced connected subgraph
    VertexSet sub(g.vertex_count());
    sub.set(static_cast<Vertex>(rng() % g.vertex_count()));
    for (int grow = 0; grow < g.vertex_count() - 2; ++grow) {
      auto nbrs = neighborhood(g, sub).to_vector();
      if (nbrs.empty() || (rng() & 3) == 0) break;
      sub.set(nbrs[rng() % nbrs.size()]);
    }
    std::vector<std::pair<Vertex, Vertex>> sub_edges;
    for (auto [u, v] : g.edges())
      if (sub.test(u) && sub.test(v)) sub_edges.emplace_back(u, v);

    auto members = sub.to_vector();
    Graph h(static_cast<int>(members.size()), [&] {
      std::vector<std::pair<Vertex, Vertex>> es;
      std::vector<int> rank(g.vertex_count(), -1);
      for (size_t i = 0; i < members.size(); ++i) rank[members[i]] = (int)i;
      for (auto [u, v] : sub_edges) es.emplace_back(rank[u], rank[v]);
      return es;
    }());
    auto apsp_h = apsp_oracle(h);
    bool oracle = true;
    for (size_t i = 0; i < members.size() && oracle; ++i)
      for (size_t j = 0; j < members.size() && oracle; ++j)
        if (apsp_h[i][j] != apsp[members[i]][members[j]]) oracle = false;
    CHECK(is_isometric_subgraph(g, sub, sub_edges) == oracle);
  }
}

TEST_CASE("constructors") {
  CHECK(complete_binary_tree(1).vertex_count() == 3);
  CHECK(complete_binary_tree(1).edge_count() == 2);
  CHECK(complete_binary_tree(3).vertex_count() == 15);
  Graph tri = add_universal_vertex(path_graph(2));
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(complete(4).edge_count() == 6);
  CHECK(star(3).degree(0) == 3);
  CHECK_THROWS_AS(path_graph(0), DomainError);
  CHECK_THROWS_AS(star(0), DomainError);
  CHECK_THROWS_AS(complete(0), DomainError);
  CHECK_THROWS_AS(complete_binary_tree(-1), DomainError);
}

TEST_CASE("census sizes match the known counts") {
  CHECK(census::trees(1).size() == 1);
  CHECK(census::trees(4).size() == 2);
  CHECK(census::trees(7).size() == 11);
  CHECK(census::trees(8).size() == 23);
  CHECK(census::connected_graphs(4).size() == 6);
  CHECK(census::connected_graphs(5).size() == 21);
  CHECK(census::connected_graphs(6).size() == 112);
}
