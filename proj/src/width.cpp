#include "lions/width.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace lions {

namespace {

std::string vertex_list(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

}  // namespace

DecompositionCheck validate_decomposition(const Graph& g,
                                          const PathDecomposition& d) {
  DecompositionCheck check;
  const int n = g.vertex_count();
  auto fail = [&](const std::string& cond, const std::string& detail) {
    check.ok = false;
    check.violations.push_back({cond, detail});
  };

  std::vector<int> first(n, -1), last(n, -1);
  for (size_t i = 0; i < d.bags.size(); ++i) {
    if (d.bags[i].universe() != n) {
      fail("cover", "bag " + std::to_string(i) + " universe mismatch");
      return check;
    }
    d.bags[i].for_each([&](Vertex v) {
      if (first[v] < 0) first[v] = static_cast<int>(i);
      last[v] = static_cast<int>(i);
    });
  }

  // (i) coverage
  for (Vertex v = 0; v < n; ++v)
    if (first[v] < 0) fail("cover", "vertex " + std::to_string(v) + " in no bag");

  // (ii) contiguous intervals
  for (Vertex v = 0; v < n; ++v) {
    if (first[v] < 0) continue;
    for (int i = first[v]; i <= last[v]; ++i) {
      if (!d.bags[i].test(v)) {
        fail("interval", "vertex " + std::to_string(v) + " missing from bag " +
                             std::to_string(i) + " inside its interval");
        break;
      }
    }
  }

  // (iii) every edge inside some bag
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : d.bags) {
      if (bag.test(u) && bag.test(v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      fail("edge", "edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} inside no bag");
  }
  return check;
}

namespace {

// b(S) = number of vertices in S with a neighbor outside S.
int boundary_size(uint64_t s, const std::vector<uint64_t>& adj_mask) {
  int c = 0;
  uint64_t m = s;
  while (m) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    if (adj_mask[v] & ~s) ++c;
  }
  return c;
}

// Bags of the layout v_1..v_n: B_i = {v_i} ∪ {v_j : j < i with a neighbor at
// position >= i}. Width equals the layout's vertex separation.
PathDecomposition bags_from_ordering(const Graph& g,
                                     const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  std::vector<int> pos(n, 0);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> last_nbr(n, -1);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) last_nbr[v] = std::max(last_nbr[v], pos[u]);

  PathDecomposition d;
  for (int i = 0; i < n; ++i) {
    VertexSet bag(n);
    bag.set(order[i]);
    for (int j = 0; j < i; ++j)
      if (last_nbr[order[j]] >= i) bag.set(order[j]);
    d.bags.push_back(std::move(bag));
  }
  return d;
}

WidthResult width_by_layout_dp(const Graph& g, bool connected_prefixes,
                               int size_guard, const char* op_name) {
  const int n = g.vertex_count();
  if (n < 1) throw DomainError(std::string(op_name) + ": empty graph");
  if (n > size_guard)
    throw GuardError(std::string(op_name) + ": graph order " + std::to_string(n) +
                     " exceeds size guard " + std::to_string(size_guard));
  if (connected_prefixes && !g.is_connected())
    throw DomainError("connected pathwidth requires a connected graph");

  std::vector<uint64_t> adj_mask(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj_mask[v] |= 1ull << u;

  const uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  // h[S] = best achievable max-boundary over completions of prefix-set S.
  std::vector<uint8_t> h(full + 1, 0);
  for (uint64_t s = full - 1;; --s) {
    uint64_t candidates = ~s & full;
    if (connected_prefixes && s != 0) {
      uint64_t reach = 0;
      uint64_t m = s;
      while (m) {
        reach |= adj_mask[__builtin_ctzll(m)];
        m &= m - 1;
      }
      candidates &= reach;
      if (!candidates) {
        // Dead prefix (cannot grow connected); unreachable from valid prefixes.
        h[s] = static_cast<uint8_t>(n);
        if (s == 0) break;
        continue;
      }
    }
    int best = n;
    uint64_t m = candidates;
    while (m) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      uint64_t s2 = s | (1ull << v);
      best = std::min(best, std::max(boundary_size(s2, adj_mask), int(h[s2])));
    }
    h[s] = static_cast<uint8_t>(best);
    if (s == 0) break;
  }

  // Reconstruct the lexicographically-least optimal ordering.
  WidthResult out;
  out.width = h[0];
  std::vector<Vertex> order;
  uint64_t s = 0;
  for (int i = 0; i < n; ++i) {
    uint64_t candidates = ~s & full;
    if (connected_prefixes && s != 0) {
      uint64_t reach = 0;
      uint64_t m = s;
      while (m) {
        reach |= adj_mask[__builtin_ctzll(m)];
        m &= m - 1;
      }
      candidates &= reach;
    }
    uint64_t m = candidates;
    bool advanced = false;
    while (m) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      uint64_t s2 = s | (1ull << v);
      if (std::max(boundary_size(s2, adj_mask), int(h[s2])) <= out.width) {
        order.push_back(v);
        s = s2;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw DomainError("internal error: layout reconstruction stuck");
  }
  out.witness = bags_from_ordering(g, order);
  return out;
}

}  // namespace

WidthResult pathwidth_exact(const Graph& g, int size_guard) {
  return width_by_layout_dp(g, /*connected_prefixes=*/false, size_guard,
                            "pathwidth_exact");
}

WidthResult connected_pathwidth_exact(const Graph& g, int size_guard) {
  return width_by_layout_dp(g, /*connected_prefixes=*/true, size_guard,
                            "connected_pathwidth_exact");
}

PathDecomposition normalize_proper(const Graph& g, const PathDecomposition& d) {
  auto check = validate_decomposition(g, d);
  if (!check.ok)
    throw DomainError("normalize_proper: input decomposition invalid: " +
                      check.violations.front().condition + " — " +
                      check.violations.front().detail);

  std::vector<VertexSet> bags = d.bags;
  bool changed = true;
  while (changed && bags.size() > 1) {
    changed = false;
    for (size_t i = 0; i + 1 < bags.size(); ++i) {
      if (bags[i + 1].contains(bags[i])) {  // bags[i] ⊆ bags[i+1]
        bags.erase(bags.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      if (bags[i].contains(bags[i + 1])) {
        bags.erase(bags.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  if (bags.size() >= 2 && g.is_connected()) {
    for (size_t i = 0; i + 1 < bags.size(); ++i) {
      if (!bags[i].intersects(bags[i + 1]))
        throw DomainError(
            "normalize_proper: consecutive bags " + vertex_list(bags[i]) + " and " +
            vertex_list(bags[i + 1]) +
            " have empty intersection on a connected graph; input was not a "
            "valid decomposition");
    }
  }
  return {std::move(bags)};
}

}  // namespace lions
