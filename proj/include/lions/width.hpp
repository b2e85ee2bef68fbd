#pragma once

#include <string>
#include <vector>

#include "lions/graph.hpp"

namespace lions {

/// Ordered bag sequence B_1..B_n. Width = max bag size - 1.
struct PathDecomposition {
  std::vector<VertexSet> bags;
  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, b.count() - 1);
    return w;
  }
};

struct DecompositionViolation {
  std::string condition;  // "cover" | "interval" | "edge"
  std::string detail;
};

struct DecompositionCheck {
  bool ok = true;
  std::vector<DecompositionViolation> violations;
};

/// Checks the three path-decomposition conditions independently: (i) bags
/// cover V, (ii) each vertex occupies a contiguous bag interval, (iii) every
/// edge lies inside some bag. Violations are data, not errors.
DecompositionCheck validate_decomposition(const Graph& g,
                                          const PathDecomposition& d);

struct WidthResult {
  int width = 0;
  PathDecomposition witness;
};

/// Exact pathwidth through the vertex-separation subset DP; the witness
/// decomposition is rebuilt from the optimal ordering and always validates.
WidthResult pathwidth_exact(const Graph& g, int size_guard = 20);

/// Exact connected pathwidth: the same DP restricted to orderings whose
/// prefixes induce connected subgraphs, so every witness has connected
/// bag-prefix unions.
WidthResult connected_pathwidth_exact(const Graph& g, int size_guard = 14);

/// Equal-width properization: absorbs duplicate/subset-adjacent bags until
/// consecutive bags have nonempty two-way differences. On a connected graph a
/// valid decomposition can never end with an empty consecutive intersection;
/// that case is reported as an error rather than repaired.
PathDecomposition normalize_proper(const Graph& g, const PathDecomposition& d);

}  // namespace lions
