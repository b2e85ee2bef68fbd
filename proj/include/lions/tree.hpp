#pragma once

#include <optional>

#include "lions/engine.hpp"
#include "lions/graph.hpp"

namespace lions {

/// Exact value plus, for values >= 2, a split vertex v such that T - v has at
/// least three components of value >= value - 1.
struct TreeCert {
  int value = 0;
  std::optional<Vertex> witness_vertex;
};

/// L(T) by the three-branch characterization: L(T) >= k+1 iff some vertex
/// splits T into three components of lion number >= k; L(T) = 1 iff T is a
/// path. Memoized on canonical codes of degree-2-smoothed shapes.
TreeCert tree_lion_number(const Graph& t);

/// pw(T) by the same recursion with base pw = 0 for a single vertex and
/// pw = 1 for longer paths.
TreeCert tree_pathwidth(const Graph& t);

/// Constructive clearing schedule using exactly tree_lion_number(t) lions:
/// a blocker walks the heavy column while the remaining lions clear side
/// subtrees, with explicit waits between sub-clearings.
Schedule tree_clearing_strategy(const Graph& t);

}  // namespace lions
