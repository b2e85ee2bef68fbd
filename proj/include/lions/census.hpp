#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lions/graph.hpp"

namespace lions::census {

/// All non-isomorphic connected graphs on exactly n vertices (n <= 7).
/// Results are cached; the returned reference is stable for the process.
const std::vector<Graph>& connected_graphs(int n);

/// All non-isomorphic trees on exactly n vertices (n <= 9).
const std::vector<Graph>& trees(int n);

/// Deterministic sample of distinct (up to isomorphism) connected graphs on n
/// vertices, at most `count` of them.
std::vector<Graph> sample_connected_graphs(int n, int count, uint64_t seed);

Graph random_tree(int n, std::mt19937_64& rng);
Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng);

}  // namespace lions::census
