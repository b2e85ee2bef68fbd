#pragma once

#include "lions/engine.hpp"
#include "lions/graph.hpp"
#include "lions/width.hpp"

namespace lions {

/// Clearing schedule with width(d)+1 lions driven by a proper path
/// decomposition: lions hold B_i ∩ B_{i+1} while the free lions walk
/// (possibly through contaminated territory) to B_{i+1} \ B_i.
Schedule clear_via_decomposition(const Graph& g, const PathDecomposition& d);

/// Monotone variant over a connected-prefix decomposition: one lion moves at
/// a time and every route stays inside the cleared subgraph, so the trace is
/// polite and monotone with width(d)+1 lions.
Schedule clear_monotone_via_connected_decomposition(const Graph& g,
                                                    const PathDecomposition& d);

/// Path decomposition extracted from a polite monotone clearing trace:
/// B_0 = L_0 and B_t = ∂(C_{t-1}) ∪ (L_t ∩ W_{t-1}), consecutive duplicates
/// dropped. The trace must carry recorded states.
PathDecomposition decomposition_from_monotone(const Graph& g, const Trace& trace);

/// One level of the counterexample family: tree T_i (root = vertex 0), its
/// supergraph G_i = T_i plus a universal vertex (index |T_i|), and the 3-lion
/// schedule clearing G_i in `duration` steps.
struct CounterexampleInstance {
  int index = 0;
  Graph tree;
  Graph supergraph;
  Schedule schedule;
  int duration = 0;
  // Timing instrumentation for the left-path recontamination argument
  // (defined for index >= 2; -1 otherwise).
  Vertex left_root = -1;     // root of the left inner copy
  int left_path_edges = -1;  // distance from the tree root, = t_{i-1} + 6
  int left_vacate_step = -1;   // step at which the workers jump off the path
  int left_reguard_step = -1;  // step at which a lion reoccupies left_root
};

CounterexampleInstance counterexample_family(int index, long max_vertices = 300000);

/// Monotone polite clearing of complete_binary_tree(height) with exactly
/// `height` lions: a blocker holds each spine vertex while the stack below
/// root-enters the sibling subtrees.
Schedule monotone_root_blocker_schedule(int height);

}  // namespace lions
