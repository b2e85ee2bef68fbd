#pragma once

#include <optional>

#include "lions/engine.hpp"
#include "lions/graph.hpp"

namespace lions {

struct SearchLimits {
  long node_budget = 0;  // expanded-state limit; 0 = unlimited
  int size_guard = 12;
  bool override_size_guard = false;
};

enum class Clearability { kYes, kNo, kUnknown };  // kUnknown = budget exhausted

struct ClearableResult {
  Clearability status = Clearability::kUnknown;
  std::optional<Schedule> witness;  // present iff status == kYes
  long nodes_expanded = 0;
};

/// Breadth-first search over canonical states (sorted lion multiset,
/// contaminated bitset), rooted at every initial placement multiset.
/// Termination is by visited-set closure; schedule length is unbounded.
/// monotone restricts to W_t ⊆ W_{t-1}; polite restricts to at most one
/// moving lion per step.
ClearableResult clearable(const Graph& g, int k, bool monotone = false,
                          bool polite = false, const SearchLimits& limits = {});

struct SolveResult {
  int value = 0;
  Schedule witness;
  long nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

/// Minimal k such that some schedule clears g. Witness replays successfully.
SolveResult lion_number(const Graph& g, const SearchLimits& limits = {});

/// Minimal k admitting a monotone clearing. The search runs over polite
/// monotone schedules, which preserves the optimum and collapses branching.
SolveResult monotone_lion_number(const Graph& g, const SearchLimits& limits = {});

}  // namespace lions
