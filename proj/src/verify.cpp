#include "lions/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>

#include "lions/census.hpp"
#include "lions/cops.hpp"
#include "lions/engine.hpp"
#include "lions/graph.hpp"
#include "lions/search.hpp"
#include "lions/synthesis.hpp"
#include "lions/tree.hpp"
#include "lions/width.hpp"

namespace lions::verify {

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ∂(C_t) ⊆ L_t at every recorded step.
bool boundary_occupied_throughout(const Graph& g, const Trace& trace) {
  for (const auto& st : trace.states) {
    VertexSet lions(g.vertex_count());
    for (Vertex v : st.lions) lions.set(v);
    if (!lions.contains(boundary(g, st.contaminated.complement()))) return false;
  }
  return true;
}

int moved_count(const StepAction& a) {
  int moved = 0;
  for (const auto& m : a.moves)
    if (!m.is_stay()) ++moved;
  return moved;
}

struct GraphKey {
  int n = 0;
  uint64_t mask = 0;
  bool operator<(const GraphKey& o) const {
    return n < o.n || (n == o.n && mask < o.mask);
  }
};

GraphKey key_of(const Graph& g) {
  uint64_t mask = 0;
  int bit = 0;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j, ++bit)
      if (g.has_edge(i, j)) mask |= 1ull << bit;
  return {g.vertex_count(), mask};
}

// Shared per-run cache of solver answers. Census graphs are canonical
// representatives, so the labeled edge mask identifies them.
class Workbench {
 public:
  Workbench(const SuiteOptions& opts, std::ostream* log) : opts_(opts), log_(log) {}

  const SuiteOptions& opts() const { return opts_; }

  SearchLimits limits(bool unguarded = false) const {
    SearchLimits l;
    l.node_budget = opts_.node_budget;
    l.override_size_guard = unguarded;
    return l;
  }

  const SolveResult& lions(const Graph& g) {
    auto [it, fresh] = lion_cache_.try_emplace(key_of(g));
    if (fresh) it->second = lion_number(g, limits());
    return it->second;
  }
  const SolveResult& monotone(const Graph& g) {
    auto [it, fresh] = mono_cache_.try_emplace(key_of(g));
    if (fresh) it->second = monotone_lion_number(g, limits());
    return it->second;
  }
  const CopSolveResult& cops(const Graph& g) {
    auto [it, fresh] = cop_cache_.try_emplace(key_of(g));
    if (fresh) it->second = cop_number_exact(g, limits());
    return it->second;
  }
  const WidthResult& pathwidth(const Graph& g) {
    auto [it, fresh] = pw_cache_.try_emplace(key_of(g));
    if (fresh) it->second = pathwidth_exact(g);
    return it->second;
  }
  const WidthResult& cpw(const Graph& g) {
    auto [it, fresh] = cpw_cache_.try_emplace(key_of(g));
    if (fresh) it->second = connected_pathwidth_exact(g);
    return it->second;
  }

  void report(std::vector<CheckResult>& out, const std::string& name, bool pass,
              const std::string& detail) {
    if (log_)
      *log_ << "  [" << (pass ? "PASS" : "FAIL") << "] " << name
            << (detail.empty() ? "" : " — " + detail) << "\n"
            << std::flush;
    out.push_back({name, pass, detail});
  }

 private:
  SuiteOptions opts_;
  std::ostream* log_;
  std::map<GraphKey, SolveResult> lion_cache_;
  std::map<GraphKey, SolveResult> mono_cache_;
  std::map<GraphKey, CopSolveResult> cop_cache_;
  std::map<GraphKey, WidthResult> pw_cache_;
  std::map<GraphKey, WidthResult> cpw_cache_;
};

// --------------------------------------------------------------------------
// Criterion 1 — tree sandwich on every tree with <= 9 vertices.

std::vector<CheckResult> suite_trees(Workbench& wb) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= wb.opts().tree_max_n; ++n) {
    int bad = 0;
    std::string first_fail;
    const auto& all = census::trees(n);
    for (const Graph& t : all) {
      int solver = wb.lions(t).value;
      int charac = tree_lion_number(t).value;
      int pw = tree_pathwidth(t).value;
      if (solver != charac || pw > solver || solver > pw + 1) {
        ++bad;
        if (first_fail.empty())
          first_fail = "solver=" + std::to_string(solver) +
                       " characterization=" + std::to_string(charac) +
                       " pw=" + std::to_string(pw);
      }
    }
    wb.report(out, "trees n=" + std::to_string(n), bad == 0,
              std::to_string(all.size()) + " trees" +
                  (bad ? ", " + std::to_string(bad) + " failures: " + first_fail
                       : ""));
  }
  return out;
}

// --------------------------------------------------------------------------
// Criterion 2 — complete-binary-tree tightness.

std::vector<CheckResult> suite_binary_trees(Workbench& wb) {
  std::vector<CheckResult> out;
  bool recurrence = true;
  for (int h = 3; h <= 8; ++h) {
    int lh = tree_lion_number(complete_binary_tree(h)).value;
    int lh2 = tree_lion_number(complete_binary_tree(h - 2)).value;
    if (lh != lh2 + 1) recurrence = false;
  }
  wb.report(out, "binary-trees lion recurrence L(T_h)=L(T_{h-2})+1, 3<=h<=8",
            recurrence, "");
  bool pw_formula = true;
  for (int h = 1; h <= 8; ++h)
    if (tree_pathwidth(complete_binary_tree(h)).value != (h + 1) / 2)
      pw_formula = false;
  wb.report(out, "binary-trees pw(T_h)=ceil(h/2), 1<=h<=8", pw_formula, "");
  return out;
}

// --------------------------------------------------------------------------
// Criterion 3 — general upper bound L(G) <= pw(G)+1 with synthesized witnesses.

bool general_upper_single(Workbench& wb, const Graph& g, std::string* why) {
  const auto& pw = wb.pathwidth(g);
  PathDecomposition proper = normalize_proper(g, pw.witness);
  Schedule s = clear_via_decomposition(g, proper);
  if (s.lion_count() > pw.width + 1) {
    *why = "synthesized schedule uses too many lions";
    return false;
  }
  Trace t = simulate(g, s, {.record_states = false});
  if (!t.cleared) {
    *why = "synthesized schedule fails to clear";
    return false;
  }
  if (wb.lions(g).value > pw.width + 1) {
    *why = "lion number exceeds pw+1";
    return false;
  }
  return true;
}

std::vector<CheckResult> suite_general_upper(Workbench& wb) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= wb.opts().graph_max_n; ++n) {
    if (n == 7 && !wb.opts().full_census) continue;
    int bad = 0;
    std::string why;
    const auto& all = census::connected_graphs(n);
    for (const Graph& g : all) {
      std::string w;
      if (!general_upper_single(wb, g, &w)) {
        ++bad;
        if (why.empty()) why = w;
      }
    }
    wb.report(out, "general-upper full census n=" + std::to_string(n), bad == 0,
              std::to_string(all.size()) + " graphs" + (bad ? ", " + why : ""));
  }
  // Randomized subsample variant with a pinned time budget (15 minutes).
  auto start = Clock::now();
  auto sample =
      census::sample_connected_graphs(7, wb.opts().sample_count, wb.opts().seed);
  int bad = 0;
  std::string why;
  for (const Graph& g : sample) {
    std::string w;
    if (!general_upper_single(wb, g, &w)) {
      ++bad;
      if (why.empty()) why = w;
    }
  }
  double elapsed = secs_since(start);
  bool in_time = elapsed < 900.0;
  wb.report(out, "general-upper 500-graph subsample", bad == 0 && in_time,
            std::to_string(sample.size()) + " graphs in " +
                std::to_string(elapsed).substr(0, 5) + "s" +
                (bad ? ", " + why : "") + (in_time ? "" : ", over time budget"));
  return out;
}

// --------------------------------------------------------------------------
// Criterion 4 — counterexample family.

std::vector<CheckResult> suite_counterexample(Workbench& wb) {
  std::vector<CheckResult> out;
  int prev_duration = 0;
  for (int i = 1; i <= 7; ++i) {
    auto inst = counterexample_family(i);
    Trace t = simulate(inst.supergraph, inst.schedule, {.record_states = false});
    bool ok = t.cleared && inst.schedule.lion_count() == 3 &&
              static_cast<int>(inst.schedule.steps.size()) == inst.duration;
    std::string detail = "n=" + std::to_string(inst.supergraph.vertex_count()) +
                         ", steps=" + std::to_string(inst.duration);
    if (i >= 2) {
      if (t.monotone) ok = false;  // the left path recontaminates by design
      int gap = inst.left_reguard_step - inst.left_vacate_step + 1;
      bool timing = gap == prev_duration + 4 &&
                    inst.left_path_edges == prev_duration + 6 &&
                    gap < inst.left_path_edges;
      if (!timing) ok = false;
      detail += ", exposure " + std::to_string(gap) + " < distance " +
                std::to_string(inst.left_path_edges);
    }
    wb.report(out, "counterexample level " + std::to_string(i), ok, detail);
    prev_duration = inst.duration;
  }
  auto inst7 = counterexample_family(7);
  int pw7 = tree_pathwidth(inst7.tree).value;
  int l7 = tree_lion_number(inst7.tree).value;
  wb.report(out, "counterexample separation pw(T_7)>=4 and L(T_7)>=4>3",
            pw7 >= 4 && l7 >= pw7 && l7 > 3,
            "pw(T_7)=" + std::to_string(pw7) + ", L(T_7)=" + std::to_string(l7));
  return out;
}

// --------------------------------------------------------------------------
// Criterion 5 — monotone sandwich and the decomposition extractor.

std::vector<CheckResult> suite_monotone(Workbench& wb) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= wb.opts().graph_max_n; ++n) {
    if (n == 7 && !wb.opts().full_census) continue;
    int bad = 0;
    std::string why;
    const auto& all = census::connected_graphs(n);
    for (const Graph& g : all) {
      int pw = wb.pathwidth(g).width;
      const auto& mono = wb.monotone(g);
      if (pw > mono.value || mono.value > 2 * pw + 2) {
        ++bad;
        if (why.empty()) why = "monotone sandwich violated";
        continue;
      }
      Trace t = simulate(g, mono.witness);
      if (!t.cleared || !t.monotone) {
        ++bad;
        if (why.empty()) why = "monotone witness failed to replay";
        continue;
      }
      PathDecomposition d = decomposition_from_monotone(g, t);
      if (!validate_decomposition(g, d).ok || d.width() > mono.value) {
        ++bad;
        if (why.empty()) why = "extracted decomposition invalid or too wide";
        continue;
      }
      const auto& cpw = wb.cpw(g);
      if (cpw.width > 2 * pw + 1) {
        ++bad;
        if (why.empty()) why = "cpw exceeds 2pw+1";
        continue;
      }
      Schedule s = clear_monotone_via_connected_decomposition(g, cpw.witness);
      Trace st = simulate(g, s);
      if (!st.cleared || !st.monotone || s.lion_count() > cpw.width + 1 ||
          s.lion_count() > 2 * pw + 2) {
        ++bad;
        if (why.empty()) why = "monotone synthesis failed";
        continue;
      }
      if (!boundary_occupied_throughout(g, st) ||
          !boundary_occupied_throughout(g, t)) {
        ++bad;
        if (why.empty()) why = "cleared-boundary occupancy violated on a monotone trace";
      }
    }
    wb.report(out, "monotone census n=" + std::to_string(n), bad == 0,
              std::to_string(all.size()) + " graphs" + (bad ? ", " + why : ""));
  }
  return out;
}

// --------------------------------------------------------------------------
// Criterion 6 — boundary occupancy across every monotone trace the suites touch.

std::vector<CheckResult> suite_boundary(Workbench& wb) {
  std::vector<CheckResult> out;
  long traces = 0;
  long violations = 0;

  auto consume = [&](const Graph& g, const Trace& t) {
    if (!t.monotone) return;
    ++traces;
    if (!boundary_occupied_throughout(g, t)) ++violations;
  };

  for (int n = 1; n <= wb.opts().graph_max_n; ++n) {
    if (n == 7 && !wb.opts().full_census) continue;
    for (const Graph& g : census::connected_graphs(n)) {
      consume(g, simulate(g, wb.monotone(g).witness));
      consume(g, simulate(g, clear_monotone_via_connected_decomposition(
                                 g, wb.cpw(g).witness)));
    }
  }
  for (int h = 1; h <= 8; ++h) {
    Graph t = complete_binary_tree(h);
    consume(t, simulate(t, monotone_root_blocker_schedule(h)));
  }
  wb.report(out, "boundary occupancy on all monotone traces", violations == 0,
            std::to_string(traces) + " traces, " + std::to_string(violations) +
                " violations");
  return out;
}

// --------------------------------------------------------------------------
// Criterion 7 — complete-graph anchor.

std::vector<CheckResult> suite_complete_graphs(Workbench& wb) {
  std::vector<CheckResult> out;
  bool ok = true;
  std::string detail;
  for (int m = 2; m <= 5; ++m) {
    Graph k = complete(m);
    int lm = wb.monotone(k).value;
    int pw = wb.pathwidth(k).width;
    detail += (m > 2 ? " " : "") + std::string("K_") + std::to_string(m) + ":" +
              std::to_string(lm);
    if (lm != m - 1 || pw != m - 1) ok = false;
  }
  wb.report(out, "complete graphs Lm(K_m)=pw(K_m)=m-1, m<=5", ok, detail);
  return out;
}

// --------------------------------------------------------------------------
// Criterion 8 — monotone binary trees: Lm(T_h) = h.

std::vector<CheckResult> suite_binary_tree_monotone(Workbench& wb) {
  std::vector<CheckResult> out;
  for (int h = 1; h <= 3; ++h) {
    Graph t = complete_binary_tree(h);
    SolveResult r = monotone_lion_number(t, wb.limits(/*unguarded=*/true));
    Trace tr = simulate(t, r.witness);
    wb.report(out, "binary-tree monotone brute force Lm(T_" + std::to_string(h) + ")",
              r.value == h && tr.cleared && tr.monotone,
              "value=" + std::to_string(r.value));
  }
  bool constructive = true;
  std::string why;
  for (int h = 1; h <= 8; ++h) {
    Graph t = complete_binary_tree(h);
    Schedule s = monotone_root_blocker_schedule(h);
    Trace tr = simulate(t, s);
    bool polite = true;
    for (const auto& a : s.steps)
      if (moved_count(a) > 1) polite = false;
    if (s.lion_count() != h || !tr.cleared || !tr.monotone || !polite ||
        !boundary_occupied_throughout(t, tr)) {
      constructive = false;
      if (why.empty()) why = "h=" + std::to_string(h);
    }
  }
  wb.report(out, "root-blocker schedules h<=8", constructive, why);
  return out;
}

// --------------------------------------------------------------------------
// Criterion 9 — zero-visibility cop bounds and schedule transforms.

std::vector<CheckResult> suite_cops(Workbench& wb) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= wb.opts().graph_max_n; ++n) {
    if (n == 7 && !wb.opts().full_census) continue;
    int bad = 0;
    std::string why;
    const auto& all = census::connected_graphs(n);
    for (const Graph& g : all) {
      int c0 = wb.cops(g).value;
      int lions = wb.lions(g).value;
      if (c0 > lions || lions > 2 * c0) {
        ++bad;
        if (why.empty()) why = "sandwich violated";
        continue;
      }
      // two lions per cop, aligned W_t ⊆ S_t
      Schedule doubled = lions_from_cops(g, wb.cops(g).witness);
      Trace lt = simulate(g, doubled);
      CopTrace ct = simulate_cops(g, wb.cops(g).witness);
      if (!lt.cleared || lt.states.size() != ct.states.size()) {
        ++bad;
        if (why.empty()) why = "lions_from_cops failed";
        continue;
      }
      bool aligned = true;
      for (size_t t = 0; t < lt.states.size(); ++t)
        if (!ct.states[t].dirty_post.contains(lt.states[t].contaminated))
          aligned = false;
      // identical trajectories, aligned S_t ⊆ W_t
      CopSchedule copied = cops_from_lions(g, wb.lions(g).witness);
      CopTrace ct2 = simulate_cops(g, copied);
      Trace lt2 = simulate(g, wb.lions(g).witness);
      if (!ct2.cleared || ct2.states.size() != lt2.states.size()) {
        ++bad;
        if (why.empty()) why = "cops_from_lions failed";
        continue;
      }
      for (size_t t = 0; t < ct2.states.size(); ++t)
        if (!lt2.states[t].contaminated.contains(ct2.states[t].dirty_post))
          aligned = false;
      if (!aligned) {
        ++bad;
        if (why.empty()) why = "stepwise alignment violated";
      }
    }
    wb.report(out, "cops census n=" + std::to_string(n), bad == 0,
              std::to_string(all.size()) + " graphs" + (bad ? ", " + why : ""));
  }
  int bad = 0;
  long count = 0;
  for (int n = 2; n <= wb.opts().tree_max_n; ++n) {
    for (const Graph& t : census::trees(n)) {
      ++count;
      int c0 = wb.cops(t).value;
      int pw = tree_pathwidth(t).value;
      if ((pw + 1) / 2 > c0 || c0 > pw) ++bad;
    }
  }
  wb.report(out, "cops tree bounds ceil(pw/2)<=c0<=pw", bad == 0,
            std::to_string(count) + " trees");

  // Cop non-monotonicity under subgraphs, via the bound chain: 3-cop replays
  // give c0(G_i) <= 3 for i <= 7, pathwidth growth gives c0(T_i) >= ceil(pw/2)
  // with pw(T_i) >= ceil(i/2); T_13 itself is far beyond desk scale, so the
  // final step is the arithmetic of the chain.
  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= 7; ++i) {
      auto inst = counterexample_family(i);
      CopSchedule cs = cops_from_lions(inst.supergraph, inst.schedule);
      if (cs.cop_count() != 3 ||
          !simulate_cops(inst.supergraph, cs, /*record_states=*/false).cleared)
        ok = false;
    }
    int largest_pw = 0;
    for (int i = 1; i <= 8; ++i) {
      auto inst = counterexample_family(i);
      int pw = tree_pathwidth(inst.tree).value;
      if (pw < (i + 1) / 2) ok = false;
      largest_pw = pw;
    }
    // chain value at i = 13: c0(T_13) >= ceil(ceil(13/2)/2) = 4 > 3 >= c0(G_13)
    const int chain_i = 13;
    const int chain_lower = ((chain_i + 1) / 2 + 1) / 2;
    if (chain_lower <= 3) ok = false;
    detail = "3-cop clearings of G_1..G_7; pw(T_i)>=ceil(i/2) up to i=8 (pw(T_8)=" +
             std::to_string(largest_pw) +
             "); chain gives c0(T_13)>=" + std::to_string(chain_lower) + ">3";
    wb.report(out, "cops non-monotonicity chain (i=13 symbolic)", ok, detail);
  }
  return out;
}

// --------------------------------------------------------------------------
// Criterion 10 — engine properties by randomized paired replay.

struct ReplayStats {
  long cases = 0;
  long violations = 0;
};

Schedule random_walk_schedule(const Graph& g, int lions, int steps,
                              std::mt19937_64& rng) {
  Schedule s;
  for (int i = 0; i < lions; ++i)
    s.initial.push_back(static_cast<Vertex>(rng() % g.vertex_count()));
  std::vector<Vertex> pos = s.initial;
  for (int t = 0; t < steps; ++t) {
    StepAction a;
    for (int i = 0; i < lions; ++i) {
      const auto& nbrs = g.neighbors(pos[i]);
      Vertex to = pos[i];
      if (!nbrs.empty() && (rng() % 4) != 0) to = nbrs[rng() % nbrs.size()];
      a.moves.push_back({pos[i], to});
      pos[i] = to;
    }
    s.steps.push_back(std::move(a));
  }
  return s;
}

std::vector<VertexSet> trace_contamination(const Graph& g, const Schedule& s) {
  Trace t = simulate(g, s);
  std::vector<VertexSet> w;
  w.reserve(t.states.size());
  for (auto& st : t.states) w.push_back(st.contaminated);
  return w;
}

// Added remote operations shift contamination one-sidedly.
ReplayStats remote_injection_monotonicity(Workbench& wb, bool clears,
                                     std::mt19937_64& rng) {
  ReplayStats stats;
  const long target = wb.opts().replay_cases;
  while (stats.cases < target) {
    Graph g =
        census::random_connected_graph(2 + static_cast<int>(rng() % 8), 0.35, rng);
    Schedule base = random_walk_schedule(g, 1 + static_cast<int>(rng() % 3),
                                         1 + static_cast<int>(rng() % 12), rng);
    Schedule modified = base;
    for (auto& a : modified.steps) {
      if ((rng() % 3) != 0) continue;
      VertexSet set(g.vertex_count());
      for (int picks = 1 + static_cast<int>(rng() % 2); picks > 0; --picks)
        set.set(static_cast<Vertex>(rng() % g.vertex_count()));
      if (clears)
        a.remote_clears = set;
      else
        a.remote_contaminations = set;
    }
    auto w_base = trace_contamination(g, base);
    auto w_mod = trace_contamination(g, modified);
    ++stats.cases;
    for (size_t t = 0; t < w_base.size(); ++t) {
      bool ok =
          clears ? w_base[t].contains(w_mod[t]) : w_mod[t].contains(w_base[t]);
      if (!ok) {
        ++stats.violations;
        break;
      }
    }
  }
  return stats;
}

// Shared suffixes preserve contamination containment from the join point on.
ReplayStats shared_suffix_containment(Workbench& wb, std::mt19937_64& rng) {
  ReplayStats stats;
  const long target = wb.opts().replay_cases;
  long attempts = 0;
  while (stats.cases < target && attempts < 50 * target) {
    ++attempts;
    Graph g =
        census::random_connected_graph(2 + static_cast<int>(rng() % 8), 0.35, rng);
    const int lions = 1 + static_cast<int>(rng() % 3);
    const int join = 1 + static_cast<int>(rng() % 6);
    const int suffix = 1 + static_cast<int>(rng() % 8);

    // Two prefixes ending at the same positions: walk backward from shared
    // join positions, then reverse.
    std::vector<Vertex> join_pos(lions);
    for (auto& v : join_pos) v = static_cast<Vertex>(rng() % g.vertex_count());
    auto backward_prefix = [&]() {
      std::vector<std::vector<Vertex>> cols(join + 1);
      cols[join] = join_pos;
      for (int t = join; t-- > 0;) {
        cols[t] = cols[t + 1];
        for (auto& v : cols[t]) {
          const auto& nbrs = g.neighbors(v);
          if (!nbrs.empty() && (rng() % 3) != 0) v = nbrs[rng() % nbrs.size()];
        }
      }
      Schedule s;
      s.initial = cols[0];
      for (int t = 1; t <= join; ++t) {
        StepAction a;
        for (int i = 0; i < lions; ++i)
          a.moves.push_back({cols[t - 1][i], cols[t][i]});
        s.steps.push_back(std::move(a));
      }
      return s;
    };
    Schedule pa = backward_prefix();
    Schedule pb = backward_prefix();
    // Half the cases get a premise guaranteed by extra remote clears instead.
    bool remote_variant = (rng() & 1) != 0;
    if (remote_variant) {
      pb = pa;
      for (auto& a : pb.steps) {
        if ((rng() % 2) == 0) continue;
        VertexSet rc(g.vertex_count());
        rc.set(static_cast<Vertex>(rng() % g.vertex_count()));
        a.remote_clears = rc;
      }
    }

    auto wa = trace_contamination(g, pa);
    auto wb_ = trace_contamination(g, pb);
    if (!wa.back().contains(wb_.back())) continue;  // premise W'_t ⊆ W_t

    // One shared random suffix appended to both.
    Schedule sa = pa, sb = pb;
    std::vector<Vertex> pos = join_pos;
    for (int t = 0; t < suffix; ++t) {
      StepAction a;
      for (int i = 0; i < lions; ++i) {
        const auto& nbrs = g.neighbors(pos[i]);
        Vertex to = pos[i];
        if (!nbrs.empty() && (rng() % 4) != 0) to = nbrs[rng() % nbrs.size()];
        a.moves.push_back({pos[i], to});
        pos[i] = to;
      }
      sa.steps.push_back(a);
      sb.steps.push_back(a);
    }
    auto fa = trace_contamination(g, sa);
    auto fb = trace_contamination(g, sb);
    ++stats.cases;
    for (size_t t = pa.steps.size(); t < fa.size(); ++t)
      if (!fa[t].contains(fb[t])) {
        ++stats.violations;
        break;
      }
  }
  return stats;
}

// Remote clears outside an untouched induced subgraph replicate
// the subgraph's own game exactly.
ReplayStats constant_remote_isolation(Workbench& wb, std::mt19937_64& rng) {
  ReplayStats stats;
  const long target = wb.opts().replay_cases;
  while (stats.cases < target) {
    Graph g =
        census::random_connected_graph(3 + static_cast<int>(rng() % 7), 0.4, rng);
    // random connected induced subgraph
    VertexSet h(g.vertex_count());
    h.set(static_cast<Vertex>(rng() % g.vertex_count()));
    for (int grow = 0; grow < g.vertex_count() - 1; ++grow) {
      auto nbrs = neighborhood(g, h).to_vector();
      if (nbrs.empty() || (rng() % 3) == 0) break;
      h.set(nbrs[rng() % nbrs.size()]);
    }
    auto sub = induced_subgraph(g, h);
    if (!sub.graph.is_connected()) continue;
    Schedule inner =
        random_walk_schedule(sub.graph, 1 + static_cast<int>(rng() % 2),
                             1 + static_cast<int>(rng() % 10), rng);
    // π' on g: same trajectories, remote clears on V \ H at every time step
    // including t = 0
    Schedule outer;
    for (Vertex v : inner.initial) outer.initial.push_back(sub.to_original[v]);
    VertexSet rest = h.complement();
    outer.initial_remote_clears = rest;
    for (const auto& a : inner.steps) {
      StepAction oa;
      for (const auto& m : a.moves)
        oa.moves.push_back({sub.to_original[m.from], sub.to_original[m.to]});
      oa.remote_clears = rest;
      outer.steps.push_back(std::move(oa));
    }
    auto wi = trace_contamination(sub.graph, inner);
    auto wo = trace_contamination(g, outer);
    ++stats.cases;
    bool ok = true;
    for (size_t t = 0; t < wi.size() && ok; ++t) {
      // W'_t must live inside H and equal the inner game's contamination.
      if (wo[t].intersects(rest)) ok = false;
      for (int v = 0; v < sub.graph.vertex_count(); ++v)
        if (wi[t].test(v) != wo[t].test(sub.to_original[v])) ok = false;
    }
    // restriction round-trip reproduces the inner schedule
    Schedule back = restrict_to_subgraph(outer, g, h);
    auto wb2 = trace_contamination(sub.graph, back);
    for (size_t t = 0; t < wi.size() && ok; ++t)
      if (!(wb2[t] == wi[t])) ok = false;
    if (!ok) ++stats.violations;
  }
  return stats;
}

// Remotely contaminating an abandoned cleared component behind a
// fully contaminated separator preserves clearance.
ReplayStats abandoned_component_writeoff(Workbench& wb, std::mt19937_64& rng) {
  ReplayStats stats;
  const long target = wb.opts().replay_cases;
  long attempts = 0;
  while (stats.cases < target && attempts < 200 * target) {
    ++attempts;
    Graph g =
        census::random_connected_graph(4 + static_cast<int>(rng() % 5), 0.35, rng);
    const SolveResult& base = wb.lions(g);
    // wasteful prologue, then walk to the witness start, then the witness
    Schedule s;
    const int k = base.witness.lion_count();
    Schedule wander =
        random_walk_schedule(g, k, 2 + static_cast<int>(rng() % 8), rng);
    s.initial = wander.initial;
    s.steps = wander.steps;
    std::vector<Vertex> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = wander.steps.back().moves[i].to;
    // march every lion to its witness start along BFS paths, one at a time
    for (int i = 0; i < k; ++i) {
      auto dist = bfs_distances(g, base.witness.initial[i]);
      while (pos[i] != base.witness.initial[i]) {
        Vertex next = pos[i];
        for (Vertex u : g.neighbors(pos[i]))
          if (dist[u] == dist[pos[i]] - 1) {
            next = u;
            break;
          }
        StepAction a;
        for (int j = 0; j < k; ++j) a.moves.push_back({pos[j], pos[j]});
        a.moves[i] = {pos[i], next};
        pos[i] = next;
        s.steps.push_back(std::move(a));
      }
    }
    for (const auto& a : base.witness.steps) s.steps.push_back(a);
    Trace t = simulate(g, s);
    if (!t.cleared) continue;  // prologue spoiled the witness; rare, skip

    // scan for a lion-free cleared component with fully contaminated border
    for (size_t time = 1; time + 1 < t.states.size() && stats.cases < target;
         ++time) {
      const GameState& st = t.states[time];
      VertexSet lions(g.vertex_count());
      for (Vertex v : st.lions) lions.set(v);
      for (const VertexSet& comp : components(g, st.contaminated.complement())) {
        if (comp.intersects(lions)) continue;
        VertexSet sep = neighborhood(g, comp);
        if (sep.empty() || !st.contaminated.contains(sep)) continue;
        // inject remote contamination on the whole component at `time`
        Schedule injected = s;
        VertexSet extra = comp;
        StepAction& a = injected.steps[time - 1];
        if (a.remote_contaminations) extra |= *a.remote_contaminations;
        a.remote_contaminations = extra;
        Trace t2 = simulate(g, injected, {.record_states = false});
        ++stats.cases;
        if (!t2.cleared) ++stats.violations;
        break;  // one injection per time step is plenty
      }
    }
  }
  return stats;
}

// Isometric subgraphs never need more lions.
ReplayStats isometric_monotonicity(Workbench& wb, std::mt19937_64& rng) {
  ReplayStats stats;
  const long target = wb.opts().replay_cases;
  long attempts = 0;
  while (stats.cases < target && attempts < 50 * target) {
    ++attempts;
    Graph g =
        census::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
    VertexSet h(g.vertex_count());
    h.set(static_cast<Vertex>(rng() % g.vertex_count()));
    for (int grow = 0; grow < g.vertex_count() - 1; ++grow) {
      auto nbrs = neighborhood(g, h).to_vector();
      if (nbrs.empty() || (rng() % 4) == 0) break;
      h.set(nbrs[rng() % nbrs.size()]);
    }
    auto sub = induced_subgraph(g, h);
    if (!sub.graph.is_connected()) continue;
    std::vector<std::pair<Vertex, Vertex>> h_edges;
    for (auto [u, v] : g.edges())
      if (h.test(u) && h.test(v)) h_edges.emplace_back(u, v);
    if (!is_isometric_subgraph(g, h, h_edges)) continue;
    ++stats.cases;
    if (wb.lions(sub.graph).value > wb.lions(g).value) ++stats.violations;
  }
  return stats;
}

// Along witness traces: every contaminated component keeps an adjacent
// lion, and every pendant subtree is at some step fully staffed.
ReplayStats witness_structure_checks(Workbench& wb, std::mt19937_64& rng) {
  ReplayStats stats;
  const long target = wb.opts().replay_cases;
  while (stats.cases < target) {
    Graph t = census::random_tree(2 + static_cast<int>(rng() % 8), rng);
    const SolveResult& r = wb.lions(t);
    Trace trace = simulate(
        t, r.witness, {.record_states = true, .check_component_invariant = true});
    if (!trace.violations.empty() || !trace.cleared) {
      ++stats.cases;
      ++stats.violations;
      continue;
    }
    // every pendant subtree of a tree must at some step host L(subtree) lions
    for (Vertex v = 0; v < t.vertex_count() && stats.cases < target; ++v) {
      VertexSet rest = t.vertex_set();
      rest.reset(v);
      for (const VertexSet& comp : components(t, rest)) {
        ++stats.cases;
        int need = tree_lion_number(induced_subgraph(t, comp).graph).value;
        int best = 0;
        for (const auto& st : trace.states) {
          int inside = 0;
          for (Vertex lv : st.lions)
            if (comp.test(lv)) ++inside;
          best = std::max(best, inside);
        }
        if (best < need) ++stats.violations;
        if (stats.cases >= target) break;
      }
    }
  }
  return stats;
}

std::vector<CheckResult> suite_engine_properties(Workbench& wb) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(wb.opts().seed);
  auto describe = [](const ReplayStats& s) {
    return std::to_string(s.cases) + " cases, " + std::to_string(s.violations) +
           " violations";
  };
  auto run = [&](const char* name, ReplayStats s) {
    wb.report(out, name, s.violations == 0 && s.cases >= wb.opts().replay_cases,
              describe(s));
  };
  run("shared-suffix contamination containment",
      shared_suffix_containment(wb, rng));
  run("added remote clears only shrink contamination",
      remote_injection_monotonicity(wb, /*clears=*/true, rng));
  run("added remote contaminations only grow contamination",
      remote_injection_monotonicity(wb, /*clears=*/false, rng));
  run("constant remote clears isolate an untouched subgraph",
      constant_remote_isolation(wb, rng));
  run("sealed-off cleared components can be written off",
      abandoned_component_writeoff(wb, rng));
  run("isometric subgraphs never need more lions",
      isometric_monotonicity(wb, rng));
  run("witness traces: component adjacency and pendant occupancy",
      witness_structure_checks(wb, rng));
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"trees",    "binary-trees", "general-upper",   "counterexample",
          "monotone", "boundary",     "complete-graphs", "binary-tree-monotone",
          "cops",     "engine-properties"};
}

namespace {

std::vector<CheckResult> dispatch_suite(Workbench& wb, const std::string& suite) {
  if (suite == "trees") return suite_trees(wb);
  if (suite == "binary-trees") return suite_binary_trees(wb);
  if (suite == "general-upper") return suite_general_upper(wb);
  if (suite == "counterexample") return suite_counterexample(wb);
  if (suite == "monotone") return suite_monotone(wb);
  if (suite == "boundary") return suite_boundary(wb);
  if (suite == "complete-graphs") return suite_complete_graphs(wb);
  if (suite == "binary-tree-monotone") return suite_binary_tree_monotone(wb);
  if (suite == "cops") return suite_cops(wb);
  if (suite == "engine-properties") return suite_engine_properties(wb);
  throw DomainError("unknown suite \"" + suite + "\"");
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteOptions& opts, std::ostream* log) {
  Workbench wb(opts, log);
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const auto& suite : suite_names()) {
      auto part = dispatch_suite(wb, suite);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  return dispatch_suite(wb, name);
}

std::vector<SuiteReport> run_all(const SuiteOptions& opts, std::ostream* log) {
  Workbench wb(opts, log);
  std::vector<SuiteReport> out;
  for (const auto& suite : suite_names())
    out.push_back({suite, dispatch_suite(wb, suite)});
  return out;
}

}  // namespace lions::verify
