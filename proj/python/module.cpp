#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lions/census.hpp"
#include "lions/cops.hpp"
#include "lions/engine.hpp"
#include "lions/io.hpp"
#include "lions/search.hpp"
#include "lions/synthesis.hpp"
#include "lions/tree.hpp"
#include "lions/verify.hpp"
#include "lions/width.hpp"

namespace py = pybind11;
using namespace lions;

namespace {

VertexSet set_from_list(int universe, const std::vector<Vertex>& vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.set(v);
  return s;
}

std::vector<Vertex> list_from_set(const VertexSet& s) { return s.to_vector(); }

PathDecomposition decomposition_from_lists(
    int universe, const std::vector<std::vector<Vertex>>& bags) {
  PathDecomposition d;
  for (const auto& b : bags) d.bags.push_back(set_from_list(universe, b));
  return d;
}

std::vector<std::vector<Vertex>> lists_from_decomposition(
    const PathDecomposition& d) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& b : d.bags) out.push_back(b.to_vector());
  return out;
}

SearchLimits make_limits(long budget, bool unguarded) {
  SearchLimits l;
  l.node_budget = budget;
  l.override_size_guard = unguarded;
  return l;
}

}  // namespace

PYBIND11_MODULE(_pylions, m) {
  m.doc() = "lions-and-contamination workbench: engine, solvers, synthesizers";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<Vertex, Vertex>>&>(),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, Vertex v) { return g.neighbors(v); })
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def_property_readonly("connected", &Graph::is_connected)
      .def_property_readonly("tree", &Graph::is_tree)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("path_graph", &path_graph);
  m.def("star", &star);
  m.def("complete", &complete);
  m.def("complete_binary_tree", &complete_binary_tree);
  m.def("add_universal_vertex", &add_universal_vertex);

  m.def("neighborhood", [](const Graph& g, const std::vector<Vertex>& s) {
    return list_from_set(neighborhood(g, set_from_list(g.vertex_count(), s)));
  });
  m.def("boundary", [](const Graph& g, const std::vector<Vertex>& s) {
    return list_from_set(boundary(g, set_from_list(g.vertex_count(), s)));
  });
  m.def("components", [](const Graph& g, const std::vector<Vertex>& s) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : components(g, set_from_list(g.vertex_count(), s)))
      out.push_back(c.to_vector());
    return out;
  });
  m.def("is_isometric_subgraph",
        [](const Graph& g, const std::vector<Vertex>& hv,
           const std::vector<std::pair<Vertex, Vertex>>& he) {
          return is_isometric_subgraph(g, set_from_list(g.vertex_count(), hv), he);
        });

  py::class_<Move>(m, "Move")
      .def(py::init<Vertex, Vertex>(), py::arg("from_"), py::arg("to"))
      .def_readwrite("from_", &Move::from)
      .def_readwrite("to", &Move::to)
      .def("__repr__", [](const Move& mv) {
        return "Move(" + std::to_string(mv.from) + "->" + std::to_string(mv.to) + ")";
      });

  py::class_<StepAction>(m, "StepAction")
      .def(py::init<>())
      .def_readwrite("moves", &StepAction::moves)
      .def_property(
          "remote_clears",
          [](const StepAction& a) {
            return a.remote_clears ? a.remote_clears->to_vector()
                                   : std::vector<Vertex>{};
          },
          [](StepAction&, const std::vector<Vertex>&) {
            throw DomainError("set remote operations through make_step");
          })
      .def_property(
          "remote_contaminations",
          [](const StepAction& a) {
            return a.remote_contaminations ? a.remote_contaminations->to_vector()
                                           : std::vector<Vertex>{};
          },
          [](StepAction&, const std::vector<Vertex>&) {
            throw DomainError("set remote operations through make_step");
          });

  m.def(
      "make_step",
      [](int universe, const std::vector<std::pair<Vertex, Vertex>>& moves,
         const std::vector<Vertex>& remote_clears,
         const std::vector<Vertex>& remote_contaminations) {
        StepAction a;
        for (auto [f, t] : moves) a.moves.push_back({f, t});
        if (!remote_clears.empty())
          a.remote_clears = set_from_list(universe, remote_clears);
        if (!remote_contaminations.empty())
          a.remote_contaminations = set_from_list(universe, remote_contaminations);
        return a;
      },
      py::arg("universe"), py::arg("moves"),
      py::arg("remote_clears") = std::vector<Vertex>{},
      py::arg("remote_contaminations") = std::vector<Vertex>{});

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<>())
      .def_readwrite("initial", &Schedule::initial)
      .def_readwrite("steps", &Schedule::steps)
      .def_property_readonly("lion_count", &Schedule::lion_count)
      .def_property_readonly("has_remote_ops", &Schedule::has_remote_ops);

  py::class_<GameState>(m, "GameState")
      .def_readonly("lions", &GameState::lions)
      .def_property_readonly(
          "contaminated",
          [](const GameState& s) { return s.contaminated.to_vector(); })
      .def_property_readonly(
          "cleared", [](const GameState& s) { return s.cleared().to_vector(); });

  py::class_<Trace>(m, "Trace")
      .def_readonly("states", &Trace::states)
      .def_readonly("monotone", &Trace::monotone)
      .def_readonly("cleared", &Trace::cleared)
      .def_readonly("steps", &Trace::steps)
      .def_readonly("lions", &Trace::lions);

  m.def(
      "simulate",
      [](const Graph& g, const Schedule& s, bool record_states) {
        return simulate(g, s, {.record_states = record_states});
      },
      py::arg("graph"), py::arg("schedule"), py::arg("record_states") = true);
  m.def("restrict_to_subgraph",
        [](const Schedule& s, const Graph& g, const std::vector<Vertex>& h) {
          return restrict_to_subgraph(s, g, set_from_list(g.vertex_count(), h));
        });

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("value", &SolveResult::value)
      .def_readonly("witness", &SolveResult::witness)
      .def_readonly("nodes_expanded", &SolveResult::nodes_expanded)
      .def_readonly("elapsed_ms", &SolveResult::elapsed_ms);

  m.def(
      "lion_number",
      [](const Graph& g, long budget, bool unguarded) {
        return lion_number(g, make_limits(budget, unguarded));
      },
      py::arg("graph"), py::arg("budget") = 0, py::arg("unguarded") = false);
  m.def(
      "monotone_lion_number",
      [](const Graph& g, long budget, bool unguarded) {
        return monotone_lion_number(g, make_limits(budget, unguarded));
      },
      py::arg("graph"), py::arg("budget") = 0, py::arg("unguarded") = false);
  m.def(
      "clearable",
      [](const Graph& g, int k, bool monotone, bool polite, long budget,
         bool unguarded) -> py::object {
        auto r = clearable(g, k, monotone, polite, make_limits(budget, unguarded));
        if (r.status == Clearability::kUnknown) return py::none();
        if (r.status == Clearability::kNo) return py::bool_(false);
        return py::make_tuple(true, *r.witness);
      },
      py::arg("graph"), py::arg("k"), py::arg("monotone") = false,
      py::arg("polite") = false, py::arg("budget") = 0,
      py::arg("unguarded") = false,
      "False, None (budget exhausted), or (True, witness)");

  py::class_<TreeCert>(m, "TreeCert")
      .def_readonly("value", &TreeCert::value)
      .def_property_readonly("witness_vertex", [](const TreeCert& c) -> py::object {
        if (!c.witness_vertex) return py::none();
        return py::int_(*c.witness_vertex);
      });
  m.def("tree_lion_number", &tree_lion_number);
  m.def("tree_pathwidth", &tree_pathwidth);
  m.def("tree_clearing_strategy", &tree_clearing_strategy);

  m.def("validate_decomposition",
        [](const Graph& g, const std::vector<std::vector<Vertex>>& bags) {
          auto check =
              validate_decomposition(g, decomposition_from_lists(g.vertex_count(), bags));
          std::vector<std::string> issues;
          for (const auto& v : check.violations)
            issues.push_back(v.condition + ": " + v.detail);
          return py::make_tuple(check.ok, issues);
        });
  m.def("pathwidth_exact", [](const Graph& g) {
    auto r = pathwidth_exact(g);
    return py::make_tuple(r.width, lists_from_decomposition(r.witness));
  });
  m.def("connected_pathwidth_exact", [](const Graph& g) {
    auto r = connected_pathwidth_exact(g);
    return py::make_tuple(r.width, lists_from_decomposition(r.witness));
  });
  m.def("normalize_proper",
        [](const Graph& g, const std::vector<std::vector<Vertex>>& bags) {
          return lists_from_decomposition(
              normalize_proper(g, decomposition_from_lists(g.vertex_count(), bags)));
        });

  m.def("clear_via_decomposition",
        [](const Graph& g, const std::vector<std::vector<Vertex>>& bags) {
          return clear_via_decomposition(
              g, decomposition_from_lists(g.vertex_count(), bags));
        });
  m.def("clear_monotone_via_connected_decomposition",
        [](const Graph& g, const std::vector<std::vector<Vertex>>& bags) {
          return clear_monotone_via_connected_decomposition(
              g, decomposition_from_lists(g.vertex_count(), bags));
        });
  m.def("decomposition_from_monotone", [](const Graph& g, const Trace& t) {
    return lists_from_decomposition(decomposition_from_monotone(g, t));
  });

  py::class_<CounterexampleInstance>(m, "CounterexampleInstance")
      .def_readonly("index", &CounterexampleInstance::index)
      .def_readonly("tree", &CounterexampleInstance::tree)
      .def_readonly("supergraph", &CounterexampleInstance::supergraph)
      .def_readonly("schedule", &CounterexampleInstance::schedule)
      .def_readonly("duration", &CounterexampleInstance::duration)
      .def_readonly("left_root", &CounterexampleInstance::left_root)
      .def_readonly("left_path_edges", &CounterexampleInstance::left_path_edges)
      .def_readonly("left_vacate_step", &CounterexampleInstance::left_vacate_step)
      .def_readonly("left_reguard_step",
                    &CounterexampleInstance::left_reguard_step);
  m.def("counterexample_family", &counterexample_family, py::arg("index"),
        py::arg("max_vertices") = 300000L);
  m.def("monotone_root_blocker_schedule", &monotone_root_blocker_schedule);

  py::class_<CopSchedule>(m, "CopSchedule")
      .def(py::init<>())
      .def_readwrite("initial", &CopSchedule::initial)
      .def_readwrite("steps", &CopSchedule::steps)
      .def_property_readonly("cop_count", &CopSchedule::cop_count);
  py::class_<CopSolveResult>(m, "CopSolveResult")
      .def_readonly("value", &CopSolveResult::value)
      .def_readonly("witness", &CopSolveResult::witness)
      .def_readonly("nodes_expanded", &CopSolveResult::nodes_expanded);
  m.def(
      "cop_number_exact",
      [](const Graph& g, long budget, bool unguarded) {
        return cop_number_exact(g, make_limits(budget, unguarded));
      },
      py::arg("graph"), py::arg("budget") = 0, py::arg("unguarded") = false);
  m.def("simulate_cops", [](const Graph& g, const CopSchedule& cs) {
    auto t = simulate_cops(g, cs);
    std::vector<std::vector<Vertex>> dirty;
    for (const auto& st : t.states) dirty.push_back(st.dirty_post.to_vector());
    return py::make_tuple(t.cleared, dirty);
  });
  m.def("lions_from_cops", &lions_from_cops);
  m.def("cops_from_lions", &cops_from_lions);

  m.def("parse_graph", [](const std::string& text) {
    auto doc = io::parse_graph(text);
    return py::make_tuple(doc.graph, doc.labels);
  });
  m.def("serialize_graph", [](const Graph& g) {
    return io::serialize_graph(io::wrap_graph(g));
  });
  m.def(
      "export_dot",
      [](const Graph& g, py::object state) {
        auto doc = io::wrap_graph(g);
        if (state.is_none()) return io::export_dot(doc);
        const GameState& st = state.cast<const GameState&>();
        return io::export_dot(doc, &st);
      },
      py::arg("graph"), py::arg("state") = py::none());

  m.def(
      "run_suite",
      [](const std::string& name, int graph_max_n, int tree_max_n, int samples,
         long cases, uint64_t seed, bool full_census) {
        verify::SuiteOptions opts;
        opts.graph_max_n = graph_max_n;
        opts.tree_max_n = tree_max_n;
        opts.sample_count = samples;
        opts.replay_cases = cases;
        opts.seed = seed;
        opts.full_census = full_census;
        std::vector<py::tuple> out;
        for (const auto& c : verify::run_suite(name, opts))
          out.push_back(py::make_tuple(c.name, c.pass, c.detail));
        return out;
      },
      py::arg("name"), py::arg("graph_max_n") = 7, py::arg("tree_max_n") = 9,
      py::arg("samples") = 500, py::arg("cases") = 1000,
      py::arg("seed") = 20250810ull, py::arg("full_census") = true);
}
