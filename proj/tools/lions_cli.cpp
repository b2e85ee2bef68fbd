// Command-line surface: solve | simulate | synth | tree | width |
// counterexample | cops | verify.
//
// Exit codes: 0 success, 1 domain error, 2 budget/size-guard refusal,
// 3 parse error, 4 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lions/census.hpp"
#include "lions/cops.hpp"
#include "lions/engine.hpp"
#include "lions/io.hpp"
#include "lions/search.hpp"
#include "lions/synthesis.hpp"
#include "lions/tree.hpp"
#include "lions/verify.hpp"
#include "lions/width.hpp"

namespace {

using lions::io::Json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lions::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw lions::DomainError("cannot write file: " + path);
  out << text;
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    spill(out_path, text);
}

long default_budget() {
  if (const char* env = std::getenv("LIONS_BUDGET")) return std::atol(env);
  return 0;
}

struct CommonArgs {
  std::string graph_path;
  std::string out_path;
  std::string format = "json";
  long budget = default_budget();
};

lions::SearchLimits limits_from(const CommonArgs& args, bool unguarded) {
  lions::SearchLimits l;
  l.node_budget = args.budget;
  l.override_size_guard = unguarded;
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for the lions-and-contamination pursuit game"};
  app.require_subcommand(1);

  CommonArgs args;
  bool unguarded = false;

  auto add_common = [&](CLI::App* cmd, bool needs_graph = true) {
    if (needs_graph)
      cmd->add_option("--graph", args.graph_path, "graph JSON file")->required();
    cmd->add_option("--out", args.out_path, "write the result to this file");
    cmd->add_option("--format", args.format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    cmd->add_option("--budget", args.budget, "search node budget (0 = unlimited)");
    cmd->add_flag("--unguarded", unguarded, "override solver size guards");
  };

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "lion number or k-clearability");
  int solve_k = 0;
  bool solve_monotone = false, solve_polite = false;
  add_common(solve_cmd);
  solve_cmd->add_option("--k", solve_k, "test clearability with exactly k lions");
  solve_cmd->add_flag("--monotone", solve_monotone, "restrict to monotone clearings");
  solve_cmd->add_flag("--polite", solve_polite, "restrict to polite schedules");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "replay a schedule into a trace");
  std::string schedule_path;
  add_common(sim_cmd);
  sim_cmd->add_option("--schedule", schedule_path, "schedule JSON file")->required();

  // synth
  auto* synth_cmd =
      app.add_subcommand("synth", "decomposition-driven clearing schedule");
  bool synth_monotone = false;
  add_common(synth_cmd);
  synth_cmd->add_flag("--monotone", synth_monotone,
                      "monotone clearing from a connected decomposition");

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "tree lion number and pathwidth");
  bool tree_strategy = false;
  add_common(tree_cmd);
  tree_cmd->add_flag("--strategy", tree_strategy, "emit a clearing schedule");

  // width
  auto* width_cmd = app.add_subcommand("width", "exact (connected) pathwidth");
  bool width_connected = false;
  add_common(width_cmd);
  width_cmd->add_flag("--connected", width_connected, "connected pathwidth");

  // counterexample
  auto* cx_cmd = app.add_subcommand("counterexample",
                                    "trees T_i and supergraphs G_i with 3-lion schedules");
  int cx_index = 1;
  long cx_guard = 300000;
  add_common(cx_cmd, /*needs_graph=*/false);
  cx_cmd->add_option("--index", cx_index, "family level i >= 1")->required();
  cx_cmd->add_option("--max-vertices", cx_guard, "size guard");

  // cops
  auto* cops_cmd =
      app.add_subcommand("cops", "zero-visibility cop number and transforms");
  std::string from_lions_path, to_lions_path;
  add_common(cops_cmd);
  cops_cmd->add_option("--from-lions", from_lions_path,
                       "convert a clearing lion schedule to a cop schedule");
  cops_cmd->add_option("--to-lions", to_lions_path,
                       "convert a clearing cop schedule to a 2x lion schedule");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run an acceptance suite");
  std::string suite = "all";
  lions::verify::SuiteOptions vopts;
  bool quick = false;
  verify_cmd->add_option("--suite", suite, "suite name or 'all'");
  verify_cmd->add_option("--max-n", vopts.graph_max_n, "connected census bound");
  verify_cmd->add_option("--tree-max-n", vopts.tree_max_n, "tree census bound");
  verify_cmd->add_option("--samples", vopts.sample_count, "subsample size");
  verify_cmd->add_option("--cases", vopts.replay_cases, "paired-replay case count");
  verify_cmd->add_option("--seed", vopts.seed, "random seed");
  verify_cmd->add_option("--budget", vopts.node_budget, "search node budget");
  verify_cmd->add_flag("--quick", quick, "subsample instead of the full census");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  try {
    if (*solve_cmd) {
      auto doc = lions::io::parse_graph(slurp(args.graph_path));
      if (solve_k > 0) {
        auto r = lions::clearable(doc.graph, solve_k, solve_monotone, solve_polite,
                                  limits_from(args, unguarded));
        Json j;
        j["k"] = solve_k;
        j["monotone"] = solve_monotone;
        j["polite"] = solve_polite;
        if (r.status == lions::Clearability::kUnknown) {
          j["clearable"] = "indeterminate";
          j["nodes"] = r.nodes_expanded;
          emit(j, args.out_path);
          return 2;
        }
        j["clearable"] = r.status == lions::Clearability::kYes;
        j["nodes"] = r.nodes_expanded;
        if (r.witness) j["witness"] = lions::io::schedule_to_json(*r.witness, doc);
        emit(j, args.out_path);
      } else {
        auto r = solve_monotone
                     ? lions::monotone_lion_number(doc.graph,
                                                   limits_from(args, unguarded))
                     : lions::lion_number(doc.graph, limits_from(args, unguarded));
        emit(lions::io::solve_result_to_json(
                 solve_monotone ? "monotone_lion_number" : "lion_number", r, doc),
             args.out_path);
      }
    } else if (*sim_cmd) {
      auto doc = lions::io::parse_graph(slurp(args.graph_path));
      auto schedule = lions::io::parse_schedule(slurp(schedule_path), doc);
      if (args.format == "dot") {
        lions::Trace t = lions::simulate(doc.graph, schedule);
        std::string dot = lions::io::export_dot(doc, &t.states.back());
        if (args.out_path.empty())
          std::cout << dot;
        else
          spill(args.out_path, dot);
      } else {
        emit(lions::io::trace_to_json(doc, schedule), args.out_path);
      }
    } else if (*synth_cmd) {
      auto doc = lions::io::parse_graph(slurp(args.graph_path));
      Json j;
      lions::Schedule schedule;
      if (synth_monotone) {
        auto w = lions::connected_pathwidth_exact(doc.graph);
        schedule = lions::clear_monotone_via_connected_decomposition(doc.graph,
                                                                     w.witness);
        j["connected_pathwidth"] = w.width;
        j["decomposition"] = lions::io::decomposition_to_json(w.witness, doc);
      } else {
        auto w = lions::pathwidth_exact(doc.graph);
        auto proper = lions::normalize_proper(doc.graph, w.witness);
        schedule = lions::clear_via_decomposition(doc.graph, proper);
        j["pathwidth"] = w.width;
        j["decomposition"] = lions::io::decomposition_to_json(proper, doc);
      }
      lions::Trace t = lions::simulate(doc.graph, schedule);
      j["schedule"] = lions::io::schedule_to_json(schedule, doc);
      j["summary"] = {{"lions", schedule.lion_count()},
                      {"steps", static_cast<int>(schedule.steps.size())},
                      {"cleared", t.cleared},
                      {"monotone", t.monotone}};
      emit(j, args.out_path);
    } else if (*tree_cmd) {
      auto doc = lions::io::parse_graph(slurp(args.graph_path));
      auto lions_cert = lions::tree_lion_number(doc.graph);
      auto pw_cert = lions::tree_pathwidth(doc.graph);
      Json j;
      j["lion_number"] = lions_cert.value;
      if (lions_cert.witness_vertex)
        j["witness_vertex"] = doc.labels[*lions_cert.witness_vertex];
      j["pathwidth"] = pw_cert.value;
      if (tree_strategy) {
        lions::Schedule s = lions::tree_clearing_strategy(doc.graph);
        lions::Trace t = lions::simulate(doc.graph, s, {.record_states = false});
        j["schedule"] = lions::io::schedule_to_json(s, doc);
        j["summary"] = {{"lions", s.lion_count()},
                        {"steps", static_cast<int>(s.steps.size())},
                        {"cleared", t.cleared}};
      }
      emit(j, args.out_path);
    } else if (*width_cmd) {
      auto doc = lions::io::parse_graph(slurp(args.graph_path));
      auto w = width_connected ? lions::connected_pathwidth_exact(doc.graph)
                               : lions::pathwidth_exact(doc.graph);
      Json j;
      j[width_connected ? "connected_pathwidth" : "pathwidth"] = w.width;
      j["decomposition"] = lions::io::decomposition_to_json(w.witness, doc);
      emit(j, args.out_path);
    } else if (*cx_cmd) {
      auto inst = lions::counterexample_family(cx_index, cx_guard);
      auto tree_doc = lions::io::wrap_graph(inst.tree);
      auto super_doc = lions::io::wrap_graph(inst.supergraph);
      super_doc.metadata = {{"index", inst.index},
                            {"duration", inst.duration},
                            {"universal_vertex",
                             super_doc.labels[inst.tree.vertex_count()]}};
      lions::Trace t =
          lions::simulate(inst.supergraph, inst.schedule, {.record_states = false});
      Json summary = {{"index", inst.index},
                      {"tree_order", inst.tree.vertex_count()},
                      {"supergraph_order", inst.supergraph.vertex_count()},
                      {"duration", inst.duration},
                      {"lions", inst.schedule.lion_count()},
                      {"cleared", t.cleared},
                      {"monotone", t.monotone}};
      if (!args.out_path.empty()) {
        spill(args.out_path + ".tree.json", lions::io::serialize_graph(tree_doc));
        spill(args.out_path + ".graph.json", lions::io::serialize_graph(super_doc));
        spill(args.out_path + ".schedule.json",
              lions::io::schedule_to_json(inst.schedule, super_doc).dump(2) + "\n");
        if (args.format == "dot")
          spill(args.out_path + ".dot", lions::io::export_dot(super_doc));
        summary["files"] = {args.out_path + ".tree.json",
                            args.out_path + ".graph.json",
                            args.out_path + ".schedule.json"};
        std::cout << summary.dump(2) << "\n";
      } else if (args.format == "dot") {
        std::cout << lions::io::export_dot(super_doc);
      } else {
        Json j = summary;
        j["tree"] = Json::parse(lions::io::serialize_graph(tree_doc));
        j["supergraph"] = Json::parse(lions::io::serialize_graph(super_doc));
        j["schedule"] = lions::io::schedule_to_json(inst.schedule, super_doc);
        emit(j, "");
      }
    } else if (*cops_cmd) {
      auto doc = lions::io::parse_graph(slurp(args.graph_path));
      if (!from_lions_path.empty()) {
        auto s = lions::io::parse_schedule(slurp(from_lions_path), doc);
        auto cs = lions::cops_from_lions(doc.graph, s);
        emit(lions::io::cop_schedule_to_json(cs, doc), args.out_path);
      } else if (!to_lions_path.empty()) {
        auto cs = lions::io::cop_schedule_from_json(
            Json::parse(slurp(to_lions_path)), doc);
        auto s = lions::lions_from_cops(doc.graph, cs);
        emit(lions::io::schedule_to_json(s, doc), args.out_path);
      } else {
        auto r = lions::cop_number_exact(doc.graph, limits_from(args, unguarded));
        Json j;
        j["cop_number"] = r.value;
        j["witness"] = lions::io::cop_schedule_to_json(r.witness, doc);
        j["stats"] = {{"nodes", r.nodes_expanded}, {"elapsed_ms", r.elapsed_ms}};
        emit(j, args.out_path);
      }
    } else if (*verify_cmd) {
      if (quick) vopts.full_census = false;
      std::cout << "suite: " << suite << "\n";
      auto checks = lions::verify::run_suite(suite, vopts, &std::cout);
      int failed = 0;
      for (const auto& c : checks)
        if (!c.pass) ++failed;
      std::cout << (failed == 0 ? "OK" : "FAILED") << " (" << checks.size()
                << " checks, " << failed << " failed)\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const lions::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const lions::GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const lions::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
