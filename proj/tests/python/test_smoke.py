"""Smoke tests for the pylions extension: a quick pass over every exposed
operation with known-value anchors."""

import pytest

import pylions as pl


def test_graph_constructors():
    star = pl.star(3)
    assert star.n == 4 and star.m == 3
    assert star.connected and star.tree
    cbt = pl.complete_binary_tree(3)
    assert cbt.n == 15
    tri = pl.add_universal_vertex(pl.path_graph(2))
    assert tri.m == 3
    with pytest.raises(ValueError):
        pl.path_graph(0)


def test_set_calculus():
    p3 = pl.path_graph(3)
    assert pl.neighborhood(p3, [1]) == [0, 2]
    assert pl.boundary(p3, [0, 1]) == [1]
    assert pl.components(p3, [0, 2]) == [[0], [2]]
    c4 = pl.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not pl.is_isometric_subgraph(c4, [0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)])


def test_simulate_path_sweep():
    p5 = pl.path_graph(5)
    s = pl.Schedule()
    s.initial = [0]
    s.steps = [pl.make_step(5, [(v, v + 1)]) for v in range(4)]
    trace = pl.simulate(p5, s)
    assert trace.cleared and trace.monotone
    assert trace.states[-1].contaminated == []


def test_solvers():
    star = pl.star(3)
    assert pl.lion_number(star).value == 2
    assert pl.clearable(star, 1) is False
    ok, witness = pl.clearable(star, 2)
    assert ok and pl.simulate(star, witness).cleared
    k4 = pl.complete(4)
    assert pl.monotone_lion_number(k4).value == 3


def test_tree_algorithms():
    cbt4 = pl.complete_binary_tree(4)
    assert pl.tree_pathwidth(cbt4).value == 2
    assert pl.tree_lion_number(cbt4).value == 3
    schedule = pl.tree_clearing_strategy(cbt4)
    assert schedule.lion_count == 3
    assert pl.simulate(cbt4, schedule).cleared


def test_width_tools():
    k4 = pl.complete(4)
    width, bags = pl.pathwidth_exact(k4)
    assert width == 3
    ok, issues = pl.validate_decomposition(k4, bags)
    assert ok and not issues
    cwidth, cbags = pl.connected_pathwidth_exact(pl.path_graph(6))
    assert cwidth == 1
    proper = pl.normalize_proper(pl.path_graph(3), [[0, 1], [1], [1, 2]])
    assert proper == [[0, 1], [1, 2]]


def test_synthesis_round_trip():
    g = pl.complete(4)
    cwidth, cbags = pl.connected_pathwidth_exact(g)
    schedule = pl.clear_monotone_via_connected_decomposition(g, cbags)
    trace = pl.simulate(g, schedule)
    assert trace.cleared and trace.monotone
    bags = pl.decomposition_from_monotone(g, trace)
    ok, _ = pl.validate_decomposition(g, bags)
    assert ok
    assert max(len(b) for b in bags) - 1 <= schedule.lion_count


def test_counterexample():
    inst = pl.counterexample_family(2)
    assert inst.tree.n == 19 and inst.supergraph.n == 20
    trace = pl.simulate(inst.supergraph, inst.schedule, record_states=False)
    assert trace.cleared and not trace.monotone
    with pytest.raises(RuntimeError):
        pl.counterexample_family(9, 1000)


def test_cops():
    star = pl.star(3)
    r = pl.cop_number_exact(star)
    assert r.value == 1
    cleared, _ = pl.simulate_cops(star, r.witness)
    assert cleared
    doubled = pl.lions_from_cops(star, r.witness)
    assert doubled.lion_count == 2
    assert pl.simulate(star, doubled).cleared
    back = pl.cops_from_lions(star, pl.lion_number(star).witness)
    cleared2, _ = pl.simulate_cops(star, back)
    assert cleared2


def test_io_round_trip():
    text = pl.serialize_graph(pl.star(3))
    graph, labels = pl.parse_graph(text)
    assert graph.n == 4 and labels == ["0", "1", "2", "3"]
    dot = pl.export_dot(pl.path_graph(2))
    assert dot.startswith("graph lions {") and "--" in dot


def test_verify_suite():
    checks = pl.run_suite("complete-graphs")
    assert checks and all(passed for _, passed, _ in checks)
