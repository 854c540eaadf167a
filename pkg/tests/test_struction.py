import pytest

from cliquekernel.generator import GenSpec, generate
from cliquekernel.graph import GraphError, complete_graph, cycle_graph, star_graph
from cliquekernel.io import GraphFormatError
from cliquekernel.oracle import clique_number, is_clique, max_clique
from cliquekernel.struction import (
    Origin,
    StructionBudgetError,
    default_pivot,
    lift_clique,
    load_origin,
    save_origin,
    struction,
)

from conftest import small_corpus


def test_triangle():
    res = struction(complete_graph(3), pivot=0)
    assert res.node_origin == [Origin("A", 1), Origin("A", 2)]
    assert list(res.graph.edges()) == [(0, 1)]
    assert lift_clique(res, [0, 1]) == (0, 1, 2)


def test_star_centre_pivot():
    g = star_graph(3)
    res = struction(g, pivot=0)
    assert res.graph.n == 3 and res.graph.edge_count == 0
    assert clique_number(res.graph) == 1
    assert lift_clique(res, []) == (0,)


def test_four_cycle():
    res = struction(cycle_graph(4), pivot=0)
    assert [str(o) for o in res.node_origin] == ["A 1", "A 3"]
    assert clique_number(res.graph) == 1 == clique_number(cycle_graph(4)) - 1


def test_c_nodes_and_cross_edges():
    # pivot 0 sees 1; 2-3-4 is a triangle away from the pivot; 1 touches 2 and 3
    g = complete_graph(5)
    for v in (2, 3, 4):
        g.remove_edge(0, v)
    g.remove_edge(1, 4)
    res = struction(g, pivot=0)
    assert [str(o) for o in res.node_origin] == ["A 1", "C 2 3", "C 2 4", "C 3 4"]
    # A 1 ~ C 2 3 only; C 2 3 ~ C 2 4 through edge {3,4}
    assert sorted(res.graph.edges()) == [(0, 1), (1, 2)]
    best = max_clique(res.graph)
    lifted = lift_clique(res, best.members)
    assert len(lifted) == best.size + 1 == clique_number(g)
    assert is_clique(g, lifted)


def test_default_pivot_is_min_degree():
    g = star_graph(3)
    assert default_pivot(g) == 1
    assert struction(g).pivot == 1


def test_clique_number_drops_by_one_on_corpus():
    for g in small_corpus(60, seed=31, min_n=2, max_n=10):
        res = struction(g, node_budget=10_000)
        omega = clique_number(g)
        best = max_clique(res.graph, cap=None)
        assert best.size == omega - 1
        lifted = lift_clique(res, best.members)
        assert len(lifted) == omega and is_clique(g, lifted)


def test_every_pivot():
    g = generate(GenSpec(9, 20, 4))
    omega = clique_number(g)
    for p in range(g.n):
        assert clique_number(struction(g, pivot=p, node_budget=10_000).graph, cap=None) == omega - 1


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_iterated_on_complete_graph(n):
    g, steps = complete_graph(n), 0
    while g.n > 1:
        g = struction(g).graph
        steps += 1
    assert steps == n - 1 and g.edge_count == 0


def test_lift_rejects_non_clique():
    res = struction(cycle_graph(4), pivot=0)
    with pytest.raises(GraphError):
        lift_clique(res, [0, 1])
    with pytest.raises(GraphError):
        lift_clique(res, [5])


def test_budget():
    g = generate(GenSpec(12, 14, 1))
    with pytest.raises(StructionBudgetError):
        struction(g, node_budget=3)


def test_inactive_pivot():
    g = complete_graph(3).remove_vertex(1)
    with pytest.raises(GraphError):
        struction(g, pivot=1)


def test_origin_sidecar(tmp_path):
    g = generate(GenSpec(10, 18, 2))
    res = struction(g, node_budget=1000)
    path = tmp_path / "origin.txt"
    save_origin(res, path)
    assert load_origin(path) == res.node_origin
    path.write_text("A 1\nC 3 2\n")
    with pytest.raises(GraphFormatError):
        load_origin(path)
