import networkx as nx
import pytest
from hypothesis import given, settings

from comaximal.cliques import (
    SearchBudgetExceeded,
    clique_number,
    independence_number,
    is_clique,
    is_independent,
    max_clique,
    max_independent_set,
    max_weight_clique,
    twin_classes,
)
from comaximal.factors import ProductRingSpec, build_graph
from comaximal.graphs import Graph
from comaximal.rings import comaximal_graph, make_zmod

from tests.strategies import graphs, to_nx


def nx_omega(g: Graph) -> int:
    return max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)


def test_zmod30():
    g = comaximal_graph(make_zmod(30))
    assert clique_number(g) == 3 and independence_number(g) == 3
    assert {g.labels[v] for v in max_clique(g)} == {"(2)", "(3)", "(5)"}
    # {(6),(10),(15)} and {(5),(10),(15)} are both maximum
    indep = max_independent_set(g)
    assert is_independent(g, indep) and len(indep) == 3
    assert is_independent(g, [g.index[x] for x in ("(6)", "(10)", "(15)")])


def test_k33():
    g = build_graph(ProductRingSpec.of(3, 3))
    assert clique_number(g) == 2 and independence_number(g) == 3


def test_empty_graph():
    g = Graph((), ())
    assert clique_number(g) == 0 and independence_number(g) == 0


@settings(max_examples=250, deadline=None)
@given(graphs(max_vertices=12))
def test_against_networkx(g):
    for reduce in (True, False):
        clique = max_clique(g, reduce_twins=reduce)
        indep = max_independent_set(g, reduce_twins=reduce)
        assert is_clique(g, clique) and is_independent(g, indep)
        assert len(clique) == nx_omega(g)
        assert len(indep) == nx_omega(g.complement())


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=10))
def test_twin_classes_partition(g):
    classes = twin_classes(g)
    assert sorted(v for c in classes for v in c) == list(range(len(g)))
    for c in classes:
        assert len({g.adj[v] for v in c}) == 1


def test_weighted_clique():
    # path a-b-c with heavy ends: best clique is a single heavy edge
    adj = [0b010, 0b101, 0b010]
    assert max_weight_clique(adj, [5, 1, 7]) == (8, [1, 2])


def test_budget():
    g = build_graph(ProductRingSpec.of(3, 3, 3, 3))
    with pytest.raises(SearchBudgetExceeded):
        max_clique(g, budget=1, reduce_twins=False)


@pytest.mark.parametrize("counts, omega", [((1, 1, 1), 3), ((3, 3), 2), ((2, 2, 2, 2), 4), ((5, 5, 5, 5), 4)])
def test_sweep_examples(counts, omega):
    assert clique_number(build_graph(ProductRingSpec.of(*counts))) == omega


def test_alpha_of_large_spec():
    g = build_graph(ProductRingSpec.of(5, 5, 5, 5))
    indep = max_independent_set(g)
    assert is_independent(g, indep) and len(indep) == 575
