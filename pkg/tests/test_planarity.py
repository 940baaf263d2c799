import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comaximal.factors import ProductRingSpec, build_graph, canonical_specs
from comaximal.graphs import Graph
from comaximal.kuratowski import (
    SubdivisionWitness,
    extract_witness,
    find_subdivision_bruteforce,
    verify_witness,
)
from comaximal.lr import edges_planar
from comaximal.planarity import check_embedding, count_faces, is_planar
from comaximal.rings import comaximal_graph, make_zmod

from tests.strategies import graphs, to_nx


def subdivide(g: Graph, times: int, seed: int) -> Graph:
    """Replace random edges by two-edge paths."""
    rng = random.Random(seed)
    labels = list(g.labels)
    edges = list(g.edges)
    for k in range(times):
        a, b = edges.pop(rng.randrange(len(edges)))
        labels.append(f"s{k}")
        new = len(labels) - 1
        edges += [(a, new), (new, b)]
    return Graph.from_edges(labels, edges)


def test_k4_planar():
    res = is_planar(Graph.complete(4))
    assert res.planar and check_embedding(Graph.complete(4), res.embedding)


def test_k5_witness():
    g = Graph.complete(5)
    res = is_planar(g, want_witness=True)
    assert not res.planar
    w = res.witness
    assert w.kind == "K5" and verify_witness(g, w)
    assert all(len(p) == 2 for p in w.paths)


def test_k33_witness():
    g = build_graph(ProductRingSpec.of(3, 3))
    res = is_planar(g, want_witness=True)
    assert not res.planar and res.witness.kind == "K33"
    assert verify_witness(g, res.witness)


def test_empty_and_tiny_graphs():
    for n in range(4):
        assert is_planar(Graph.complete(n)).planar
    assert is_planar(Graph((), ())).planar


def test_zmod30_planar():
    g = comaximal_graph(make_zmod(30))
    res = is_planar(g)
    assert res.planar and check_embedding(g, res.embedding)


def test_witness_cap_respected():
    g = build_graph(ProductRingSpec.of(5, 5, 5))
    assert len(g) > 64
    res = is_planar(g, want_witness=True)
    assert not res.planar and res.witness is None


def test_large_planar_graphs_are_fast():
    grid = nx.grid_2d_graph(30, 30)
    idx = {v: k for k, v in enumerate(grid.nodes)}
    g = Graph.from_edges([str(v) for v in grid.nodes], [(idx[a], idx[b]) for a, b in grid.edges])
    res = is_planar(g)
    assert res.planar and check_embedding(g, res.embedding)


@settings(max_examples=400, deadline=None)
@given(graphs(max_vertices=11))
def test_lr_against_networkx(g):
    res = is_planar(g)
    assert res.planar == nx.check_planarity(to_nx(g))[0]
    if res.planar:
        assert check_embedding(g, res.embedding)


@settings(max_examples=120, deadline=None)
@given(graphs(min_vertices=5, max_vertices=9, density=0.55))
def test_lr_against_bruteforce(g):
    assert is_planar(g).planar == (find_subdivision_bruteforce(g) is None)


@settings(max_examples=150, deadline=None)
@given(graphs(min_vertices=5, max_vertices=14, density=0.5))
def test_extracted_witness_verifies(g):
    res = is_planar(g, want_witness=True)
    if not res.planar:
        assert verify_witness(g, res.witness)
    else:
        assert extract_witness(g) is None


@pytest.mark.parametrize("seed", range(8))
def test_subdivided_kuratowski_graphs(seed):
    for base in (Graph.complete(5), Graph.complete_bipartite("abc", "xyz")):
        g = subdivide(base, 4, seed)
        res = is_planar(g, want_witness=True)
        assert not res.planar and verify_witness(g, res.witness)
        brute = find_subdivision_bruteforce(g)
        assert brute is not None and verify_witness(g, brute)


def test_euler_bound():
    # E > 3V - 6 forces nonplanarity
    for n in range(5, 10):
        g = Graph.complete(n)
        assert g.edge_count() > 3 * n - 6
        assert not is_planar(g).planar
        assert not edges_planar(n, list(g.edges))


@settings(max_examples=200, deadline=None)
@given(graphs(min_vertices=3, max_vertices=10))
def test_euler_necessary_condition(g):
    if is_planar(g).planar:
        assert g.edge_count() <= 3 * len(g) - 6


@pytest.mark.parametrize("spec", [s for s in canonical_specs(4, 5) if 0 < len(build_graph(s)) <= 12], ids=str)
def test_sweep_graphs_against_oracles(spec):
    g = build_graph(spec)
    verdict = is_planar(g).planar
    assert verdict == (find_subdivision_bruteforce(g) is None)
    assert verdict == nx.check_planarity(to_nx(g))[0]


def test_witness_determinism():
    g = build_graph(ProductRingSpec.of(1, 1, 1, 1))
    a = is_planar(g, want_witness=True).witness
    b = is_planar(build_graph(ProductRingSpec.of(1, 1, 1, 1)), want_witness=True).witness
    assert a == b


# ---------------------------------------------------------------------------
# witness verification rejects bad certificates


def _k33():
    return Graph.complete_bipartite("abc", "xyz")


def _good_k33() -> SubdivisionWitness:
    paths = tuple((a, b) for a in range(3) for b in range(3, 6))
    return SubdivisionWitness("K33", (0, 1, 2, 3, 4, 5), paths)


def test_valid_k33_witness():
    assert verify_witness(_k33(), _good_k33())


def test_witness_absent_edge():
    w = _good_k33()
    bad = SubdivisionWitness("K33", (0, 1, 2, 3, 4, 5), w.paths[:-1] + ((2, 1, 5),))
    assert not verify_witness(_k33(), bad)


def test_witness_overlapping_interiors():
    # K5 plus a hub m joined to 0, 1, 2, 3; two paths both route through m
    g = Graph.complete(5)
    labels = list(g.labels) + ["m"]
    edges = list(g.edges) + [(0, 5), (5, 1), (2, 5), (5, 3)]
    h = Graph.from_edges(labels, edges)
    paths = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    paths[paths.index((0, 1))] = (0, 5, 1)
    paths[paths.index((2, 3))] = (2, 5, 3)
    w = SubdivisionWitness("K5", (0, 1, 2, 3, 4), tuple(paths))
    assert not verify_witness(h, w)


def test_witness_wrong_shape():
    g = Graph.complete(5)
    assert not verify_witness(g, SubdivisionWitness("K5", (0, 1, 2, 3), ()))
    assert not verify_witness(g, SubdivisionWitness("K7", (0, 1, 2, 3, 4), ()))
    pairs = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    dup = SubdivisionWitness("K5", (0, 1, 2, 3, 4), tuple(pairs[:-1] + [pairs[0]]))
    assert not verify_witness(g, dup)
    through_branch = SubdivisionWitness("K5", (0, 1, 2, 3, 4), tuple([(0, 2, 1)] + pairs[1:]))
    assert not verify_witness(g, through_branch)


def test_count_faces_cycle():
    # a triangle embeds with two faces
    assert count_faces([[1, 2], [2, 0], [0, 1]]) == 2


def test_check_embedding_rejects_bad_rotation():
    g = Graph.complete(4)
    res = is_planar(g)
    rot = [list(r) for r in res.embedding]
    rot[0] = rot[0][:-1]
    assert not check_embedding(g, rot)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 8))
def test_wheel_graphs_planar(n):
    g = Graph.from_edges([str(i) for i in range(n + 1)], [(0, i) for i in range(1, n + 1)] + [
        (i, i % n + 1) for i in range(1, n + 1)
    ])
    res = is_planar(g)
    assert res.planar and check_embedding(g, res.embedding)
