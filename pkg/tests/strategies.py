"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from comaximal.graphs import Graph


@st.composite
def graphs(draw, min_vertices: int = 0, max_vertices: int = 10, density=None):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    p = density if density is not None else draw(st.floats(0.1, 0.9))
    chosen = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, x in zip(pairs, chosen) if x < p]
    return Graph.from_edges([f"v{i}" for i in range(n)], edges)


def to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(len(g)))
    h.add_edges_from(g.edges)
    return h
