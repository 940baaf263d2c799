"""Finite simple graphs with stable string labels and bitset adjacency."""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .bits import iter_bits, popcount


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Vertex ``i`` carries ``labels[i]``; ``adj[i]`` is its neighbour bitset."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.adj) != n:
            raise GraphError("labels and adjacency differ in length")
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels must be unique")
        full = (1 << n) - 1
        for i, nb in enumerate(self.adj):
            if nb >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            if nb & ~full:
                raise GraphError(f"vertex {i} has a neighbour out of range")
            for j in iter_bits(nb >> (i + 1) << (i + 1)):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, labels: Iterable[str], edges: Iterable[tuple[int, int]]) -> Graph:
        labels = tuple(labels)
        adj = [0] * len(labels)
        for i, j in edges:
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(labels, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(tuple(str(i) for i in range(n)), tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def complete_bipartite(cls, left: Sequence[str], right: Sequence[str]) -> Graph:
        m = len(left)
        edges = [(i, m + j) for i in range(m) for j in range(len(right))]
        return cls.from_edges(list(left) + list(right), edges)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(iter_bits(self.adj[i]))

    def degree(self, i: int) -> int:
        return popcount(self.adj[i])

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return tuple((i, j) for i, nb in enumerate(self.adj) for j in iter_bits(nb >> (i + 1) << (i + 1)))

    def edge_count(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def complement(self) -> Graph:
        full = (1 << len(self)) - 1
        return Graph(self.labels, tuple(full & ~nb & ~(1 << i) for i, nb in enumerate(self.adj)))

    def subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        pos = {v: k for k, v in enumerate(keep)}
        keep_mask = sum(1 << v for v in keep)
        adj = tuple(sum(1 << pos[w] for w in iter_bits(self.adj[v] & keep_mask)) for v in keep)
        return Graph(tuple(self.labels[v] for v in keep), adj)

    def relabel(self, mapping: dict[str, str]) -> Graph:
        return Graph(tuple(mapping[lab] for lab in self.labels), self.adj)

    def edge_labels(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset((self.labels[i], self.labels[j])) for i, j in self.edges)

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for v in range(len(self)):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                reach = 0
                for u in iter_bits(frontier):
                    reach |= self.adj[u]
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps


def same_graph(g: Graph, h: Graph) -> bool:
    """Equality of labelled graphs, ignoring vertex order."""
    return set(g.labels) == set(h.labels) and len(g) == len(h) and g.edge_labels() == h.edge_labels()


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degree(i) for i in range(len(g)))


def universal_vertices(g: Graph) -> list[int]:
    n = len(g)
    return [i for i in range(n) if g.degree(i) == n - 1]


def is_star(g: Graph) -> bool:
    """K_{1,m} with m >= 1.  K_{1,1} counts, so a centre is any universal
    vertex whose removal leaves no edges."""
    if len(g) < 2:
        return False
    for c in universal_vertices(g):
        if all(nb == 1 << c for i, nb in enumerate(g.adj) if i != c):
            return True
    return False


def two_coloring(g: Graph) -> list[int] | None:
    colour = [-1] * len(g)
    for s in range(len(g)):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.adj[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return None
    return colour


def is_complete_bipartite(g: Graph) -> tuple[int, int] | None:
    """Part sizes ``(m, n)`` with ``m <= n`` when ``g`` is K_{m,n} (m, n >= 1)."""
    if len(g) < 2:
        return None
    colour = two_coloring(g)
    if colour is None:
        return None
    sides = [sum(1 << v for v in range(len(g)) if colour[v] == c) for c in (0, 1)]
    for v in range(len(g)):
        if g.adj[v] != sides[1 - colour[v]]:
            return None
    m, n = sorted(popcount(s) for s in sides)
    return (m, n) if m >= 1 else None


# ---------------------------------------------------------------------------
# Export

EXPORT_FORMATS = ("dot", "json")


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {_dot_quote(lab)};" for lab in g.labels]
    lines += [f"  {_dot_quote(g.labels[i])} -- {_dot_quote(g.labels[j])};" for i, j in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    return json.dumps({"labels": list(g.labels), "edges": [list(e) for e in g.edges]}, ensure_ascii=False) + "\n"


def from_json(text: str) -> Graph:
    data = json.loads(text)
    return Graph.from_edges(data["labels"], [tuple(e) for e in data["edges"]])


def export(g: Graph, fmt: str) -> bytes:
    if fmt == "dot":
        return to_dot(g).encode("utf-8")
    if fmt == "json":
        return to_json(g).encode("utf-8")
    raise GraphError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")
