"""K5 / K3,3 subdivision witnesses: verification, extraction, brute force."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .bits import iter_bits, popcount
from .graphs import Graph
from .lr import edges_planar

Kind = Literal["K5", "K33"]


@dataclass(frozen=True)
class SubdivisionWitness:
    """Branch vertices plus one path per branch edge.

    For ``K33`` the first three branch vertices form one side.  Each path
    lists its vertices from one branch endpoint to the other.
    """

    kind: Kind
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def branch_pairs(self) -> list[tuple[int, int]]:
        b = self.branch_vertices
        if self.kind == "K5":
            return list(combinations(b, 2))
        return [(x, y) for x in b[:3] for y in b[3:]]

    def as_dict(self, g: Graph | None = None) -> dict:
        name = (lambda v: g.labels[v]) if g is not None else (lambda v: v)
        return {
            "kind": self.kind,
            "branch_vertices": [name(v) for v in self.branch_vertices],
            "paths": [[name(v) for v in p] for p in self.paths],
        }


def verify_witness(g: Graph, w: SubdivisionWitness) -> bool:
    expected = {"K5": 5, "K33": 6}.get(w.kind)
    branch = w.branch_vertices
    if expected is None or len(branch) != expected or len(set(branch)) != expected:
        return False
    if any(not 0 <= v < len(g) for v in branch):
        return False
    required = {frozenset(p) for p in w.branch_pairs()}
    if len(w.paths) != len(required):
        return False
    branch_set = set(branch)
    used_interior: set[int] = set()
    covered = set()
    for path in w.paths:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        if any(not 0 <= v < len(g) for v in path):
            return False
        ends = frozenset((path[0], path[-1]))
        if ends not in required or ends in covered:
            return False
        covered.add(ends)
        interior = set(path[1:-1])
        if interior & branch_set or interior & used_interior:
            return False
        used_interior |= interior
        if not all(g.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
    return covered == required


# ---------------------------------------------------------------------------
# Extraction from a nonplanar graph


def _minimal_nonplanar_edges(n: int, edges: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """An edge-minimal nonplanar subgraph, found by repeated binary search
    for the shortest nonplanar prefix.  Minimality makes it a Kuratowski
    subdivision."""
    kept: list[tuple[int, int]] = []
    candidates = list(edges)
    while edges_planar(n, kept):
        lo, hi = 1, len(candidates)
        while lo < hi:
            mid = (lo + hi) // 2
            if edges_planar(n, kept + candidates[:mid]):
                lo = mid + 1
            else:
                hi = mid
        kept.append(candidates[lo - 1])
        candidates = candidates[: lo - 1]
    return kept


def witness_from_subdivision(n: int, edges: Sequence[tuple[int, int]]) -> SubdivisionWitness:
    """Read branch vertices and paths off a K5/K3,3 subdivision."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    branch = [v for v in range(n) if len(nbrs[v]) >= 3]
    branch_set = set(branch)
    routes: dict[frozenset[int], tuple[int, ...]] = {}
    for b in branch:
        for w in sorted(nbrs[b]):
            path, prev, cur = [b], b, w
            while cur not in branch_set:
                if len(nbrs[cur]) != 2:
                    raise ValueError("edge set is not a subdivision of K5 or K3,3")
                path.append(cur)
                prev, cur = cur, next(x for x in nbrs[cur] if x != prev)
            path.append(cur)
            routes.setdefault(frozenset((b, cur)), tuple(path))
    if len(branch) == 5 and all(len(nbrs[v]) == 4 for v in branch):
        witness = SubdivisionWitness("K5", tuple(branch), ())
    elif len(branch) == 6 and all(len(nbrs[v]) == 3 for v in branch):
        first = branch[0]
        side_b = sorted(v for v in branch if frozenset((first, v)) in routes)
        side_a = sorted(set(branch) - set(side_b))
        witness = SubdivisionWitness("K33", tuple(side_a + side_b), ())
    else:
        raise ValueError("edge set is not a subdivision of K5 or K3,3")
    paths = []
    for a, b in witness.branch_pairs():
        p = routes[frozenset((a, b))]
        paths.append(p if p[0] == a else p[::-1])
    return SubdivisionWitness(witness.kind, witness.branch_vertices, tuple(paths))


def extract_witness(g: Graph) -> SubdivisionWitness | None:
    """A Kuratowski witness for a nonplanar graph, ``None`` if planar.

    Uses O(k log m) planarity tests where k is the witness edge count.
    Ties are broken towards low vertex indices via the sorted edge list.
    """
    edges = list(g.edges)
    if edges_planar(len(g), edges):
        return None
    return witness_from_subdivision(len(g), _minimal_nonplanar_edges(len(g), edges))


# ---------------------------------------------------------------------------
# Exhaustive search (independent of the left-right test)


def _paths_between(g: Graph, a: int, b: int, free: int):
    """Simple a-b paths whose interior lies in ``free``, shortest-first-ish DFS."""
    stack = [(a, (a,), 0)]
    while stack:
        v, path, used = stack.pop()
        if g.adj[v] >> b & 1 and v != a:
            yield path + (b,), used
        for w in sorted(iter_bits(g.adj[v] & free & ~used), reverse=True):
            stack.append((w, path + (w,), used | 1 << w))


def _route(g: Graph, pairs: list[tuple[int, int]], free: int) -> list[tuple[int, ...]] | None:
    if not pairs:
        return []
    direct = [p for p in pairs if g.has_edge(*p)]
    rest = [p for p in pairs if not g.has_edge(*p)]
    if len(rest) > popcount(free):
        return None
    if not rest:
        return list(direct)
    a, b = rest[0]
    for path, used in _paths_between(g, a, b, free):
        tail = _route(g, rest[1:], free & ~used)
        if tail is not None:
            return list(direct) + [path] + tail
    return None


def find_subdivision_bruteforce(g: Graph) -> SubdivisionWitness | None:
    """Exhaustive K5 / K3,3 subdivision search.  Exponential; meant as an
    oracle on graphs with a dozen or so vertices."""
    n = len(g)
    full = (1 << n) - 1
    deg = [g.degree(v) for v in range(n)]
    for branch in combinations([v for v in range(n) if deg[v] >= 4], 5):
        pairs = list(combinations(branch, 2))
        free = full & ~sum(1 << v for v in branch)
        routed = _route(g, pairs, free)
        if routed is not None:
            return _ordered_witness("K5", branch, routed)
    for six in combinations([v for v in range(n) if deg[v] >= 3], 6):
        free = full & ~sum(1 << v for v in six)
        for rest in combinations(six[1:], 2):
            side_a = (six[0],) + rest
            side_b = tuple(v for v in six if v not in side_a)
            pairs = [(x, y) for x in side_a for y in side_b]
            routed = _route(g, pairs, free)
            if routed is not None:
                return _ordered_witness("K33", side_a + side_b, routed)
    return None


def _ordered_witness(kind: Kind, branch: tuple[int, ...], paths: list[tuple[int, ...]]) -> SubdivisionWitness:
    w = SubdivisionWitness(kind, tuple(branch), ())
    by_ends = {frozenset((p[0], p[-1])): p for p in paths}
    ordered = []
    for a, b in w.branch_pairs():
        p = by_ends[frozenset((a, b))]
        ordered.append(tuple(p) if p[0] == a else tuple(p[::-1]))
    return SubdivisionWitness(kind, w.branch_vertices, tuple(ordered))
