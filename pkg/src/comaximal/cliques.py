"""Exact maximum cliques and independent sets.

Branch and bound over bitsets with a greedy-colouring bound (MCQ style,
weighted).  Before searching, false twins (vertices with identical
neighbourhoods) are merged: at most one twin can sit in a clique, while an
independent set may take a whole twin class, so independent sets are found
as maximum-weight cliques of the complemented quotient.  Co-maximal graphs
collapse to at most 2^n - 2 classes this way.
"""

from __future__ import annotations

from collections.abc import Sequence

from .bits import iter_bits
from .graphs import Graph

DEFAULT_SEARCH_BUDGET = 1_000_000


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before optimality was proved."""


def _colour_order(P: int, adj: Sequence[int], weights: Sequence[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    uncoloured = P
    total = 0
    while uncoloured:
        Q = uncoloured
        heaviest = 0
        members = []
        while Q:
            v = (Q & -Q).bit_length() - 1
            members.append(v)
            Q &= ~adj[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            heaviest = max(heaviest, weights[v])
        total += heaviest
        order += members
        bounds += [total] * len(members)
    return order, bounds


def max_weight_clique(
    adj: Sequence[int], weights: Sequence[int], budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[int, list[int]]:
    """Maximum-weight clique of the graph given by neighbour bitsets.

    Weights must be positive.  Raises :class:`SearchBudgetExceeded` after
    ``budget`` search nodes.
    """
    best_weight = 0
    best: list[int] = []
    nodes = 0
    current: list[int] = []

    def expand(weight: int, P: int) -> None:
        nonlocal best_weight, best, nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"clique search exceeded {budget} nodes")
        order, bounds = _colour_order(P, adj, weights)
        for k in range(len(order) - 1, -1, -1):
            if weight + bounds[k] <= best_weight:
                return
            v = order[k]
            current.append(v)
            inner = P & adj[v]
            if inner:
                expand(weight + weights[v], inner)
            elif weight + weights[v] > best_weight:
                best_weight = weight + weights[v]
                best = sorted(current)
            current.pop()
            P &= ~(1 << v)

    P = (1 << len(adj)) - 1
    if P:
        expand(0, P)
    return best_weight, best


def twin_classes(g: Graph) -> list[list[int]]:
    """False-twin classes (equal open neighbourhoods), by first member."""
    groups: dict[int, list[int]] = {}
    for v, nb in enumerate(g.adj):
        groups.setdefault(nb, []).append(v)
    return sorted(groups.values())


def _quotient(g: Graph, classes: list[list[int]]) -> list[int]:
    rep_class = {cls[0]: k for k, cls in enumerate(classes)}
    reps = sum(1 << cls[0] for cls in classes)
    return [sum(1 << rep_class[w] for w in iter_bits(g.adj[cls[0]] & reps)) for cls in classes]


def max_clique(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET, *, reduce_twins: bool = True) -> list[int]:
    if not reduce_twins:
        return max_weight_clique(g.adj, [1] * len(g), budget)[1]
    classes = twin_classes(g)
    _, picked = max_weight_clique(_quotient(g, classes), [1] * len(classes), budget)
    return sorted(classes[k][0] for k in picked)


def max_independent_set(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET, *, reduce_twins: bool = True) -> list[int]:
    if not reduce_twins:
        return max_weight_clique(g.complement().adj, [1] * len(g), budget)[1]
    classes = twin_classes(g)
    q = _quotient(g, classes)
    full = (1 << len(classes)) - 1
    co = [full & ~nb & ~(1 << k) for k, nb in enumerate(q)]
    _, picked = max_weight_clique(co, [len(c) for c in classes], budget)
    return sorted(v for k in picked for v in classes[k])


def clique_number(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    return len(max_clique(g, budget))


def independence_number(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    return len(max_independent_set(g, budget))


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    mask = sum(1 << v for v in set(vertices))
    return all(mask & ~g.adj[v] == 1 << v for v in vertices)


def is_independent(g: Graph, vertices: Sequence[int]) -> bool:
    mask = sum(1 << v for v in set(vertices))
    return all(not g.adj[v] & mask for v in vertices)
