"""Closed-form model of a product of local rings.

A product ``R_1 x ... x R_n`` of local rings is described only by how many
proper ideals each factor has.  An ideal of the product is a tuple of factor
ideals, and two ideals are co-maximal exactly when every coordinate is the
full factor in at least one of them, so the internal ideal structure of each
factor never matters.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import prod

import numpy as np

from .bits import mask_from_indices
from .graphs import Graph
from .rings import CapacityError, FiniteRing, Ideal, decompose_with_coordinates, enumerate_ideals

FULL = -1
DEFAULT_GRAPH_CAP = 20_000


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class LocalFactorSpec:
    proper_ideals: int
    label: str = ""

    def __post_init__(self) -> None:
        if self.proper_ideals < 1:
            raise SpecError(f"a local factor has at least one proper ideal, got {self.proper_ideals}")

    @property
    def is_field(self) -> bool:
        return self.proper_ideals == 1


@dataclass(frozen=True)
class ProductRingSpec:
    factors: tuple[LocalFactorSpec, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise SpecError("a product spec needs at least one factor")

    @classmethod
    def of(cls, *counts: int) -> ProductRingSpec:
        return cls(tuple(LocalFactorSpec(c) for c in counts))

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(f.proper_ideals for f in self.factors)

    @property
    def n(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "c=(" + ",".join(map(str, self.counts)) + ")"


VertexCode = tuple[int, ...]


def _full_set(code: VertexCode) -> int:
    return sum(1 << i for i, x in enumerate(code) if x == FULL)


def check_code(spec: ProductRingSpec, code: Sequence[int]) -> VertexCode:
    code = tuple(code)
    if len(code) != spec.n:
        raise SpecError(f"code {code} has length {len(code)}, spec has {spec.n} factors")
    for x, c in zip(code, spec.counts):
        if x != FULL and not 0 <= x < c:
            raise SpecError(f"coordinate {x} out of range for a factor with {c} proper ideals")
    if all(x != FULL for x in code):
        raise SpecError(f"code {code} lies in the Jacobson radical")
    if all(x == FULL for x in code):
        raise SpecError(f"code {code} is the unit ideal")
    return code


def code_label(code: VertexCode) -> str:
    return "⟨" + ",".join("R" if x == FULL else str(x) for x in code) + "⟩"


def vertex_codes(spec: ProductRingSpec) -> Iterator[VertexCode]:
    """All valid codes, lexicographic with proper indices before FULL."""
    domains = [list(range(c)) + [FULL] for c in spec.counts]
    for code in product(*domains):
        if FULL in code and any(x != FULL for x in code):
            yield code


def vertex_count(spec: ProductRingSpec) -> int:
    c = spec.counts
    return prod(x + 1 for x in c) - prod(c) - 1


def vertex_degree(spec: ProductRingSpec, code: Sequence[int]) -> int:
    code = check_code(spec, code)
    return prod(c + 1 for x, c in zip(code, spec.counts) if x == FULL) - 1


def edge_count(spec: ProductRingSpec) -> int:
    c = spec.counts
    n = len(c)
    total = 0
    for s in range(1, (1 << n) - 1):  # nonempty proper FULL sets
        members = prod(c[i] for i in range(n) if not s >> i & 1)
        degree = prod(c[i] + 1 for i in range(n) if s >> i & 1) - 1
        total += members * degree
    return total // 2


def build_graph(spec: ProductRingSpec, *, cap: int = DEFAULT_GRAPH_CAP) -> Graph:
    size = vertex_count(spec)
    if size > cap:
        raise CapacityError(f"{spec} has {size} vertices, above the graph cap {cap}")
    codes = list(vertex_codes(spec))
    all_full = (1 << spec.n) - 1
    by_set: dict[int, int] = {}
    full_sets = []
    for v, code in enumerate(codes):
        s = _full_set(code)
        full_sets.append(s)
        by_set[s] = by_set.get(s, 0) | 1 << v
    nbrs = {s: sum(m for t, m in by_set.items() if s | t == all_full) for s in by_set}
    return Graph(tuple(code_label(c) for c in codes), tuple(nbrs[s] for s in full_sets))


def canonical_specs(max_n: int, max_c: int, min_n: int = 1) -> list[ProductRingSpec]:
    """Specs with nondecreasing counts, ordered by n then lexicographically."""
    return [
        ProductRingSpec.of(*counts)
        for n in range(min_n, max_n + 1)
        for counts in combinations_with_replacement(range(1, max_c + 1), n)
    ]


# ---------------------------------------------------------------------------
# Bridge from concrete rings


@dataclass(frozen=True, eq=False)
class CoordinateMap:
    """Element coordinates of a ring in its local factors."""

    ring: FiniteRing
    factors: tuple[FiniteRing, ...]
    coords: np.ndarray  # (order, n)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lattices", tuple(enumerate_ideals(f) for f in self.factors))

    def code(self, ideal: Ideal) -> VertexCode:
        """Factor-model code of an ideal: each coordinate is FULL or the
        canonical lattice index of the projected factor ideal."""
        members = list(ideal.members)
        out = []
        for k, (factor, lattice) in enumerate(zip(self.factors, self.lattices)):
            mask = mask_from_indices(self.coords[members, k], factor.order)
            i = lattice.index_of(mask)
            out.append(FULL if i == lattice.unit else i)
        return tuple(out)

    def transport(self, graph: Graph, lattice=None) -> Graph:
        """Relabel a ring-core co-maximal graph with factor-model labels."""
        lattice = enumerate_ideals(self.ring) if lattice is None else lattice
        by_label = {lattice.label(i): lattice.ideals[i] for i in range(len(lattice.ideals))}
        return graph.relabel({lab: code_label(self.code(by_label[lab])) for lab in graph.labels})


def spec_from_ring(ring: FiniteRing) -> tuple[ProductRingSpec, CoordinateMap]:
    factors, coords = decompose_with_coordinates(ring)
    cmap = CoordinateMap(ring, tuple(factors), coords)
    spec = ProductRingSpec(tuple(
        LocalFactorSpec(len(lat.ideals) - 1, f.label) for f, lat in zip(factors, cmap.lattices)
    ))
    return spec, cmap
