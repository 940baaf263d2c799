"""Classification predicates for co-maximal ideal graphs and the sweep that
checks them against the graph algorithms.

Predicates are stated on a :class:`ProductRingSpec` (local factors given by
proper-ideal counts).  Conventions:

* "at most three ideals" counts 0 and R, i.e. ``c <= 2`` proper ideals;
* ``n = 1`` (local ring) gives the empty graph: planar, no universal
  vertex, not a star;
* K_{1,1} is a star.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import product

from .cliques import (
    DEFAULT_SEARCH_BUDGET,
    SearchBudgetExceeded,
    is_clique,
    is_independent,
    max_clique,
    max_independent_set,
)
from .factors import (
    DEFAULT_GRAPH_CAP,
    FULL,
    ProductRingSpec,
    SpecError,
    build_graph,
    canonical_specs,
    code_label,
    edge_count,
    vertex_count,
    vertex_degree,
    vertex_codes,
)
from .graphs import Graph, degree_sequence, is_star, same_graph, universal_vertices
from .kuratowski import SubdivisionWitness, find_subdivision_bruteforce, verify_witness
from .planarity import DEFAULT_WITNESS_CAP, check_embedding, is_planar
from .rings import CapacityError, comaximal_graph, enumerate_ideals, make_zmod, max_order

ORACLE_VERTEX_CAP = 12


@dataclass(frozen=True)
class Caps:
    graph_vertex_cap: int = DEFAULT_GRAPH_CAP
    witness_cap: int = DEFAULT_WITNESS_CAP
    search_budget: int = DEFAULT_SEARCH_BUDGET
    max_order: int | None = None
    oracle_vertex_cap: int = ORACLE_VERTEX_CAP


# ---------------------------------------------------------------------------
# Predicates


def predicate_universal(spec: ProductRingSpec) -> bool:
    """Local ring times a field."""
    return spec.n == 2 and min(spec.counts) == 1


def predicate_star(spec: ProductRingSpec) -> bool:
    return spec.n == 2 and min(spec.counts) == 1 and vertex_count(spec) >= 2


def predicate_planar(spec: ProductRingSpec) -> bool:
    c = spec.counts
    if spec.n == 1:
        return True
    if spec.n == 2:
        return min(c) <= 2
    if spec.n == 3:
        return max(c) <= 2
    return False


def predicate_planar_refined(spec: ProductRingSpec) -> bool:
    """Planarity as observed by exhaustive checking.

    Differs from :func:`predicate_planar` only at three factors: c=(1,2,2)
    and c=(2,2,2) contain K5 subdivisions (through the zero ideals of two
    factors), so at most one factor may be a non-field.
    """
    if spec.n == 3:
        return sorted(spec.counts) <= [1, 1, 2]
    return predicate_planar(spec)


# ---------------------------------------------------------------------------
# K3,3 witnesses read off the classification argument


def _code(n: int, proper: dict[int, int]) -> tuple[int, ...]:
    return tuple(proper.get(i, FULL) for i in range(n))


def _witness_from_codes(graph: Graph, side_a, side_b) -> SubdivisionWitness:
    ids = [graph.index[code_label(c)] for c in list(side_a) + list(side_b)]
    paths = tuple((x, y) for x in ids[:3] for y in ids[3:])
    return SubdivisionWitness("K33", tuple(ids), paths)


def construct_k33_witness_max4(spec: ProductRingSpec, graph: Graph | None = None) -> SubdivisionWitness:
    """K3,3 on {m1, m2, m1m2} versus {m3, m4, m3m4} for four or more factors.

    ``m_i`` is the code with the zero ideal at coordinate ``i`` and FULL
    elsewhere; ``m_i m_j`` has zeros at both.
    """
    n = spec.n
    if n < 4:
        raise SpecError(f"the four-maximal-ideal construction needs n >= 4, got {n}")
    graph = build_graph(spec) if graph is None else graph
    side_a = [_code(n, {0: 0}), _code(n, {1: 0}), _code(n, {0: 0, 1: 0})]
    side_b = [_code(n, {2: 0}), _code(n, {3: 0}), _code(n, {2: 0, 3: 0})]
    return _witness_from_codes(graph, side_a, side_b)


def construct_k5_witness(spec: ProductRingSpec, graph: Graph | None = None) -> SubdivisionWitness:
    """K5 subdivision for three factors, two of them non-fields.

    With ``j, k`` the first two factors having a nontrivial ideal and ``i``
    the remaining one, the branch vertices are m_i and the codes carrying
    ideal 0 or 1 at ``j`` (resp. ``k``).  The two pairs that are not
    co-maximal are joined through m_i m_k and m_i m_j.
    """
    c = spec.counts
    big = [x for x in range(spec.n) if c[x] >= 2]
    if spec.n != 3 or len(big) < 2:
        raise SpecError(f"the K5 construction needs three factors, two with c >= 2; got {spec}")
    graph = build_graph(spec) if graph is None else graph
    j, k = big[:2]
    (i,) = (x for x in range(3) if x not in (j, k))
    branch = [_code(3, {i: 0}), _code(3, {j: 0}), _code(3, {j: 1}), _code(3, {k: 0}), _code(3, {k: 1})]
    ids = [graph.index[code_label(b)] for b in branch]
    via = {
        frozenset((ids[1], ids[2])): graph.index[code_label(_code(3, {i: 0, k: 0}))],
        frozenset((ids[3], ids[4])): graph.index[code_label(_code(3, {i: 0, j: 0}))],
    }
    paths = []
    for a in range(5):
        for b in range(a + 1, 5):
            mid = via.get(frozenset((ids[a], ids[b])))
            paths.append((ids[a], ids[b]) if mid is None else (ids[a], mid, ids[b]))
    return SubdivisionWitness("K5", tuple(ids), tuple(paths))


def construct_witness(spec: ProductRingSpec, graph: Graph | None = None) -> SubdivisionWitness:
    """A Kuratowski subdivision in any nonplanar spec, built from ideal codes."""
    n, c = spec.n, spec.counts
    if n >= 4:
        return construct_k33_witness_max4(spec, graph)
    graph = build_graph(spec) if graph is None else graph
    if n == 3 and max(c) >= 3:
        i = c.index(max(c))
        j, k = (x for x in range(3) if x != i)
        # two nontrivial ideals and zero in factor i, against factor-j/k zeros
        side_a = [_code(3, {i: 1}), _code(3, {i: 2}), _code(3, {i: 0})]
        side_b = [_code(3, {j: 0}), _code(3, {k: 0}), _code(3, {j: 0, k: 0})]
        return _witness_from_codes(graph, side_a, side_b)
    if n == 3 and sum(x >= 2 for x in c) >= 2:
        return construct_k5_witness(spec, graph)
    if n == 2 and min(c) >= 3:
        return _witness_from_codes(graph, [_code(2, {0: x}) for x in range(3)], [_code(2, {1: x}) for x in range(3)])
    raise SpecError(f"{spec} has a planar co-maximal graph; no construction applies")


# ---------------------------------------------------------------------------
# Per-spec classification


@dataclass
class ClassificationReport:
    spec: ProductRingSpec
    status: str = "ok"
    vertex_count: int | None = None
    edge_count: int | None = None
    omega: int | None = None
    alpha: int | None = None
    degree_sequence: list[int] | None = None
    planar: bool | None = None
    universal_vertex_exists: bool | None = None
    star: bool | None = None
    counts_match: bool | None = None
    witness: SubdivisionWitness | None = None
    witness_verified: bool | None = None
    oracle_planar: bool | None = None
    embedding_verified: bool | None = None
    detail: str = ""

    @property
    def predicted_planar(self) -> bool:
        return predicate_planar(self.spec)

    @property
    def predicted_universal(self) -> bool:
        return predicate_universal(self.spec)

    @property
    def predicted_star(self) -> bool:
        return predicate_star(self.spec)

    @property
    def agree_universal(self) -> bool | None:
        if self.universal_vertex_exists is None:
            return None
        return self.universal_vertex_exists == self.predicted_universal

    @property
    def agree_planar(self) -> bool | None:
        return None if self.planar is None else self.planar == self.predicted_planar

    @property
    def agree_star(self) -> bool | None:
        return None if self.star is None else self.star == self.predicted_star

    @property
    def omega_matches(self) -> bool | None:
        if self.omega is None or self.spec.n < 2:
            return None
        return self.omega == self.spec.n

    @property
    def oracle_agrees(self) -> bool | None:
        return None if self.oracle_planar is None else self.oracle_planar == self.planar

    def failures(self) -> list[str]:
        checks = {
            "universal-vertex": self.agree_universal,
            "planarity": self.agree_planar,
            "star": self.agree_star,
            "closed-form-counts": self.counts_match,
            "clique-number": self.omega_matches,
            "planarity-oracle": self.oracle_agrees,
            "witness": self.witness_verified,
            "embedding": self.embedding_verified,
        }
        return [name for name, ok in checks.items() if ok is False]

    @property
    def all_agree(self) -> bool:
        return not self.failures()

    def as_record(self) -> dict:
        rec = {
            "spec": list(self.spec.counts),
            "n": self.spec.n,
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "omega": self.omega,
            "alpha": self.alpha,
            "degree_sequence": self.degree_sequence,
            "planar": self.planar,
            "predicted_planar": self.predicted_planar,
            "universal": self.universal_vertex_exists,
            "predicted_universal": self.predicted_universal,
            "star": self.star,
            "predicted_star": self.predicted_star,
        }
        if self.witness is not None:
            rec["witness_kind"] = self.witness.kind
        rec["status"] = self.status
        return rec


def classify(spec: ProductRingSpec, caps: Caps = Caps()) -> ClassificationReport:
    report = ClassificationReport(spec)
    size = vertex_count(spec)
    report.vertex_count = size
    if size > caps.graph_vertex_cap:
        report.status = "capacity"
        report.detail = f"{size} vertices > cap {caps.graph_vertex_cap}"
        return report
    g = build_graph(spec, cap=caps.graph_vertex_cap)
    codes = list(vertex_codes(spec))
    report.edge_count = g.edge_count()
    report.degree_sequence = degree_sequence(g)
    report.counts_match = (
        size == len(g)
        and edge_count(spec) == report.edge_count
        and all(vertex_degree(spec, code) == g.degree(v) for v, code in enumerate(codes))
    )
    report.universal_vertex_exists = bool(universal_vertices(g))
    report.star = is_star(g)

    result = is_planar(g)
    report.planar = result.planar
    if result.planar:
        report.embedding_verified = check_embedding(g, result.embedding)
    else:
        if spec.n >= 4:
            w = construct_k33_witness_max4(spec, g)
        elif size <= caps.witness_cap:
            w = is_planar(g, want_witness=True, witness_cap=caps.witness_cap).witness
        else:
            w = construct_witness(spec, g)
        report.witness = w
        report.witness_verified = w is not None and verify_witness(g, w)
    if size <= caps.oracle_vertex_cap:
        report.oracle_planar = find_subdivision_bruteforce(g) is None

    try:
        clique = max_clique(g, caps.search_budget)
        indep = max_independent_set(g, caps.search_budget)
    except SearchBudgetExceeded as exc:
        report.status = "budget"
        report.detail = str(exc)
        return report
    if not (is_clique(g, clique) and is_independent(g, indep)):
        raise AssertionError(f"clique search returned an invalid set for {spec}")
    report.omega, report.alpha = len(clique), len(indep)
    return report


# ---------------------------------------------------------------------------
# Concrete rings versus the factor model


@dataclass
class ZmodReport:
    modulus: int
    status: str = "ok"
    spec: ProductRingSpec | None = None
    vertex_count: int | None = None
    edge_count: int | None = None
    equivalent: bool | None = None
    detail: str = ""

    def as_record(self) -> dict:
        return {
            "zmod": self.modulus,
            "spec": None if self.spec is None else list(self.spec.counts),
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "equivalent": self.equivalent,
            "status": self.status,
        }


def zmod_equivalence(modulus: int, caps: Caps = Caps()) -> ZmodReport:
    """Build Γ(Z/n) from ideals and from the factor model; compare after
    moving ring-core labels through the CRT coordinates."""
    from .factors import spec_from_ring

    report = ZmodReport(modulus)
    cap = caps.max_order if caps.max_order is not None else max_order()
    try:
        ring = make_zmod(modulus, cap=cap)
        lattice = enumerate_ideals(ring, cap=cap)
        spec, cmap = spec_from_ring(ring)
        report.spec = spec
        model = build_graph(spec, cap=caps.graph_vertex_cap)
    except CapacityError as exc:
        report.status = "capacity"
        report.detail = str(exc)
        return report
    direct = comaximal_graph(ring, lattice)
    report.vertex_count = len(direct)
    report.edge_count = direct.edge_count()
    report.equivalent = same_graph(cmap.transport(direct, lattice), model)
    return report


# ---------------------------------------------------------------------------
# Sweeps


@dataclass
class SweepResult:
    reports: list[ClassificationReport] = field(default_factory=list)
    zmod: list[ZmodReport] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(r.all_agree for r in self.reports) and all(z.equivalent is not False for z in self.zmod)

    def first_disagreement(self) -> ClassificationReport | ZmodReport | None:
        for r in self.reports:
            if not r.all_agree:
                return r
        for z in self.zmod:
            if z.equivalent is False:
                return z
        return None


def _ordered_map(fn, items: Sequence, workers: int) -> Iterator:
    if workers <= 1 or len(items) <= 1:
        return map(fn, items)
    pool = ProcessPoolExecutor(max_workers=workers)

    def run() -> Iterator:
        with pool:
            yield from pool.map(fn, items)  # chunksize 1: cost grows steeply along the sweep

    return run()


def iter_sweep(
    specs: Sequence[ProductRingSpec], zmods: Sequence[int] = (), caps: Caps = Caps(), workers: int = 1
) -> Iterator[ClassificationReport | ZmodReport]:
    """Reports in input order regardless of ``workers``."""
    yield from _ordered_map(partial(classify, caps=caps), list(specs), workers)
    yield from _ordered_map(partial(zmod_equivalence, caps=caps), list(zmods), workers)


def verify_sweep(
    max_n: int, max_c: int, zmods: Iterable[int] = (), caps: Caps = Caps(), workers: int = 1
) -> SweepResult:
    result = SweepResult()
    for rep in iter_sweep(canonical_specs(max_n, max_c), list(zmods), caps, workers):
        (result.zmod if isinstance(rep, ZmodReport) else result.reports).append(rep)
    return result


def alpha_growth_check(n: int, max_c: int, min_c: int = 1, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Independence number never drops when a factor gains ideals, and for
    two factors a field partner gives alpha(c=(k,1)) = k."""
    alpha = {}
    for counts in product(range(min_c, max_c + 1), repeat=n):
        alpha[counts] = len(max_independent_set(build_graph(ProductRingSpec.of(*counts)), budget))
    for counts, a in alpha.items():
        for i in range(n):
            bigger = counts[:i] + (counts[i] + 1,) + counts[i + 1:]
            if bigger in alpha and alpha[bigger] < a:
                return False
    if n == 2 and min_c == 1:
        return all(alpha[(k, 1)] == k for k in range(min_c, max_c + 1))
    return True


def omega_equals_maxspec_check(max_n: int, max_c: int, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Clique number equals the number of factors for every spec with n >= 2.

    The maximal ideals (zero in one coordinate, FULL elsewhere) are pairwise
    co-maximal and give the lower bound; exact search gives the upper.
    """
    for spec in canonical_specs(max_n, max_c, min_n=2):
        g = build_graph(spec)
        n = spec.n
        witness = [g.index[code_label(_code(n, {j: 0}))] for j in range(n)]
        if not is_clique(g, witness) or len(max_clique(g, budget)) != n:
            return False
    return True
