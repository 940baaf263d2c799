"""Concrete finite commutative rings given by operation tables.

Elements are the integers ``0 .. order-1``; ``add`` and ``mul`` are dense
``order x order`` numpy tables.  Ideals are bitsets over element indices
(Python ints), which keeps containment, intersection and equality cheap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import prod

import numpy as np

from .bits import iter_bits, mask_from_bool, mask_from_indices, popcount
from .graphs import Graph

DEFAULT_MAX_ORDER = 4096


class RingError(ValueError):
    """Invalid ring construction or mismatched operands."""


class CapacityError(RuntimeError):
    """A configured size cap would be exceeded."""


def max_order() -> int:
    """Ring order cap; ``COMAXIMAL_MAX_ORDER`` overrides the default."""
    raw = os.environ.get("COMAXIMAL_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    value = int(raw)
    if value < 2:
        raise RingError(f"COMAXIMAL_MAX_ORDER must be >= 2, got {value}")
    return value


def _check_cap(order: int, cap: int | None) -> None:
    cap = max_order() if cap is None else cap
    if order > cap:
        raise CapacityError(f"ring order {order} exceeds cap {cap}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite commutative ring with unity.

    ``modulus`` is set only for rings built by :func:`make_zmod`; it switches
    ideal labels to the ``(d)`` generator form.
    """

    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    label: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        n = self.add.shape[0]
        if self.add.shape != (n, n) or self.mul.shape != (n, n):
            raise RingError("operation tables must be square and equal-sized")
        if n < 2:
            raise RingError("the zero ring is not supported (order must be >= 2)")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise RingError("zero/one out of range")
        if self.zero == self.one:
            raise RingError("one must differ from zero")
        self.add.setflags(write=False)
        self.mul.setflags(write=False)

    @property
    def order(self) -> int:
        return self.add.shape[0]

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"

    @cached_property
    def neg(self) -> np.ndarray:
        """Additive inverse of every element."""
        rows, cols = np.nonzero(self.add == self.zero)
        out = np.empty(self.order, dtype=np.int64)
        out[rows] = cols
        return out

    @cached_property
    def characteristic(self) -> int:
        k, x = 1, self.one
        while x != self.zero:
            x = int(self.add[x, self.one])
            k += 1
        return k

    def check_axioms(self) -> list[str]:
        """Return the list of violated ring axioms (empty when valid).

        Cubic in the order; intended for tests on small rings.
        """
        A, M, n = self.add, self.mul, self.order
        idx = np.arange(n)
        bad = []
        if not np.array_equal(A, A.T):
            bad.append("add not commutative")
        if not np.array_equal(M, M.T):
            bad.append("mul not commutative")
        if not np.array_equal(A[self.zero], idx):
            bad.append("zero is not an additive identity")
        if not np.array_equal(M[self.one], idx):
            bad.append("one is not a multiplicative identity")
        if not (A == self.zero).any(axis=1).all():
            bad.append("missing additive inverse")
        # (a op b) op c == a op (b op c), as n x n x n index arrays
        a, b, c = idx[:, None, None], idx[None, :, None], idx[None, None, :]
        if not np.array_equal(A[A[a, b], c], A[a, A[b, c]]):
            bad.append("add not associative")
        if not np.array_equal(M[M[a, b], c], M[a, M[b, c]]):
            bad.append("mul not associative")
        if not np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]]):
            bad.append("mul does not distribute over add")
        return bad


def _table_dtype(order: int) -> type:
    return np.uint16 if order <= np.iinfo(np.uint16).max else np.int64


def make_zmod(n: int, *, cap: int | None = None) -> FiniteRing:
    """The ring Z/n with element ``k`` stored at index ``k``."""
    if n < 2:
        raise RingError(f"invalid order {n}: Z/n needs n >= 2")
    _check_cap(n, cap)
    a = np.arange(n, dtype=np.int64)
    dt = _table_dtype(n)
    add = ((a[:, None] + a[None, :]) % n).astype(dt)
    mul = ((a[:, None] * a[None, :]) % n).astype(dt)
    return FiniteRing(add, mul, 0, 1 % n, f"Z/{n}", modulus=n)


def make_poly_quotient(p: int, f: list[int], *, cap: int | None = None) -> FiniteRing:
    """The ring F_p[x]/(f) for a monic ``f`` given low-degree-first.

    Element ``sum c_i p^i`` is the residue ``sum c_i x^i``.
    """
    if not _is_prime(p):
        raise RingError(f"{p} is not prime")
    coeffs = [c % p for c in f]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    d = len(coeffs) - 1
    if d < 1:
        raise RingError("modulus polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise RingError("modulus polynomial must be monic")
    order = p**d
    _check_cap(order, cap)

    # companion matrix: column k is x * x^k reduced mod f
    X = np.zeros((d, d), dtype=np.int64)
    for k in range(d - 1):
        X[k + 1, k] = 1
    X[:, d - 1] = [(-c) % p for c in coeffs[:d]]
    powers = [np.eye(d, dtype=np.int64)]
    for _ in range(d - 1):
        powers.append((X @ powers[-1]) % p)
    powers = np.stack(powers)  # (d, d, d)

    radix = p ** np.arange(d, dtype=np.int64)
    C = (np.arange(order, dtype=np.int64)[:, None] // radix[None, :]) % p  # (order, d)
    dt = _table_dtype(order)
    add = (((C[:, None, :] + C[None, :, :]) % p) @ radix).astype(dt)
    mult = np.einsum("ga,akl->gkl", C, powers) % p  # multiplication matrix per element
    mul = np.empty((order, order), dtype=dt)
    for g in range(order):
        mul[g] = (((C @ mult[g].T) % p) @ radix).astype(dt)

    terms = []
    for k in range(d, -1, -1):
        c = coeffs[k]
        if c:
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(("" if c == 1 and k else str(c)) + mono)
    return FiniteRing(add, mul, 0, 1, f"F{p}[x]/({'+'.join(terms)})")


def direct_product(factors: list[FiniteRing], *, cap: int | None = None) -> FiniteRing:
    """Componentwise product ring; element index is the mixed-radix code of
    its coordinate tuple, first factor most significant."""
    if not factors:
        raise RingError("direct product of an empty list")
    shape = tuple(r.order for r in factors)
    order = prod(shape)
    _check_cap(order, cap)
    coords = np.unravel_index(np.arange(order), shape)
    strides = [prod(shape[k + 1:]) for k in range(len(shape))]
    dt = _table_dtype(order)
    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    for r, c, s in zip(factors, coords, strides):
        add += r.add[c[:, None], c[None, :]].astype(np.int64) * s
        mul += r.mul[c[:, None], c[None, :]].astype(np.int64) * s
    zero = sum(r.zero * s for r, s in zip(factors, strides))
    one = sum(r.one * s for r, s in zip(factors, strides))
    label = " x ".join(r.label for r in factors)
    return FiniteRing(add.astype(dt), mul.astype(dt), zero, one, label)


def product_coordinates(factors: list[FiniteRing]) -> np.ndarray:
    """``(order, k)`` array of coordinate tuples for :func:`direct_product`."""
    shape = tuple(r.order for r in factors)
    return np.stack(np.unravel_index(np.arange(prod(shape)), shape), axis=1)


# ---------------------------------------------------------------------------
# Ideals


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing = field(repr=False)
    mask: int

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __le__(self, other: Ideal) -> bool:
        return self.mask & ~other.mask == 0

    def is_unit(self) -> bool:
        return self.ring.one in self

    def is_zero(self) -> bool:
        return self.mask == 1 << self.ring.zero


def is_ideal_mask(ring: FiniteRing, mask: int) -> bool:
    """Direct check of the ideal axioms on an element bitset."""
    members = np.fromiter(iter_bits(mask), dtype=np.int64)
    if len(members) == 0 or not mask >> ring.zero & 1:
        return False
    if ring.order % len(members):
        return False
    inside = np.zeros(ring.order, dtype=bool)
    inside[members] = True
    if not inside[ring.add[np.ix_(members, members)]].all():
        return False
    if not inside[ring.neg[members]].all():
        return False
    return bool(inside[ring.mul[:, members]].all())


def principal_ideal(ring: FiniteRing, a: int) -> Ideal:
    """The ideal ``Ra``."""
    if not 0 <= a < ring.order:
        raise RingError(f"element {a} out of range")
    return Ideal(ring, mask_from_indices(ring.mul[:, a], ring.order))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring is not J.ring:
        raise RingError("ideals belong to different rings")
    if I <= J:
        return J
    if J <= I:
        return I
    ring = I.ring
    sums = ring.add[np.ix_(I.members, J.members)]
    return Ideal(ring, mask_from_indices(sums.ravel(), ring.order))


def _principal_masks(ring: FiniteRing) -> list[int]:
    n = ring.order
    hit = np.zeros((n, n), dtype=bool)
    hit[np.arange(n)[:, None], ring.mul.T] = True
    return [mask_from_bool(row) for row in hit]


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """All ideals of a ring in canonical order (size, then sorted members)."""

    ring: FiniteRing
    ideals: tuple[Ideal, ...]
    maximal_indices: tuple[int, ...]
    jacobson: int

    @cached_property
    def _index(self) -> dict[int, int]:
        return {I.mask: i for i, I in enumerate(self.ideals)}

    def index_of(self, ideal: Ideal | int) -> int:
        mask = ideal if isinstance(ideal, int) else ideal.mask
        return self._index[mask]

    @property
    def unit(self) -> int:
        return len(self.ideals) - 1

    @property
    def zero_ideal(self) -> int:
        return 0

    def is_local(self) -> bool:
        return len(self.maximal_indices) == 1

    def label(self, i: int) -> str:
        I = self.ideals[i]
        if self.ring.modulus is not None:
            if I.is_zero():
                return "(0)"
            return f"({next(x for x in I.members if x)})"
        return f"I{i}"

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.label(i) for i in range(len(self.ideals)))


def enumerate_ideals(ring: FiniteRing, *, cap: int | None = None) -> IdealLattice:
    """All ideals, as the closure of the principal ideals under sums."""
    _check_cap(ring.order, cap)
    seen: set[int] = set()
    found: list[Ideal] = []
    queue = []
    for m in _principal_masks(ring):
        if m not in seen:
            seen.add(m)
            queue.append(Ideal(ring, m))
    while queue:
        I = queue.pop()
        for J in found:
            S = ideal_sum(I, J)
            if S.mask not in seen:
                seen.add(S.mask)
                queue.append(S)
        found.append(I)

    found.sort(key=lambda I: (len(I), I.members))
    ideals = tuple(found)
    unit = len(ideals) - 1
    proper = range(unit)
    maximal = tuple(
        i for i in proper
        if not any(ideals[i].mask != ideals[j].mask and ideals[i] <= ideals[j] for j in proper)
    )
    jac_mask = -1
    for i in maximal:
        jac_mask &= ideals[i].mask
    lattice = IdealLattice(ring, ideals, maximal, 0)
    object.__setattr__(lattice, "jacobson", lattice.index_of(jac_mask))
    return lattice


def maximal_ideals(lattice: IdealLattice) -> list[int]:
    return list(lattice.maximal_indices)


def jacobson_radical(lattice: IdealLattice) -> int:
    return lattice.jacobson


def is_local(ring: FiniteRing) -> bool:
    return enumerate_ideals(ring).is_local()


# ---------------------------------------------------------------------------
# Idempotents and decomposition into local factors


def idempotents(ring: FiniteRing) -> list[int]:
    idx = np.arange(ring.order)
    return [int(e) for e in np.flatnonzero(ring.mul[idx, idx] == idx)]


def _split(ring: FiniteRing, e: int) -> tuple[FiniteRing, np.ndarray]:
    """The ring ``eR`` with identity ``e`` and the projection ``r -> er``."""
    image = ring.mul[e].astype(np.int64)  # r -> e*r
    if ring.modulus is not None:
        # eR is cyclic of order m, generated additively by e; e*r = (r mod m)*e
        m = len(np.unique(image))
        return make_zmod(m), np.arange(ring.order) % m
    elems = np.unique(image)
    pos = np.full(ring.order, -1, dtype=np.int64)
    pos[elems] = np.arange(len(elems))
    dt = _table_dtype(len(elems))
    sub = FiniteRing(
        pos[ring.add[np.ix_(elems, elems)]].astype(dt),
        pos[ring.mul[np.ix_(elems, elems)]].astype(dt),
        int(pos[ring.zero]),
        int(pos[e]),
        f"{ring.label}[e={e}]",
    )
    return sub, pos[image]


def _residue_prime(ring: FiniteRing) -> int:
    ch = ring.characteristic
    p = 2
    while ch % p:
        p += 1
    return p


def decompose_with_coordinates(ring: FiniteRing) -> tuple[list[FiniteRing], np.ndarray]:
    """Split off idempotents until every factor is local.

    Returns the local factors and an ``(order, k)`` array giving each
    element's coordinates in the factors.  Factors are ordered by residue
    characteristic, then order, then discovery.
    """
    nontrivial = [e for e in idempotents(ring) if e not in (ring.zero, ring.one)]
    if not nontrivial:
        return [ring], np.arange(ring.order)[:, None]
    e = nontrivial[0]
    f = int(ring.add[ring.one, ring.neg[e]])
    parts: list[tuple[FiniteRing, np.ndarray]] = []
    for idem in (e, f):
        sub, proj = _split(ring, idem)
        sub_factors, sub_coords = decompose_with_coordinates(sub)
        for k, factor in enumerate(sub_factors):
            parts.append((factor, sub_coords[proj, k]))
    order = sorted(range(len(parts)), key=lambda k: (_residue_prime(parts[k][0]), parts[k][0].order, k))
    factors = [parts[k][0] for k in order]
    coords = np.stack([parts[k][1] for k in order], axis=1)
    return factors, coords


def decompose(ring: FiniteRing) -> list[FiniteRing]:
    return decompose_with_coordinates(ring)[0]


def recombine(ring: FiniteRing) -> tuple[FiniteRing, np.ndarray]:
    """Rebuild ``ring`` as the direct product of its local factors.

    Returns the product ring and the element bijection ``ring -> product``.
    """
    factors, coords = decompose_with_coordinates(ring)
    prod_ring = direct_product(factors)
    shape = tuple(r.order for r in factors)
    return prod_ring, np.ravel_multi_index(tuple(coords.T), shape)


def map_ideal(I: Ideal, target: FiniteRing, bijection: np.ndarray) -> Ideal:
    """Image of ``I`` under an element bijection into ``target``."""
    return Ideal(target, mask_from_indices(bijection[list(I.members)], target.order))


def small_rings(max_order: int = 16) -> list[FiniteRing]:
    """Every ring of order <= ``max_order`` reachable from the constructors:
    Z/n, F_p[x]/(f) for all monic f, and direct products of those."""
    base: list[FiniteRing] = [make_zmod(n) for n in range(2, max_order + 1)]
    p = 2
    while p <= max_order:
        if _is_prime(p):
            d = 1
            while p**d <= max_order:
                if d >= 2:  # degree-1 quotients are just Z/p again
                    for tail in product(range(p), repeat=d):
                        base.append(make_poly_quotient(p, list(tail) + [1]))
                d += 1
        p += 1
    rings = list(base)
    frontier = [[r] for r in base]
    while frontier:
        nxt = []
        for combo in frontier:
            size = prod(r.order for r in combo)
            start = base.index(combo[-1])
            for r in base[start:]:
                if size * r.order <= max_order:
                    nxt.append(combo + [r])
        for combo in nxt:
            rings.append(direct_product(combo))
        frontier = nxt
    return rings


# ---------------------------------------------------------------------------
# The co-maximal ideal graph


def comaximal_graph(ring: FiniteRing, lattice: IdealLattice | None = None) -> Graph:
    """Proper ideals not inside J(R), joined when their sum is the unit ideal."""
    if lattice is None:
        lattice = enumerate_ideals(ring)
    jac = lattice.ideals[lattice.jacobson].mask
    verts = [i for i in range(lattice.unit) if lattice.ideals[i].mask & ~jac]
    edges = []
    for a, i in enumerate(verts):
        for b in range(a + 1, len(verts)):
            if ideal_sum(lattice.ideals[i], lattice.ideals[verts[b]]).is_unit():
                edges.append((a, b))
    return Graph.from_edges([lattice.label(i) for i in verts], edges)
