"""Planarity verdicts with certificates.

A planar verdict carries a rotation system, checked by face tracing against
Euler's formula; a nonplanar verdict can carry a K5 / K3,3 subdivision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .kuratowski import SubdivisionWitness, extract_witness, verify_witness
from .lr import lr_planarity

DEFAULT_WITNESS_CAP = 64


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: tuple[tuple[int, ...], ...] | None = None
    witness: SubdivisionWitness | None = None

    @property
    def verdict(self) -> str:
        return "planar" if self.planar else "nonplanar"


def count_faces(rotation: tuple[tuple[int, ...], ...] | list[list[int]]) -> int:
    """Number of face orbits of a rotation system (edgeless vertices excluded)."""
    succ = [{w: rot[(k + 1) % len(rot)] for k, w in enumerate(rot)} for rot in rotation]
    seen: set[tuple[int, int]] = set()
    faces = 0
    for v, rot in enumerate(rotation):
        for w in rot:
            if (v, w) in seen:
                continue
            faces += 1
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                a, b = b, succ[b][a]
    return faces


def check_embedding(g: Graph, rotation) -> bool:
    """Rotation covers every edge once per endpoint and satisfies
    V - E + F = 2 on each connected component."""
    if len(rotation) != len(g):
        return False
    for v, rot in enumerate(rotation):
        if sorted(rot) != g.neighbors(v):
            return False
    for comp in g.components():
        if len(comp) == 1:
            continue
        sub = {v: k for k, v in enumerate(comp)}
        local = [[sub[w] for w in rotation[v]] for v in comp]
        edges = sum(len(r) for r in local) // 2
        if len(comp) - edges + count_faces(local) != 2:
            return False
    return True


def is_planar(g: Graph, want_witness: bool = False, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> PlanarityResult:
    """Exact planarity by the left-right test.

    With ``want_witness``, nonplanar graphs up to ``witness_cap`` vertices get
    a verified Kuratowski subdivision; larger ones get the verdict only.
    """
    nbrs = [g.neighbors(v) for v in range(len(g))]
    planar, rotation = lr_planarity(nbrs, embed=True)
    if planar:
        return PlanarityResult(True, tuple(tuple(r) for r in rotation))
    witness = None
    if want_witness and len(g) <= witness_cap:
        witness = extract_witness(g)
        if witness is None or not verify_witness(g, witness):
            raise AssertionError("witness extraction disagreed with the planarity test")
    return PlanarityResult(False, None, witness)
