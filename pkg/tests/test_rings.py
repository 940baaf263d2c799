from __future__ import annotations

from math import gcd, prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comaximal.graphs import same_graph
from comaximal.rings import (
    CapacityError,
    Ideal,
    RingError,
    comaximal_graph,
    decompose,
    decompose_with_coordinates,
    direct_product,
    enumerate_ideals,
    idempotents,
    ideal_sum,
    is_ideal_mask,
    is_local,
    jacobson_radical,
    make_poly_quotient,
    make_zmod,
    map_ideal,
    maximal_ideals,
    principal_ideal,
    recombine,
    small_rings,
)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_divisors(n: int) -> list[int]:
    return [p for p in divisors(n) if p > 1 and all(p % q for q in range(2, p))]


def labels_of(lattice, indices) -> set[str]:
    return {lattice.label(i) for i in indices}


ALL_SMALL = small_rings(16)


# ---------------------------------------------------------------------------
# constructors


def test_zmod_two():
    r = make_zmod(2)
    assert r.order == 2 and r.one == 1 and r.zero == 0


@pytest.mark.parametrize("n", [0, 1, -3])
def test_zmod_rejects_small_orders(n):
    with pytest.raises(RingError):
        make_zmod(n)


def test_zmod_capacity():
    with pytest.raises(CapacityError):
        make_zmod(100, cap=50)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("COMAXIMAL_MAX_ORDER", "10")
    with pytest.raises(CapacityError):
        make_zmod(12)
    make_zmod(10)


@pytest.mark.parametrize("ring", ALL_SMALL, ids=lambda r: r.label)
def test_small_rings_satisfy_axioms(ring):
    assert ring.check_axioms() == []


def test_poly_quotient_chain():
    r = make_poly_quotient(2, [0, 0, 1])
    lat = enumerate_ideals(r)
    assert r.order == 4 and len(lat.ideals) == 3
    sizes = [len(I) for I in lat.ideals]
    assert sizes == [1, 2, 4]
    assert all(lat.ideals[i] <= lat.ideals[i + 1] for i in range(2))
    assert r.label == "F2[x]/(x^2)"


def test_poly_quotient_field():
    r = make_poly_quotient(2, [1, 1, 1])
    assert len(enumerate_ideals(r).ideals) == 2
    assert is_local(r)


@pytest.mark.parametrize(
    "p, f",
    [(4, [0, 1]), (1, [0, 1]), (2, [1]), (2, [0, 0, 2]), (3, [1, 1, 2])],
)
def test_poly_quotient_rejects(p, f):
    with pytest.raises(RingError):
        make_poly_quotient(p, f)


def test_poly_quotient_trailing_zeros():
    a = make_poly_quotient(3, [1, 0, 1, 0, 0])
    b = make_poly_quotient(3, [1, 0, 1])
    assert np.array_equal(a.mul, b.mul)


def test_product_matches_zmod12():
    prod_ring = direct_product([make_zmod(4), make_zmod(3)])
    z12 = make_zmod(12)
    assert prod_ring.order == 12
    assert len(enumerate_ideals(prod_ring).ideals) == 6
    # CRT bijection x -> (x mod 4, x mod 3), first factor most significant
    bij = np.array([(x % 4) * 3 + x % 3 for x in range(12)])
    lat12 = enumerate_ideals(z12)
    images = {map_ideal(I, prod_ring, bij).mask for I in lat12.ideals}
    assert images == {I.mask for I in enumerate_ideals(prod_ring).ideals}
    assert np.array_equal(prod_ring.add[bij[:, None], bij[None, :]], bij[z12.add])
    assert np.array_equal(prod_ring.mul[bij[:, None], bij[None, :]], bij[z12.mul])


def test_singleton_product():
    r = direct_product([make_zmod(2)])
    assert np.array_equal(r.add, make_zmod(2).add)
    assert np.array_equal(r.mul, make_zmod(2).mul)


def test_boolean_cube():
    r = direct_product([make_zmod(2)] * 3)
    assert r.order == 8
    assert len(enumerate_ideals(r).ideals) == 8
    assert len(idempotents(r)) == 8
    assert [f.order for f in decompose(r)] == [2, 2, 2]


def test_product_rejects_empty():
    with pytest.raises(RingError):
        direct_product([])


# ---------------------------------------------------------------------------
# ideals


def test_zmod12_lattice():
    lat = enumerate_ideals(make_zmod(12))
    assert set(lat.labels) == {"(1)", "(2)", "(3)", "(4)", "(6)", "(0)"}
    assert labels_of(lat, maximal_ideals(lat)) == {"(2)", "(3)"}
    assert lat.label(jacobson_radical(lat)) == "(6)"


def test_field_lattice():
    lat = enumerate_ideals(make_zmod(7))
    assert len(lat.ideals) == 2
    assert maximal_ideals(lat) == [0] and jacobson_radical(lat) == 0


def test_zmod8_local():
    lat = enumerate_ideals(make_zmod(8))
    assert labels_of(lat, maximal_ideals(lat)) == {"(2)"}
    assert lat.label(lat.jacobson) == "(2)"
    assert lat.is_local()


def test_principal_ideals_zmod12():
    r = make_zmod(12)
    assert principal_ideal(r, 8).members == (0, 4, 8)
    assert principal_ideal(r, r.zero).is_zero()
    assert principal_ideal(r, r.one).is_unit()
    with pytest.raises(RingError):
        principal_ideal(r, 12)


def test_ideal_sums_zmod12():
    r = make_zmod(12)
    two, three, four = (principal_ideal(r, a) for a in (2, 3, 4))
    assert ideal_sum(two, three).is_unit()
    assert ideal_sum(two, four) == two
    zero = principal_ideal(r, 0)
    assert ideal_sum(three, zero) == three


def test_ideal_sum_rejects_mixed_rings():
    with pytest.raises(RingError):
        ideal_sum(principal_ideal(make_zmod(4), 2), principal_ideal(make_zmod(6), 2))


@pytest.mark.parametrize("n", list(range(2, 1001, 7)) + [64, 360, 720, 840, 900, 960, 997, 1000])
def test_zmod_divisor_oracle(n):
    lat = enumerate_ideals(make_zmod(n))
    assert sorted(lat.labels, key=lambda s: int(s[1:-1])) == sorted(
        [f"({d % n})" for d in divisors(n)], key=lambda s: int(s[1:-1])
    )
    assert labels_of(lat, maximal_ideals(lat)) == {f"({p % n})" for p in prime_divisors(n)}
    rad = prod(prime_divisors(n))
    assert lat.label(lat.jacobson) == f"({rad % n})"


@pytest.mark.parametrize("ring", ALL_SMALL, ids=lambda r: r.label)
def test_enumerated_sets_are_ideals(ring):
    lat = enumerate_ideals(ring)
    masks = [I.mask for I in lat.ideals]
    assert len(set(masks)) == len(masks)
    assert all(is_ideal_mask(ring, m) for m in masks)
    assert lat.ideals[0].is_zero() and lat.ideals[-1].is_unit()
    # canonical order: by size then members
    keys = [(len(I), I.members) for I in lat.ideals]
    assert keys == sorted(keys)


def test_is_ideal_mask_rejects():
    r = make_zmod(12)
    assert not is_ideal_mask(r, 0)
    assert not is_ideal_mask(r, 0b110)  # {1,2} misses 0
    assert not is_ideal_mask(r, 1 | 1 << 5)  # {0,5} is not closed
    assert is_ideal_mask(r, 1 | 1 << 6)


# ---------------------------------------------------------------------------
# decomposition


def test_zmod6_split():
    r = make_zmod(6)
    assert idempotents(r) == [0, 1, 3, 4]
    factors = decompose(r)
    assert sorted(f.order for f in factors) == [2, 3]
    assert all(is_local(f) for f in factors)


def test_zmod4_no_split():
    r = make_zmod(4)
    assert idempotents(r) == [0, 1]
    assert decompose(r) == [r]


@pytest.mark.parametrize("ring", ALL_SMALL, ids=lambda r: r.label)
def test_decompose_factors_local_and_recombine(ring):
    factors, coords = decompose_with_coordinates(ring)
    assert all(is_local(f) for f in factors)
    assert prod(f.order for f in factors) == ring.order
    rebuilt, bij = recombine(ring)
    assert sorted(bij.tolist()) == list(range(ring.order))
    # bijection is a ring isomorphism
    assert np.array_equal(rebuilt.add[bij[:, None], bij[None, :]], bij[ring.add])
    assert np.array_equal(rebuilt.mul[bij[:, None], bij[None, :]], bij[ring.mul])
    # and Γ is preserved label for label once ideals are transported
    lat = enumerate_ideals(ring)
    lat2 = enumerate_ideals(rebuilt)
    g = comaximal_graph(ring, lat)
    g2 = comaximal_graph(rebuilt, lat2)
    rename = {lat.label(i): lat2.label(lat2.index_of(map_ideal(I, rebuilt, bij))) for i, I in enumerate(lat.ideals)}
    assert same_graph(g.relabel(rename), g2)


@pytest.mark.parametrize("ring", ALL_SMALL, ids=lambda r: r.label)
def test_empty_graph_iff_local(ring):
    assert (len(comaximal_graph(ring)) == 0) == is_local(ring)


# ---------------------------------------------------------------------------
# co-maximal graph


def test_gamma_zmod12():
    g = comaximal_graph(make_zmod(12))
    assert set(g.labels) == {"(2)", "(3)", "(4)"}
    assert set(map(frozenset, g.edge_labels())) == {frozenset({"(2)", "(3)"}), frozenset({"(3)", "(4)"})}


def test_gamma_zmod8_empty():
    assert len(comaximal_graph(make_zmod(8))) == 0


def test_gamma_zmod30():
    g = comaximal_graph(make_zmod(30))
    assert set(g.labels) == {"(2)", "(3)", "(5)", "(6)", "(10)", "(15)"}
    assert g.edge_count() == 6


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=400))
def test_gamma_zmod_gcd_oracle(n):
    g = comaximal_graph(make_zmod(n))
    rad = prod(prime_divisors(n))
    # proper ideals (d) outside J = (rad): d misses some prime of n
    expect = [d for d in divisors(n) if d != 1 and d != n and d % rad]
    assert set(g.labels) == {f"({d})" for d in expect}
    for a in expect:
        for b in expect:
            if a < b:
                assert g.has_edge(g.index[f"({a})"], g.index[f"({b})"]) == (gcd(a, b) == 1)


def test_ideal_is_hashable_value():
    r = make_zmod(6)
    assert principal_ideal(r, 2) == Ideal(r, principal_ideal(r, 4).mask)
