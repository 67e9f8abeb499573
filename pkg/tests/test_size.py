"""The size invariant and the exact minimum cover behind it."""

import pytest
from hypothesis import given

from stanley import (COMPONENT_CAP, Decomposition, DomainError,
                     IrreducibleComponent, MonomialIdeal, ResourceLimitError,
                     RingCtx, decompose, min_cover, parse_ideal, size,
                     support_union)

import oracles
from conftest import ideals

R3 = RingCtx(3)


def test_worked_example():
    rep = size(parse_ideal("x1^2, x2*x3", R3))
    assert (rep.n, rep.s, rep.h, rep.v, rep.size) == (3, 2, 3, 2, 1)
    assert rep.witness == (0, 1)


def test_polarized_worked_example():
    I, added = parse_ideal("x1^2, x2*x3", R3).polarize()
    assert added == 1
    rep = size(I)
    assert rep.s == 4
    assert (rep.h, rep.v, rep.size) == (4, 2, 1)


def test_irreducible_size_is_corank():
    # one component: h = r, v = 1, so size = n - r
    for n in range(1, 5):
        for r in range(1, n + 1):
            gens = [RingCtx(n).variable(i, 2) for i in range(r)]
            rep = size(MonomialIdeal(RingCtx(n), gens))
            assert rep.size == n - r


def test_maximal_ideal_size_zero():
    I = MonomialIdeal(R3, [R3.variable(i) for i in range(3)])
    assert size(I).size == 0


def test_trivial_ideals_rejected():
    with pytest.raises(DomainError):
        size(MonomialIdeal.zero(R3))
    with pytest.raises(DomainError):
        size(MonomialIdeal.unit(R3))


@given(ideals(n_max=4, gens_max=4, exp_max=3))
def test_cover_matches_brute_force(I):
    D = decompose(I)
    rep = size(I, decomposition=D)
    supports = [c.support for c in D.components]
    universe = frozenset().union(*supports)
    t, combo = oracles.naive_min_cover(supports, universe)
    assert rep.v == t
    assert rep.witness == combo
    assert rep.h == len(universe)
    assert rep.size == rep.v + I.ring.n - rep.h - 1


@given(ideals(n_max=4, gens_max=4, exp_max=3))
def test_witness_covers(I):
    D = decompose(I)
    rep = size(I, decomposition=D)
    union = frozenset().union(*(D.components[j].support for j in rep.witness))
    assert union == support_union(D)


def test_component_cap():
    n = COMPONENT_CAP + 1
    ring = RingCtx(n)
    comps = [IrreducibleComponent(((i, 1),)) for i in range(n)]
    D = Decomposition(ring, tuple(comps))
    with pytest.raises(ResourceLimitError):
        min_cover(D)
