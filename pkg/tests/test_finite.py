"""Finite backend: restricted-neighborhood enumeration, nets, continuity.

The enumeration is checked against an independent oracle that samples
random rational radii, computes the restricted set directly from the
membership definition, and verifies it appears in the enumerated list.
"""

import random
from fractions import Fraction

import pytest

from rieszfilters.lattice import RationalVector
from rieszfilters.finite import (
    DirectednessError,
    FiniteCarrier,
    FiniteDirectedSet,
    FiniteMap,
    FiniteNet,
    all_directed_index_sets,
    check_continuity_finite,
    continuity_witness_finite,
    enumerate_restricted_neighborhoods,
    minimal_restricted_neighborhood,
    net_cluster_finite,
    net_converges_finite,
    restricted_neighborhood_table,
)
from rieszfilters.topology import (
    CoordinateAbs,
    NeighborhoodSpec,
    PseudonormFamily,
    SemanticsMode,
    SpaceSpec,
    WeightedL1,
    WeightedSup,
    evaluate,
    nbhd_contains,
)

V = RationalVector.of
ZERO = SemanticsMode.ZERO_NBHD
TRANS = SemanticsMode.TRANSLATED


def line_space():
    return SpaceSpec(1, PseudonormFamily((CoordinateAbs(0),)))


def plane_space():
    return SpaceSpec(2, PseudonormFamily((WeightedL1((1, 1)), WeightedSup((1, 2)))))


def carrier(space, *points):
    return FiniteCarrier(tuple(points), space)


def oracle_restricted_set(carrier_, center, mode, radii):
    """Direct definition: which carrier points satisfy every constraint."""
    family = carrier_.space.family
    out = set()
    for i, p in enumerate(carrier_.points):
        probe = p if mode is ZERO else p - center
        if all(evaluate(family[j], probe) < eps for j, eps in radii):
            out.add(i)
    return frozenset(out)


def test_enumeration_translated_example():
    space = line_space()
    w = carrier(space, V(0), V("1/2"), V(1), V(2))
    sets = enumerate_restricted_neighborhoods(w, V(0), TRANS)
    assert sets == [
        frozenset({0}),
        frozenset({0, 1}),
        frozenset({0, 1, 2}),
        frozenset({0, 1, 2, 3}),
    ]


def test_enumeration_zero_mode_admissibility():
    # zero neighborhoods containing the point 1 need radius above 1
    space = line_space()
    w = carrier(space, V(0), V("1/2"), V(1), V(2))
    sets = enumerate_restricted_neighborhoods(w, V(1), ZERO)
    assert sets == [frozenset({0, 1, 2}), frozenset({0, 1, 2, 3})]


def test_enumeration_always_contains_full_carrier():
    space = plane_space()
    w = carrier(space, V(0, 0), V(1, 0), V(0, 1), V(1, 1))
    for mode in (ZERO, TRANS):
        for e in w.points:
            sets = enumerate_restricted_neighborhoods(w, e, mode)
            assert w.full_set() in sets


def test_enumeration_specs_realize_their_sets():
    # each table row's spec must reproduce its member set via nbhd_contains
    space = plane_space()
    w = carrier(space, V(0, 0), V(1, 0), V(0, 1), V("1/2", "1/2"), V(-1, 2))
    for mode in (ZERO, TRANS):
        for e in w.points:
            for row in restricted_neighborhood_table(w, e, mode):
                expected = oracle_restricted_set(w, e, mode, row.spec.constraints)
                assert row.members == expected
                if mode is ZERO:
                    # admissibility: the spec's set contains e itself
                    assert nbhd_contains(row.spec, space.family, e)


@pytest.mark.parametrize("mode", [ZERO, TRANS])
def test_enumeration_complete_against_random_radii(mode):
    rng = random.Random(20260810)
    space = plane_space()
    w = carrier(space, V(0, 0), V(1, 0), V(0, 1), V("1/2", "1/2"), V(-1, 2))
    for e in (V(0, 0), V(1, 0), V(-1, 2)):
        enumerated = set(enumerate_restricted_neighborhoods(w, e, mode))
        for _ in range(1000):
            radii = []
            for j in range(len(space.family)):
                eps = Fraction(rng.randint(1, 64), rng.randint(1, 32))
                if mode is ZERO:
                    floor = evaluate(space.family[j], e)
                    eps = eps + floor  # keep the spec qualifying for e
                radii.append((j, eps))
            assert oracle_restricted_set(w, e, mode, radii) in enumerated


def test_ambient_center_can_have_empty_translated_neighborhood():
    space = line_space()
    w = carrier(space, V(-1), V(0), V("1/2"))
    sets = enumerate_restricted_neighborhoods(w, V(1), TRANS)
    assert frozenset() in sets


def test_minimal_restricted_neighborhood_is_least_enumerated():
    space = plane_space()
    w = carrier(space, V(0, 0), V(1, 0), V(0, 1), V(1, 1))
    for mode in (ZERO, TRANS):
        for e in w.points:
            sets = enumerate_restricted_neighborhoods(w, e, mode)
            minimal = minimal_restricted_neighborhood(w, e, mode)
            assert minimal in sets
            assert all(minimal <= s for s in sets)


def test_single_pseudonorm_enumeration_is_nested():
    space = line_space()
    w = carrier(space, V(-2), V(-1), V(0), V("1/2"), V(1), V(2))
    for mode in (ZERO, TRANS):
        for e in w.points:
            sets = enumerate_restricted_neighborhoods(w, e, mode)
            for small, big in zip(sets, sets[1:]):
                assert small < big


def test_carrier_validation():
    space = line_space()
    with pytest.raises(ValueError):
        carrier(space, V(0), V(0))
    with pytest.raises(Exception):
        carrier(space, V(0, 0))


# ---------------------------------------------------------------------------
# Directed sets and nets
# ---------------------------------------------------------------------------


def test_directedness_validation():
    with pytest.raises(DirectednessError, match="upper bound"):
        FiniteDirectedSet(("a", "b"), frozenset({("a", "a"), ("b", "b")}))
    with pytest.raises(DirectednessError, match="reflexive"):
        FiniteDirectedSet(("a",), frozenset())
    chain = FiniteDirectedSet.from_pairs(("a", "b", "c"), [("a", "b"), ("b", "c")])
    assert chain.geq("c", "a")


def test_all_directed_index_sets_count():
    # size 3: choose the top, remaining two form any poset on two elements
    assert len(all_directed_index_sets(1)) == 1
    assert len(all_directed_index_sets(2)) == 2
    assert len(all_directed_index_sets(3)) == 9


def test_net_tails_chain():
    space = line_space()
    w = carrier(space, V(0), V(1), V(2))
    chain = FiniteDirectedSet.from_pairs(("1", "2", "3"), [("1", "2"), ("2", "3")])
    net = FiniteNet(chain, w, {"1": 0, "2": 1, "3": 2})
    assert net.tail("1") == frozenset({0, 1, 2})
    assert net.tail("2") == frozenset({1, 2})
    assert net.tail("3") == frozenset({2})


def test_net_tails_antichain_with_top():
    space = line_space()
    w = carrier(space, V(0), V(1), V(2))
    poset = FiniteDirectedSet.from_pairs(("p", "q", "t"), [("p", "t"), ("q", "t")])
    net = FiniteNet(poset, w, {"p": 0, "q": 1, "t": 2})
    assert net.tail("t") == frozenset({2})


def test_net_convergence_constant():
    space = line_space()
    w = carrier(space, V(0), V(1))
    chain = FiniteDirectedSet.from_pairs(("1", "2"), [("1", "2")])
    net = FiniteNet(chain, w, {"1": 0, "2": 0})
    assert net_converges_finite(net, V(0), ZERO)
    assert net_converges_finite(net, V(0), TRANS)
    # semantics divergence: every zero neighborhood containing 1 contains 0
    assert net_converges_finite(net, V(1), ZERO)
    assert not net_converges_finite(net, V(1), TRANS)


def test_net_convergence_chain_ending_at_limit():
    space = line_space()
    w = carrier(space, V(0), V("1/2"), V(1))
    chain = FiniteDirectedSet.from_pairs(("1", "2", "3"), [("1", "2"), ("2", "3")])
    net = FiniteNet(chain, w, {"1": 0, "2": 1, "3": 2})
    assert net_converges_finite(net, V(1), TRANS)
    assert net_cluster_finite(net, V(1), TRANS)


# ---------------------------------------------------------------------------
# Continuity
# ---------------------------------------------------------------------------


def test_continuity_identity_and_constant():
    space = line_space()
    w = carrier(space, V(0), V(1))
    ident = FiniteMap(w, w, (0, 1))
    const = FiniteMap(w, w, (0, 0))
    for mode in (ZERO, TRANS):
        assert check_continuity_finite(ident, mode)
        assert check_continuity_finite(const, mode)


def test_continuity_swap_map_modes():
    # on separated 1-D carriers every singleton is a translated
    # neighborhood of its point, so the swap map stays continuous in
    # translated mode; zero-mode neighborhoods of 0 are small while those
    # of 1 are not, which breaks continuity there
    space = line_space()
    w1 = carrier(space, V(0), V(1))
    w2 = carrier(space, V(0), V(5))
    swap = FiniteMap(w1, w2, (1, 0))  # f(0) = 5, f(1) = 0
    assert check_continuity_finite(swap, TRANS)
    assert not check_continuity_finite(swap, ZERO)
    witness = continuity_witness_finite(swap, ZERO)
    assert witness is not None
    i, nbhd = witness
    # replay: the preimage of that neighborhood holds no neighborhood of e
    pre = swap.preimage(nbhd)
    dom_sets = enumerate_restricted_neighborhoods(w1, w1.points[i], ZERO)
    assert not any(m <= pre for m in dom_sets)


def test_continuity_counterexample_translated_needs_identified_points():
    # a non-separating family identifies two domain points; mapping them
    # to separated images breaks continuity in both modes
    dom_space = SpaceSpec(2, PseudonormFamily((CoordinateAbs(0),)))
    w1 = FiniteCarrier((V(0, 0), V(0, 1)), dom_space)
    w2 = carrier(line_space(), V(0), V(5))
    f = FiniteMap(w1, w2, (0, 1))
    for mode in (ZERO, TRANS):
        assert not check_continuity_finite(f, mode)
        witness = continuity_witness_finite(f, mode)
        assert witness is not None
        i, nbhd = witness
        pre = f.preimage(nbhd)
        dom_sets = enumerate_restricted_neighborhoods(w1, w1.points[i], mode)
        assert not any(m <= pre for m in dom_sets)
