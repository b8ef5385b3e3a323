"""Filter constructions checked against brute-force set-family oracles.

The oracles work from the definitions alone: a filter is identified with
its full member family over all subsets of the carrier, constructions are
computed as literal set families, and the implementation must reproduce
them member for member.
"""

import itertools

import pytest

from rieszfilters.lattice import RationalVector
from rieszfilters.finite import (
    FiniteCarrier,
    FiniteDirectedSet,
    FiniteMap,
    FiniteNet,
    enumerate_restricted_neighborhoods,
)
from rieszfilters.filters import (
    ConstructionError,
    FilterBase,
    PrincipalFilter,
    all_principal_filters,
    associated_filter_finite,
    cluster_finite,
    converges_finite,
    convergence_witness,
    finer_filter_witness,
    generate,
    is_subfilter,
    join_filter,
    meet_filter,
    neighborhood_filter,
    principal_reduce,
    pushforward,
    validate_base,
)
from rieszfilters.topology import (
    CoordinateAbs,
    PseudonormFamily,
    SemanticsMode,
    SpaceSpec,
    nbhd_contains,
)

V = RationalVector.of
ZERO = SemanticsMode.ZERO_NBHD
TRANS = SemanticsMode.TRANSLATED


def line_carrier(*points):
    space = SpaceSpec(1, PseudonormFamily((CoordinateAbs(0),)))
    return FiniteCarrier(tuple(points), space)


def family_of(filt):
    """Oracle view: the literal member family over all carrier subsets."""
    return {s for s in filt.carrier.all_subsets() if filt.member(s)}


def up_family(carrier, minset):
    return {s for s in carrier.all_subsets() if minset <= s}


# ---------------------------------------------------------------------------
# Bases and generation
# ---------------------------------------------------------------------------


def test_validate_base_examples():
    w = line_carrier(V(0), V(1))
    good = FilterBase(w, (frozenset({0}), frozenset({0, 1})))
    ok, _ = validate_base(good)
    assert ok

    bad = FilterBase(w, (frozenset({0}), frozenset({1})))
    ok, witness = validate_base(bad)
    assert not ok
    assert witness == (frozenset({0}), frozenset({1}))


def test_tails_of_nets_form_valid_bases():
    w = line_carrier(V(0), V(1), V(2))
    chain = FiniteDirectedSet.from_pairs(("1", "2", "3"), [("1", "2"), ("2", "3")])
    net = FiniteNet(chain, w, {"1": 0, "2": 1, "3": 2})
    base = FilterBase(w, tuple(dict.fromkeys(net.tails())))
    ok, _ = validate_base(base)
    assert ok


def test_generate_is_up_closure_of_base():
    w = line_carrier(V(0), V(1), V(2))
    base = FilterBase(w, (frozenset({0, 1}), frozenset({0, 2}), frozenset({0})))
    filt = generate(base)
    # oracle: member(T) iff some base element is inside T
    expected = {
        s
        for s in w.all_subsets()
        if any(b <= s for b in base.elements)
    }
    assert family_of(filt) == expected
    assert not filt.member(frozenset())


def test_generate_rejects_empty_core():
    w = line_carrier(V(0), V(1))
    base = FilterBase(w, (frozenset({0}), frozenset({1})))
    with pytest.raises(ConstructionError):
        generate(base)


def test_principal_reduce():
    w = line_carrier(V(0), V(1), V(2))
    base = FilterBase(w, (frozenset({0, 1}), frozenset({0, 2}), frozenset({0})))
    assert principal_reduce(generate(base)) == frozenset({0})
    # without the dominating element the pair is not a base at all
    ok, _ = validate_base(FilterBase(w, (frozenset({0, 1}), frozenset({0, 2}))))
    assert not ok
    f = PrincipalFilter(w, frozenset({1, 2}))
    assert principal_reduce(f) == frozenset({1, 2})


# ---------------------------------------------------------------------------
# Join / meet / pushforward vs set-family oracles
# ---------------------------------------------------------------------------


def all_minsets(carrier):
    n = len(carrier)
    for mask in range(1, 1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def test_join_matches_union_family_oracle():
    w = line_carrier(V(0), V(1), V(2), V(3))
    for s1 in all_minsets(w):
        for s2 in all_minsets(w):
            f1, f2 = PrincipalFilter(w, s1), PrincipalFilter(w, s2)
            joined = join_filter(f1, f2)
            # oracle: the literal family {F1 union F2}
            literal = {
                a | b for a in up_family(w, s1) for b in up_family(w, s2)
            }
            assert family_of(joined) == literal
            # family-intersection law
            for s in w.all_subsets():
                assert joined.member(s) == (f1.member(s) and f2.member(s))


def test_join_idempotent_and_with_full_filter():
    w = line_carrier(V(0), V(1), V(2))
    f = PrincipalFilter(w, frozenset({0, 2}))
    assert join_filter(f, f).minset == f.minset
    coarse = PrincipalFilter(w, w.full_set())
    assert join_filter(f, coarse).minset == w.full_set()


def test_meet_matches_intersection_family_oracle():
    w = line_carrier(V(0), V(1), V(2))
    for s1 in all_minsets(w):
        for s2 in all_minsets(w):
            f1, f2 = PrincipalFilter(w, s1), PrincipalFilter(w, s2)
            literal = {
                a & b
                for a in up_family(w, s1)
                for b in up_family(w, s2)
                if a & b
            }
            if s1 & s2:
                met = meet_filter(f1, f2)
                assert family_of(met) == literal
            else:
                # the literal class fails intersection closure; the
                # implementation must refuse with the minset witness
                with pytest.raises(ConstructionError) as err:
                    meet_filter(f1, f2)
                assert err.value.witness == (s1, s2)


def test_meet_examples():
    w = line_carrier(V(0), V(1), V(2))
    f1 = PrincipalFilter(w, frozenset({0, 1}))
    f2 = PrincipalFilter(w, frozenset({0, 2}))
    assert meet_filter(f1, f2).minset == frozenset({0})
    f = PrincipalFilter(w, frozenset({1}))
    assert meet_filter(f, f).minset == f.minset


def test_pushforward_matches_preimage_oracle():
    w1 = line_carrier(V(0), V(1), V(2), V(3))
    w2 = line_carrier(V(0), V(5))
    f = FiniteMap(w1, w2, (0, 1, 0, 1))  # coordinate-style projection
    for s in all_minsets(w1):
        filt = PrincipalFilter(w1, s)
        pushed = pushforward(f, filt)
        # oracle: member(B) iff preimage of B is a member of the source
        for b in w2.all_subsets():
            assert pushed.member(b) == filt.member(f.preimage(b))
        assert pushed.minset == f.image(s)


def test_pushforward_constant_and_identity():
    w = line_carrier(V(0), V(1))
    const = FiniteMap(w, w, (1, 1))
    ident = FiniteMap(w, w, (0, 1))
    f = PrincipalFilter(w, frozenset({0}))
    assert pushforward(const, f).minset == frozenset({1})
    assert pushforward(ident, f).minset == f.minset


# ---------------------------------------------------------------------------
# Subfilter and neighborhood filter
# ---------------------------------------------------------------------------


def test_is_subfilter_matches_member_enumeration():
    w = line_carrier(V(0), V(1), V(2), V(3))
    for s1 in all_minsets(w):
        for s2 in all_minsets(w):
            f1, f2 = PrincipalFilter(w, s1), PrincipalFilter(w, s2)
            oracle = family_of(f1) <= family_of(f2)
            assert is_subfilter(f1, f2) == oracle
    f = PrincipalFilter(w, frozenset({2}))
    assert is_subfilter(f, f)


def test_neighborhood_filter_modes_coincide_at_zero():
    w = line_carrier(V(-1), V(0), V("1/2"), V(1), V(2), V(-2))
    zero = V(0)
    nz = neighborhood_filter(w, zero, ZERO)
    nt = neighborhood_filter(w, zero, TRANS)
    assert family_of(nz) == family_of(nt)


def test_neighborhood_filter_member_full_carrier():
    w = line_carrier(V(-1), V(0))
    for mode in (ZERO, TRANS):
        assert neighborhood_filter(w, V(-1), mode).member(w.full_set())


def test_neighborhood_filter_zero_mode_far_point():
    # zero neighborhoods containing -1 need radius above 1, so they
    # swallow the whole two-point carrier
    w = line_carrier(V(-1), V(0))
    nf = neighborhood_filter(w, V(-1), ZERO)
    assert nf.minset == w.full_set()


# ---------------------------------------------------------------------------
# Convergence, clustering, finer-filter witness
# ---------------------------------------------------------------------------


def test_neighborhood_filter_always_converges_to_center():
    w = line_carrier(V(-1), V(0), V("1/2"))
    for mode in (ZERO, TRANS):
        for e in w.points:
            assert converges_finite(neighborhood_filter(w, e, mode), e, mode)


def test_converges_examples_on_three_point_carrier():
    w = line_carrier(V(-1), V(0), V("1/2"))
    f = PrincipalFilter(w, frozenset({0}))  # up({-1})
    assert converges_finite(f, V(-1), ZERO)
    assert converges_finite(f, V(-1), TRANS)
    g = PrincipalFilter(w, frozenset({1}))  # up({0})
    assert converges_finite(g, V(1), ZERO)  # ambient point, radii above 1
    assert not converges_finite(g, V(1), TRANS)


def test_convergence_matches_subfilter_reduction():
    w = line_carrier(V(-1), V(0), V("1/2"), V(2))
    for mode in (ZERO, TRANS):
        for f in all_principal_filters(w):
            for e in w.points:
                reduction = is_subfilter(neighborhood_filter(w, e, mode), f)
                assert converges_finite(f, e, mode) == reduction


def test_convergence_witness_replays():
    w = line_carrier(V(-1), V(0), V(1))
    f = PrincipalFilter(w, frozenset({0}))  # up({-1})
    assert not converges_finite(f, V(0), ZERO)
    entry = convergence_witness(f, V(0), ZERO)
    assert entry is not None
    # replay through the primitive membership definition
    family = w.space.family
    assert nbhd_contains(entry.spec, family, V(0))
    assert not f.member(entry.members)


def test_cluster_examples():
    w = line_carrier(V("-1/2"), V(0), V(2))
    f = PrincipalFilter(w, frozenset({2}))  # up({2})
    assert not cluster_finite(f, V(0), TRANS)
    g = PrincipalFilter(w, frozenset({0, 2}))  # up({-1/2, 2})
    assert not cluster_finite(g, V(0), TRANS)  # smallest nbhd {0} misses it


def test_cluster_matches_full_member_enumeration():
    w = line_carrier(V(-1), V(0), V(1), V("1/2"))
    for mode in (ZERO, TRANS):
        for f in all_principal_filters(w):
            for e in w.points:
                nbhds = enumerate_restricted_neighborhoods(w, e, mode)
                slow = all(
                    n & member
                    for n in nbhds
                    for member in f.member_family()
                )
                assert cluster_finite(f, e, mode) == slow


def test_finer_filter_witness_properties():
    w = line_carrier(V(-1), V(0), V(1), V("1/2"))
    for mode in (ZERO, TRANS):
        for f in all_principal_filters(w):
            for e in w.points:
                if cluster_finite(f, e, mode):
                    g = finer_filter_witness(f, e, mode)
                    assert is_subfilter(f, g)
                    assert converges_finite(g, e, mode)
                else:
                    with pytest.raises(ConstructionError):
                        finer_filter_witness(f, e, mode)


def test_finer_filter_witness_on_convergent_filter_extends_it():
    w = line_carrier(V(0), V(1))
    f = PrincipalFilter(w, frozenset({0}))
    assert converges_finite(f, V(0), TRANS)
    g = finer_filter_witness(f, V(0), TRANS)
    assert is_subfilter(f, g)
    assert converges_finite(g, V(0), TRANS)


# ---------------------------------------------------------------------------
# Exhaustive corpus generator and net association
# ---------------------------------------------------------------------------


def test_all_principal_filters_counts_and_validity():
    w3 = line_carrier(V(0), V(1), V(2))
    filters = list(all_principal_filters(w3))
    assert len(filters) == 7
    assert len({f.minset for f in filters}) == 7
    w1 = line_carrier(V(0))
    assert len(list(all_principal_filters(w1))) == 1
    for f in filters:
        assert f.minset  # never empty
        fam = family_of(f)
        assert frozenset() not in fam
        for s in fam:  # upward closure + intersection closure
            for t in fam:
                assert s & t in fam
                assert s | t in fam


def test_all_principal_filters_bound():
    w = line_carrier(*(V(i) for i in range(5)))
    with pytest.raises(ValueError):
        list(all_principal_filters(w, bound=4))


def test_associated_filter_finite_examples():
    w = line_carrier(V(10), V(20), V(30))
    chain = FiniteDirectedSet.from_pairs(("1", "2", "3"), [("1", "2"), ("2", "3")])
    net = FiniteNet(chain, w, {"1": 0, "2": 1, "3": 2})
    assert associated_filter_finite(net).minset == frozenset({2})

    const = FiniteNet(chain, w, {"1": 1, "2": 1, "3": 1})
    assert associated_filter_finite(const).minset == frozenset({1})

    poset = FiniteDirectedSet.from_pairs(("p", "q", "t"), [("p", "t"), ("q", "t")])
    net2 = FiniteNet(poset, w, {"p": 0, "q": 1, "t": 2})
    assert associated_filter_finite(net2).minset == frozenset({2})
