"""Lattice identities on Q^n: spec examples plus randomized property checks."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rieszfilters.lattice import (
    DimensionMismatch,
    RationalVector,
    inf,
    is_disjoint,
    leq,
    neg,
    pos,
    sup,
)

V = RationalVector.of


def random_vector(rng, dim, bound=100):
    return RationalVector(
        tuple(
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            for _ in range(dim)
        )
    )


rational = st.fractions(min_value=-50, max_value=50, max_denominator=20)
vectors2 = st.tuples(rational, rational).map(lambda t: RationalVector(t))


def test_sup_examples():
    assert sup(V(1, -2), V(0, 3)) == V(1, 3)
    x = V("1/3", "-7/2")
    assert sup(x, x) == x
    assert sup(V("-5/2", "1/3"), V(0, 0)) == V(0, "1/3")


def test_inf_examples():
    assert inf(V(1, -2), V(0, 3)) == V(0, -2)
    x = V(5, "2/7")
    assert inf(x, x) == x
    assert inf(V(1, 0), V(0, 2)) == V(0, 0)


def test_parts_examples():
    x = V(-2, 3)
    assert pos(x) == V(0, 3)
    assert neg(x) == V(2, 0)
    assert abs(x) == V(2, 3)
    z = RationalVector.zero(2)
    assert pos(z) == neg(z) == abs(z) == z


def test_leq_examples():
    assert leq(V(0, 0), V(1, 2))
    assert not leq(V(1, 0), V(0, 1))
    assert not leq(V(0, 1), V(1, 0))


def test_disjoint_examples():
    assert is_disjoint(V(1, 0), V(0, -2))
    assert not is_disjoint(V(1, 1), V(0, 1))
    assert is_disjoint(V(-3, "5/2"), V(0, 0))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        sup(V(1), V(1, 2))
    with pytest.raises(DimensionMismatch):
        leq(V(1), V(1, 2))


@given(vectors2)
def test_part_identities(x):
    assert x == pos(x) - neg(x)
    assert abs(x) == pos(x) + neg(x)
    assert abs(x) == sup(x, -x)
    assert pos(x) == sup(x, RationalVector.zero(x.dim))


@given(vectors2, vectors2)
def test_lattice_laws(x, y):
    assert sup(x, y) == sup(y, x)
    assert inf(x, y) == inf(y, x)
    assert sup(x, inf(x, y)) == x
    assert inf(x, sup(x, y)) == x
    assert leq(inf(x, y), x) and leq(x, sup(x, y))


@given(vectors2, vectors2, vectors2)
def test_order_translation_and_scaling(x, y, z):
    if leq(x, y):
        assert leq(x + z, y + z)
        assert leq(x.scale(Fraction(3, 2)), y.scale(Fraction(3, 2)))


def test_disjoint_additivity_of_abs():
    # |x + y| = |x| + |y| whenever supports are disjoint
    rng = random.Random(7)
    for _ in range(300):
        dim = rng.randint(1, 5)
        mask = [rng.random() < 0.5 for _ in range(dim)]
        x = RationalVector(
            tuple(
                Fraction(rng.randint(-9, 9)) if m else Fraction(0)
                for m in mask
            )
        )
        y = RationalVector(
            tuple(
                Fraction(0) if m else Fraction(rng.randint(-9, 9))
                for m in mask
            )
        )
        assert is_disjoint(x, y)
        assert abs(x + y) == abs(x) + abs(y)


def test_serialization_round_trip():
    x = V("-5/2", 3, "1/7")
    assert x.to_json() == ["-5/2", "3", "1/7"]
    assert RationalVector.from_json(x.to_json()) == x
