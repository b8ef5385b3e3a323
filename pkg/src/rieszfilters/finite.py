"""Fully decidable finite model: carriers in Q^n and restricted neighborhoods.

A `FiniteCarrier` is a finite point set W in Q^n.  Every convergence
question relativizes basic neighborhoods to W, and because membership is
strict, the restricted set U cap W only changes when a radius crosses one
of finitely many critical values.  Sampling one rational epsilon strictly
between consecutive critical values (plus one beyond the maximum)
therefore enumerates every distinct restricted neighborhood exactly.

Finite directed sets, nets over them, and maps between carriers live here
too, together with the net-side convergence and continuity checks.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .lattice import RationalVector
from .topology import (
    NeighborhoodSpec,
    SemanticsMode,
    SpaceSpec,
    evaluate,
)

ExplicitSet = frozenset


class DirectednessError(ValueError):
    """Raised when a finite index set fails a partial-order or directedness axiom."""


@dataclass(frozen=True)
class FiniteCarrier:
    """A nonempty list of distinct points of one space."""

    points: tuple[RationalVector, ...]
    space: SpaceSpec

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("carrier must be nonempty")
        for p in self.points:
            self.space.check_vector(p)
        if len(set(self.points)) != len(self.points):
            raise ValueError("carrier points must be distinct")

    def __len__(self) -> int:
        return len(self.points)

    def index_of(self, point: RationalVector) -> int:
        try:
            return self.points.index(point)
        except ValueError:
            raise ValueError(f"point {point} is not in the carrier") from None

    def full_set(self) -> frozenset[int]:
        return frozenset(range(len(self.points)))

    def subset_points(self, indices: frozenset[int]) -> list[RationalVector]:
        return [self.points[i] for i in sorted(indices)]

    def all_subsets(self) -> Iterator[frozenset[int]]:
        """All subsets of the carrier, empty set first, in bitmask order."""
        n = len(self.points)
        for mask in range(1 << n):
            yield frozenset(i for i in range(n) if mask >> i & 1)


@dataclass(frozen=True)
class RestrictedNbhd:
    """One distinct restricted neighborhood with a realizing basic spec."""

    spec: NeighborhoodSpec
    members: frozenset[int]


def _critical_scan(
    values: Sequence[Fraction], lower_bound: Fraction
) -> list[Fraction]:
    """Rational radii realizing every distinct strict sublevel set above a bound.

    `values` are the critical values at which {x : value < eps} changes.
    Returns one epsilon strictly inside each gap between consecutive
    distinct criticals, plus one beyond the maximum, keeping only radii
    strictly greater than `lower_bound` (and > 0).
    """
    crits = sorted(set(values) | {Fraction(0), lower_bound})
    eps: list[Fraction] = []
    for lo, hi in zip(crits, crits[1:]):
        mid = (lo + hi) / 2
        if mid > 0 and mid > lower_bound:
            eps.append(mid)
    top = crits[-1] + 1
    if top > 0 and top > lower_bound:
        eps.append(top)
    return eps


@functools.lru_cache(maxsize=None)
def restricted_neighborhood_table(
    carrier: FiniteCarrier,
    center: RationalVector,
    mode: SemanticsMode,
) -> tuple[RestrictedNbhd, ...]:
    """Every distinct restricted neighborhood of `center` with realizing specs.

    ZERO_NBHD: sets U cap W for basic zero neighborhoods U that contain
    `center` (so each radius must exceed rho_j(center)).  TRANSLATED: sets
    (center + U) cap W for arbitrary basic U.  Multi-constraint specs are
    covered by intersecting one single-constraint choice per pseudonorm;
    every choice list includes the everything-passes radius, so the
    product is complete.
    """
    space = carrier.space
    space.check_vector(center)
    family = space.family

    per_j_choices: list[list[tuple[Fraction, frozenset[int]]]] = []
    for j, rho in enumerate(family.members):
        if mode is SemanticsMode.ZERO_NBHD:
            dists = [evaluate(rho, p) for p in carrier.points]
            bound = evaluate(rho, center)
        else:
            dists = [evaluate(rho, p - center) for p in carrier.points]
            bound = Fraction(0)
        choices = []
        for eps in _critical_scan(dists, bound):
            members = frozenset(i for i, d in enumerate(dists) if d < eps)
            choices.append((eps, members))
        per_j_choices.append(choices)

    table: list[RestrictedNbhd] = []
    seen: set[frozenset[int]] = set()
    for combo in itertools.product(*per_j_choices):
        members = frozenset.intersection(*(m for _, m in combo))
        if members in seen:
            continue
        seen.add(members)
        spec = NeighborhoodSpec(tuple((j, eps) for j, (eps, _) in enumerate(combo)))
        table.append(RestrictedNbhd(spec=spec, members=members))
    table.sort(key=lambda r: (len(r.members), sorted(r.members)))
    return tuple(table)


def enumerate_restricted_neighborhoods(
    carrier: FiniteCarrier,
    center: RationalVector,
    mode: SemanticsMode,
) -> list[frozenset[int]]:
    """The distinct restricted neighborhoods of `center`, smallest first."""
    return [r.members for r in restricted_neighborhood_table(carrier, center, mode)]


def minimal_restricted_neighborhood(
    carrier: FiniteCarrier,
    center: RationalVector,
    mode: SemanticsMode,
) -> frozenset[int]:
    """Intersection of all restricted neighborhoods of `center`.

    Basic sets are closed under finite intersection, so on a finite
    carrier this minimum is itself a restricted neighborhood.
    """
    sets = enumerate_restricted_neighborhoods(carrier, center, mode)
    return frozenset.intersection(*sets)


# ---------------------------------------------------------------------------
# Finite directed sets, nets, maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteDirectedSet:
    """A finite directed poset given by its full <= relation.

    Validation is eager: reflexivity, antisymmetry, transitivity, and
    directedness are all checked at construction, with a witness pair in
    the error message on failure.
    """

    elements: tuple[str, ...]
    relation: frozenset[tuple[str, str]]  # (a, b) means a <= b

    def __post_init__(self) -> None:
        if not self.elements:
            raise DirectednessError("index set must be nonempty")
        if len(set(self.elements)) != len(self.elements):
            raise DirectednessError("index elements must be distinct")
        elems = set(self.elements)
        for a, b in self.relation:
            if a not in elems or b not in elems:
                raise DirectednessError(f"relation mentions unknown element in ({a}, {b})")
        for a in self.elements:
            if (a, a) not in self.relation:
                raise DirectednessError(f"not reflexive: missing ({a}, {a})")
        for a, b in self.relation:
            if a != b and (b, a) in self.relation:
                raise DirectednessError(f"not antisymmetric: both ({a},{b}) and ({b},{a})")
        for a, b in self.relation:
            for c in self.elements:
                if (b, c) in self.relation and (a, c) not in self.relation:
                    raise DirectednessError(
                        f"not transitive: ({a},{b}) and ({b},{c}) without ({a},{c})"
                    )
        for a, b in itertools.combinations(self.elements, 2):
            if not any(
                (a, c) in self.relation and (b, c) in self.relation for c in self.elements
            ):
                raise DirectednessError(f"not directed: no upper bound for ({a}, {b})")

    @classmethod
    def from_pairs(
        cls, elements: Sequence[str], pairs: Sequence[tuple[str, str]]
    ) -> "FiniteDirectedSet":
        """Build from generating pairs; reflexive-transitive closure is taken."""
        rel = {(a, a) for a in elements}
        rel.update((a, b) for a, b in pairs)
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for b2, c in list(rel):
                    if b == b2 and (a, c) not in rel:
                        rel.add((a, c))
                        changed = True
        return cls(tuple(elements), frozenset(rel))

    def geq(self, a: str, b: str) -> bool:
        return (b, a) in self.relation

    def upper_set(self, beta: str) -> list[str]:
        return [a for a in self.elements if self.geq(a, beta)]


@dataclass(frozen=True)
class FiniteNet:
    """A net: a total map from a finite directed index set into a carrier."""

    index: FiniteDirectedSet
    carrier: FiniteCarrier
    values: Mapping[str, int]  # index element -> carrier point index

    def __post_init__(self) -> None:
        missing = [a for a in self.index.elements if a not in self.values]
        if missing:
            raise ValueError(f"net is not total: missing values for {missing}")
        n = len(self.carrier)
        for a, i in self.values.items():
            if not 0 <= i < n:
                raise ValueError(f"net value for {a} is not a carrier index: {i}")

    def tail(self, beta: str) -> frozenset[int]:
        return frozenset(self.values[a] for a in self.index.upper_set(beta))

    def tails(self) -> list[frozenset[int]]:
        return [self.tail(beta) for beta in self.index.elements]

    def point(self, a: str) -> RationalVector:
        return self.carrier.points[self.values[a]]


def net_converges_finite(
    net: FiniteNet, e: RationalVector, mode: SemanticsMode
) -> bool:
    """Net convergence: every qualifying neighborhood absorbs some tail."""
    for nbhd in enumerate_restricted_neighborhoods(net.carrier, e, mode):
        if not any(tail <= nbhd for tail in net.tails()):
            return False
    return True


def net_cluster_finite(net: FiniteNet, e: RationalVector, mode: SemanticsMode) -> bool:
    """Net clustering: every qualifying neighborhood is visited frequently."""
    for nbhd in enumerate_restricted_neighborhoods(net.carrier, e, mode):
        if not all(tail & nbhd for tail in net.tails()):
            return False
    return True


def all_directed_index_sets(size: int) -> list[FiniteDirectedSet]:
    """Every directed partial order on `size` labeled elements.

    Brute force over candidate strict relations with validation; sizes
    beyond 4 get expensive and are out of scope for the exhaustive sweeps.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    if size > 4:
        raise ValueError("directed-index enumeration is bounded at 4 elements")
    elements = tuple(f"i{k}" for k in range(size))
    pairs = [(a, b) for a in elements for b in elements if a != b]
    out: list[FiniteDirectedSet] = []
    seen: set[frozenset[tuple[str, str]]] = set()
    for mask in range(1 << len(pairs)):
        rel = {(a, a) for a in elements}
        rel.update(p for i, p in enumerate(pairs) if mask >> i & 1)
        frozen = frozenset(rel)
        if frozen in seen:
            continue
        seen.add(frozen)
        try:
            out.append(FiniteDirectedSet(elements, frozen))
        except DirectednessError:
            continue
    out.sort(key=lambda d: sorted(d.relation))
    return out


@dataclass(frozen=True)
class FiniteMap:
    """A total map between two carriers, stored as codomain indices."""

    domain: FiniteCarrier
    codomain: FiniteCarrier
    values: tuple[int, ...]  # position i holds the codomain index of point i

    def __post_init__(self) -> None:
        if len(self.values) != len(self.domain):
            raise ValueError("map must assign a value to every domain point")
        n = len(self.codomain)
        for i in self.values:
            if not 0 <= i < n:
                raise ValueError(f"map value {i} is not a codomain index")

    def apply(self, i: int) -> int:
        return self.values[i]

    def image(self, subset: frozenset[int]) -> frozenset[int]:
        return frozenset(self.values[i] for i in subset)

    def preimage(self, subset: frozenset[int]) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.values) if v in subset)


def check_continuity_finite(f: FiniteMap, mode: SemanticsMode) -> bool:
    """Topological continuity on the finite model.

    For every domain point e and every qualifying neighborhood N of f(e)
    in the codomain, the preimage of N must contain a qualifying
    neighborhood of e in the domain.
    """
    witness = continuity_witness_finite(f, mode)
    return witness is None


def continuity_witness_finite(
    f: FiniteMap, mode: SemanticsMode
) -> tuple[int, frozenset[int]] | None:
    """None when continuous; otherwise (domain point index, offending codomain nbhd)."""
    for i, e in enumerate(f.domain.points):
        fe = f.codomain.points[f.apply(i)]
        dom_nbhds = enumerate_restricted_neighborhoods(f.domain, e, mode)
        for nbhd in enumerate_restricted_neighborhoods(f.codomain, fe, mode):
            pre = f.preimage(nbhd)
            if not any(m <= pre for m in dom_nbhds):
                return (i, nbhd)
    return None
