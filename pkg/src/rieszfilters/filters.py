"""Filters on finite carriers: constructions, membership, and convergence.

On a finite carrier every filter is principal, so each filter value
normalizes to an up-set up(S) identified by its nonempty minimal member S
(`minset`).  The constructions keep their definitional semantics:

* generate(base)          member(T) iff some base element is inside T
* join_filter(F1, F2)     the family {F1 union F2}; as a set family this
                          is exactly the intersection of the two filters
* meet_filter(F1, F2)     the family of nonempty pairwise intersections;
                          only a filter when the minimal members overlap
* pushforward(f, F)       member(B) iff the preimage of B is a member
* neighborhood_filter(e)  up-closure of the qualifying neighborhoods of e

Degenerate constructions raise `ConstructionError` carrying a witness for
the violated filter axiom instead of silently repairing the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .lattice import RationalVector
from .finite import (
    FiniteCarrier,
    FiniteMap,
    FiniteNet,
    enumerate_restricted_neighborhoods,
    minimal_restricted_neighborhood,
)
from .topology import SemanticsMode


class ConstructionError(ValueError):
    """A filter construction violated a filter or base axiom."""

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class FilterBase:
    """An explicit finite filter base over a carrier."""

    carrier: FiniteCarrier
    elements: tuple[frozenset[int], ...]

    def validate(self) -> None:
        """Check the three base properties; raise with a witness on failure."""
        if not self.elements:
            raise ConstructionError("a filter base must be nonempty")
        for b in self.elements:
            if not b:
                raise ConstructionError("base elements must be nonempty", witness=b)
        for b1 in self.elements:
            for b2 in self.elements:
                meet = b1 & b2
                if not any(b <= meet for b in self.elements):
                    raise ConstructionError(
                        "no base element inside a pairwise intersection",
                        witness=(b1, b2),
                    )

    def is_valid(self) -> bool:
        try:
            self.validate()
            return True
        except ConstructionError:
            return False


def validate_base(base: FilterBase) -> tuple[bool, object]:
    """(True, None) when the base axioms hold, else (False, witness)."""
    try:
        base.validate()
        return True, None
    except ConstructionError as exc:
        return False, exc.witness if exc.witness is not None else str(exc)


@dataclass(frozen=True)
class PrincipalFilter:
    """up(minset): all supersets of a fixed nonempty subset of the carrier."""

    carrier: FiniteCarrier
    minset: frozenset[int]

    def __post_init__(self) -> None:
        if not self.minset:
            raise ConstructionError("a filter never contains the empty set")
        n = len(self.carrier)
        if any(not 0 <= i < n for i in self.minset):
            raise ValueError("minset indices must address carrier points")

    def member(self, subset: frozenset[int]) -> bool:
        return self.minset <= subset

    def member_family(self) -> Iterator[frozenset[int]]:
        """All members, i.e. all supersets of the minset inside the carrier."""
        rest = sorted(self.carrier.full_set() - self.minset)
        for mask in range(1 << len(rest)):
            extra = frozenset(rest[i] for i in range(len(rest)) if mask >> i & 1)
            yield self.minset | extra

    def points(self) -> list[RationalVector]:
        return self.carrier.subset_points(self.minset)


def generate(base: FilterBase) -> PrincipalFilter:
    """The filter generated by a valid base.

    On a finite carrier the generated filter is principal with minimal
    member equal to the intersection of all base elements: directedness of
    the base makes that intersection a member, and it is clearly minimal.
    """
    base.validate()
    minset = frozenset.intersection(*base.elements)
    if not minset:
        raise ConstructionError(
            "base generates a family containing the empty set", witness=base.elements
        )
    return PrincipalFilter(base.carrier, minset)


def principal_reduce(filt: PrincipalFilter) -> frozenset[int]:
    """The minimal member: member(T) holds iff it contains this set."""
    return filt.minset


def join_filter(f1: PrincipalFilter, f2: PrincipalFilter) -> PrincipalFilter:
    """The family {F1 union F2 : F1 member, F2 member}.

    As a set family this equals up(S1 union S2), and membership satisfies
    member(T) iff f1.member(T) and f2.member(T).
    """
    if f1.carrier is not f2.carrier and f1.carrier != f2.carrier:
        raise ValueError("join requires filters on the same carrier")
    return PrincipalFilter(f1.carrier, f1.minset | f2.minset)


def meet_filter(f1: PrincipalFilter, f2: PrincipalFilter) -> PrincipalFilter:
    """The family of nonempty pairwise intersections {F1 cap F2 != {}}.

    This class is a filter exactly when the minimal members intersect;
    otherwise closure under finite intersections fails and a
    ConstructionError with the witnessing member pair is raised.
    """
    if f1.carrier is not f2.carrier and f1.carrier != f2.carrier:
        raise ValueError("meet requires filters on the same carrier")
    minset = f1.minset & f2.minset
    if not minset:
        raise ConstructionError(
            "meet family is not closed under finite intersections: "
            "the minimal members are disjoint",
            witness=(f1.minset, f2.minset),
        )
    return PrincipalFilter(f1.carrier, minset)


def pushforward(f: FiniteMap, filt: PrincipalFilter) -> PrincipalFilter:
    """member(B) iff the preimage of B is a member; principal: up(f(minset))."""
    if filt.carrier != f.domain:
        raise ValueError("filter lives on a different carrier than the map domain")
    return PrincipalFilter(f.codomain, f.image(filt.minset))


def neighborhood_filter(
    carrier: FiniteCarrier, e: RationalVector, mode: SemanticsMode
) -> PrincipalFilter:
    """The up-closed neighborhood filter of e, restricted to the carrier.

    Members are the restricted sets that contain some qualifying
    restricted neighborhood of e; on a finite carrier the qualifying
    neighborhoods have a least element, so the filter is principal.
    """
    minimal = minimal_restricted_neighborhood(carrier, e, mode)
    if not minimal:
        raise ConstructionError(
            "no nonempty restricted neighborhood: the center is isolated "
            "from the carrier",
            witness=e.to_json(),
        )
    return PrincipalFilter(carrier, minimal)


def converges(filt: PrincipalFilter, e: RationalVector, mode: SemanticsMode) -> bool:
    """Every qualifying restricted neighborhood of e belongs to the filter."""
    return converges_finite(filt, e, mode)


def converges_finite(
    filt: PrincipalFilter, e: RationalVector, mode: SemanticsMode
) -> bool:
    """Convergence by direct quantification over the enumerated neighborhoods."""
    for nbhd in enumerate_restricted_neighborhoods(filt.carrier, e, mode):
        if not filt.member(nbhd):
            return False
    return True


def convergence_witness(
    filt: PrincipalFilter, e: RationalVector, mode: SemanticsMode
):
    """The first qualifying restricted neighborhood missing from the filter."""
    from .finite import restricted_neighborhood_table

    for entry in restricted_neighborhood_table(filt.carrier, e, mode):
        if not filt.member(entry.members):
            return entry
    return None


def is_cluster_point(
    filt: PrincipalFilter, e: RationalVector, mode: SemanticsMode
) -> bool:
    """Every qualifying neighborhood of e meets every member of the filter."""
    return cluster_finite(filt, e, mode)


def cluster_finite(
    filt: PrincipalFilter, e: RationalVector, mode: SemanticsMode
) -> bool:
    """Clustering via base reduction: it meets every member iff it meets the minset."""
    for nbhd in enumerate_restricted_neighborhoods(filt.carrier, e, mode):
        if not nbhd & filt.minset:
            return False
    return True


def is_subfilter(f1: PrincipalFilter, f2: PrincipalFilter) -> bool:
    """True iff every member of f1 is a member of f2 (f2 is finer)."""
    if f1.carrier != f2.carrier:
        raise ValueError("subfilter comparison requires a shared carrier")
    return f2.minset <= f1.minset


def finer_filter_witness(
    filt: PrincipalFilter, e: RationalVector, mode: SemanticsMode
) -> PrincipalFilter:
    """A finer filter converging to e, built from {U cap F} when e clusters.

    The base {U cap F : U qualifying neighborhood, F member} reduces to
    the single set N_min cap minset; when e is not a cluster point the
    base contains an empty intersection and a ConstructionError carrying
    the witnessing (neighborhood, member) pair is raised.
    """
    minimal = minimal_restricted_neighborhood(filt.carrier, e, mode)
    core = minimal & filt.minset
    if not core:
        raise ConstructionError(
            "the candidate base contains an empty intersection: "
            "e is not a cluster point",
            witness=(minimal, filt.minset),
        )
    return PrincipalFilter(filt.carrier, core)


def all_principal_filters(
    carrier: FiniteCarrier, bound: int = 12
) -> Iterator[PrincipalFilter]:
    """Every principal filter on the carrier: up(S) for each nonempty S."""
    n = len(carrier)
    if n > bound:
        raise ValueError(f"carrier has {n} points, above the exhaustive bound {bound}")
    for mask in range(1, 1 << n):
        yield PrincipalFilter(carrier, frozenset(i for i in range(n) if mask >> i & 1))


def associated_filter_finite(net: FiniteNet) -> PrincipalFilter:
    """The filter generated by the net's tails.

    Directedness of the index (validated at construction) makes the tails
    a filter base; the base is re-validated here anyway.
    """
    base = FilterBase(net.carrier, tuple(dict.fromkeys(net.tails())))
    return generate(base)
