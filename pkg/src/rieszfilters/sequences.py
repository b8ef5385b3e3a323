"""Infinite model: sequences in Q^n polynomial in 1/k, decided exactly.

With x_k[i] = sum_t c_t (1/k)^t every membership predicate used by the
convergence machinery is a sign condition on a univariate polynomial as
t -> 0+, so it is eventually constant with a computable threshold.  The
kernel is `eventual_sign`: the sign of the lowest-order nonzero
coefficient, plus a conservative index k0 past which the sign is locked
in (probed by direct evaluation in the tests, never trusted blindly).

Two independently implemented convergence paths are exposed:

* `seq_converges` evaluates each pseudonorm on the exact limit vector
  (the constant coefficients) and compares rational numbers.
* `filter_converges_seq` quantifies over neighborhoods: it resolves each
  |coordinate polynomial| to a signed polynomial via `eventual_sign`,
  assembles the pseudonorm expression, and closes the quantifier over all
  admissible radii through a sign analysis of the resulting polynomial.

The theorem suite asserts the two paths agree on every instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import RationalVector, as_rational, format_rational
from .topology import (
    CoordinateAbs,
    NeighborhoodSpec,
    Pseudonorm,
    SemanticsMode,
    SpaceSpec,
    WeightedL1,
    WeightedSup,
    evaluate,
)


class UnsupportedQueryError(ValueError):
    """Membership asked for a set class the tail backend cannot decide."""


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Q, constant coefficient first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (Fraction(0),)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, c: Fraction) -> "Poly":
        return cls((as_rational(c),))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def scale(self, s: Fraction) -> "Poly":
        return Poly(tuple(as_rational(s) * c for c in self.coeffs))

    def shift(self, c: Fraction) -> "Poly":
        """Add a constant."""
        return self + Poly.constant(c)

    def eval(self, t: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_at_index(self, k: int) -> Fraction:
        return self.eval(Fraction(1, k))


def eventual_sign(p: Poly) -> tuple[int, int]:
    """Sign of p(t) as t -> 0+ and a threshold index.

    Returns (sign, k0) with sign in {-1, 0, +1}; the sign of p(1/k) equals
    `sign` for every k >= k0.  Zero means p is identically zero.  The
    threshold comes from the coefficient bound |tail| <= t^(m+1) * sum of
    |higher coefficients| valid for t < 1.
    """
    low = None
    for idx, c in enumerate(p.coeffs):
        if c != 0:
            low = idx
            break
    if low is None:
        return 0, 1
    lead = p.coeffs[low]
    rest = sum(abs(c) for c in p.coeffs[low + 1 :])
    if rest == 0:
        return (1 if lead > 0 else -1), 1
    k0 = max(2, math.floor(rest / abs(lead)) + 1)
    return (1 if lead > 0 else -1), k0


@dataclass(frozen=True)
class EventualVerdict:
    """Decision "eventually true/false from index k0 on"."""

    truth: bool
    threshold: int

    def to_json(self) -> dict:
        return {"eventually": self.truth, "threshold": self.threshold}


@dataclass(frozen=True)
class PolySequence:
    """k |-> vector of per-coordinate polynomials evaluated at 1/k, k >= 1."""

    polys: tuple[Poly, ...]

    MAX_DEGREE = 4

    def __post_init__(self) -> None:
        if not self.polys:
            raise ValueError("a sequence needs at least one coordinate")
        for p in self.polys:
            if len(p.coeffs) - 1 > self.MAX_DEGREE:
                raise ValueError(f"coordinate degree above the bound {self.MAX_DEGREE}")

    @property
    def dim(self) -> int:
        return len(self.polys)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Sequence[object]]) -> "PolySequence":
        return cls(tuple(Poly(tuple(as_rational(c) for c in row)) for row in coeffs))

    @classmethod
    def constant(cls, vec: RationalVector) -> "PolySequence":
        return cls(tuple(Poly.constant(c) for c in vec.coords))

    def value_at(self, k: int) -> RationalVector:
        if k < 1:
            raise ValueError("indices start at 1")
        return RationalVector(tuple(p.eval_at_index(k) for p in self.polys))

    def limit_vector(self) -> RationalVector:
        """Exact limit: the vector of constant coefficients."""
        return RationalVector(tuple(p.constant_term for p in self.polys))

    def minus(self, vec: RationalVector) -> "PolySequence":
        if vec.dim != self.dim:
            raise ValueError("dimension mismatch")
        return PolySequence(
            tuple(p.shift(-c) for p, c in zip(self.polys, vec.coords))
        )

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "coeffs": [[format_rational(c) for c in p.coeffs] for p in self.polys],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolySequence":
        seq = cls.from_coeffs(data["coeffs"])
        if "dim" in data and int(data["dim"]) != seq.dim:
            raise ValueError("declared dim does not match coefficient rows")
        return seq


def resolve_abs(p: Poly) -> tuple[Poly, int]:
    """A polynomial equal to |p(1/k)| for all k >= the returned threshold."""
    sign, k0 = eventual_sign(p)
    if sign < 0:
        return -p, k0
    if sign == 0:
        return Poly.constant(Fraction(0)), 1
    return p, k0


def _pseudonorm_terms(
    rho: Pseudonorm, polys: Sequence[Poly]
) -> tuple[list[tuple[Poly, int]], bool]:
    """Signed-polynomial form of rho applied to a polynomial vector.

    Returns (terms, is_sup).  For sup-type pseudonorms each term must stay
    below the radius separately; otherwise the terms sum to the value.
    """
    if isinstance(rho, CoordinateAbs):
        r, k0 = resolve_abs(polys[rho.j])
        return [(r, k0)], False
    if isinstance(rho, WeightedL1):
        total = Poly.constant(Fraction(0))
        k_max = 1
        for w, p in zip(rho.weights, polys):
            r, k0 = resolve_abs(p)
            total = total + r.scale(w)
            k_max = max(k_max, k0)
        return [(total, k_max)], False
    if isinstance(rho, WeightedSup):
        terms = []
        for w, p in zip(rho.weights, polys):
            r, k0 = resolve_abs(p)
            terms.append((r.scale(w), k0))
        return terms, True
    raise UnsupportedQueryError(f"unsupported pseudonorm kind: {type(rho).__name__}")


def _eventually_below(term: Poly, radius: Fraction, k_valid: int) -> EventualVerdict:
    """Decide term(1/k) < radius eventually, given term is valid past k_valid."""
    sign, k0 = eventual_sign(Poly.constant(radius) - term)
    if sign > 0:
        return EventualVerdict(True, max(k0, k_valid))
    return EventualVerdict(False, max(k0, k_valid))


def eventually_in_nbhd(
    seq: PolySequence,
    center: RationalVector,
    spec: NeighborhoodSpec,
    mode: SemanticsMode,
    space: SpaceSpec,
) -> EventualVerdict:
    """Decide "x_k lies in the qualifying set eventually" for one basic spec.

    ZERO_NBHD tests x_k in U itself; TRANSLATED tests x_k in center + U,
    i.e. the constraints apply to x_k - center.  The verdict's threshold
    is the maximum over the per-constraint thresholds (truth) or the
    first falsifying constraint's threshold.
    """
    space.check_vector(center)
    if seq.dim != space.dim:
        raise ValueError("sequence dimension does not match the space")
    polys = (
        seq.polys
        if mode is SemanticsMode.ZERO_NBHD
        else seq.minus(center).polys
    )
    threshold = 1
    for j, eps in spec.constraints:
        rho = space.family[j]
        terms, _ = _pseudonorm_terms(rho, polys)
        for term, k_valid in terms:
            verdict = _eventually_below(term, eps, k_valid)
            if not verdict.truth:
                return verdict
            threshold = max(threshold, verdict.threshold)
    return EventualVerdict(True, threshold)


def seq_converges(
    seq: PolySequence, e: RationalVector, space: SpaceSpec, mode: SemanticsMode
) -> bool:
    """Convergence decided on the exact limit vector.

    TRANSLATED: rho_j(x_k - e) -> 0 for every j, which holds iff every
    rho_j vanishes on the limit of x_k - e.  ZERO_NBHD: every basic set
    containing e absorbs a tail, which holds iff the limit of rho_j(x_k)
    stays at or below rho_j(e) for every j (radii beyond rho_j(e) are
    exactly the admissible ones).
    """
    space.check_vector(e)
    if mode is SemanticsMode.TRANSLATED:
        limit = seq.minus(e).limit_vector()
        return all(evaluate(rho, limit) == 0 for rho in space.family.members)
    limit = seq.limit_vector()
    return all(
        evaluate(rho, limit) <= evaluate(rho, e) for rho in space.family.members
    )


def _admissibility_bound(
    rho: Pseudonorm, e: RationalVector, mode: SemanticsMode
) -> Fraction:
    """Infimum of the admissible radii for one pseudonorm constraint."""
    if mode is SemanticsMode.ZERO_NBHD:
        return evaluate(rho, e)
    return Fraction(0)


def filter_converges_seq(
    seq: PolySequence, e: RationalVector, space: SpaceSpec, mode: SemanticsMode
) -> bool:
    """Convergence of the associated tail filter, by neighborhood quantification.

    For each pseudonorm the membership constraint is "resolved expression
    < eps eventually" and must hold for every admissible eps (eps above
    rho_j(e) for ZERO_NBHD, above 0 for TRANSLATED).  Writing d for the
    resolved expression minus the admissibility bound, the quantified
    condition holds iff d is eventually nonpositive or tends to zero,
    decided by `eventual_sign`.
    """
    space.check_vector(e)
    polys = seq.polys if mode is SemanticsMode.ZERO_NBHD else seq.minus(e).polys
    for rho in space.family.members:
        bound = _admissibility_bound(rho, e, mode)
        terms, _ = _pseudonorm_terms(rho, polys)
        for term, _k in terms:
            d = term - Poly.constant(bound)
            sign, _ = eventual_sign(d)
            if sign > 0 and d.constant_term != 0:
                return False
    return True


def divergence_radius(
    seq: PolySequence, e: RationalVector, space: SpaceSpec, mode: SemanticsMode
) -> tuple[int, Fraction] | None:
    """A witnessing (pseudonorm index, radius) when the filter diverges.

    The returned radius is admissible for `e` yet the sequence is not
    eventually inside the corresponding basic set, replayable through
    `eventually_in_nbhd`.
    """
    polys = seq.polys if mode is SemanticsMode.ZERO_NBHD else seq.minus(e).polys
    for j, rho in enumerate(space.family.members):
        bound = _admissibility_bound(rho, e, mode)
        terms, _ = _pseudonorm_terms(rho, polys)
        for term, _k in terms:
            d = term - Poly.constant(bound)
            sign, _ = eventual_sign(d)
            if sign > 0 and d.constant_term != 0:
                # with a positive eventual sign a nonzero constant term is
                # positive, so halfway to the limit stays admissible
                return j, bound + d.constant_term / 2
    return None


def cluster_point_seq(
    seq: PolySequence, e: RationalVector, space: SpaceSpec, mode: SemanticsMode
) -> bool:
    """Cluster test: every qualifying set is visited frequently.

    Membership predicates of polynomial sequences are eventually constant,
    so "frequently" coincides with "eventually" on this class; the check
    runs the per-radius analysis with that reduction.  Valid for this
    sequence class only.
    """
    return filter_converges_seq(seq, e, space, mode)


# ---------------------------------------------------------------------------
# Tail filter with decidable membership queries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """One axis interval with optional open endpoints; None means unbounded."""

    lo: Fraction | None = None
    hi: Fraction | None = None
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self) -> None:
        lo = None if self.lo is None else as_rational(self.lo)
        hi = None if self.hi is None else as_rational(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)


@dataclass(frozen=True)
class Box:
    """Axis-aligned rational box, one interval per coordinate."""

    intervals: tuple[Interval, ...]


@dataclass(frozen=True)
class ZeroNbhdSet:
    """Query: the basic zero-neighborhood set of a spec."""

    spec: NeighborhoodSpec


@dataclass(frozen=True)
class TranslatedNbhdSet:
    """Query: center + U for a basic spec U."""

    center: RationalVector
    spec: NeighborhoodSpec


@dataclass(frozen=True)
class BoxUnionSet:
    """Query: a finite union of axis-aligned boxes; empty union is the empty set."""

    boxes: tuple[Box, ...]


def _eventually_in_interval(p: Poly, iv: Interval) -> bool:
    # each bound asks for an eventual sign of a difference polynomial;
    # sign 0 means the difference is identically zero, which passes only
    # a closed bound
    if iv.lo is not None:
        sign, _ = eventual_sign(p - Poly.constant(iv.lo))
        if sign < 0 or (sign == 0 and iv.lo_open):
            return False
    if iv.hi is not None:
        sign, _ = eventual_sign(Poly.constant(iv.hi) - p)
        if sign < 0 or (sign == 0 and iv.hi_open):
            return False
    return True


def _eventually_in_box(seq: PolySequence, box: Box) -> bool:
    if len(box.intervals) != seq.dim:
        raise UnsupportedQueryError("box dimension does not match the sequence")
    return all(_eventually_in_interval(p, iv) for p, iv in zip(seq.polys, box.intervals))


@dataclass(frozen=True)
class SequenceTailFilter:
    """Elementary filter of a sequence: sets that contain some tail.

    Membership is decidable for basic zero-neighborhood sets, translated
    basic sets, and finite unions of axis-aligned rational boxes; every
    such predicate is eventually constant for polynomial sequences, so
    member(S) iff x_k lies in S eventually.
    """

    seq: PolySequence
    space: SpaceSpec

    def __post_init__(self) -> None:
        if self.seq.dim != self.space.dim:
            raise ValueError("sequence dimension does not match the space")

    def member(self, query: object) -> bool:
        if isinstance(query, ZeroNbhdSet):
            return eventually_in_nbhd(
                self.seq, self.space.zero(), query.spec, SemanticsMode.ZERO_NBHD, self.space
            ).truth
        if isinstance(query, TranslatedNbhdSet):
            return eventually_in_nbhd(
                self.seq, query.center, query.spec, SemanticsMode.TRANSLATED, self.space
            ).truth
        if isinstance(query, BoxUnionSet):
            # eventually in the union iff eventually in one part: the
            # per-box predicates are eventually constant, so no oscillation
            # between parts can occur
            return any(_eventually_in_box(self.seq, box) for box in query.boxes)
        raise UnsupportedQueryError(
            f"membership undecidable for query of type {type(query).__name__}"
        )


def associated_filter_seq(seq: PolySequence, space: SpaceSpec) -> SequenceTailFilter:
    """The elementary filter generated by the sequence's tails."""
    return SequenceTailFilter(seq, space)
