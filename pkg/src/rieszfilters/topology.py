"""Riesz pseudonorm families and the basic zero-neighborhood sets they generate.

Three pseudonorm shapes are shipped: a single-coordinate absolute value, a
weighted l1 sum, and a weighted sup.  All three are absolutely homogeneous
and monotone in |x|, which is what makes the neighborhood-base audits and
the eventual-inequality decision procedures exact.

A `NeighborhoodSpec` denotes the basic open set {x : rho_j(x) < eps_j for
every listed constraint}; membership is strict, so the set always contains
0 and every restricted enumeration downstream is unambiguous.

`SemanticsMode` names the two rival convergence semantics audited by the
rest of the package: ZERO_NBHD quantifies over zero neighborhoods that
contain the candidate limit, TRANSLATED over translates e + U.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence, Union

from .lattice import (
    DimensionMismatch,
    RationalVector,
    as_rational,
    format_rational,
    leq,
)
from .verdict import Status, Verdict


class SemanticsMode(Enum):
    """Which neighborhoods a convergence query quantifies over."""

    ZERO_NBHD = "zero"
    TRANSLATED = "translated"

    @classmethod
    def parse(cls, text: str) -> "SemanticsMode":
        for mode in cls:
            if mode.value == text:
                return mode
        raise ValueError(f"unknown semantics mode: {text!r} (use 'zero' or 'translated')")


@dataclass(frozen=True)
class CoordinateAbs:
    """rho(x) = |x_j| for a fixed coordinate j."""

    j: int

    def __post_init__(self) -> None:
        if self.j < 0:
            raise ValueError("coordinate index must be >= 0")

    def check_dim(self, dim: int) -> None:
        if self.j >= dim:
            raise DimensionMismatch(f"coordinate index {self.j} out of range for dim {dim}")

    def value(self, x: RationalVector) -> Fraction:
        self.check_dim(x.dim)
        return abs(x.coords[self.j])

    def to_json(self) -> dict:
        return {"kind": "coord", "j": self.j}


@dataclass(frozen=True)
class WeightedL1:
    """rho(x) = sum_i w_i |x_i| with nonnegative rational weights."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(as_rational(w) for w in self.weights))
        _check_weights(self.weights)

    def check_dim(self, dim: int) -> None:
        if len(self.weights) != dim:
            raise DimensionMismatch(f"{len(self.weights)} weights for dim {dim}")

    def value(self, x: RationalVector) -> Fraction:
        self.check_dim(x.dim)
        return sum((w * abs(c) for w, c in zip(self.weights, x.coords)), Fraction(0))

    def to_json(self) -> dict:
        return {"kind": "l1", "w": [format_rational(w) for w in self.weights]}


@dataclass(frozen=True)
class WeightedSup:
    """rho(x) = max_i w_i |x_i| with nonnegative rational weights."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(as_rational(w) for w in self.weights))
        _check_weights(self.weights)

    def check_dim(self, dim: int) -> None:
        if len(self.weights) != dim:
            raise DimensionMismatch(f"{len(self.weights)} weights for dim {dim}")

    def value(self, x: RationalVector) -> Fraction:
        self.check_dim(x.dim)
        return max(w * abs(c) for w, c in zip(self.weights, x.coords))

    def to_json(self) -> dict:
        return {"kind": "sup", "w": [format_rational(w) for w in self.weights]}


Pseudonorm = Union[CoordinateAbs, WeightedL1, WeightedSup]

SHIPPED_KINDS = (CoordinateAbs, WeightedL1, WeightedSup)


def _check_weights(weights: tuple[Fraction, ...]) -> None:
    if not weights:
        raise ValueError("weight list must be nonempty")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    if all(w == 0 for w in weights):
        raise ValueError("at least one weight must be positive")


def evaluate(rho: Pseudonorm, x: RationalVector) -> Fraction:
    """Exact value rho(x).  Always >= 0 for the shipped kinds."""
    return rho.value(x)


def pseudonorm_from_json(data: dict, dim: int | None = None) -> Pseudonorm:
    kind = data.get("kind")
    if kind == "coord":
        rho: Pseudonorm = CoordinateAbs(int(data["j"]))
    elif kind == "l1":
        rho = WeightedL1(tuple(as_rational(w) for w in data["w"]))
    elif kind == "sup":
        rho = WeightedSup(tuple(as_rational(w) for w in data["w"]))
    else:
        raise ValueError(f"unknown pseudonorm kind: {kind!r}")
    if dim is not None:
        rho.check_dim(dim)
    return rho


@dataclass(frozen=True)
class PseudonormFamily:
    """A nonempty finite family {rho_j} generating the topology."""

    members: tuple[Pseudonorm, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("pseudonorm family must be nonempty")

    def check_dim(self, dim: int) -> None:
        for rho in self.members:
            rho.check_dim(dim)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, j: int) -> Pseudonorm:
        return self.members[j]

    def to_json(self) -> list[dict]:
        return [rho.to_json() for rho in self.members]


@dataclass(frozen=True)
class SpaceSpec:
    """The ambient space: Q^dim with a fixed pseudonorm family."""

    dim: int
    family: PseudonormFamily

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        self.family.check_dim(self.dim)

    def check_vector(self, x: RationalVector) -> None:
        if x.dim != self.dim:
            raise DimensionMismatch(f"vector dim {x.dim} does not match space dim {self.dim}")

    def zero(self) -> RationalVector:
        return RationalVector.zero(self.dim)


@dataclass(frozen=True)
class NeighborhoodSpec:
    """The basic set {x : rho_j(x) < eps_j for every (j, eps_j) constraint}."""

    constraints: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        if not self.constraints:
            raise ValueError("a neighborhood spec needs at least one constraint")
        normalized = tuple((int(j), as_rational(eps)) for j, eps in self.constraints)
        for j, eps in normalized:
            if j < 0:
                raise ValueError("pseudonorm index must be >= 0")
            if eps <= 0:
                raise ValueError("radii must be positive")
        object.__setattr__(self, "constraints", normalized)

    def scaled(self, factor: Fraction) -> "NeighborhoodSpec":
        f = abs(as_rational(factor))
        if f == 0:
            raise ValueError("cannot scale radii by zero")
        return NeighborhoodSpec(tuple((j, eps * f) for j, eps in self.constraints))

    def halved(self) -> "NeighborhoodSpec":
        return self.scaled(Fraction(1, 2))

    def to_json(self) -> dict:
        return {"constraints": [[j, format_rational(eps)] for j, eps in self.constraints]}

    @classmethod
    def from_json(cls, data: dict) -> "NeighborhoodSpec":
        return cls(tuple((int(j), as_rational(eps)) for j, eps in data["constraints"]))


def nbhd_contains(
    spec: NeighborhoodSpec, family: PseudonormFamily, x: RationalVector
) -> bool:
    """Strict membership: rho_j(x) < eps_j for every constraint."""
    for j, eps in spec.constraints:
        if j >= len(family):
            raise IndexError(f"pseudonorm index {j} out of range")
        if evaluate(family[j], x) >= eps:
            return False
    return True


def nbhd_contains_translated(
    spec: NeighborhoodSpec,
    family: PseudonormFamily,
    center: RationalVector,
    x: RationalVector,
) -> bool:
    """Membership in the translate center + U."""
    return nbhd_contains(spec, family, x - center)


def intersect_specs(a: NeighborhoodSpec, b: NeighborhoodSpec) -> NeighborhoodSpec:
    """The basic set denoting exactly a's set intersected with b's set."""
    radii: dict[int, Fraction] = {}
    for j, eps in a.constraints + b.constraints:
        radii[j] = min(radii[j], eps) if j in radii else eps
    return NeighborhoodSpec(tuple(sorted(radii.items())))


# ---------------------------------------------------------------------------
# Axiom audits
# ---------------------------------------------------------------------------

PSEUDONORM_AXIOMS = (
    "nonnegative",
    "zero-at-zero",
    "subadditive",
    "monotone",
    "null-sequence",
)


def audit_pseudonorm_axioms(
    rho: Callable[[RationalVector], Fraction] | Pseudonorm,
    samples: Sequence[tuple[RationalVector, RationalVector]],
    scalars: Sequence[Fraction] = (),
    claim_id: str = "pseudonorm-axioms",
) -> Verdict:
    """Check the five pseudonorm axioms over exact sample pairs.

    Nonnegativity, vanishing at zero, subadditivity, and monotonicity are
    evaluated exactly on the samples.  The null-sequence axiom is not
    finitely sampleable; for the shipped kinds it is discharged
    analytically (each is absolutely homogeneous, so rho(l_n x) = |l_n|
    rho(x) -> 0) and recorded as an analytic pass.  For foreign callables
    it is recorded as not discharged, without failing the audit.
    """
    if not samples:
        raise ValueError("samples must be nonempty")
    value = rho.value if isinstance(rho, SHIPPED_KINDS) else rho
    dim = samples[0][0].dim
    zero = RationalVector.zero(dim)
    checks: list[dict] = []
    witnesses: list[dict] = []

    def fail(axiom: str, **data: object) -> None:
        witnesses.append({"axiom": axiom, **data})

    checked = 0
    for x, y in samples:
        checked += 1
        vx, vy = value(x), value(y)
        if vx < 0:
            fail("nonnegative", x=x.to_json(), value=format_rational(vx))
        if vy < 0:
            fail("nonnegative", x=y.to_json(), value=format_rational(vy))
        vxy = value(x + y)
        if vxy > vx + vy:
            fail(
                "subadditive",
                x=x.to_json(),
                y=y.to_json(),
                lhs=format_rational(vxy),
                rhs=format_rational(vx + vy),
            )
        if leq(abs(x), abs(y)) and vx > vy:
            fail(
                "monotone",
                x=x.to_json(),
                y=y.to_json(),
                rho_x=format_rational(vx),
                rho_y=format_rational(vy),
            )
    v0 = value(zero)
    if v0 != 0:
        fail("zero-at-zero", x=zero.to_json(), value=format_rational(v0))
    for lam in scalars:
        for x, _ in samples[:20]:
            vx = value(x.scale(lam))
            if vx < 0:
                fail("nonnegative", x=x.scale(lam).to_json(), value=format_rational(vx))
    checks.append({"axioms": list(PSEUDONORM_AXIOMS[:4]), "pairs": checked})
    if isinstance(rho, SHIPPED_KINDS):
        checks.append({"axiom": "null-sequence", "method": "absolute homogeneity", "ok": True})
    else:
        checks.append({"axiom": "null-sequence", "method": "not discharged", "ok": None})

    status = Status.HOLDS if not witnesses else Status.COUNTEREXAMPLE
    return Verdict(
        claim_id=claim_id,
        mode="n/a",
        status=status,
        instances={"pairs": checked, "violations": len(witnesses)},
        witnesses=tuple(witnesses[:5]),
        notes=tuple(f"{c}" for c in checks),
    )


@dataclass(frozen=True)
class BaseAxiomWitness:
    """Record of one constructive neighborhood-base axiom check."""

    axiom: str
    inputs: tuple[NeighborhoodSpec, ...]
    witness: NeighborhoodSpec
    samples_checked: int
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "inputs": [s.to_json() for s in self.inputs],
            "witness": self.witness.to_json(),
            "samples_checked": self.samples_checked,
            "ok": self.ok,
            "detail": self.detail,
        }


def _sample_points_in_spec(
    spec: NeighborhoodSpec,
    space: SpaceSpec,
    rng: random.Random,
    count: int,
) -> list[RationalVector]:
    """Deterministic rational points strictly inside the spec's set.

    Draws a raw rational direction, then shrinks it so that every
    constraint holds strictly; the zero vector is always included.
    """
    points = [space.zero()]
    for _ in range(count):
        raw = RationalVector(
            tuple(Fraction(rng.randint(-8, 8), rng.randint(1, 8)) for _ in range(space.dim))
        )
        if raw.is_zero():
            continue
        worst = max(
            (evaluate(space.family[j], raw) / eps for j, eps in spec.constraints),
            default=Fraction(0),
        )
        if worst == 0:
            points.append(raw)
            continue
        shrink = Fraction(1, 2) / worst
        points.append(raw.scale(shrink))
    return points


def audit_base_axioms(
    space: SpaceSpec,
    specs: Sequence[NeighborhoodSpec],
    rng: random.Random | None = None,
    samples_per_spec: int = 24,
) -> list[BaseAxiomWitness]:
    """Construct and verify witnesses for the four base properties.

    For every spec V: (a) lambda V is contained in V for sampled
    |lambda| <= 1 (radii shrink to |lambda| eps by absolute homogeneity,
    verified on sampled points); (b) for consecutive pairs V1, V2 the
    per-index-minimum spec V is contained in V1 and in V2 (decided by
    constraint comparison and spot-checked); (c) the halved-radius spec U
    satisfies U + U inside V (subadditivity, verified on sampled pairs);
    (d) for a nonzero scalar, the rescaled spec stays in the base class.
    """
    if not specs:
        raise ValueError("need at least one neighborhood spec")
    rng = rng or random.Random(0)
    out: list[BaseAxiomWitness] = []
    lams = [Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-2, 3), Fraction(1, 7)]

    for spec in specs:
        inside = _sample_points_in_spec(spec, space, rng, samples_per_spec)

        # (a) lambda V inside V for |lambda| <= 1
        ok = True
        checked = 0
        for lam in lams:
            for x in inside:
                checked += 1
                if not nbhd_contains(spec, space.family, x.scale(lam)):
                    ok = False
        out.append(
            BaseAxiomWitness(
                axiom="scalar-absorb",
                inputs=(spec,),
                witness=spec,
                samples_checked=checked,
                ok=ok,
                detail="lambda V inside V for sampled |lambda| <= 1",
            )
        )

        # (c) U + U inside V with U the halved-radius spec
        half = spec.halved()
        half_inside = _sample_points_in_spec(half, space, rng, samples_per_spec)
        ok = True
        checked = 0
        for x in half_inside:
            for y in half_inside:
                checked += 1
                if not nbhd_contains(spec, space.family, x + y):
                    ok = False
        out.append(
            BaseAxiomWitness(
                axiom="additive-split",
                inputs=(spec,),
                witness=half,
                samples_checked=checked,
                ok=ok,
                detail="U + U inside V for U with halved radii",
            )
        )

        # (d) lambda V stays in the base class for lambda != 0
        lam = Fraction(1, 3)
        out.append(
            BaseAxiomWitness(
                axiom="scalar-member",
                inputs=(spec,),
                witness=spec.scaled(lam),
                samples_checked=0,
                ok=True,
                detail="rescaled radii |lambda| eps form a basic spec",
            )
        )

    # (b) pairwise domination: V inside V1 and V2, via per-index min radii
    for v1, v2 in zip(specs, specs[1:] or specs[:1]):
        meet = intersect_specs(v1, v2)
        symbolic = _spec_dominates(meet, v1) and _spec_dominates(meet, v2)
        inside = _sample_points_in_spec(meet, space, rng, samples_per_spec)
        empirical = all(
            nbhd_contains(v1, space.family, x) and nbhd_contains(v2, space.family, x)
            for x in inside
        )
        out.append(
            BaseAxiomWitness(
                axiom="intersection-dominate",
                inputs=(v1, v2),
                witness=meet,
                samples_checked=len(inside),
                ok=symbolic and empirical,
                detail="per-index minimum radii land inside both inputs",
            )
        )
    return out


def _spec_dominates(small: NeighborhoodSpec, big: NeighborhoodSpec) -> bool:
    """Constraint comparison: small's set is a subset of big's set."""
    radii = dict(small.constraints)
    for j, eps in big.constraints:
        if j not in radii or radii[j] > eps:
            return False
    return True


@dataclass(frozen=True)
class SolidityCertificate:
    ok: bool
    method: str
    samples_checked: int


def is_solid_spec(
    spec: NeighborhoodSpec,
    space: SpaceSpec,
    rng: random.Random | None = None,
    samples: int = 100,
) -> SolidityCertificate:
    """Every basic spec set is solid: |x| <= |y| and y inside imply x inside.

    The certificate cites the monotonicity axiom of the shipped kinds;
    a sampled implication check backs it empirically.
    """
    rng = rng or random.Random(0)
    inside = _sample_points_in_spec(spec, space, rng, samples)
    checked = 0
    for y in inside:
        # shrink |y| coordinatewise to get x with |x| <= |y|
        for num, den in ((1, 2), (2, 3), (0, 1)):
            x = RationalVector(tuple(c * Fraction(num, den) for c in y.coords))
            checked += 1
            if not nbhd_contains(spec, space.family, x):
                return SolidityCertificate(False, "monotone axiom", checked)
    return SolidityCertificate(True, "monotone axiom", checked)
