"""Exact-rational vector-lattice arithmetic on Q^n with coordinatewise order.

Scalars are `fractions.Fraction` throughout: every value stays in lowest
terms with a positive denominator, and no operation ever rounds.  Vectors
are immutable, hashable, and carry a fixed dimension, so they are safe to
share across threads and to use as set elements or dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


class DimensionMismatch(ValueError):
    """Raised when two vectors (or a vector and a space) disagree on dimension."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q", omitting the denominator when it is 1."""
    return str(value)


@dataclass(frozen=True)
class RationalVector:
    """An element of Q^n.  All arithmetic is exact."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coords:
            raise ValueError("vectors must have dimension >= 1")
        if not all(isinstance(c, Fraction) for c in self.coords):
            object.__setattr__(
                self, "coords", tuple(as_rational(c) for c in self.coords)
            )

    @classmethod
    def of(cls, *coords: RationalLike) -> "RationalVector":
        return cls(tuple(as_rational(c) for c in coords))

    @classmethod
    def from_iter(cls, coords: Iterable[RationalLike]) -> "RationalVector":
        return cls(tuple(as_rational(c) for c in coords))

    @classmethod
    def zero(cls, dim: int) -> "RationalVector":
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        return cls((Fraction(0),) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check_dim(self, other: "RationalVector") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"dimension mismatch: {self.dim} vs {other.dim}"
            )

    def __add__(self, other: "RationalVector") -> "RationalVector":
        self._check_dim(other)
        return RationalVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RationalVector") -> "RationalVector":
        self._check_dim(other)
        return RationalVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RationalVector":
        return RationalVector(tuple(-a for a in self.coords))

    def scale(self, scalar: RationalLike) -> "RationalVector":
        s = as_rational(scalar)
        return RationalVector(tuple(s * a for a in self.coords))

    def __abs__(self) -> "RationalVector":
        return RationalVector(tuple(a if a >= 0 else -a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coords]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "RationalVector":
        return cls.from_iter(data)

    def __str__(self) -> str:
        return "[" + ", ".join(format_rational(c) for c in self.coords) + "]"


def sup(x: RationalVector, y: RationalVector) -> RationalVector:
    """Coordinatewise supremum x v y."""
    x._check_dim(y)
    return RationalVector(tuple(max(a, b) for a, b in zip(x.coords, y.coords)))


def inf(x: RationalVector, y: RationalVector) -> RationalVector:
    """Coordinatewise infimum x ^ y."""
    x._check_dim(y)
    return RationalVector(tuple(min(a, b) for a, b in zip(x.coords, y.coords)))


def pos(x: RationalVector) -> RationalVector:
    """Positive part: x v 0."""
    return RationalVector(tuple(max(a, Fraction(0)) for a in x.coords))


def neg(x: RationalVector) -> RationalVector:
    """Negative part: (-x) v 0.  Not negation; always >= 0."""
    return RationalVector(tuple(max(-a, Fraction(0)) for a in x.coords))


def leq(x: RationalVector, y: RationalVector) -> bool:
    """Coordinatewise partial order: x <= y in every coordinate."""
    x._check_dim(y)
    return all(a <= b for a, b in zip(x.coords, y.coords))


def is_disjoint(x: RationalVector, y: RationalVector) -> bool:
    """True iff |x| ^ |y| = 0, i.e. the supports never overlap."""
    x._check_dim(y)
    return all(min(abs(a), abs(b)) == 0 for a, b in zip(x.coords, y.coords))
