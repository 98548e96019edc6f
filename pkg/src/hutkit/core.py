"""Exact geometric primitives: rational scalars, points, boxes, point sets.

All finite coordinates are `fractions.Fraction` values, so every predicate in
the package is decided exactly.  The floats ``+inf``/``-inf`` are admitted
only as box bounds (orthants are boxes with one infinite side per dimension);
comparisons between Fraction and infinite floats are exact in CPython.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf, lcm
from typing import Iterable, Optional, Union

from .errors import ContractViolation, FormatError, InvalidParameter

Scalar = Fraction
Bound = Union[Fraction, float]  # float values restricted to +-inf

POS_INF: float = inf
NEG_INF: float = -inf


def is_finite(x: Bound) -> bool:
    return isinstance(x, Fraction)


def parse_scalar(text: str, allow_inf: bool = False) -> Bound:
    """Parse the canonical encoding: '-3/4', '7', or '+inf'/'-inf' for bounds."""
    s = text.strip().replace("−", "-")
    if s in ("+inf", "inf"):
        if not allow_inf:
            raise FormatError("infinite value not allowed here")
        return POS_INF
    if s == "-inf":
        if not allow_inf:
            raise FormatError("infinite value not allowed here")
        return NEG_INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scalar {text!r}") from exc


def format_scalar(x: Bound) -> str:
    if isinstance(x, float):
        if x == POS_INF:
            return "+inf"
        if x == NEG_INF:
            return "-inf"
        raise FormatError(f"non-infinite float {x!r} is not a valid scalar")
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Point:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not all(isinstance(c, Fraction) for c in self.coords):
            raise ContractViolation("point coordinates must be finite rationals")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Point") -> "Point":
        if self.dim != other.dim:
            raise ContractViolation("dimension mismatch in point addition")
        return Point(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Point") -> "Point":
        if self.dim != other.dim:
            raise ContractViolation("dimension mismatch in point subtraction")
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Point":
        return Point(tuple(-a for a in self.coords))

    def scale(self, factor: Fraction) -> "Point":
        return Point(tuple(a * factor for a in self.coords))


def pt(*coords) -> Point:
    """Convenience constructor accepting ints, strings, or Fractions."""
    return Point(tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class PointSet:
    """Ordered list of points of a common dimension; duplicates permitted."""

    dim: int
    points: tuple[Point, ...]

    def __post_init__(self):
        for p in self.points:
            if p.dim != self.dim:
                raise ContractViolation(
                    f"point of dim {p.dim} in point set of dim {self.dim}"
                )

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def translate(self, v: Point) -> "PointSet":
        return PointSet(self.dim, tuple(p + v for p in self.points))

    @staticmethod
    def of(points: Iterable[Point], dim: Optional[int] = None) -> "PointSet":
        pts = tuple(points)
        if dim is None:
            if not pts:
                raise ContractViolation("empty point set needs an explicit dim")
            dim = pts[0].dim
        return PointSet(dim, pts)


@dataclass(frozen=True)
class Box:
    """Closed axis-aligned box; per-dimension bounds may be infinite."""

    lo: tuple[Bound, ...]
    hi: tuple[Bound, ...]

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise ContractViolation("bound tuples of different lengths")
        for a, b in zip(self.lo, self.hi):
            for v in (a, b):
                if isinstance(v, float) and v not in (POS_INF, NEG_INF):
                    raise ContractViolation("float box bound must be +-inf")
            if isinstance(a, float) and a == POS_INF:
                raise ContractViolation("lower bound cannot be +inf")
            if isinstance(b, float) and b == NEG_INF:
                raise ContractViolation("upper bound cannot be -inf")
            if a > b:
                raise ContractViolation(f"empty bound interval [{a}, {b}]")

    @property
    def dim(self) -> int:
        return len(self.lo)

    def is_finite(self) -> bool:
        return all(is_finite(a) for a in self.lo) and all(
            is_finite(b) for b in self.hi
        )

    def is_orthant(self) -> bool:
        """Some infinite bound in every dimension (at most one finite side);
        half-spaces and slabs of full axes qualify."""
        return all(
            not (is_finite(a) and is_finite(b)) for a, b in zip(self.lo, self.hi)
        )

    def side_lengths(self) -> tuple[Fraction, ...]:
        if not self.is_finite():
            raise ContractViolation("side lengths of an unbounded box")
        return tuple(b - a for a, b in zip(self.lo, self.hi))

    def is_cube(self) -> bool:
        sides = self.side_lengths()
        return len(set(sides)) <= 1

    def volume(self) -> Fraction:
        v = Fraction(1)
        for s in self.side_lengths():
            v *= s
        return v

    def translate(self, v: Point) -> "Box":
        if v.dim != self.dim:
            raise ContractViolation("dimension mismatch in box translation")
        lo = tuple(a if not is_finite(a) else a + c for a, c in zip(self.lo, v.coords))
        hi = tuple(b if not is_finite(b) else b + c for b, c in zip(self.hi, v.coords))
        return Box(lo, hi)


def box(*intervals) -> Box:
    """Build a Box from (lo, hi) pairs; values may be ints/strings/inf floats."""
    lo = []
    hi = []
    for a, b in intervals:
        lo.append(a if isinstance(a, float) else Fraction(a))
        hi.append(b if isinstance(b, float) else Fraction(b))
    return Box(tuple(lo), tuple(hi))


def linf_distance(p: Point, q: Point) -> Fraction:
    """Exact L-infinity distance between two points."""
    if p.dim != q.dim:
        raise ContractViolation("dimension mismatch in linf_distance")
    return max(abs(a - b) for a, b in zip(p.coords, q.coords))


def box_contains(b: Box, p: Point) -> bool:
    """Closed membership; infinite bounds are always satisfied on their side."""
    if b.dim != p.dim:
        raise ContractViolation("dimension mismatch in box_contains")
    return all(lo <= c <= hi for lo, c, hi in zip(b.lo, p.coords, b.hi))


def minkowski_cube(q: Point, delta: Fraction) -> Box:
    """The closed cube of L-infinity radius delta centered at q."""
    if delta <= 0:
        raise InvalidParameter("minkowski_cube needs delta > 0")
    return Box(
        tuple(c - delta for c in q.coords),
        tuple(c + delta for c in q.coords),
    )


def box_intersect(a: Box, b: Box) -> Optional[Box]:
    if a.dim != b.dim:
        raise ContractViolation("dimension mismatch in box_intersect")
    lo = tuple(max(x, y) for x, y in zip(a.lo, b.lo))
    hi = tuple(min(x, y) for x, y in zip(a.hi, b.hi))
    if any(x > y for x, y in zip(lo, hi)):
        return None
    return Box(lo, hi)


def common_denominator_scale(values: Iterable[Fraction]) -> int:
    """Smallest positive integer L so that L*v is an integer for all v."""
    return lcm_all(v.denominator for v in values)


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out
