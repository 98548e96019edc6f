"""Plain (no-translation) L-infinity Hausdorff distances and HutInstance."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import Box, PointSet, linf_distance
from .errors import ContractViolation, FormatError, InvalidParameter, UndefinedDistance
from .rangetree import rt_build, rt_query_witness

DIRECTED = "directed"
UNDIRECTED = "undirected"
CONTINUOUS = "continuous"
DISCRETE = "discrete"


@dataclass(frozen=True)
class HutInstance:
    """A Hausdorff-under-translation instance, continuous or discrete."""

    P: PointSet
    Q: PointSet
    variant: str = DIRECTED
    mode: str = CONTINUOUS
    delta: Optional[Fraction] = None
    T: Optional[PointSet] = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.variant not in (DIRECTED, UNDIRECTED):
            raise FormatError(f"unknown variant {self.variant!r}")
        if self.mode not in (CONTINUOUS, DISCRETE):
            raise FormatError(f"unknown mode {self.mode!r}")
        if self.P.dim != self.Q.dim:
            raise ContractViolation("P and Q dimensions differ")
        if self.delta is not None and self.delta <= 0:
            raise InvalidParameter("delta must be positive")
        if self.mode == DISCRETE:
            if self.T is None:
                raise FormatError("discrete instance needs a translation set T")
            if self.T.dim != self.P.dim:
                raise ContractViolation("T dimension differs from P")
            for ps in (self.P, self.Q, self.T):
                for p in ps:
                    if any(c.denominator != 1 for c in p.coords):
                        raise FormatError("discrete mode needs integer coordinates")
        elif self.T is not None:
            raise FormatError("continuous instance cannot carry T")

    @property
    def dim(self) -> int:
        return self.P.dim


def directed_hausdorff(P: PointSet, Q: PointSet) -> Fraction:
    """max over p of min over q of the L-infinity distance; O(nm) reference."""
    if P.dim != Q.dim:
        raise ContractViolation("dimension mismatch")
    if len(Q) == 0:
        raise UndefinedDistance("directed Hausdorff against an empty set")
    if len(P) == 0:
        return Fraction(0)
    worst = Fraction(0)
    for p in P:
        best = None
        for q in Q:
            d = linf_distance(p, q)
            if best is None or d < best:
                best = d
                if best == 0:
                    break
        if best > worst:
            worst = best
    return worst


def undirected_hausdorff(P: PointSet, Q: PointSet) -> Fraction:
    if len(P) == 0 or len(Q) == 0:
        raise UndefinedDistance("undirected Hausdorff needs nonempty sets")
    return max(directed_hausdorff(P, Q), directed_hausdorff(Q, P))


def directed_hausdorff_fast(P: PointSet, Q: PointSet) -> Fraction:
    """Range-tree path: per-point nearest via binary search over candidate
    distances.  Agrees exactly with the double loop; used as the accelerated
    route for larger plain-distance queries."""
    if P.dim != Q.dim:
        raise ContractViolation("dimension mismatch")
    if len(Q) == 0:
        raise UndefinedDistance("directed Hausdorff against an empty set")
    if len(P) == 0:
        return Fraction(0)
    tree = rt_build(Q)
    cands = sorted(
        {abs(pc - qc) for p in P for q in Q for pc, qc in zip(p.coords, q.coords)}
    )
    worst = Fraction(0)
    for p in P:
        lo, hi = 0, len(cands) - 1
        # smallest candidate distance whose cube around p contains a q
        while lo < hi:
            mid = (lo + hi) // 2
            d = cands[mid]
            cube = Box(
                tuple(c - d for c in p.coords), tuple(c + d for c in p.coords)
            )
            if rt_query_witness(tree, cube) is not None:
                hi = mid
            else:
                lo = mid + 1
        if cands[lo] > worst:
            worst = cands[lo]
    return worst
