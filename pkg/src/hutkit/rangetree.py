"""Static multi-dimensional range tree for orthogonal witness queries.

Layered construction: a balanced tree over the first coordinate whose
canonical subsets each carry a range tree over the remaining coordinates.
No fractional cascading; queries prune by subtree key intervals, descend
into the next layer once a subtree is fully inside the query range, and
report an arbitrary witness point.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .core import Box, Point, PointSet
from .errors import ContractViolation


class _Node:
    __slots__ = ("kmin", "kmax", "left", "right", "sub", "points")

    def __init__(self, kmin, kmax, left, right, sub, points):
        self.kmin = kmin
        self.kmax = kmax
        self.left = left
        self.right = right
        self.sub = sub  # root node of the tree over the next axis
        self.points = points  # sorted point list, kept at last-axis nodes


class RangeTree:
    def __init__(self, points: Sequence[Point], dim: Optional[int] = None):
        pts = list(points)
        if dim is None:
            if not pts:
                raise ContractViolation("empty range tree needs an explicit dim")
            dim = pts[0].dim
        self.dim = dim
        for p in pts:
            if p.dim != dim:
                raise ContractViolation("mixed dimensions in range tree input")
        self._root = _build(pts, 0, dim)

    def query_witness(self, b: Box) -> Optional[Point]:
        """Some indexed point inside the closed box, or None."""
        if b.dim != self.dim:
            raise ContractViolation("dimension mismatch in range tree query")
        return _query(self._root, b, 0, self.dim)


def _build(pts: list[Point], axis: int, dim: int) -> Optional[_Node]:
    if not pts:
        return None
    pts = sorted(pts, key=lambda p: p.coords[axis])
    return _build_sorted(pts, axis, dim)


def _build_sorted(pts: list[Point], axis: int, dim: int) -> _Node:
    kmin = pts[0].coords[axis]
    kmax = pts[-1].coords[axis]
    last = axis == dim - 1
    sub = None if last else _build(pts, axis + 1, dim)
    if len(pts) == 1:
        return _Node(kmin, kmax, None, None, sub, pts if last else None)
    mid = len(pts) // 2
    left = _build_sorted(pts[:mid], axis, dim)
    right = _build_sorted(pts[mid:], axis, dim)
    return _Node(kmin, kmax, left, right, sub, pts if last else None)


def _query(node: Optional[_Node], b: Box, axis: int, dim: int) -> Optional[Point]:
    if node is None:
        return None
    lo, hi = b.lo[axis], b.hi[axis]
    if node.kmin > hi or node.kmax < lo:
        return None
    if lo <= node.kmin and node.kmax <= hi:
        if axis == dim - 1:
            return node.points[0]
        return _query(node.sub, b, axis + 1, dim)
    w = _query(node.left, b, axis, dim)
    if w is not None:
        return w
    return _query(node.right, b, axis, dim)


def rt_build(ps: PointSet) -> Optional[RangeTree]:
    """Range tree over a point set; None stands for the empty structure."""
    if len(ps) == 0:
        return None
    return RangeTree(list(ps), ps.dim)


def rt_query_witness(rt: Optional[RangeTree], b: Box) -> Optional[Point]:
    if rt is None:
        return None
    return rt.query_witness(b)
