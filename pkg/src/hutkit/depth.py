"""Plane-sweep machinery for maximum depth of axis-aligned boxes.

The sweep works in compressed *slot* space: with k distinct endpoint values
per axis we use 2k-1 slots, even slots standing for the endpoint values and
odd slots for the open gaps between them.  Closed boxes map to closed slot
ranges, which makes every degenerate overlap (shared edges, corner contacts)
exact without perturbation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .core import Box, Point
from .errors import ContractViolation


class DepthSweepTree:
    """Segment tree over slot indices with range add and global max.

    Supports leftmost arg-max descent and extraction of all maximal slot
    runs attaining a target value; no lazy propagation is needed because
    only whole-tree queries are asked (stabbing-count style).
    """

    def __init__(self, nslots: int):
        self.n = max(1, nslots)
        self._add = [0] * (4 * self.n)
        self._mx = [0] * (4 * self.n)

    def add(self, lo: int, hi: int, delta: int) -> None:
        """Add delta on the inclusive slot range [lo, hi]."""
        if lo > hi:
            return
        self._update(1, 0, self.n - 1, lo, hi, delta)

    def _update(self, node: int, nlo: int, nhi: int, lo: int, hi: int, delta: int):
        if hi < nlo or nhi < lo:
            return
        if lo <= nlo and nhi <= hi:
            self._add[node] += delta
            self._mx[node] += delta
            return
        mid = (nlo + nhi) // 2
        self._update(2 * node, nlo, mid, lo, hi, delta)
        self._update(2 * node + 1, mid + 1, nhi, lo, hi, delta)
        self._mx[node] = self._add[node] + max(self._mx[2 * node], self._mx[2 * node + 1])

    def max(self) -> int:
        return self._mx[1]

    def argmax_leftmost(self) -> int:
        """Smallest slot index attaining the global maximum."""
        node, nlo, nhi = 1, 0, self.n - 1
        acc = 0
        target = self._mx[1]
        while nlo != nhi:
            acc += self._add[node]
            mid = (nlo + nhi) // 2
            if acc + self._mx[2 * node] == target:
                node, nhi = 2 * node, mid
            else:
                node, nlo = 2 * node + 1, mid + 1
        return nlo

    def runs_at_value(self, value: int) -> list[tuple[int, int]]:
        """Maximal inclusive slot runs where the pointwise sum equals value."""
        slots: list[int] = []
        self._collect(1, 0, self.n - 1, 0, value, slots)
        runs: list[tuple[int, int]] = []
        for s in slots:
            if runs and runs[-1][1] == s - 1:
                runs[-1] = (runs[-1][0], s)
            else:
                runs.append((s, s))
        return runs

    def _collect(self, node, nlo, nhi, acc, value, out):
        acc += self._add[node]
        if nlo == nhi:
            if acc == value:
                out.append(nlo)
            return
        mid = (nlo + nhi) // 2
        if acc + self._mx[2 * node] >= value:
            self._collect(2 * node, nlo, mid, acc, value, out)
        if acc + self._mx[2 * node + 1] >= value:
            self._collect(2 * node + 1, mid + 1, nhi, acc, value, out)


class SlotAxis:
    """Coordinate compression of one axis into even/odd slots."""

    def __init__(self, values: Sequence[Fraction]):
        self.values = sorted(set(values))
        self._index = {v: i for i, v in enumerate(self.values)}
        self.nslots = max(1, 2 * len(self.values) - 1)

    def slot(self, v: Fraction) -> int:
        return 2 * self._index[v]

    def value(self, slot: int) -> Fraction:
        if slot % 2 == 0:
            return self.values[slot // 2]
        # midpoint of an open gap; callers normally stay on even slots
        return (self.values[slot // 2] + self.values[slot // 2 + 1]) / 2


def max_depth_2d(boxes: Sequence[Box]) -> tuple[int, Optional[Point]]:
    """Maximum number of closed boxes covering a common point of the plane.

    Returns the depth and the lexicographically smallest witness corner
    (a pair of input endpoint coordinates); (0, None) for no boxes.
    """
    for b in boxes:
        if b.dim != 2:
            raise ContractViolation("max_depth_2d needs 2-D boxes")
        if not b.is_finite():
            raise ContractViolation("max_depth_2d needs finite boxes")
    if not boxes:
        return 0, None

    xaxis = SlotAxis([b.lo[0] for b in boxes] + [b.hi[0] for b in boxes])
    yaxis = SlotAxis([b.lo[1] for b in boxes] + [b.hi[1] for b in boxes])

    opens: dict[int, list[tuple[int, int]]] = {}
    closes: dict[int, list[tuple[int, int]]] = {}
    for b in boxes:
        x0, x1 = xaxis.slot(b.lo[0]), xaxis.slot(b.hi[0])
        yr = (yaxis.slot(b.lo[1]), yaxis.slot(b.hi[1]))
        opens.setdefault(x0, []).append(yr)
        closes.setdefault(x1, []).append(yr)

    tree = DepthSweepTree(yaxis.nslots)
    best = 0
    witness: Optional[Point] = None
    for x in sorted(set(opens) | set(closes)):
        for lo, hi in opens.get(x, ()):
            tree.add(lo, hi, 1)
        depth = tree.max()
        if depth > best:
            best = depth
            yslot = tree.argmax_leftmost()
            witness = Point((xaxis.value(x), yaxis.value(yslot)))
        for lo, hi in closes.get(x, ()):
            tree.add(lo, hi, -1)
    return best, witness
