"""Geometry of unions of congruent axis-aligned cubes.

Two conventions coexist here and are kept strictly apart:

* ``union_cube_vertices_3d`` and ``depth_at`` work with *closed* boxes.
* ``complement_decompose`` works in a *half-open* world: every input cube,
  the bounding box, and every output box denote the point set
  [lo_1, hi_1) x ... x [lo_d, hi_d).  Half-open boxes make the complement
  cover a true partition, which the 3SUM-style reductions rely on.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .core import Box, Point, box_contains, common_denominator_scale
from .errors import ContractViolation


def depth_at(boxes: Sequence[Box], p: Point) -> int:
    """Number of closed boxes containing p; the oracle primitive."""
    return sum(1 for b in boxes if box_contains(b, p))


def halfopen_contains(b: Box, p: Point) -> bool:
    """Membership in [lo, hi): lower facets in, upper facets out."""
    if b.dim != p.dim:
        raise ContractViolation("dimension mismatch")
    return all(lo <= c < hi for lo, c, hi in zip(b.lo, p.coords, b.hi))


def _check_congruent_cubes(cubes: Sequence[Box], dim: int) -> Fraction:
    side: Optional[Fraction] = None
    for c in cubes:
        if c.dim != dim:
            raise ContractViolation(f"expected {dim}-dimensional cubes")
        if not c.is_finite():
            raise ContractViolation("cubes must be finite")
        sides = set(c.side_lengths())
        if len(sides) != 1:
            raise ContractViolation("non-cubic box in cube union")
        (s,) = sides
        if side is None:
            side = s
        elif side != s:
            raise ContractViolation("cubes are not congruent")
    return side if side is not None else Fraction(0)


def union_cube_vertices_3d(cubes: Sequence[Box]) -> list[Point]:
    """Candidate vertex set of the boundary of a union of congruent cubes.

    The output contains every vertex of the union boundary and only points
    on facet planes of input cubes; it may strictly contain the vertex set
    (facet-interior crossings survive the filter).  Candidates are triples
    of facet planes taken from cubes meeting a common cube, kept when they
    avoid the open interior of every cube.
    """
    side = _check_congruent_cubes(cubes, 3)
    if not cubes:
        return []
    if side == 0:
        raise ContractViolation("degenerate cubes")

    # exact integer grid: scale so that all bounds and the side are integers
    scale = common_denominator_scale(
        [v for c in cubes for v in (*c.lo, *c.hi)] + [side]
    )
    lo = [tuple(int(v * scale) for v in c.lo) for c in cubes]
    hi = [tuple(int(v * scale) for v in c.hi) for c in cubes]
    s = int(side * scale)

    # grid hash with cell size = cube side: each cube meets at most 2^3 cells
    grid: dict[tuple[int, int, int], list[int]] = {}
    for i, l in enumerate(lo):
        cells = [range(l[a] // s, hi[i][a] // s + 1) for a in range(3)]
        for cell in product(*cells):
            grid.setdefault(cell, []).append(i)

    def near(i: int) -> list[int]:
        # every cube meeting cube i shares one of i's grid cells with it
        seen = set()
        cells = [range(lo[i][a] // s, hi[i][a] // s + 1) for a in range(3)]
        for cell in product(*cells):
            seen.update(grid.get(cell, ()))
        return [j for j in sorted(seen) if _meets(lo[i], hi[i], lo[j], hi[j])]

    candidates: set[tuple[int, int, int]] = set()
    for i in range(len(cubes)):
        nbrs = near(i)
        planes = []
        for a in range(3):
            vals = set()
            for j in nbrs:
                for v in (lo[j][a], hi[j][a]):
                    if lo[i][a] <= v <= hi[i][a]:
                        vals.add(v)
            planes.append(sorted(vals))
        for p in product(*planes):
            candidates.add(p)

    def in_open_some_cube(p: tuple[int, int, int]) -> bool:
        # a cube openly containing p is registered in p's own grid cell
        cell = (p[0] // s, p[1] // s, p[2] // s)
        for j in grid.get(cell, ()):
            if all(lo[j][a] < p[a] < hi[j][a] for a in range(3)):
                return True
        return False

    out = []
    inv = Fraction(1, scale)
    for p in sorted(candidates):
        if not in_open_some_cube(p):
            out.append(Point(tuple(Fraction(v) * inv for v in p)))
    return out


def _meets(lo_a, hi_a, lo_b, hi_b) -> bool:
    return all(lo_b[k] <= hi_a[k] and lo_a[k] <= hi_b[k] for k in range(3))


def complement_decompose(cubes: Sequence[Box], bounding: Box) -> list[Box]:
    """Disjoint half-open boxes covering bounding minus the cube union.

    All boxes (inputs and outputs) are interpreted half-open [lo, hi).
    The grid induced by all facet coordinates is scanned; empty cells are
    merged greedily along the last axis.  Output size is O(m^d) worst case.
    """
    dim = bounding.dim
    if dim > 3:
        raise ContractViolation("complement_decompose supports dim <= 3")
    if not bounding.is_finite():
        raise ContractViolation("bounding box must be finite")
    _check_congruent_cubes(cubes, dim)

    axes: list[list[Fraction]] = []
    for a in range(dim):
        vals = {bounding.lo[a], bounding.hi[a]}
        for c in cubes:
            for v in (c.lo[a], c.hi[a]):
                if bounding.lo[a] < v < bounding.hi[a]:
                    vals.add(v)
        axes.append(sorted(vals))
    if any(len(ax) < 2 for ax in axes):
        return []  # bounding box has empty interior

    def cell_empty(idx: tuple[int, ...]) -> bool:
        corner = tuple(axes[a][idx[a]] for a in range(dim))
        return not any(
            all(c.lo[a] <= corner[a] < c.hi[a] for a in range(dim)) for c in cubes
        )

    out: list[Box] = []
    outer = [range(len(ax) - 1) for ax in axes[:-1]]
    last = axes[-1]
    for prefix in product(*outer) if dim > 1 else [()]:
        run_start: Optional[int] = None
        for k in range(len(last) - 1):
            empty = cell_empty((*prefix, k))
            if empty and run_start is None:
                run_start = k
            if not empty and run_start is not None:
                out.append(_cell_box(axes, prefix, run_start, k))
                run_start = None
        if run_start is not None:
            out.append(_cell_box(axes, prefix, run_start, len(last) - 1))
    return out


def _cell_box(axes, prefix, k0: int, k1: int) -> Box:
    lo = tuple(axes[a][prefix[a]] for a in range(len(prefix))) + (axes[-1][k0],)
    hi = tuple(axes[a][prefix[a] + 1] for a in range(len(prefix))) + (axes[-1][k1],)
    return Box(lo, hi)
