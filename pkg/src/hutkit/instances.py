"""Instance types for the translation-problem family and their conversions.

Conventions:

* TpwcInstance stores the hypercube half-side ``delta`` (cubes have side
  2*delta), matching the HuT threshold correspondence.
* TpwoInstance stores the full orthant/cube side length ``delta`` together
  with the target box and its maximum side ``delta0 < delta``.
* Every conversion is feasibility-preserving; solution witnesses are not
  mapped back (the consumers only compare verdicts).
* All scale and separation constants are computed from input extremes; the
  formulas live next to the code that uses them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import (
    Box,
    Point,
    PointSet,
    box_contains,
    is_finite,
    linf_distance,
)
from .errors import ContractViolation, FormatError, InvalidParameter
from .hausdorff import CONTINUOUS, DIRECTED, UNDIRECTED, HutInstance

ZERO = Fraction(0)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TpwcInstance:
    """Translation problem with congruent hypercubes (half-side delta)."""

    points: PointSet
    centers: PointSet
    delta: Fraction

    def __post_init__(self):
        if self.points.dim != self.centers.dim:
            raise ContractViolation("point/center dimensions differ")
        if self.delta <= 0:
            raise InvalidParameter("hypercube half-side must be positive")

    @property
    def dim(self) -> int:
        return self.points.dim

    def feasible_at(self, tau: Point) -> bool:
        return all(
            any(linf_distance(p + tau, c) <= self.delta for c in self.centers)
            for p in self.points
        )


@dataclass(frozen=True)
class TpwbInstance:
    """Translation problem with finite boxes of arbitrary aspect ratio."""

    points: PointSet
    boxes: tuple[Box, ...]

    def __post_init__(self):
        for b in self.boxes:
            if b.dim != self.points.dim:
                raise ContractViolation("box dimension mismatch")

    @property
    def dim(self) -> int:
        return self.points.dim

    def feasible_at(self, tau: Point) -> bool:
        return all(
            any(box_contains(b, p + tau) for b in self.boxes) for p in self.points
        )


@dataclass(frozen=True)
class TpwoSub:
    points: PointSet
    centers: PointSet


@dataclass(frozen=True)
class TpwoInstance:
    """Translation problem with orthants: hypercube sub-instances of side
    ``delta`` sharing a target box whose maximum side is ``delta0 < delta``."""

    subs: tuple[TpwoSub, ...]
    delta: Fraction
    target_box: Box
    delta0: Fraction

    def __post_init__(self):
        if not self.target_box.is_finite():
            raise ContractViolation("target box must be finite")
        if self.delta0 != max(self.target_box.side_lengths(), default=ZERO):
            raise ContractViolation("delta0 must equal the target box max side")
        if self.delta <= self.delta0:
            raise InvalidParameter("orthant side must exceed delta0")
        for sub in self.subs:
            if sub.points.dim != self.dim or sub.centers.dim != self.dim:
                raise ContractViolation("sub-instance dimension mismatch")

    @property
    def dim(self) -> int:
        return self.target_box.dim

    def feasible_at(self, tau: Point) -> bool:
        half = self.delta / 2
        for sub in self.subs:
            for p in sub.points:
                x = p + tau
                if not box_contains(self.target_box, x):
                    return False
                if not any(linf_distance(x, c) <= half for c in sub.centers):
                    return False
        return True


@dataclass(frozen=True)
class ShapeInstance:
    """Translates of common shapes (unions of boxes, possibly orthants)."""

    dim: int
    shapes: tuple[tuple[Box, ...], ...]
    objects: tuple[tuple[Point, int], ...]

    def __post_init__(self):
        for shape in self.shapes:
            for b in shape:
                if b.dim != self.dim:
                    raise ContractViolation("shape box dimension mismatch")
        for offset, sid in self.objects:
            if offset.dim != self.dim:
                raise ContractViolation("object offset dimension mismatch")
            if not 0 <= sid < len(self.shapes):
                raise ContractViolation("object references an unknown shape")

    def is_orthant_variant(self) -> bool:
        return all(b.is_orthant() for shape in self.shapes for b in shape)

    def feasible_at(self, tau: Point) -> bool:
        for offset, sid in self.objects:
            x = tau - offset
            if not any(box_contains(b, x) for b in self.shapes[sid]):
                return False
        return True


def hut_to_tpwc(inst: HutInstance) -> TpwcInstance:
    if inst.mode != CONTINUOUS or inst.variant != DIRECTED:
        raise ContractViolation("only continuous directed instances convert")
    if inst.delta is None:
        raise FormatError("decision threshold required")
    return TpwcInstance(inst.P, inst.Q, inst.delta)


def tpwc_to_hut(inst: TpwcInstance) -> HutInstance:
    return HutInstance(
        P=inst.points, Q=inst.centers, variant=DIRECTED, mode=CONTINUOUS,
        delta=inst.delta,
    )


def _zero(dim: int) -> Point:
    return Point(tuple(ZERO for _ in range(dim)))


def _axis_unit(dim: int, value: Fraction) -> Point:
    return Point((value,) + tuple(ZERO for _ in range(dim - 1)))


def _translation_window(
    target: Box, points: Sequence[Point]
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Per-axis window W with: tau maps every point into target iff tau in W.

    With no points at all the window degenerates to the origin.
    """
    dim = target.dim
    if not points:
        return tuple(ZERO for _ in range(dim)), tuple(ZERO for _ in range(dim))
    lo = []
    hi = []
    for i in range(dim):
        cmin = min(p.coords[i] for p in points)
        cmax = max(p.coords[i] for p in points)
        lo.append(target.lo[i] - cmin)
        hi.append(target.hi[i] - cmax)
    return tuple(lo), tuple(hi)


def tpwo_to_tpwc(inst: TpwoInstance) -> TpwcInstance:
    """Encode the target box as two point/cube gadget sub-instances and
    spread all sub-instances along the first axis, 9 side-lengths apart."""
    dim = inst.dim
    s = inst.delta
    all_points = [p for sub in inst.subs for p in sub.points]
    wlo, whi = _translation_window(inst.target_box, all_points)

    points: list[Point] = []
    centers: list[Point] = []
    half_vec = Point(tuple(s / 2 for _ in range(dim)))

    def place(sub_points, sub_centers, j):
        u = _axis_unit(dim, 9 * s * j)
        points.extend(p + u for p in sub_points)
        centers.extend(c + u for c in sub_centers)

    # gadget A: tau in [wlo, wlo + s]; gadget B: tau in [whi - s, whi];
    # their conjunction is exactly the window W (empty when W is empty)
    place([_zero(dim)], [Point(wlo) + half_vec], 0)
    for j, sub in enumerate(inst.subs, start=1):
        kept = [
            c for c in sub.centers
            if all(
                c.coords[i] - s / 2 <= inst.target_box.hi[i]
                and c.coords[i] + s / 2 >= inst.target_box.lo[i]
                for i in range(dim)
            )
        ]
        place(sub.points, kept, j)
    place([_zero(dim)], [Point(whi) - half_vec], len(inst.subs) + 1)

    return TpwcInstance(
        PointSet(dim, tuple(points)), PointSet(dim, tuple(centers)), s / 2
    )


def shapes_to_tpwb(inst: ShapeInstance) -> TpwbInstance:
    """Rescale per axis into [0, 1/2], then separate shapes along axis one.

    Shape i contributes its boxes shifted by u_i = (10*i, 0, ..., 0); every
    object (t, i) contributes the point u_i - t.
    """
    dim = inst.dim
    for shape in inst.shapes:
        for b in shape:
            if not b.is_finite():
                raise ContractViolation("shapes_to_tpwb needs finite boxes")
    used = sorted({sid for _, sid in inst.objects})
    if not used:
        return TpwbInstance(PointSet(dim, ()), ())

    box_vals = [
        [v for sid in used for b in inst.shapes[sid] for v in (b.lo[i], b.hi[i])]
        for i in range(dim)
    ]
    off_vals = [[t.coords[i] for t, _ in inst.objects] for i in range(dim)]
    lam = []
    box_min = []
    off_min = []
    for i in range(dim):
        box_min.append(min(box_vals[i]) if box_vals[i] else ZERO)
        off_min.append(min(off_vals[i]))
        spread_b = (max(box_vals[i]) - box_min[i]) if box_vals[i] else ZERO
        spread_t = max(off_vals[i]) - off_min[i]
        lam.append(HALF / max(spread_b, spread_t, Fraction(1)))

    def scale_box(b: Box) -> Box:
        lo = tuple(lam[i] * (b.lo[i] - box_min[i]) for i in range(dim))
        hi = tuple(lam[i] * (b.hi[i] - box_min[i]) for i in range(dim))
        return Box(lo, hi)

    def scale_offset(t: Point) -> Point:
        return Point(tuple(lam[i] * (t.coords[i] - off_min[i]) for i in range(dim)))

    boxes: list[Box] = []
    points: list[Point] = []
    index = {sid: k + 1 for k, sid in enumerate(used)}
    for sid in used:
        u = _axis_unit(dim, Fraction(10 * index[sid]))
        for b in inst.shapes[sid]:
            boxes.append(scale_box(b).translate(u))
    for t, sid in inst.objects:
        u = _axis_unit(dim, Fraction(10 * index[sid]))
        points.append(u - scale_offset(t))
    return TpwbInstance(PointSet(dim, tuple(points)), tuple(boxes))


def compose(a: ShapeInstance, b: ShapeInstance) -> ShapeInstance:
    """One instance whose solution set is the intersection of both."""
    if a.dim != b.dim:
        raise ContractViolation("composition needs a shared universe")
    shift = len(a.shapes)
    objects = tuple(a.objects) + tuple((t, sid + shift) for t, sid in b.objects)
    return ShapeInstance(a.dim, tuple(a.shapes) + tuple(b.shapes), objects)


def compose_all(instances: Sequence[ShapeInstance], dim: int) -> ShapeInstance:
    out = ShapeInstance(dim, (), ())
    for inst in instances:
        out = compose(out, inst)
    return out


def orthant_shapes_to_tpwo(inst: ShapeInstance, bounding: Box) -> TpwoInstance:
    """Clip orthants to congruent cubes large enough to be indistinguishable
    inside the target box; one hypercube sub-instance per used shape.

    The caller guarantees that a nonempty solution set meets ``bounding``.
    """
    if not inst.is_orthant_variant():
        raise ContractViolation("instance is not in the orthant variant")
    if not bounding.is_finite():
        raise ContractViolation("bounding region must be finite")
    dim = inst.dim
    used = sorted({sid for _, sid in inst.objects})
    offs = [t for t, _ in inst.objects]

    if not used:
        side0 = max(bounding.side_lengths(), default=ZERO)
        return TpwoInstance((), 2 * max(side0, Fraction(1)), bounding, side0)

    # target box: tau in bounding implies every point -t lands inside it
    tlo = tuple(
        bounding.lo[i] - max(t.coords[i] for t in offs) for i in range(dim)
    )
    thi = tuple(
        bounding.hi[i] - min(t.coords[i] for t in offs) for i in range(dim)
    )
    target = Box(tlo, thi)
    delta0 = max(target.side_lengths())

    # cube side: covers the target box beyond every finite orthant bound
    need = [delta0, Fraction(1)]
    for sid in used:
        for b in inst.shapes[sid]:
            for i in range(dim):
                if is_finite(b.lo[i]):
                    need.append(thi[i] - b.lo[i])
                elif is_finite(b.hi[i]):
                    need.append(b.hi[i] - tlo[i])
                else:
                    need.append(thi[i] - tlo[i])  # unconstrained axis
    side = 2 * max(need)

    subs = []
    for sid in used:
        centers = []
        for b in inst.shapes[sid]:
            ctr = []
            for i in range(dim):
                if is_finite(b.lo[i]):
                    ctr.append(b.lo[i] + side / 2)
                elif is_finite(b.hi[i]):
                    ctr.append(b.hi[i] - side / 2)
                else:
                    ctr.append((tlo[i] + thi[i]) / 2)
            centers.append(Point(tuple(ctr)))
        pts = [-t for t, s in inst.objects if s == sid]
        subs.append(
            TpwoSub(PointSet(dim, tuple(pts)), PointSet(dim, tuple(centers)))
        )
    return TpwoInstance(tuple(subs), side, target, delta0)


def tpwb_to_tpwo_double_dim(inst: TpwbInstance) -> TpwoInstance:
    """Boxes to orthants at the cost of doubling the dimension.

    Coordinate i becomes the pair (2i, 2i+1) carrying (x, x) for points;
    each box interval [a, b] becomes the orthant [a, inf) x (-inf, b] or its
    mirror, one sub-instance per sign pattern, clipped to congruent cubes.
    """
    dim = inst.dim
    for b in inst.boxes:
        if not b.is_finite():
            raise ContractViolation("doubling needs finite boxes")
    dim2 = 2 * dim

    if not inst.boxes:
        if len(inst.points) == 0:
            return TpwoInstance(
                (), Fraction(2), Box((ZERO,) * dim2, (ZERO,) * dim2), ZERO
            )
        # points with no boxes: a single sub-instance with no cubes
        fP = PointSet(dim2, tuple(_double_point(p) for p in inst.points))
        return TpwoInstance(
            (TpwoSub(fP, PointSet(dim2, ())),),
            Fraction(2),
            Box((ZERO,) * dim2, (ZERO,) * dim2),
            ZERO,
        )

    blo = [min(b.lo[i] for b in inst.boxes) for i in range(dim)]
    bhi = [max(b.hi[i] for b in inst.boxes) for i in range(dim)]
    target = Box(
        tuple(blo[i // 2] for i in range(dim2)),
        tuple(bhi[i // 2] for i in range(dim2)),
    )
    delta0 = max(target.side_lengths())
    side = 2 * max(delta0, Fraction(1))

    fP = PointSet(dim2, tuple(_double_point(p) for p in inst.points))
    subs = []
    for pattern in range(1 << dim):
        centers = []
        for b in inst.boxes:
            ctr = []
            for i in range(dim):
                lo_win = b.lo[i] + side / 2       # clip of [a, inf)
                hi_win = b.hi[i] - side / 2       # clip of (-inf, b]
                if (pattern >> i) & 1:
                    ctr.extend([hi_win, lo_win])
                else:
                    ctr.extend([lo_win, hi_win])
            centers.append(Point(tuple(ctr)))
        subs.append(TpwoSub(fP, PointSet(dim2, tuple(centers))))
    return TpwoInstance(tuple(subs), side, target, delta0)


def _double_point(p: Point) -> Point:
    return Point(tuple(c for coord in p.coords for c in (coord, coord)))


def _resize_cube_keep_trace(
    center: Point, old_side: Fraction, target: Box, new_side: Fraction
) -> Optional[Point]:
    """Center of a side ``new_side`` cube with the same intersection with
    ``target`` as the given cube; None when that intersection is empty.

    Works because a cube with side exceeding every target side can never cut
    a slice strictly interior to the target in any axis.
    """
    dim = target.dim
    h = old_side / 2
    ctr = []
    for i in range(dim):
        a, b = center.coords[i] - h, center.coords[i] + h
        lo, hi = max(a, target.lo[i]), min(b, target.hi[i])
        if lo > hi:
            return None
        if lo <= target.lo[i] and hi >= target.hi[i]:
            ctr.append(target.hi[i] - new_side / 2)
        elif lo <= target.lo[i]:
            ctr.append(hi - new_side / 2)
        elif hi >= target.hi[i]:
            ctr.append(lo + new_side / 2)
        else:
            raise ContractViolation("cube smaller than the target box side")
    return Point(tuple(ctr))


def _nearest_anchor(q: Point, third: Fraction) -> Point:
    """Componentwise nearest of {-2/3 d, 0, 2/3 d} scaled by 3/2; ties to
    the smaller coordinate."""
    grid = (-2 * third, ZERO, 2 * third)
    out = []
    for c in q.coords:
        best = min(grid, key=lambda g: (abs(c - g), g))
        out.append(3 * best / 2)
    return Point(tuple(out))


def tpwo_to_uhut(inst: TpwoInstance) -> HutInstance:
    """Undirected continuous HuT instance equivalent to the TPwO instance.

    Normalizes the cube side to exactly three times the target box side
    (trace-preserving resize), recenters translation and point space, adds
    per-sub anchor points so the reverse Hausdorff direction is free, and
    encodes the translation window with two point/center gadget pairs.
    """
    dim = inst.dim
    delta0 = inst.delta0
    s_star = 3 * delta0 if delta0 > 0 else Fraction(1)
    d = s_star / 2  # the undirected distance threshold
    third = d / 3

    all_points = [p for sub in inst.subs for p in sub.points]
    wlo, whi = _translation_window(inst.target_box, all_points)
    t0 = tuple((a + b) / 2 for a, b in zip(wlo, whi))
    bctr = tuple(
        (lo + hi) / 2 - t for lo, hi, t in zip(inst.target_box.lo, inst.target_box.hi, t0)
    )
    # target box recentred at the origin; translations recentred so the
    # window W is symmetric and contained in [-d/3, d/3]^dim
    target = Box(
        tuple(lo - t - c for lo, t, c in zip(inst.target_box.lo, t0, bctr)),
        tuple(hi - t - c for hi, t, c in zip(inst.target_box.hi, t0, bctr)),
    )
    shift_c = tuple(t + c for t, c in zip(t0, bctr))  # subtract from centers
    wlo = tuple(a - t for a, t in zip(wlo, t0))
    whi = tuple(b - t for b, t in zip(whi, t0))

    sep = 9 * s_star
    pts_out: list[Point] = []
    ctr_out: list[Point] = []

    def place(ps, cs, j):
        u = _axis_unit(dim, sep * j)
        pts_out.extend(p + u for p in ps)
        ctr_out.extend(c + u for c in cs)

    dvec = Point(tuple(d for _ in range(dim)))
    place([_zero(dim)], [Point(wlo) + dvec], 0)

    for j, sub in enumerate(inst.subs, start=1):
        resized = []
        for c in sub.centers:
            c2 = _resize_cube_keep_trace(
                Point(tuple(x - s for x, s in zip(c.coords, shift_c))),
                inst.delta, target, s_star,
            )
            if c2 is not None:
                resized.append(c2)
        # resized centers with a target trace always sit within 5d/3 of the
        # origin; the filter mirrors the construction's pruning step
        kept = [c for c in resized if max(abs(x) for x in c.coords) <= 5 * third]
        pts = [Point(tuple(x - s for x, s in zip(p.coords, bctr))) for p in sub.points]
        if any(max(abs(x) for x in c.coords) <= third for c in kept):
            place([_zero(dim)], [_zero(dim)], j)
            continue
        anchors = sorted(
            {_nearest_anchor(c, third).coords for c in kept}
        )
        place(pts + [Point(a) for a in anchors], kept, j)

    place([_zero(dim)], [Point(whi) - dvec], len(inst.subs) + 1)

    return HutInstance(
        P=PointSet(dim, tuple(pts_out)),
        Q=PointSet(dim, tuple(ctr_out)),
        variant=UNDIRECTED,
        mode=CONTINUOUS,
        delta=d,
    )


def default_orthant_bounding(inst: ShapeInstance) -> Box:
    """A box certain to meet the solution set whenever it is nonempty.

    Any solution can be clamped coordinate-wise into the span of the
    translated finite orthant bounds: moving a coordinate toward that span
    keeps every satisfied ray constraint satisfied.  One unit of margin is
    added on each side.
    """
    dim = inst.dim
    vals: list[list[Fraction]] = [[] for _ in range(dim)]
    for t, sid in inst.objects:
        for b in inst.shapes[sid]:
            for i in range(dim):
                if is_finite(b.lo[i]):
                    vals[i].append(b.lo[i] + t.coords[i])
                if is_finite(b.hi[i]):
                    vals[i].append(b.hi[i] + t.coords[i])
    lo = tuple((min(v) if v else ZERO) - 1 for v in vals)
    hi = tuple((max(v) if v else ZERO) + 1 for v in vals)
    return Box(lo, hi)
