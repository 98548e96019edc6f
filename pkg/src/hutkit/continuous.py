"""Exact decision and optimization for continuous HuT in dimensions 1-3.

decide_2d runs the classic sweep in compressed slot space (see depth.py)
but counts *distinct* source points instead of raw squares: per point the
active y-ranges are merged before entering the tree, so overlapping squares
of one point never double-count.  Feeding per-point box decompositions into
a plain closed-box depth count would miscount shared boundaries (two closed
boxes of one decomposition meet on an edge), which is why the sweep tracks
merged ranges itself.

decide_3d_lopsided enumerates candidate vertices of unions of at most three
layers of congruent cubes and verifies every candidate against one range
tree per input point.  The candidate set is a superset of the union
vertices, each candidate is checked independently, so no general-position
assumption is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from .core import (
    Box,
    Point,
    PointSet,
    common_denominator_scale,
    linf_distance,
)
from .depth import DepthSweepTree
from .envelope import envelope_1d, solve_1d_opt
from .errors import (
    ContractViolation,
    InvalidParameter,
    UndefinedDistance,
    UnsupportedVariant,
)
from .rangetree import RangeTree
from .unionops import union_cube_vertices_3d

DIRECTED = "directed"
UNDIRECTED = "undirected"


@dataclass(frozen=True)
class FeasibleTranslation:
    """A witness translation plus, per p in P, the matched q in Q."""

    tau: Point
    certificate: tuple[tuple[Point, Point], ...]


def certificate_for(
    P: PointSet, Q: PointSet, delta: Fraction, tau: Point, variant: str = DIRECTED
) -> Optional[FeasibleTranslation]:
    """Build and validate a certificate by direct membership checks."""
    pairs = []
    for p in P:
        hit = next((q for q in Q if linf_distance(p + tau, q) <= delta), None)
        if hit is None:
            return None
        pairs.append((p, hit))
    if variant == UNDIRECTED:
        for q in Q:
            if all(linf_distance(p + tau, q) > delta for p in P):
                return None
    return FeasibleTranslation(tau, tuple(pairs))


def _scaled(P: PointSet, Q: PointSet, delta: Fraction):
    """Integer coordinates for P, Q and integer delta under a common scale."""
    values = [delta]
    for ps in (P, Q):
        for p in ps:
            values.extend(p.coords)
    scale = common_denominator_scale(values)
    pcoords = [tuple(int(c * scale) for c in p.coords) for p in P]
    qcoords = [tuple(int(c * scale) for c in q.coords) for q in Q]
    return pcoords, qcoords, int(delta * scale), scale


def _merge_ranges(ranges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Union of inclusive slot ranges; overlapping or adjacent ranges merge."""
    if not ranges:
        return []
    out: list[tuple[int, int]] = []
    for lo, hi in sorted(ranges):
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


class _GroupSweep:
    """X-sweep over congruent squares grouped by source point.

    The segment tree stores, for every y slot, the number of groups whose
    merged active ranges cover it; the caller inspects the tree at each
    event slab through the iterator.
    """

    def __init__(self, groups: list[list[tuple[int, int, int, int]]]):
        squares = [sq for g in groups for sq in g]
        self.xs = sorted({v for sq in squares for v in (sq[0], sq[1])})
        self.ys = sorted({v for sq in squares for v in (sq[2], sq[3])})
        xi = {v: 2 * i for i, v in enumerate(self.xs)}
        yi = {v: 2 * i for i, v in enumerate(self.ys)}
        self.opens: dict[int, list[tuple[int, int, int]]] = {}
        self.closes: dict[int, list[tuple[int, int, int]]] = {}
        for gid, g in enumerate(groups):
            for x0, x1, y0, y1 in set(g):
                item = (gid, yi[y0], yi[y1])
                self.opens.setdefault(xi[x0], []).append(item)
                self.closes.setdefault(xi[x1], []).append(item)
        self.ngroups = len(groups)
        self.nyslots = max(1, 2 * len(self.ys) - 1)

    def xslot_value(self, xslot: int) -> Fraction:
        return self.xs[xslot // 2]

    def yslot_value(self, yslot: int) -> Fraction:
        return self.ys[yslot // 2]

    def slabs(self, extra_ranges=None) -> Iterator[tuple[int, DepthSweepTree]]:
        """Yield (xslot, tree) with the tree valid for that slab."""
        tree = DepthSweepTree(self.nyslots)
        active: list[list[tuple[int, int]]] = [[] for _ in range(self.ngroups)]
        merged: list[list[tuple[int, int]]] = [[] for _ in range(self.ngroups)]

        def refresh(gids):
            for gid in gids:
                new = _merge_ranges(active[gid])
                if new == merged[gid]:
                    continue
                for lo, hi in merged[gid]:
                    tree.add(lo, hi, -1)
                for lo, hi in new:
                    tree.add(lo, hi, 1)
                merged[gid] = new

        for x in sorted(set(self.opens) | set(self.closes)):
            touched = set()
            for gid, y0, y1 in self.opens.get(x, ()):
                active[gid].append((y0, y1))
                touched.add(gid)
            refresh(touched)
            extras = (extra_ranges or {}).get(x, ())
            for lo, hi in extras:
                tree.add(lo, hi, 1)
            yield x, tree
            for lo, hi in extras:
                tree.add(lo, hi, -1)
            touched = set()
            for gid, y0, y1 in self.closes.get(x, ()):
                active[gid].remove((y0, y1))
                touched.add(gid)
            refresh(touched)


def _squares_by_p(pcoords, qcoords, d):
    """Per point p, the squares cube(q, delta) - p in scaled coordinates."""
    return [
        [(q[0] - p[0] - d, q[0] - p[0] + d, q[1] - p[1] - d, q[1] - p[1] + d)
         for q in qcoords]
        for p in pcoords
    ]


def decide_2d(
    P: PointSet, Q: PointSet, delta: Fraction, variant: str = DIRECTED
) -> Optional[FeasibleTranslation]:
    """Sweep decision for 2-D continuous HuT, directed or undirected."""
    if P.dim != 2 or Q.dim != 2:
        raise ContractViolation("decide_2d is two-dimensional")
    if delta <= 0:
        raise InvalidParameter("delta must be positive")
    if variant not in (DIRECTED, UNDIRECTED):
        raise ContractViolation(f"unknown variant {variant!r}")
    if len(P) == 0 and len(Q) == 0:
        return FeasibleTranslation(Point((Fraction(0), Fraction(0))), ())
    if len(Q) == 0 or (variant == UNDIRECTED and len(P) == 0):
        return None
    if len(P) == 0:
        return FeasibleTranslation(Point((Fraction(0), Fraction(0))), ())

    pcoords, qcoords, d, scale = _scaled(P, Q, delta)
    n, m = len(pcoords), len(qcoords)

    sweep1 = _GroupSweep(_squares_by_p(pcoords, qcoords, d))
    if variant == DIRECTED:
        for x, tree in sweep1.slabs():
            if tree.max() == n:
                tau = Point((
                    Fraction(sweep1.xslot_value(x), scale),
                    Fraction(sweep1.yslot_value(tree.argmax_leftmost()), scale),
                ))
                cert = certificate_for(P, Q, delta, tau, variant)
                assert cert is not None
                return cert
        return None

    # undirected: record the depth-n region of the first pass, then look for
    # depth m+1 with the roles of P and Q switched and the region added
    regions: dict[int, list[tuple[int, int]]] = {}
    for x, tree in sweep1.slabs():
        if tree.max() == n:
            regions[x] = tree.runs_at_value(n)
    if not regions:
        return None
    # the reverse condition places, for each q, squares at the same centers
    # q - p, grouped by q; identical square set, so the slot axes coincide
    sweep2 = _GroupSweep(
        [[(q[0] - p[0] - d, q[0] - p[0] + d, q[1] - p[1] - d, q[1] - p[1] + d)
          for p in pcoords] for q in qcoords]
    )
    for x, tree in sweep2.slabs(extra_ranges=regions):
        if tree.max() == m + 1:
            tau = Point((
                Fraction(sweep2.xslot_value(x), scale),
                Fraction(sweep2.yslot_value(tree.argmax_leftmost()), scale),
            ))
            cert = certificate_for(P, Q, delta, tau, variant)
            assert cert is not None
            return cert
    return None


def decide_3d_lopsided(
    P: PointSet, Q: PointSet, delta: Fraction
) -> Optional[FeasibleTranslation]:
    """Directed 3-D decision via union-vertex candidates of layer subsets."""
    if P.dim != 3 or Q.dim != 3:
        raise ContractViolation("decide_3d_lopsided is three-dimensional")
    if delta <= 0:
        raise InvalidParameter("delta must be positive")
    if len(P) == 0:
        return FeasibleTranslation(Point(tuple(Fraction(0) for _ in range(3))), ())
    if len(Q) == 0:
        return None

    n = len(P)
    # layer i: union of cubes around the centers q - p_i
    layers: list[list[Box]] = []
    for p in P:
        centers = {tuple(qc - pc for qc, pc in zip(q.coords, p.coords)) for q in Q}
        layers.append(
            [Box(tuple(c - delta for c in ctr), tuple(c + delta for c in ctr))
             for ctr in sorted(centers)]
        )
    trees = [
        RangeTree([q - p for q in Q], 3) for p in P
    ]

    tested: set[tuple[Fraction, Fraction, Fraction]] = set()
    for r in range(1, min(3, n) + 1):
        for subset in combinations(range(n), r):
            cubes = [c for i in subset for c in layers[i]]
            for v in union_cube_vertices_3d(cubes):
                key = v.coords
                if key in tested:
                    continue
                tested.add(key)
                probe = Box(
                    tuple(c - delta for c in v.coords),
                    tuple(c + delta for c in v.coords),
                )
                witnesses = []
                ok = True
                for i, tree in enumerate(trees):
                    w = tree.query_witness(probe)
                    if w is None:
                        ok = False
                        break
                    witnesses.append((P[i], w + P[i]))
                if ok:
                    return FeasibleTranslation(v, tuple(witnesses))
    return None


def candidate_deltas(P: PointSet, Q: PointSet) -> list[Fraction]:
    """Critical thresholds: half-differences of center offsets, plus zero.

    The optimum is attained where two box constraints are simultaneously
    tight in some dimension, i.e. at |(q-p)_i - (q'-p')_i| / 2.
    """
    centers = [
        tuple(qc - pc for qc, pc in zip(q.coords, p.coords)) for p in P for q in Q
    ]
    out = {Fraction(0)}
    for a in range(len(centers)):
        ca = centers[a]
        for b in range(a, len(centers)):
            cb = centers[b]
            for x, y in zip(ca, cb):
                out.add(abs(x - y) / 2)
    return sorted(out)


def _decide_zero(P: PointSet, Q: PointSet, variant: str) -> Optional[Point]:
    """Exact-cover check for delta == 0."""
    if len(P) == 0:
        return Point(tuple(Fraction(0) for _ in range(Q.dim)))
    qset = {q.coords for q in Q}
    for q in Q:
        tau = q - P[0]
        if all((p + tau).coords in qset for p in P):
            if variant == DIRECTED:
                return tau
            pset = {(p + tau).coords for p in P}
            if all(qq.coords in pset for qq in Q):
                return tau
    return None


def decide(
    P: PointSet,
    Q: PointSet,
    delta: Fraction,
    variant: str,
    dim: Optional[int] = None,
) -> Optional[FeasibleTranslation]:
    """Dispatch to the dimension-appropriate continuous decision procedure."""
    dim = dim if dim is not None else P.dim
    if dim != P.dim or dim != Q.dim:
        raise ContractViolation("dimension mismatch")
    if dim == 1:
        if len(P) == 0:
            return FeasibleTranslation(Point((Fraction(0),)), ())
        if len(Q) == 0:
            return None
        env = envelope_1d(P, Q, variant)
        v, t = env.min_over_reals()
        if v > delta:
            return None
        return certificate_for(P, Q, delta, Point((t,)), variant)
    if dim == 2:
        return decide_2d(P, Q, delta, variant)
    if dim == 3:
        if variant == DIRECTED:
            return decide_3d_lopsided(P, Q, delta)
        raise UnsupportedVariant(
            "undirected 3-D continuous has no exact solver here; use brute"
        )
    raise UnsupportedVariant(f"no continuous solver for dimension {dim}")


def optimize(
    P: PointSet, Q: PointSet, variant: str, dim: Optional[int] = None
) -> tuple[Fraction, Point]:
    """Minimum feasible delta and a witness translation.

    Binary search over the sorted candidate set; the candidate at the
    answer is verified feasible and its predecessor infeasible.
    """
    dim = dim if dim is not None else P.dim
    if len(Q) == 0:
        raise UndefinedDistance("optimize against an empty set")
    if len(P) == 0:
        return Fraction(0), Point(tuple(Fraction(0) for _ in range(dim)))
    if variant == UNDIRECTED and dim == 3:
        raise UnsupportedVariant("undirected 3-D continuous optimize unsupported")

    if dim == 1:
        return solve_1d_opt(P, Q, variant)

    cands = candidate_deltas(P, Q)

    def feasible(idx: int) -> bool:
        d = cands[idx]
        if d == 0:
            return _decide_zero(P, Q, variant) is not None
        return decide(P, Q, d, variant, dim) is not None

    lo, hi = 0, len(cands) - 1
    if not feasible(hi):
        raise ContractViolation("candidate threshold set is incomplete")
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(mid):
            hi = mid
        else:
            lo = mid + 1
    d = cands[lo]
    if d == 0:
        tau = _decide_zero(P, Q, variant)
        return d, tau
    cert = decide(P, Q, d, variant, dim)
    return d, cert.tau
