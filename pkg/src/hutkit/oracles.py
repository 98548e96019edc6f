"""Definition-literal brute-force solvers; the ground truth for all tests.

Every oracle is the quantifier structure of its problem definition with no
optimization beyond early exit and an internal rescale to integers (exact,
since all inputs are rationals).  Candidate enumerations carry a hard size
cap, overridable through the HUT_MAX_ORACLE environment variable.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .core import (
    Point,
    PointSet,
    box_contains,
    common_denominator_scale,
    is_finite,
)
from .errors import SizeGuardExceeded, UndefinedDistance

DIRECTED = "directed"
UNDIRECTED = "undirected"

DEFAULT_MAX_CANDIDATES = 10**6


def _max_candidates() -> int:
    raw = os.environ.get("HUT_MAX_ORACLE")
    return int(raw) if raw else DEFAULT_MAX_CANDIDATES


def _guard(count: int) -> None:
    cap = _max_candidates()
    if count > cap:
        raise SizeGuardExceeded(f"{count} candidates exceed the cap {cap}")


def hut_feasible_at(
    P: PointSet, Q: PointSet, delta: Fraction, tau: Point, variant: str = DIRECTED
) -> bool:
    """Direct evaluation of the HuT condition at one translation."""
    for p in P:
        shifted = p + tau
        if all(_linf(shifted, q) > delta for q in Q):
            return False
    if variant == UNDIRECTED:
        for q in Q:
            if all(_linf(p + tau, q) > delta for p in P):
                return False
    return True


def _linf(a: Point, b: Point) -> Fraction:
    return max(abs(x - y) for x, y in zip(a.coords, b.coords))


def _int_scale(points: Sequence[PointSet], extra: Sequence[Fraction]):
    values = list(extra)
    for ps in points:
        for p in ps:
            values.extend(p.coords)
    scale = common_denominator_scale(values)
    out = [
        [tuple(int(c * scale) for c in p.coords) for p in ps] for ps in points
    ]
    return out, [int(v * scale) for v in extra], scale


def brute_hut_decide(
    P: PointSet,
    Q: PointSet,
    delta: Fraction,
    variant: str = DIRECTED,
    dim: Optional[int] = None,
) -> Optional[Point]:
    """Exhaustive decision over the candidate translation grid.

    Complete because a nonempty feasible region (an arrangement of closed
    axis-aligned boxes) has a corner whose coordinates are facet values
    q_i - p_i +- delta.
    """
    dim = dim if dim is not None else P.dim
    if dim > 4:
        raise SizeGuardExceeded("brute_hut_decide supports dim <= 4")
    if len(P) == 0:
        return Point(tuple(Fraction(0) for _ in range(dim)))
    if len(Q) == 0:
        return None
    (ps, qs), (d,), scale = _int_scale([P, Q], [delta])
    axes = []
    for i in range(dim):
        vals = set()
        for p in ps:
            for q in qs:
                c = q[i] - p[i]
                vals.add(c - d)
                vals.add(c + d)
        axes.append(sorted(vals))
    count = 1
    for ax in axes:
        count *= len(ax)
    _guard(count)
    n, m = len(ps), len(qs)
    undirected = variant == UNDIRECTED
    for tau in product(*axes):
        ok = True
        for p in ps:
            sh = tuple(pc + tc for pc, tc in zip(p, tau))
            if all(max(abs(a - b) for a, b in zip(sh, q)) > d for q in qs):
                ok = False
                break
        if ok and undirected:
            for q in qs:
                if all(
                    max(abs(pc + tc - qc) for pc, tc, qc in zip(p, tau, q)) > d
                    for p in ps
                ):
                    ok = False
                    break
        if ok:
            return Point(tuple(Fraction(t, scale) for t in tau))
    return None


def brute_hut_optimize(
    P: PointSet, Q: PointSet, variant: str = DIRECTED, dim: Optional[int] = None
) -> tuple[Fraction, Point]:
    """Binary search over the candidate threshold set using brute_hut_decide."""
    from .continuous import candidate_deltas

    dim = dim if dim is not None else P.dim
    if len(Q) == 0:
        raise UndefinedDistance("optimize against an empty set")
    if len(P) == 0:
        return Fraction(0), Point(tuple(Fraction(0) for _ in range(dim)))
    cands = candidate_deltas(P, Q)
    lo, hi = 0, len(cands) - 1
    witness = brute_hut_decide(P, Q, cands[hi], variant, dim)
    if witness is None:
        raise SizeGuardExceeded("candidate set incomplete (unexpected)")
    while lo < hi:
        mid = (lo + hi) // 2
        w = brute_hut_decide(P, Q, cands[mid], variant, dim)
        if w is not None:
            witness = w
            hi = mid
        else:
            lo = mid + 1
    return cands[lo], witness


def brute_dischut(
    T: PointSet,
    P: PointSet,
    Q: PointSet,
    delta: Fraction,
    variant: str = DIRECTED,
) -> Optional[Point]:
    """Triple loop over the given translations."""
    for tau in T:
        if hut_feasible_at(P, Q, delta, tau, variant):
            return tau
    return None


def brute_maxconvlb(A: Sequence[int], B: Sequence[int], C: Sequence[int]) -> bool:
    """C[k] <= max_{i+j=k} (A[i]+B[j]) for all k in {2..n}, arrays 1-based."""
    n = len(A)
    if not (len(B) == len(C) == n):
        raise ValueError("arrays must have equal length")
    for k in range(2, n + 1):
        best = None
        for i in range(1, k):
            v = A[i - 1] + B[k - i - 1]
            if best is None or v > best:
                best = v
        if best is None or C[k - 1] > best:
            return False
    return True


def brute_allints3sum(
    A: Sequence[int], B: Sequence[int], C: Sequence[int]
) -> list[bool]:
    """For each a in A, does a + b + c = 0 have a solution."""
    return [any(a + b + c == 0 for b in B for c in C) for a in A]


def brute_linear_alignment(
    A: Sequence[Fraction], B: Sequence[Fraction]
) -> tuple[Fraction, int, Fraction]:
    """Closed-form optimum per shift; c is left unconstrained (see ledger).

    Returns (value, s, c) minimizing max_i |(A[i]+c) - B[i+s]| with
    s in {0..m-n}; ties broken by smaller s, then smaller c.
    """
    n, m = len(A), len(B)
    if m < n:
        raise ValueError("B must be at least as long as A")
    if n == 0:
        return Fraction(0), 0, Fraction(0)
    best = None
    for s in range(m - n + 1):
        ds = [B[i + s] - A[i] for i in range(n)]
        hi, lo = max(ds), min(ds)
        value = (hi - lo) / 2
        c = (hi + lo) / 2
        key = (value, s, c)
        if best is None or key < best:
            best = key
    return best


def circular_distance(a: Fraction, b: Fraction) -> Fraction:
    """min of clockwise and counter-clockwise distance on the unit circle."""
    d = abs((a - b) % 1)
    return min(d, 1 - d)


def brute_necklace(
    A: Sequence[Fraction], B: Sequence[Fraction]
) -> tuple[Fraction, int, Fraction]:
    """Candidate-c enumeration per rotation; exact circular objective.

    The candidate set consists of pairwise midpoints of the offsets
    B[i+s]-A[i] and their antipodes, covering every breakpoint of the
    piecewise-linear circular max.
    """
    n = len(A)
    if len(B) != n:
        raise ValueError("necklace arrays must have equal length")
    if n == 0:
        return Fraction(0), 0, Fraction(0)
    best = None
    half = Fraction(1, 2)
    for s in range(n):
        ds = [(B[(i + s) % n] - A[i]) % 1 for i in range(n)]
        cands = set()
        for i in range(n):
            for j in range(i, n):
                mid = (ds[i] + ds[j]) / 2 % 1
                cands.add(mid)
                cands.add((mid + half) % 1)
        for c in sorted(cands):
            value = max(circular_distance((A[i] + c) % 1, B[(i + s) % n]) for i in range(n))
            key = (value, s, c)
            if best is None or key < best:
                best = key
    return best


def brute_hyperclique(H) -> Optional[tuple[int, ...]]:
    """First colorful k-(hyper)clique tuple in lexicographic order, if any."""
    k = H.k
    n = H.n_per_class
    _guard(n**k)
    for tup in product(range(n), repeat=k):
        if H.is_clique(tup):
            return tup
    return None


# --- grid oracles for the translation-instance family -----------------------


def _axis_candidates_from_bounds(bounds_per_axis: list[set[Fraction]], dim: int):
    axes = []
    for i in range(dim):
        vals = bounds_per_axis[i]
        axes.append(sorted(vals) if vals else [Fraction(0)])
    count = 1
    for ax in axes:
        count *= len(ax)
    _guard(count)
    return axes


def brute_tpwc(inst) -> Optional[Point]:
    """Grid oracle for the Translation Problem with Hypercubes."""
    dim = inst.dim
    if len(inst.points) == 0:
        return Point(tuple(Fraction(0) for _ in range(dim)))
    if len(inst.centers) == 0:
        return None
    bounds = [set() for _ in range(dim)]
    for p in inst.points:
        for c in inst.centers:
            for i in range(dim):
                off = c.coords[i] - p.coords[i]
                bounds[i].add(off - inst.delta)
                bounds[i].add(off + inst.delta)
    axes = _axis_candidates_from_bounds(bounds, dim)
    for tau in product(*axes):
        t = Point(tau)
        if inst.feasible_at(t):
            return t
    return None


def brute_tpwb(inst) -> Optional[Point]:
    dim = inst.dim
    if len(inst.points) == 0:
        return Point(tuple(Fraction(0) for _ in range(dim)))
    if not inst.boxes:
        return None
    bounds = [set() for _ in range(dim)]
    for p in inst.points:
        for b in inst.boxes:
            for i in range(dim):
                if is_finite(b.lo[i]):
                    bounds[i].add(b.lo[i] - p.coords[i])
                if is_finite(b.hi[i]):
                    bounds[i].add(b.hi[i] - p.coords[i])
    axes = _axis_candidates_from_bounds(bounds, dim)
    for tau in product(*axes):
        t = Point(tau)
        if inst.feasible_at(t):
            return t
    return None


def brute_tpwo(inst) -> Optional[Point]:
    dim = inst.dim
    half = inst.delta / 2
    bounds = [set() for _ in range(dim)]
    for i in range(dim):
        bounds[i].add(inst.target_box.lo[i])
        bounds[i].add(inst.target_box.hi[i])
    for sub in inst.subs:
        for p in sub.points:
            for i in range(dim):
                bounds[i].add(inst.target_box.lo[i] - p.coords[i])
                bounds[i].add(inst.target_box.hi[i] - p.coords[i])
            for c in sub.centers:
                for i in range(dim):
                    off = c.coords[i] - p.coords[i]
                    bounds[i].add(off - half)
                    bounds[i].add(off + half)
    axes = _axis_candidates_from_bounds(bounds, dim)
    for tau in product(*axes):
        t = Point(tau)
        if inst.feasible_at(t):
            return t
    return None


def brute_shapes(inst) -> Optional[Point]:
    """Grid oracle for the translated-shape problem (boxes or orthants)."""
    dim = inst.dim
    if not inst.objects:
        return Point(tuple(Fraction(0) for _ in range(dim)))
    bounds = [set() for _ in range(dim)]
    for offset, sid in inst.objects:
        for b in inst.shapes[sid]:
            for i in range(dim):
                if is_finite(b.lo[i]):
                    bounds[i].add(b.lo[i] + offset.coords[i])
                if is_finite(b.hi[i]):
                    bounds[i].add(b.hi[i] + offset.coords[i])
    axes = _axis_candidates_from_bounds(bounds, dim)
    for tau in product(*axes):
        t = Point(tau)
        if inst.feasible_at(t):
            return t
    return None


def brute_boxcover(inst) -> bool:
    """For every t in T some p in P lands in some box (closed membership)."""
    for t in inst.T:
        hit = False
        for p in inst.P:
            x = t + p
            if any(box_contains(b, x) for b in inst.boxes):
                hit = True
                break
        if not hit:
            return False
    return True
