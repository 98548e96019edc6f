"""Exact 1-D piecewise-linear envelopes of translation-distance functions.

For 1-D point sets, tau -> directed (or undirected) Hausdorff distance of
P+tau against Q is the upper envelope of sawtooth functions dist(tau, S),
one per source point.  Envelopes are merged pairwise, divide and conquer,
entirely in rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import Point, PointSet
from .errors import ContractViolation, UndefinedDistance


@dataclass(frozen=True)
class PiecewiseLinearFn:
    """Continuous piecewise-linear function over the whole real line.

    Piece i is the affine map slope*t + intercept on [bp[i-1], bp[i]],
    with bp[-1] = -inf and bp[len] = +inf; len(pieces) == len(breakpoints)+1.
    """

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.pieces) != len(self.breakpoints) + 1:
            raise ContractViolation("piece/breakpoint count mismatch")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if a >= b:
                raise ContractViolation("breakpoints must increase strictly")

    def value_at(self, t: Fraction) -> Fraction:
        i = _piece_index(self.breakpoints, t)
        s, c = self.pieces[i]
        return s * t + c

    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(s for s, _ in self.pieces)

    def min_over_reals(self) -> tuple[Fraction, Fraction]:
        """(minimum value, leftmost minimizer); needs coercive end slopes."""
        if not self.breakpoints:
            raise ContractViolation("minimum of a single affine piece")
        if self.pieces[0][0] >= 0 or self.pieces[-1][0] <= 0:
            raise ContractViolation("function is not coercive")
        best_v: Optional[Fraction] = None
        best_t: Optional[Fraction] = None
        for t in self.breakpoints:
            v = self.value_at(t)
            if best_v is None or v < best_v:
                best_v, best_t = v, t
        return best_v, best_t


def _piece_index(bps: tuple[Fraction, ...], t: Fraction) -> int:
    lo, hi = 0, len(bps)
    while lo < hi:
        mid = (lo + hi) // 2
        if bps[mid] < t:
            lo = mid + 1
        else:
            hi = mid
    return lo


def sawtooth(sites: Sequence[Fraction]) -> PiecewiseLinearFn:
    """dist(t, sites): V-shapes at each site, peaks at midpoints."""
    s = sorted(set(sites))
    if not s:
        raise UndefinedDistance("distance to an empty site set")
    bps: list[Fraction] = []
    pieces: list[tuple[Fraction, Fraction]] = [(Fraction(-1), s[0])]
    for a, b in zip(s, s[1:]):
        mid = (a + b) / 2
        bps.extend([a, mid])
        pieces.append((Fraction(1), -a))
        pieces.append((Fraction(-1), b))
    bps.append(s[-1])
    pieces.append((Fraction(1), -s[-1]))
    return PiecewiseLinearFn(tuple(bps), tuple(pieces))


def merge_max(f: PiecewiseLinearFn, g: PiecewiseLinearFn) -> PiecewiseLinearFn:
    """Upper envelope max(f, g), with crossing points inserted exactly."""
    cuts = sorted(set(f.breakpoints) | set(g.breakpoints))
    # collect crossings strictly inside each elementary interval
    extra: list[Fraction] = []
    bounds = [None] + list(cuts) + [None]
    for i in range(len(bounds) - 1):
        lo, hi = bounds[i], bounds[i + 1]
        probe = _interval_probe(lo, hi)
        sf, cf = f.pieces[_piece_index(f.breakpoints, probe)]
        sg, cg = g.pieces[_piece_index(g.breakpoints, probe)]
        if sf != sg:
            t = (cg - cf) / (sf - sg)
            if (lo is None or t > lo) and (hi is None or t < hi):
                extra.append(t)
    cuts = sorted(set(cuts) | set(extra))
    pieces: list[tuple[Fraction, Fraction]] = []
    bounds = [None] + cuts + [None]
    for i in range(len(bounds) - 1):
        probe = _interval_probe(bounds[i], bounds[i + 1])
        pf = f.pieces[_piece_index(f.breakpoints, probe)]
        pg = g.pieces[_piece_index(g.breakpoints, probe)]
        vf = pf[0] * probe + pf[1]
        vg = pg[0] * probe + pg[1]
        pieces.append(pf if vf > vg or (vf == vg and pf[0] >= pg[0]) else pg)
    return _simplify(cuts, pieces)


def _interval_probe(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def _simplify(cuts: list[Fraction], pieces: list[tuple[Fraction, Fraction]]):
    bps: list[Fraction] = []
    out = [pieces[0]]
    for t, piece in zip(cuts, pieces[1:]):
        if piece == out[-1]:
            continue
        bps.append(t)
        out.append(piece)
    return PiecewiseLinearFn(tuple(bps), tuple(out))


def envelope_of(sawtooths: Sequence[PiecewiseLinearFn]) -> PiecewiseLinearFn:
    if not sawtooths:
        raise UndefinedDistance("envelope of no functions")
    fns = list(sawtooths)
    while len(fns) > 1:
        nxt = [merge_max(fns[i], fns[i + 1]) for i in range(0, len(fns) - 1, 2)]
        if len(fns) % 2:
            nxt.append(fns[-1])
        fns = nxt
    return fns[0]


def envelope_1d(P: PointSet, Q: PointSet, direction: str) -> PiecewiseLinearFn:
    """F(tau) = directed or undirected Hausdorff distance of P+tau vs Q."""
    if P.dim != 1 or Q.dim != 1:
        raise ContractViolation("envelope_1d is one-dimensional")
    if len(P) == 0 or len(Q) == 0:
        raise UndefinedDistance("envelope needs nonempty point sets")
    if direction not in ("directed", "undirected"):
        raise ContractViolation(f"unknown direction {direction!r}")
    qs = [q.coords[0] for q in Q]
    ps = [p.coords[0] for p in P]
    parts = [sawtooth([q - p for q in qs]) for p in ps]
    if direction == "undirected":
        parts.extend(sawtooth([q - p for p in ps]) for q in qs)
    return envelope_of(parts)


def solve_1d_opt(P: PointSet, Q: PointSet, variant: str) -> tuple[Fraction, Point]:
    """Global minimum of the 1-D envelope and its leftmost minimizer."""
    env = envelope_1d(P, Q, variant)
    v, t = env.min_over_reals()
    return v, Point((t,))


def decide_1d(
    P: PointSet, Q: PointSet, delta: Fraction, variant: str
) -> Optional[Point]:
    """Witness translation with envelope value <= delta, or None."""
    env = envelope_1d(P, Q, variant)
    v, t = env.min_over_reals()
    if v <= delta:
        return Point((t,))
    return None
