"""Discrete-translation HuT solvers: range-tree baseline and 1-D scan."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import Box, Point, PointSet
from .continuous import FeasibleTranslation, certificate_for
from .envelope import envelope_1d
from .errors import ContractViolation, FormatError, InvalidParameter
from .hausdorff import directed_hausdorff, undirected_hausdorff
from .rangetree import rt_build, rt_query_witness

DIRECTED = "directed"
UNDIRECTED = "undirected"


def _check_integer(ps: PointSet, name: str) -> None:
    for p in ps:
        if any(c.denominator != 1 for c in p.coords):
            raise FormatError(f"{name} must have integer coordinates in discrete mode")


def solve_discrete(
    T: PointSet,
    P: PointSet,
    Q: PointSet,
    delta: Fraction,
    variant: str = DIRECTED,
) -> Optional[FeasibleTranslation]:
    """Range-tree decision over a finite translation set, any fixed dim <= 6.

    The witness is the first feasible translation in ascending lexicographic
    order, so the answer is independent of the input order of T.
    """
    if delta <= 0:
        raise InvalidParameter("delta must be positive")
    if not (T.dim == P.dim == Q.dim):
        raise ContractViolation("dimension mismatch")
    if T.dim > 6:
        raise ContractViolation("discrete solver supports dim <= 6")
    for ps, name in ((T, "T"), (P, "P"), (Q, "Q")):
        _check_integer(ps, name)
    if len(T) == 0:
        return None
    qtree = rt_build(Q)
    ptree = rt_build(P) if variant == UNDIRECTED else None
    for tau in sorted(T, key=lambda t: t.coords):
        ok = True
        for p in P:
            c = tuple(pc + tc for pc, tc in zip(p.coords, tau.coords))
            probe = Box(tuple(v - delta for v in c), tuple(v + delta for v in c))
            if rt_query_witness(qtree, probe) is None:
                ok = False
                break
        if ok and variant == UNDIRECTED:
            for q in Q:
                c = tuple(qc - tc for qc, tc in zip(q.coords, tau.coords))
                probe = Box(tuple(v - delta for v in c), tuple(v + delta for v in c))
                if rt_query_witness(ptree, probe) is None:
                    ok = False
                    break
        if ok:
            cert = certificate_for(P, Q, delta, tau, variant)
            assert cert is not None
            return cert
    return None


@dataclass(frozen=True)
class ScanResult:
    values: tuple[tuple[Point, Fraction], ...]  # (tau, envelope value), tau sorted
    best_tau: Point
    best_value: Fraction


def solve_discrete_1d_scan(
    T: PointSet, P: PointSet, Q: PointSet, variant: str = DIRECTED
) -> ScanResult:
    """Evaluate the 1-D envelope at each candidate translation by one scan."""
    if not (T.dim == P.dim == Q.dim == 1):
        raise ContractViolation("scan solver is one-dimensional")
    if len(T) == 0:
        raise InvalidParameter("empty translation set")
    env = envelope_1d(P, Q, variant)
    taus = sorted(T, key=lambda t: t.coords)
    values = []
    bps = env.breakpoints
    idx = 0
    best = None
    for tau in taus:
        t = tau.coords[0]
        while idx < len(bps) and bps[idx] < t:
            idx += 1
        s, c = env.pieces[idx]
        v = s * t + c
        values.append((tau, v))
        if best is None or v < best[1]:
            best = (tau, v)
    return ScanResult(tuple(values), best[0], best[1])


def solve_discrete_optimize(
    T: PointSet, P: PointSet, Q: PointSet, variant: str = DIRECTED
) -> tuple[Fraction, Point]:
    """Minimum over tau in T of the (un)directed Hausdorff distance."""
    if len(T) == 0:
        raise InvalidParameter("empty translation set")
    dist = directed_hausdorff if variant == DIRECTED else undirected_hausdorff
    best = None
    for tau in sorted(T, key=lambda t: t.coords):
        v = dist(P.translate(tau), Q)
        if best is None or v < best[0]:
            best = (v, tau)
    return best
