"""Seeded random instance generators for campaigns and tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .core import Box, Point, PointSet
from .gadgets import KPartiteHypergraph
from .hausdorff import CONTINUOUS, DIRECTED, DISCRETE, HutInstance
from .instances import ShapeInstance, TpwbInstance, TpwoInstance, TpwoSub
from .reductions import (
    FopzAeeFormula,
    FopzAtom,
    LinearAlignmentInstance,
    MaxConvLbInstance,
    NecklaceInstance,
)


def rand_fraction(rng: random.Random, lo: int, hi: int, max_den: int = 4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def rand_point(rng, dim, lo=-20, hi=20, max_den=4) -> Point:
    return Point(tuple(rand_fraction(rng, lo, hi, max_den) for _ in range(dim)))


def rand_point_set(rng, dim, n, lo=-20, hi=20, max_den=4) -> PointSet:
    return PointSet(dim, tuple(rand_point(rng, dim, lo, hi, max_den) for _ in range(n)))


def rand_int_point_set(rng, dim, n, lo=-50, hi=50) -> PointSet:
    return PointSet(
        dim,
        tuple(
            Point(tuple(Fraction(rng.randint(lo, hi)) for _ in range(dim)))
            for _ in range(n)
        ),
    )


def rand_hut_decision(
    rng, dim, max_n=8, max_m=8, variant=DIRECTED
) -> HutInstance:
    """Continuous decision instance; half the deltas hit critical values."""
    from .continuous import candidate_deltas

    P = rand_point_set(rng, dim, rng.randint(1, max_n))
    Q = rand_point_set(rng, dim, rng.randint(1, max_m))
    cands = candidate_deltas(P, Q)
    if rng.random() < 0.5 and len(cands) > 1:
        delta = rng.choice(cands[1:])
    else:
        delta = abs(rand_fraction(rng, 0, 25)) + Fraction(1, 3)
    return HutInstance(P=P, Q=Q, variant=variant, mode=CONTINUOUS, delta=delta)


def rand_dischut(rng, dim, max_t=8, max_n=8, max_m=8, variant=DIRECTED) -> HutInstance:
    T = rand_int_point_set(rng, dim, rng.randint(1, max_t))
    P = rand_int_point_set(rng, dim, rng.randint(1, max_n))
    Q = rand_int_point_set(rng, dim, rng.randint(1, max_m))
    delta = Fraction(rng.randint(1, 60), rng.choice([1, 2]))
    return HutInstance(
        P=P, Q=Q, variant=variant, mode=DISCRETE, delta=delta, T=T
    )


def rand_tpwo(rng, dim, max_subs=3) -> TpwoInstance:
    tlo = [rand_fraction(rng, -5, 5, 2) for _ in range(dim)]
    sides = [abs(rand_fraction(rng, 0, 3, 2)) for _ in range(dim)]
    target = Box(tuple(tlo), tuple(a + s for a, s in zip(tlo, sides)))
    delta0 = max(sides)
    side = delta0 + abs(rand_fraction(rng, 1, 4, 2)) + Fraction(1, 2)
    subs = []
    for _ in range(rng.randint(0, max_subs)):
        pts = rand_point_set(rng, dim, rng.randint(0, 3), -6, 6, 2)
        ctrs = rand_point_set(rng, dim, rng.randint(0, 3), -7, 7, 2)
        subs.append(TpwoSub(pts, ctrs))
    return TpwoInstance(tuple(subs), side, target, delta0)


def rand_shapes(rng, dim, orthant=False, max_shapes=3, max_boxes=3, max_objects=4):
    from .core import NEG_INF, POS_INF

    shapes = []
    for _ in range(rng.randint(1, max_shapes)):
        boxes = []
        for _ in range(rng.randint(1, max_boxes)):
            if orthant:
                lo, hi = [], []
                for _ in range(dim):
                    v = rand_fraction(rng, -5, 5, 2)
                    r = rng.random()
                    if r < 0.45:
                        lo.append(v)
                        hi.append(POS_INF)
                    elif r < 0.9:
                        lo.append(NEG_INF)
                        hi.append(v)
                    else:
                        lo.append(NEG_INF)
                        hi.append(POS_INF)
                boxes.append(Box(tuple(lo), tuple(hi)))
            else:
                lo = [rand_fraction(rng, -5, 5, 2) for _ in range(dim)]
                boxes.append(
                    Box(
                        tuple(lo),
                        tuple(a + abs(rand_fraction(rng, 0, 4, 2)) for a in lo),
                    )
                )
        shapes.append(tuple(boxes))
    objects = tuple(
        (rand_point(rng, dim, -4, 4, 2), rng.randrange(len(shapes)))
        for _ in range(rng.randint(0, max_objects))
    )
    return ShapeInstance(dim, tuple(shapes), objects)


def rand_tpwb(rng, dim, max_n=3, max_m=3) -> TpwbInstance:
    pts = rand_point_set(rng, dim, rng.randint(0, max_n), -5, 5, 2)
    boxes = []
    for _ in range(rng.randint(0, max_m)):
        lo = [rand_fraction(rng, -5, 5, 2) for _ in range(dim)]
        boxes.append(
            Box(tuple(lo), tuple(a + abs(rand_fraction(rng, 0, 4, 2)) for a in lo))
        )
    return TpwbInstance(pts, tuple(boxes))


def rand_maxconv(rng, max_n=6, max_entry=10) -> MaxConvLbInstance:
    n = rng.randint(1, max_n)
    mk = lambda: tuple(rng.randint(1, max_entry) for _ in range(n))
    return MaxConvLbInstance(mk(), mk(), mk())


def rand_linear_alignment(rng, max_n=5, max_m=8) -> LinearAlignmentInstance:
    n = rng.randint(1, max_n)
    m = rng.randint(n, max_m)
    mk = lambda k: tuple(
        sorted(rand_fraction(rng, -40, 40, 4) for _ in range(k))
    )
    return LinearAlignmentInstance(mk(n), mk(m))


def rand_necklace(rng, max_n=6) -> NecklaceInstance:
    n = rng.randint(1, max_n)
    mk = lambda: tuple(sorted(Fraction(rng.randint(0, 23), 24) for _ in range(n)))
    return NecklaceInstance(mk(), mk())


def rand_fopz(rng, max_set=5, max_entry=8) -> FopzAeeFormula:
    na = rng.randint(1, 3)
    dims = [rng.randint(1, 2) for _ in range(3)]
    atoms = tuple(
        FopzAtom(
            tuple(rng.randint(-2, 2) for _ in range(dims[0])),
            tuple(rng.randint(-2, 2) for _ in range(dims[1])),
            tuple(rng.randint(-2, 2) for _ in range(dims[2])),
            rng.randint(-3, 3),
        )
        for _ in range(na)
    )
    dnf = tuple(
        tuple((rng.randrange(na), rng.random() < 0.4) for _ in range(rng.randint(1, na)))
        for _ in range(rng.randint(1, 3))
    )
    mkset = lambda d: tuple(
        sorted(
            {
                tuple(rng.randint(-max_entry, max_entry) for _ in range(d))
                for _ in range(rng.randint(1, max_set))
            }
        )
    )
    return FopzAeeFormula(mkset(dims[0]), mkset(dims[1]), mkset(dims[2]), atoms, dnf)


def rand_hypergraph(
    rng, u: int, k: int, n: int, mode: Optional[str] = None
) -> KPartiteHypergraph:
    """Dense-biased hypergraphs with a mix of YES and NO clique verdicts.

    'few': a few random removals (usually YES); 'kill': all edges on one
    class combination removed (always NO); 'heavy': many removals."""
    H = KPartiteHypergraph.complete(u, k, n)
    edges = sorted(H.edges)
    mode = mode or rng.choice(["few", "few", "kill", "heavy"])
    if mode == "few":
        return H.without(rng.sample(edges, rng.randint(0, min(4, len(edges)))))
    if mode == "kill":
        classes = tuple(sorted(rng.sample(range(k), u)))
        return H.without([e for e in edges if tuple(c for c, _ in e) == classes])
    count = rng.randint(5, min(10, len(edges)))
    return H.without(rng.sample(edges, count))
