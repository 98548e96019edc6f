from fractions import Fraction as F

import pytest

from hutkit.core import PointSet, pt
from hutkit.errors import FormatError, UndefinedDistance
from hutkit.gen import rand_point, rand_point_set
from hutkit.hausdorff import (
    HutInstance,
    directed_hausdorff,
    directed_hausdorff_fast,
    undirected_hausdorff,
)


def ps(*points):
    return PointSet.of([pt(*p) if isinstance(p, tuple) else pt(p) for p in points])


def test_directed_examples():
    P = ps((0,), (10,))
    assert directed_hausdorff(P, P) == 0
    assert directed_hausdorff(P, ps((0,))) == 10
    with pytest.raises(UndefinedDistance):
        directed_hausdorff(P, PointSet(1, ()))


def test_undirected_exposes_asymmetry():
    P, Q = ps((0,)), ps((0,), (10,))
    assert directed_hausdorff(P, Q) == 0
    assert undirected_hausdorff(P, Q) == 10
    assert undirected_hausdorff(P, P) == 0


def brute_directed(P, Q):
    return max(min(max(abs(a - b) for a, b in zip(p.coords, q.coords)) for q in Q)
               for p in P)


def test_against_double_loop(rng):
    for _ in range(300):
        dim = rng.choice([1, 2, 3])
        P = rand_point_set(rng, dim, rng.randint(1, 30))
        Q = rand_point_set(rng, dim, rng.randint(1, 30))
        d = directed_hausdorff(P, Q)
        assert d == brute_directed(P, Q)
        assert undirected_hausdorff(P, Q) == max(d, directed_hausdorff(Q, P))


def test_fast_path_agrees(rng):
    for _ in range(150):
        dim = rng.choice([1, 2, 3])
        P = rand_point_set(rng, dim, rng.randint(1, 12))
        Q = rand_point_set(rng, dim, rng.randint(1, 12))
        assert directed_hausdorff_fast(P, Q) == directed_hausdorff(P, Q)


def test_translation_invariance(rng):
    for _ in range(200):
        dim = rng.choice([1, 2])
        P = rand_point_set(rng, dim, rng.randint(1, 8))
        Q = rand_point_set(rng, dim, rng.randint(1, 8))
        v = rand_point(rng, dim)
        assert directed_hausdorff(P.translate(v), Q.translate(v)) == directed_hausdorff(P, Q)
        assert undirected_hausdorff(P, Q) == undirected_hausdorff(Q, P)
        assert directed_hausdorff(P, Q) <= undirected_hausdorff(P, Q)


def test_instance_validation():
    P = ps((0,))
    with pytest.raises(FormatError):
        HutInstance(P=P, Q=P, mode="discrete")  # missing T
    with pytest.raises(FormatError):
        HutInstance(P=ps(("1/2",)), Q=ps((0,)), mode="discrete", T=ps((0,)))
    inst = HutInstance(P=P, Q=P, mode="discrete", T=ps((0,)), delta=F(1))
    assert inst.dim == 1
