from fractions import Fraction as F

import pytest

from hutkit.core import Point, PointSet, pt
from hutkit.errors import SizeGuardExceeded
from hutkit.gen import rand_point_set
from hutkit.oracles import (
    brute_hut_decide,
    brute_hut_optimize,
    brute_dischut,
    brute_maxconvlb,
    hut_feasible_at,
)


def ps(*vals):
    return PointSet.of([pt(*v) if isinstance(v, tuple) else pt(v) for v in vals])


def test_decide_examples():
    P = ps(0, 4)
    Q = ps(1, 3)
    tau = brute_hut_decide(P, Q, F(1), "directed")
    assert tau is not None and hut_feasible_at(P, Q, F(1), tau)
    assert brute_hut_decide(P, Q, F(1, 2), "directed") is None
    assert brute_hut_decide(P, P, F(1, 7), "undirected") is not None


def test_optimize_examples():
    v, tau = brute_hut_optimize(ps(0, 10), ps(0), "directed")
    assert v == 5 and tau == Point((F(-5),))
    P = ps((0, 0), (3, 3))
    assert brute_hut_optimize(P, P, "undirected")[0] == 0


def test_dischut_examples():
    assert brute_dischut(ps(0), ps(1, 4), ps(1, 4), F(1)) is not None
    assert brute_dischut(ps(5), ps(0), ps(0), F(1)) is None
    assert brute_dischut(PointSet(1, ()), ps(0), ps(0), F(1)) is None


def test_maxconv_definition_recomputed(rng):
    # oracle versus an independent recomputation of the definition
    for _ in range(200):
        n = rng.randint(1, 6)
        A = [rng.randint(1, 9) for _ in range(n)]
        B = [rng.randint(1, 9) for _ in range(n)]
        C = [rng.randint(1, 9) for _ in range(n)]
        want = all(
            C[k - 1] <= max(A[i - 1] + B[k - i - 1] for i in range(1, k))
            for k in range(2, n + 1)
        )
        assert brute_maxconvlb(A, B, C) == want
    assert brute_maxconvlb([5], [5], [9]) is True  # no k in {2..n}


def test_size_guard(monkeypatch, rng):
    P = rand_point_set(rng, 3, 8)
    Q = rand_point_set(rng, 3, 8)
    monkeypatch.setenv("HUT_MAX_ORACLE", "10")
    with pytest.raises(SizeGuardExceeded):
        brute_hut_decide(P, Q, F(1), "directed")
    monkeypatch.setenv("HUT_MAX_ORACLE", "10000000")
    brute_hut_decide(ps(0), ps(0), F(1))
