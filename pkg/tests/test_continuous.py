from fractions import Fraction as F

import pytest

from hutkit.continuous import (
    candidate_deltas,
    decide,
    decide_2d,
    decide_3d_lopsided,
    optimize,
)
from hutkit.core import PointSet, pt
from hutkit.errors import InvalidParameter, UnsupportedVariant
from hutkit.gen import rand_fraction, rand_hut_decision, rand_point, rand_point_set
from hutkit.hausdorff import linf_distance
from hutkit.oracles import brute_hut_decide, brute_hut_optimize, hut_feasible_at


def ps(*points):
    return PointSet.of([pt(*p) for p in points])


def test_decide_2d_trivial_cases():
    P = ps((0, 0), (3, 1))
    cert = decide_2d(P, P, F(1))
    assert cert is not None and hut_feasible_at(P, P, F(1), cert.tau, "directed")
    far = ps((0, 0), (10, 0))
    assert decide_2d(far, ps((0, 0)), F(1)) is None
    with pytest.raises(InvalidParameter):
        decide_2d(P, P, F(0))


def test_decide_2d_matches_oracle(rng):
    for _ in range(120):
        variant = rng.choice(["directed", "undirected"])
        inst = rand_hut_decision(rng, 2, 6, 6, variant)
        want = brute_hut_decide(inst.P, inst.Q, inst.delta, variant, 2)
        got = decide_2d(inst.P, inst.Q, inst.delta, variant)
        assert (want is None) == (got is None)
        if got is not None:
            assert hut_feasible_at(inst.P, inst.Q, inst.delta, got.tau, variant)
            for p, q in got.certificate:
                assert linf_distance(p + got.tau, q) <= inst.delta


def test_decide_3d_trivial_cases():
    single = ps((0, 0, 0))
    targets = ps((5, 5, 5), (9, 9, 9))
    cert = decide_3d_lopsided(single, targets, F(1, 2))
    assert cert is not None
    both = ps((0, 0, 0), (10, 0, 0))
    assert decide_3d_lopsided(both, both, F(1, 2)).tau is not None
    with pytest.raises(UnsupportedVariant):
        decide(both, both, F(1), "undirected", 3)


def test_decide_3d_matches_oracle(rng):
    for _ in range(60):
        inst = rand_hut_decision(rng, 3, 5, 8, "directed")
        want = brute_hut_decide(inst.P, inst.Q, inst.delta, "directed", 3)
        got = decide_3d_lopsided(inst.P, inst.Q, inst.delta)
        assert (want is None) == (got is None)
        if got is not None:
            assert hut_feasible_at(inst.P, inst.Q, inst.delta, got.tau, "directed")


def test_optimize_cross_methods(rng):
    for _ in range(60):
        dim = rng.choice([1, 2])
        P = rand_point_set(rng, dim, rng.randint(1, 5))
        Q = rand_point_set(rng, dim, rng.randint(1, 5))
        for variant in ("directed", "undirected"):
            v, tau = optimize(P, Q, variant, dim)
            bv, _ = brute_hut_optimize(P, Q, variant, dim)
            assert v == bv
            if v > 0:
                assert hut_feasible_at(P, Q, v, tau, variant)


def test_optimize_p_equals_q(rng):
    P = rand_point_set(rng, 2, 4)
    v, tau = optimize(P, P, "directed", 2)
    assert v == 0 and all(c == 0 for c in tau.coords)


def test_delta_monotonicity(rng):
    for _ in range(40):
        dim = rng.choice([1, 2])
        variant = rng.choice(["directed", "undirected"])
        P = rand_point_set(rng, dim, rng.randint(1, 4))
        Q = rand_point_set(rng, dim, rng.randint(1, 4))
        cands = [c for c in candidate_deltas(P, Q) if c > 0]
        sample = sorted(rng.sample(cands, min(8, len(cands))))
        feas = [decide(P, Q, d, variant, dim) is not None for d in sample]
        assert feas == sorted(feas)  # once feasible, stays feasible


def test_translation_and_scaling_covariance(rng):
    for _ in range(40):
        dim = rng.choice([1, 2])
        variant = rng.choice(["directed", "undirected"])
        P = rand_point_set(rng, dim, rng.randint(1, 4))
        Q = rand_point_set(rng, dim, rng.randint(1, 4))
        v0, tau0 = optimize(P, Q, variant, dim)
        shift = rand_point(rng, dim)
        v1, tau1 = optimize(P, Q.translate(shift), variant, dim)
        assert v1 == v0
        if v0 > 0:
            assert hut_feasible_at(P, Q.translate(shift), v0, tau0 + shift, variant)
        lam = abs(rand_fraction(rng, 1, 5)) + F(1, 3)
        scale = lambda S: PointSet(dim, tuple(p.scale(lam) for p in S))
        v2, _ = optimize(scale(P), scale(Q), variant, dim)
        assert v2 == lam * v0


def test_candidate_boundary(rng):
    # decide at the optimum is feasible, below the previous candidate is not
    for _ in range(25):
        dim = rng.choice([1, 2])
        P = rand_point_set(rng, dim, rng.randint(1, 4))
        Q = rand_point_set(rng, dim, rng.randint(1, 4))
        v, _ = optimize(P, Q, "directed", dim)
        cands = candidate_deltas(P, Q)
        below = [c for c in cands if 0 < c < v]
        if v > 0:
            assert decide(P, Q, v, "directed", dim) is not None
        if below:
            assert decide(P, Q, below[-1], "directed", dim) is None
