from fractions import Fraction as F

import pytest

from hutkit.core import PointSet, pt
from hutkit.envelope import solve_1d_opt
from hutkit.errors import FormatError
from hutkit.gen import (
    rand_dischut,
    rand_fopz,
    rand_linear_alignment,
    rand_maxconv,
    rand_necklace,
    rand_point_set,
)
from hutkit.oracles import (
    brute_allints3sum,
    brute_boxcover,
    brute_dischut,
    brute_linear_alignment,
    brute_maxconvlb,
    brute_necklace,
)
from hutkit.reductions import (
    AllInts3SumInstance,
    FopzAeeFormula,
    FopzAtom,
    LinearAlignmentInstance,
    MaxConvLbInstance,
    NecklaceInstance,
    boxcover_decide,
    dischut_to_boxcover,
    fopz_aee_to_dischut,
    linear_alignment_to_hut1d,
    linear_alignment_solution_from_tau,
    maxconvlb_to_dischut1d,
    necklace_to_linear_alignment,
    undirected_to_directed,
)


def test_maxconv_worked_examples():
    # k=2 gives A[1]+B[1]=2 >= C[2]: YES, so the DiscHuT instance is a NO
    yes = MaxConvLbInstance((1, 1), (1, 1), (1, 2))
    assert brute_maxconvlb(*yes.__dict__.values()) is True
    h = maxconvlb_to_dischut1d(yes)
    assert h.meta["flip"] is True
    assert len(h.Q) == 2 * 2 + 1 and len(h.P) == 2 and len(h.T) == 1
    assert brute_dischut(h.T, h.P, h.Q, h.delta) is None

    no = MaxConvLbInstance((1, 1), (1, 1), (1, 3))
    assert brute_maxconvlb(no.A, no.B, no.C) is False
    h2 = maxconvlb_to_dischut1d(no)
    assert brute_dischut(h2.T, h2.P, h2.Q, h2.delta) is not None


def test_maxconv_validation():
    with pytest.raises(FormatError):
        MaxConvLbInstance((1,), (1, 2), (1,))
    with pytest.raises(FormatError):
        MaxConvLbInstance((0,), (1,), (1,))


def test_maxconv_flip_random(rng):
    for _ in range(250):
        mc = rand_maxconv(rng)
        h = maxconvlb_to_dischut1d(mc)
        src = brute_maxconvlb(mc.A, mc.B, mc.C)
        tgt = brute_dischut(h.T, h.P, h.Q, h.delta) is not None
        assert src == (not tgt)


def test_linear_alignment_examples():
    one = LinearAlignmentInstance((F(0),), (F(0),))
    assert brute_linear_alignment(one.A, one.B) == (0, 0, 0)
    h = linear_alignment_to_hut1d(one)
    assert solve_1d_opt(h.P, h.Q, "directed")[0] == 0
    half = LinearAlignmentInstance((F(0),), (F(1, 2),))
    v, s, c = brute_linear_alignment(half.A, half.B)
    assert (v, s, c) == (0, 0, F(1, 2))


def test_linear_alignment_value_and_recovery(rng):
    for _ in range(250):
        la = rand_linear_alignment(rng)
        v_src, _, _ = brute_linear_alignment(la.A, la.B)
        h = linear_alignment_to_hut1d(la)
        v, tau = solve_1d_opt(h.P, h.Q, "directed")
        assert v == v_src
        s, c = linear_alignment_solution_from_tau(la, tau.coords[0])
        n = len(la.A)
        realized = max(abs(la.B[i + s] - la.A[i] - c) for i in range(n))
        assert realized == v_src


def test_necklace_chain(rng):
    same = NecklaceInstance((F(1, 4), F(1, 2)), (F(1, 4), F(1, 2)))
    assert brute_necklace(same.A, same.B)[0] == 0
    single = NecklaceInstance((F(1, 3),), (F(3, 4),))
    assert brute_necklace(single.A, single.B)[0] == 0
    for _ in range(200):
        nk = rand_necklace(rng)
        v1, _, _ = brute_necklace(nk.A, nk.B)
        lin = necklace_to_linear_alignment(nk)
        assert len(lin.B) == 2 * len(nk.B)
        v2, _, _ = brute_linear_alignment(lin.A, lin.B)
        assert v1 == v2


def test_undirected_to_directed(rng):
    for _ in range(200):
        P = rand_point_set(rng, 1, rng.randint(1, 5))
        Q = rand_point_set(rng, 1, rng.randint(1, 5))
        P2, Q2 = undirected_to_directed(P, Q)
        assert len(P2) == len(Q2) == len(P) + len(Q)
        v1, t1 = solve_1d_opt(P, Q, "undirected")
        v2, t2 = solve_1d_opt(P2, Q2, "directed")
        assert v1 == v2 and t1 == t2


def test_boxcover_flip(rng):
    for _ in range(250):
        dim = rng.choice([1, 2, 3])
        inst = rand_dischut(rng, dim, 5, 5, 5)
        bc = dischut_to_boxcover(inst.T, inst.P, inst.Q, inst.delta)
        src = brute_dischut(inst.T, inst.P, inst.Q, inst.delta) is not None
        got = boxcover_decide(bc)
        assert got == brute_boxcover(bc)
        assert src == (not got)


def test_boxcover_trivial():
    T = PointSet(1, (pt(0),))
    P = PointSet(1, (pt(0),))
    Q = PointSet(1, (pt(0),))
    bc = dischut_to_boxcover(T, P, Q, F(1))
    assert boxcover_decide(bc) is False  # DiscHuT feasible
    empty_q = dischut_to_boxcover(T, P, PointSet(1, ()), F(1))
    assert boxcover_decide(empty_q) is True


def test_fopz_examples():
    # a <= b + c over singleton zeros: TRUE
    atom = FopzAtom((1,), (0,), (1,), 0)
    f = FopzAeeFormula(((0,),), ((0,),), ((0,),), (atom,), (((0, False),),))
    assert f.evaluate() is True
    h = fopz_aee_to_dischut(f)
    assert h.meta["flip"] is True
    assert brute_dischut(h.T, h.P, h.Q, h.delta) is None
    # a <= c with a=5, c=0: FALSE
    f2 = FopzAeeFormula(((5,),), ((0,),), ((0,),), (atom,), (((0, False),),))
    assert f2.evaluate() is False
    h2 = fopz_aee_to_dischut(f2)
    assert brute_dischut(h2.T, h2.P, h2.Q, h2.delta) is not None


def test_fopz_flip_random(rng):
    from hutkit.discrete import solve_discrete

    for trial in range(150):
        f = rand_fopz(rng)
        h = fopz_aee_to_dischut(f)
        assert h.dim == 2 * len(f.atoms)
        tgt = brute_dischut(h.T, h.P, h.Q, h.delta) is not None
        assert f.evaluate() == (not tgt)
        if trial % 5 == 0:
            # the range-tree solver covers reduction outputs up to 6-D
            got = solve_discrete(h.T, h.P, h.Q, h.delta)
            assert (got is not None) == tgt


def test_allints3sum_oracle(rng):
    inst = AllInts3SumInstance((0, 1), (0, 5), (0, -5))
    assert brute_allints3sum(inst.A, inst.B, inst.C) == [True, False]
    assert brute_allints3sum((0,), (), (0,)) == [False]
    for _ in range(100):
        A = tuple({rng.randint(-12, 12) for _ in range(rng.randint(1, 6))})
        B = tuple({rng.randint(-12, 12) for _ in range(rng.randint(1, 6))})
        C = tuple({rng.randint(-12, 12) for _ in range(rng.randint(1, 6))})
        want = brute_allints3sum(A, B, C)
        # independent two-pointer recomputation over sorted B, C
        sb, sc = sorted(B), sorted(C)
        got = []
        for a in A:
            i, j = 0, len(sc) - 1
            hit = False
            while i < len(sb) and j >= 0:
                s = a + sb[i] + sc[j]
                if s == 0:
                    hit = True
                    break
                if s < 0:
                    i += 1
                else:
                    j -= 1
            got.append(hit)
        assert got == want
