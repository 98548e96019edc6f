from fractions import Fraction as F

import pytest

from hutkit.core import Box, Point, PointSet, pt
from hutkit.errors import ContractViolation, InvalidParameter
from hutkit.gen import rand_point, rand_shapes, rand_tpwb, rand_tpwo
from hutkit.hausdorff import HutInstance
from hutkit.instances import (
    ShapeInstance,
    TpwoInstance,
    TpwoSub,
    compose,
    default_orthant_bounding,
    hut_to_tpwc,
    orthant_shapes_to_tpwo,
    shapes_to_tpwb,
    tpwb_to_tpwo_double_dim,
    tpwc_to_hut,
    tpwo_to_tpwc,
    tpwo_to_uhut,
)
from hutkit.oracles import (
    brute_hut_decide,
    brute_shapes,
    brute_tpwb,
    brute_tpwc,
    brute_tpwo,
)

TRIALS = 200


def ps(*points):
    return PointSet.of([pt(*p) for p in points])


def test_hut_tpwc_roundtrip():
    inst = HutInstance(P=ps((0, 0)), Q=ps((1, 1)), delta=F(2))
    t = hut_to_tpwc(inst)
    back = tpwc_to_hut(t)
    assert back.P == inst.P and back.Q == inst.Q and back.delta == inst.delta
    assert t.feasible_at(Point((F(1), F(1))))


def test_tpwo_validation():
    target = Box((F(0), F(0)), (F(1), F(2)))
    with pytest.raises(ContractViolation):
        TpwoInstance((), F(3), target, F(1))  # delta0 must equal max side
    with pytest.raises(InvalidParameter):
        TpwoInstance((), F(2), target, F(2))  # side must exceed delta0


def test_tpwo_to_tpwc_trivial():
    target = Box((F(0),), (F(1),))
    sub = TpwoSub(ps((0,)), ps((0,)))
    inst = TpwoInstance((sub,), F(3), target, F(1))
    out = tpwo_to_tpwc(inst)
    assert (brute_tpwo(inst) is None) == (brute_tpwc(out) is None)
    # a sub-instance whose only cube is out of reach of the target box
    far = TpwoInstance((TpwoSub(ps((0,)), ps((100,))),), F(3), target, F(1))
    assert brute_tpwo(far) is None
    assert brute_tpwc(tpwo_to_tpwc(far)) is None


def test_tpwo_to_tpwc_equivalence(rng):
    for _ in range(TRIALS):
        inst = rand_tpwo(rng, rng.choice([1, 2]))
        out = tpwo_to_tpwc(inst)
        assert len(out.points) == sum(len(s.points) for s in inst.subs) + 2
        assert len(out.centers) <= sum(len(s.centers) for s in inst.subs) + 2
        assert (brute_tpwo(inst) is None) == (brute_tpwc(out) is None)


def test_shapes_to_tpwb_equivalence(rng):
    for _ in range(TRIALS):
        inst = rand_shapes(rng, rng.choice([1, 2]))
        assert (brute_shapes(inst) is None) == (brute_tpwb(shapes_to_tpwb(inst)) is None)


def test_shapes_to_tpwb_rejects_orthants(rng):
    inst = rand_shapes(rng, 2, orthant=True)
    if all(b.is_finite() for sh in inst.shapes for b in sh):
        return
    with pytest.raises(ContractViolation):
        shapes_to_tpwb(inst)


def test_compose_solution_sets(rng):
    empty = ShapeInstance(2, (), ())
    a = rand_shapes(rng, 2)
    c = compose(a, empty)
    for _ in range(20):
        tau = rand_point(rng, 2, -8, 8)
        assert c.feasible_at(tau) == a.feasible_at(tau)
    for _ in range(80):
        a, b = rand_shapes(rng, 2), rand_shapes(rng, 2)
        ab = compose(a, b)
        ba = compose(b, a)
        for _ in range(25):
            tau = rand_point(rng, 2, -8, 8)
            want = a.feasible_at(tau) and b.feasible_at(tau)
            assert ab.feasible_at(tau) == want == ba.feasible_at(tau)


def test_orthant_shapes_equivalence(rng):
    for _ in range(TRIALS):
        inst = rand_shapes(rng, rng.choice([1, 2]), orthant=True)
        out = orthant_shapes_to_tpwo(inst, default_orthant_bounding(inst))
        assert (brute_shapes(inst) is None) == (brute_tpwo(out) is None)


def test_orthant_shapes_examples(rng):
    full = ShapeInstance(
        1, ((Box((F(-100),), (float("inf"),)),),), ((Point((F(0),)), 0),)
    )
    out = orthant_shapes_to_tpwo(full, Box((F(-1),), (F(1),)))
    assert brute_tpwo(out) is not None
    miss = ShapeInstance(
        1, ((Box((F(100),), (float("inf"),)),),), ((Point((F(0),)), 0),)
    )
    # solutions exist but only beyond the caller's bounding region
    out2 = orthant_shapes_to_tpwo(miss, default_orthant_bounding(miss))
    assert brute_tpwo(out2) is not None


def test_doubling_equivalence(rng):
    for trial in range(150):
        dim = 1 if trial % 4 else 2
        if dim == 1:
            inst = rand_tpwb(rng, 1, 3, 3)
        else:
            inst = rand_tpwb(rng, 2, 2, 2)
        out = tpwb_to_tpwo_double_dim(inst)
        assert out.dim == 2 * dim
        assert (brute_tpwb(inst) is None) == (brute_tpwo(out) is None)


def test_doubling_worked_example():
    # 1-D: point at 1, box [0, 2]; feasible (tau = 0 already works)
    from hutkit.instances import TpwbInstance

    tp = TpwbInstance(ps((1,)), (Box((F(0),), (F(2),)),))
    out = tpwb_to_tpwo_double_dim(tp)
    assert len(out.subs) == 2 and len(out.subs[0].points) == 1
    assert brute_tpwo(out) is not None
    bad = TpwbInstance(ps((10,)), (Box((F(0),), (F(2),)),))
    # still feasible: translations are unrestricted, so shift left
    assert brute_tpwo(tpwb_to_tpwo_double_dim(bad)) is not None
    # infeasible needs two points straddling more than the box span
    two = TpwbInstance(ps((0,), (10,)), (Box((F(0),), (F(2),)),))
    assert brute_tpwb(two) is None
    assert brute_tpwo(tpwb_to_tpwo_double_dim(two)) is None


def test_doubling_point_map_counts(rng):
    inst = rand_tpwb(rng, 2, 3, 2)
    out = tpwb_to_tpwo_double_dim(inst)
    if inst.boxes:
        assert len(out.subs) == 4
        for sub in out.subs:
            assert len(sub.points) == len(inst.points)
            assert len(sub.centers) == len(inst.boxes)


def test_tpwo_to_uhut_equivalence(rng):
    for _ in range(TRIALS):
        inst = rand_tpwo(rng, rng.choice([1, 2]))
        out = tpwo_to_uhut(inst)
        assert out.variant == "undirected" and out.mode == "continuous"
        want = brute_tpwo(inst) is not None
        got = brute_hut_decide(out.P, out.Q, out.delta, "undirected") is not None
        assert want == got


def test_tpwo_to_uhut_trivial_sub(rng):
    # center within delta/3 of the target center becomes a trivial YES pair
    target = Box((F(0),), (F(1),))
    sub = TpwoSub(ps((0,)), ps(("1/2",)))
    inst = TpwoInstance((sub,), F(2), target, F(1))
    out = tpwo_to_uhut(inst)
    want = brute_tpwo(inst) is not None
    assert want == (brute_hut_decide(out.P, out.Q, out.delta, "undirected") is not None)
