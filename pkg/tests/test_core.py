from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hutkit.core import (
    NEG_INF,
    POS_INF,
    Box,
    Point,
    box,
    box_contains,
    box_intersect,
    common_denominator_scale,
    format_scalar,
    linf_distance,
    minkowski_cube,
    parse_scalar,
    pt,
)
from hutkit.errors import ContractViolation, FormatError, InvalidParameter

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=64)


def test_linf_examples():
    assert linf_distance(pt(0, 0), pt(0, 0)) == 0
    assert linf_distance(pt(1, -2), pt(4, 0)) == 3
    assert linf_distance(pt("1/2"), pt("-1/3")) == F(5, 6)


def test_linf_dimension_mismatch():
    with pytest.raises(ContractViolation):
        linf_distance(pt(0), pt(0, 0))


@given(st.lists(rationals, min_size=2, max_size=2),
       st.lists(rationals, min_size=2, max_size=2),
       st.lists(rationals, min_size=2, max_size=2))
def test_linf_is_a_metric(a, b, c):
    pa, pb, pc = Point(tuple(a)), Point(tuple(b)), Point(tuple(c))
    assert linf_distance(pa, pb) == linf_distance(pb, pa)
    assert (linf_distance(pa, pb) == 0) == (pa == pb)
    assert linf_distance(pa, pc) <= linf_distance(pa, pb) + linf_distance(pb, pc)


def test_box_contains_examples():
    unit = box((0, 1), (0, 1))
    assert box_contains(unit, pt(1, 1))
    assert not box_contains(unit, pt(1, F(1001, 1000)))
    orthant = box((0, POS_INF), (NEG_INF, 2))
    assert box_contains(orthant, pt(100, 2))


def test_minkowski_cube_examples():
    assert minkowski_cube(pt(0, 0), F(1)) == box((-1, 1), (-1, 1))
    assert minkowski_cube(pt(3), F(1, 2)) == box(("5/2", "7/2"))
    with pytest.raises(InvalidParameter):
        minkowski_cube(pt(0), F(0))


@given(rationals, rationals,
       st.fractions(min_value=F(1, 16), max_value=10, max_denominator=16))
def test_cube_membership_is_distance_predicate(a, b, delta):
    p, q = Point((a,)), Point((b,))
    assert box_contains(minkowski_cube(q, delta), p) == (linf_distance(p, q) <= delta)


def test_box_intersect_examples():
    assert box_intersect(box((0, 2)), box((1, 3))) == box((1, 2))
    assert box_intersect(box((0, 1)), box((2, 3))) is None
    assert box_intersect(box((0, POS_INF)), box((NEG_INF, 0))) == box((0, 0))


def test_box_validation():
    with pytest.raises(ContractViolation):
        Box((F(1),), (F(0),))
    with pytest.raises(ContractViolation):
        Box((POS_INF,), (POS_INF,))
    assert box((NEG_INF, POS_INF)).is_orthant()
    assert box((0, POS_INF)).is_orthant()
    assert not box((0, 1)).is_orthant()


@given(rationals)
def test_scalar_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_scalar_encoding():
    assert format_scalar(F(-3, 4)) == "-3/4"
    assert format_scalar(F(7)) == "7"
    assert format_scalar(POS_INF) == "+inf"
    assert format_scalar(NEG_INF) == "-inf"
    assert parse_scalar("+inf", allow_inf=True) == POS_INF
    with pytest.raises(FormatError):
        parse_scalar("+inf")
    with pytest.raises(FormatError):
        parse_scalar("nope")


def test_common_denominator_scale():
    assert common_denominator_scale([F(1, 2), F(1, 3), F(5)]) == 6
    assert common_denominator_scale([]) == 1
