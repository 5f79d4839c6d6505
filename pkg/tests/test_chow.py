import pytest
from hypothesis import given, strategies as st

from abelquad.chow import (
    DimensionMismatchError,
    MiddleClass,
    chern_total_normal,
    chern_total_tangent_quadric,
    degree_middle,
    f_closed,
    f_series,
    intersect_middle,
    self_intersection_check,
)

from oracles import f_by_summation


def test_tangent_quadric_surface():
    c = chern_total_tangent_quadric(2)
    assert c.coeffs == (1, 2, 2)
    # Euler characteristic of P^1 x P^1: c_2 times deg Q
    assert c.coeffs[2] * 2 == 4


def test_tangent_conic():
    assert chern_total_tangent_quadric(1).coeffs == (1, 1)


@pytest.mark.parametrize("n", range(1, 65))
def test_first_chern_coefficient_is_dimension(n):
    assert chern_total_tangent_quadric(n).coeffs[1] == n


def test_tangent_quadric_rejects_zero():
    with pytest.raises(ValueError):
        chern_total_tangent_quadric(0)


def test_normal_class():
    assert chern_total_normal(2).coeffs == (1, 4, 7)
    assert chern_total_normal(3).coeffs[-1] == 24
    assert chern_total_normal(1).coeffs[-1] == 2


def test_normal_equals_tangent_of_ambient_truncated():
    for d in range(1, 10):
        full = chern_total_tangent_quadric(2 * d).coeffs
        assert chern_total_normal(d).coeffs == full[: d + 1]


FROZEN_F = [2, 7, 24, 86, 314, 1163]


def test_anchor_values():
    assert [f_by_summation(d) for d in range(1, 7)] == FROZEN_F
    assert [f_closed(d) for d in range(1, 7)] == FROZEN_F
    assert f_closed(2) == 7 and f_closed(3) == 24
    assert f_series(5) == 314


def test_dual_route_to_200():
    for d in range(1, 201):
        assert f_series(d) == f_closed(d)


def test_closed_form_large_d_matches_summation():
    for d in (500, 1000):
        assert f_closed(d) == f_by_summation(d)


def test_intersections():
    x = MiddleClass(7, 7, 2)
    assert intersect_middle(x, x) == 98
    assert intersect_middle(MiddleClass(1, 0, 2), MiddleClass(0, 1, 2)) == 0
    assert intersect_middle(MiddleClass(1, 0, 2), MiddleClass(1, 0, 2)) == 1
    with pytest.raises(DimensionMismatchError):
        intersect_middle(MiddleClass(1, 0, 2), MiddleClass(1, 0, 3))


def test_degree():
    assert degree_middle(MiddleClass(7, 7, 2)) == 14
    assert degree_middle(MiddleClass(0, 0, 2)) == 0
    assert degree_middle(MiddleClass(24, 24, 3)) == 48


def test_self_intersection_check():
    assert self_intersection_check(MiddleClass(7, 7, 2))
    assert self_intersection_check(MiddleClass(0, 0, 2))
    assert not self_intersection_check(MiddleClass(1, 1, 2))


def test_middle_class_validation():
    with pytest.raises(ValueError):
        MiddleClass(1, 1, 0)
    assert MiddleClass(-1, 3, 2).is_effective() is False
    assert MiddleClass(0, 3, 2).is_effective() is True


ints = st.integers(min_value=-10**6, max_value=10**6)


@given(ints, ints, ints, ints, ints, ints, ints)
def test_pairing_bilinear_symmetric(a1, b1, a2, b2, a3, b3, k):
    x, y, z = MiddleClass(a1, b1, 4), MiddleClass(a2, b2, 4), MiddleClass(a3, b3, 4)
    assert intersect_middle(x, y) == intersect_middle(y, x)
    lhs = intersect_middle(MiddleClass(k * a1 + a2, k * b1 + b2, 4), z)
    assert lhs == k * intersect_middle(x, z) + intersect_middle(y, z)
    assert degree_middle(MiddleClass(a1 + a2, b1 + b2, 4)) == degree_middle(x) + degree_middle(y)
