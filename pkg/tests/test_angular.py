"""Checks for the spherical harmonic entropy routes."""

import math

import pytest
from hypothesis import given, settings, strategies as hst

from oscent.angular import (AngularState, lambda_bell, lambda_closed,
                            lambda_linearization, lambda_quadrature,
                            norm_const_squared, renyi_angular, shannon_angular)
from oscent.errors import DomainError

FOUR_PI = 4.0 * math.pi


def test_state_validation():
    with pytest.raises(DomainError):
        AngularState(-1, 0)
    with pytest.raises(DomainError):
        AngularState(2, 3)


def test_norm_const_ground():
    assert norm_const_squared(AngularState(0, 0)) == \
        pytest.approx(1.0 / FOUR_PI, rel=1e-15)


@pytest.mark.parametrize("p", [0.5, 1.5, 2.0, 3.0])
def test_uniform_harmonic_has_max_entropy(p):
    # |Y_00|^2 is constant, so every order gives ln(4 pi)
    res = renyi_angular(AngularState(0, 0), p)
    assert res.renyi == pytest.approx(math.log(FOUR_PI), abs=1e-12)


def test_order_one_routes_to_shannon():
    with pytest.raises(DomainError):
        renyi_angular(AngularState(3, 2), 1.0)


def test_power_integral_near_unit_order_is_normalization():
    # lambda(p) -> 1 as p -> 1 because the density is normalized
    for p in (0.999, 1.001):
        res = renyi_angular(AngularState(3, 2), p)
        assert res.lambda_value == pytest.approx(1.0, abs=5e-3)


def test_l1_m0_second_order_values():
    # lambda = 9/(20 pi) for the polar p-orbital at p = 2
    res = renyi_angular(AngularState(1, 0), 2.0)
    assert res.lambda_value == pytest.approx(9.0 / (20.0 * math.pi), rel=1e-13)
    assert res.renyi == pytest.approx(math.log(20.0 * math.pi / 9.0), rel=1e-13)
    assert res.method == "closed_form"


def test_shannon_low_harmonics():
    assert shannon_angular(AngularState(0, 0)) == \
        pytest.approx(math.log(FOUR_PI), abs=1e-10)
    assert shannon_angular(AngularState(1, 1)) == \
        pytest.approx(math.log(2.0 * math.pi / 3.0) + 5.0 / 3.0, abs=1e-10)
    assert shannon_angular(AngularState(1, 0)) == \
        pytest.approx(2.0 / 3.0 + math.log(FOUR_PI / 3.0), abs=1e-10)


def test_shannon_quadrature_matches_closed():
    for l, m in ((1, 0), (1, 1), (2, 2)):
        closed = shannon_angular(AngularState(l, m), method="closed")
        quad = shannon_angular(AngularState(l, m), method="quadrature")
        assert quad == pytest.approx(closed, abs=1e-10)


@pytest.mark.parametrize("l,m,p", [(2, 1, 2.0), (3, 1, 2.0), (4, 2, 3.0),
                                   (5, 0, 2.0), (6, 4, 1.5)])
def test_exact_routes_agree(l, m, p):
    state = AngularState(l, m)
    lin = lambda_linearization(state, p)
    bell = lambda_bell(state, p)
    quad = lambda_quadrature(state, p)
    assert lin.lambda_value == pytest.approx(bell.lambda_value, rel=1e-11)
    assert lin.lambda_value == pytest.approx(quad.lambda_value, rel=1e-8)


@pytest.mark.parametrize("l", [1, 2, 4, 6])
@pytest.mark.parametrize("p", [0.7, 2.0, 3.5])
def test_closed_family_sectoral_and_next(l, p):
    for m in (l, l - 1):
        state = AngularState(l, m)
        closed = lambda_closed(state, p)
        assert closed is not None
        quad = lambda_quadrature(state, p)
        assert closed.lambda_value == pytest.approx(quad.lambda_value,
                                                    rel=1e-9)


def test_closed_family_absent_elsewhere():
    assert lambda_closed(AngularState(4, 1), 2.0) is None


def test_sign_ambiguous_odd_power_reports_quadrature():
    # (l, m) = (2, 0) at 2p = 1: the polynomial factor changes sign, the
    # signed power integral vanishes by orthogonality, and the returned
    # value is the quadrature integral of the absolute power.
    res = lambda_linearization(AngularState(2, 0), 0.5)
    assert res.warnings
    assert res.signed_power_value == pytest.approx(0.0, abs=1e-12)
    quad = lambda_quadrature(AngularState(2, 0), 0.5)
    assert res.lambda_value == pytest.approx(quad.lambda_value, rel=1e-9)
    bell = lambda_bell(AngularState(2, 0), 0.5)
    assert bell.signed_power_value == pytest.approx(0.0, abs=1e-12)


def test_invalid_order_rejected():
    with pytest.raises(DomainError):
        renyi_angular(AngularState(1, 0), 0.0)
    with pytest.raises(DomainError):
        renyi_angular(AngularState(1, 0), -2.0)


@given(hst.integers(min_value=0, max_value=6),
       hst.integers(min_value=0, max_value=6),
       hst.sampled_from([0.5, 1.5, 2.0, 3.0]))
@settings(max_examples=30, deadline=None)
def test_magnetic_sign_symmetry(l, m, p):
    m = min(m, l)
    plus = renyi_angular(AngularState(l, m), p)
    minus = renyi_angular(AngularState(l, -m), p)
    assert plus.lambda_value == minus.lambda_value
    assert plus.renyi == minus.renyi


@given(hst.integers(min_value=0, max_value=5),
       hst.integers(min_value=0, max_value=5))
@settings(max_examples=25, deadline=None)
def test_renyi_nonincreasing_in_order(l, m):
    m = min(m, l)
    state = AngularState(l, m)
    grid = [0.5, 1.5, 2.0, 3.0, 4.0]
    values = [renyi_angular(state, p).renyi for p in grid]
    for lo, hi in zip(values[1:], values[:-1]):
        assert lo <= hi + 1e-10


@given(hst.integers(min_value=0, max_value=7))
@settings(max_examples=20, deadline=None)
def test_renyi_bounded_by_uniform(l):
    # ln(4 pi) is the maximum over states at any order
    res = renyi_angular(AngularState(l, 0), 2.0)
    assert res.renyi <= math.log(FOUR_PI) + 1e-12
