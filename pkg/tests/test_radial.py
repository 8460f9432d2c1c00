"""Checks for radial norm integrals and radial entropies."""

import math

import pytest
import scipy.integrate as si
from hypothesis import given, settings, strategies as hst

from oscent import specfun
from oscent.errors import DomainError
from oscent.radial import (OscillatorParams, QuantumState, closed_n1l, energy,
                           laguerre_norm, negparam_laguerre_integral,
                           radial_density, renyi_radial_exact,
                           shannon_radial_exact)

# independently frozen dual-route value of the n=1, l=0 norm at p=2
N10_P2 = 0.255572398382168


def test_state_validation():
    with pytest.raises(DomainError):
        QuantumState(-1, 0, 0)
    with pytest.raises(DomainError):
        QuantumState(0, 1, 2)
    with pytest.raises(DomainError):
        OscillatorParams(lam=0.0)


def test_energy_ladder():
    assert energy(QuantumState(0, 0, 0)) == pytest.approx(1.5)
    assert energy(QuantumState(2, 1, 0)) == pytest.approx(6.5)
    assert energy(QuantumState(1, 3, 0), OscillatorParams(lam=2.0)) == \
        pytest.approx(13.0)


@pytest.mark.parametrize("n,l", [(0, 0), (1, 2), (3, 1), (7, 2)])
def test_unit_norm_at_order_one(n, l):
    res = laguerre_norm(n, l, 1.0)
    assert res.value == pytest.approx(1.0, abs=1e-10)


def test_frozen_norm_anchor():
    res = laguerre_norm(1, 0, 2.0)
    assert res.path == "symbolic"
    assert res.value == pytest.approx(N10_P2, rel=1e-12)


@pytest.mark.parametrize("n,l,q", [(1, 0, 2), (2, 1, 4), (4, 2, 2),
                                   (6, 0, 6), (3, 3, 4)])
def test_symbolic_vs_quadrature(n, l, q):
    sym = laguerre_norm(n, l, q / 2.0, path="symbolic")
    quad = laguerre_norm(n, l, q / 2.0, path="quadrature")
    assert quad.value == pytest.approx(sym.value, rel=1e-11)


def test_degree_cap_falls_back_to_quadrature():
    auto = laguerre_norm(31, 0, 2.0)
    assert auto.path == "quadrature"
    assert any("cap" in w for w in auto.warnings)
    sym = laguerre_norm(31, 0, 2.0, path="symbolic")
    assert auto.value == pytest.approx(sym.value, rel=1e-10)


def test_ground_norm_closed_form():
    # n = 0: N_{0,l}(p) = Gamma(lp + 3/2) / (p^{lp+3/2} Gamma(l+3/2)^p)
    for l in (0, 1, 2):
        for p in (0.6, 1.7, 2.0, 3.0):
            want = math.exp(math.lgamma(l * p + 1.5)
                            - (l * p + 1.5) * math.log(p)
                            - p * math.lgamma(l + 1.5))
            res = laguerre_norm(0, l, p)
            assert res.value == pytest.approx(want, rel=1e-12)
            quad = laguerre_norm(0, l, p, path="quadrature")
            assert quad.value == pytest.approx(want, rel=1e-10)


@pytest.mark.parametrize("l", [0, 1])
@pytest.mark.parametrize("q", [2, 4, 6])
def test_closed_n1_even_powers(l, q):
    closed = closed_n1l(l, q / 2.0)
    quad = laguerre_norm(1, l, q / 2.0, path="quadrature")
    assert closed.value == pytest.approx(quad.value, rel=1e-10)
    assert closed.warnings == ()


@pytest.mark.parametrize("l", [0, 1])
@pytest.mark.parametrize("q", [1, 3, 5])
def test_closed_n1_odd_powers_report_absolute_value(l, q):
    closed = closed_n1l(l, q / 2.0)
    quad = laguerre_norm(1, l, q / 2.0, path="quadrature")
    assert closed.value == pytest.approx(quad.value, rel=1e-10)
    assert any("sign" in w for w in closed.warnings)
    assert closed.signed_power_value is not None
    # |signed integral| can never exceed the absolute-power integral
    assert abs(closed.signed_power_value) <= closed.value * (1 + 1e-12)


def test_closed_n1_signed_anchor():
    # frozen from the independent integral-representation route
    closed = closed_n1l(0, 0.5)
    assert closed.signed_power_value == pytest.approx(-3.2610923178, abs=1e-9)
    closed = closed_n1l(1, 1.5)
    assert closed.signed_power_value == pytest.approx(0.0339624818, abs=1e-9)


def test_closed_n1_rejects_offlattice_order():
    with pytest.raises(DomainError):
        closed_n1l(0, 1.25)


@pytest.mark.parametrize("n,nu,x", [(1, 1.5, 0.75), (3, 2.5, 2.0),
                                    (5, 1.5, 0.3), (2, 4.0, 6.0)])
def test_negparam_integral_matches_series(n, nu, x):
    via_integral = negparam_laguerre_integral(n, nu, x)
    via_series = specfun.laguerre_eval_negparam(n, -n - nu, x)
    assert via_integral == pytest.approx(via_series, rel=1e-9)


def test_path_dispatch_errors():
    with pytest.raises(DomainError):
        laguerre_norm(2, 0, 1.3, path="symbolic")
    with pytest.raises(DomainError):
        laguerre_norm(2, 0, 0.5, path="symbolic")
    with pytest.raises(DomainError):
        laguerre_norm(2, 0, 2.0, path="closed_n1")
    with pytest.raises(DomainError):
        laguerre_norm(2, 0, 2.0, path="no_such_route")
    with pytest.raises(DomainError):
        laguerre_norm(-1, 0, 2.0)


def test_radial_density_normalized():
    for n, l in ((0, 0), (2, 1), (4, 3)):
        rho = radial_density(QuantumState(n, l, 0))
        total, _ = si.quad(lambda r: rho(r) * r * r, 0.0, 14.0, limit=200)
        assert total == pytest.approx(1.0, abs=1e-9)


def test_renyi_matches_direct_density_integral():
    state = QuantumState(2, 1, 0)
    rho = radial_density(state)
    power, _ = si.quad(lambda r: rho(r) ** 2 * r * r, 0.0, 14.0, limit=200)
    want = math.log(power) / (1.0 - 2.0)
    got = renyi_radial_exact(state, p=2.0)
    assert got == pytest.approx(want, rel=1e-9)


def test_ground_shannon_closed_value():
    # S = 3/2 + (1/2) ln pi - 2 ln 2 at lam = 1
    want = 1.5 + 0.5 * math.log(math.pi) - 2.0 * math.log(2.0)
    got = shannon_radial_exact(QuantumState(0, 0, 0))
    assert got == pytest.approx(want, abs=1e-10)


def test_shannon_matches_direct_density_integral():
    state = QuantumState(1, 1, 0)
    rho = radial_density(state)

    def f(r):
        d = rho(r)
        return -d * math.log(d) * r * r if d > 0 else 0.0

    want, _ = si.quad(f, 0.0, 12.0, limit=200)
    got = shannon_radial_exact(state)
    assert got == pytest.approx(want, abs=1e-8)


@given(hst.floats(min_value=0.2, max_value=5.0),
       hst.sampled_from([(0, 0), (1, 1), (3, 0)]),
       hst.sampled_from([0.5, 2.0, 3.0]))
@settings(max_examples=25, deadline=None)
def test_strength_rescaling_shifts_entropy(lam, nl, p):
    # rho_lam is a dilation of rho_1, so R_p drops by (3/2) ln lam
    state = QuantumState(nl[0], nl[1], 0)
    base = renyi_radial_exact(state, p=p)
    scaled = renyi_radial_exact(state, OscillatorParams(lam=lam), p=p)
    assert scaled == pytest.approx(base - 1.5 * math.log(lam), abs=1e-9)


def test_strength_rescaling_shannon():
    state = QuantumState(2, 1, 0)
    base = shannon_radial_exact(state)
    scaled = shannon_radial_exact(state, OscillatorParams(lam=3.0))
    assert scaled == pytest.approx(base - 1.5 * math.log(3.0), abs=1e-9)


def test_renyi_rejects_unit_order():
    with pytest.raises(DomainError):
        renyi_radial_exact(QuantumState(1, 0, 0), p=1.0)


def test_norm_passthrough_reuses_value():
    state = QuantumState(1, 0, 0)
    norm = laguerre_norm(1, 0, 2.0)
    direct = renyi_radial_exact(state, p=2.0)
    reused = renyi_radial_exact(state, p=2.0, norm=norm)
    assert reused == direct
