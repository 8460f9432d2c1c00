"""Entropies of the angular factor of central-potential eigenstates.

The squared spherical harmonic |Y_{l,m}|^2 integrates against its own p-th
power through three independent routes: an exact linearization of the
Gegenbauer power into hypergeometric-type rational sums, an exact
Bell-polynomial expansion of the orthonormal Jacobi power, and direct
adaptive quadrature.  Closed forms cover the (l, l), (l, l-1) families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import specfun
from .errors import AccuracyError, DomainError, UnboundedGrowthError
from .order import EntropyOrder, as_order

__all__ = [
    "AngularState", "AngularResult", "norm_const_squared",
    "lambda_linearization", "lambda_bell", "lambda_quadrature",
    "lambda_closed", "renyi_angular", "shannon_angular",
]

_LN_PI = math.log(math.pi)
_LN_2 = math.log(2.0)

# exact polynomial-power routes are supported on this lattice
MAX_TWO_P = 8
MAX_DEGREE = 8


@dataclass(frozen=True)
class AngularState:
    """Orbital and magnetic quantum numbers of a spherical harmonic."""

    l: int
    m: int

    def __post_init__(self):
        if self.l < 0:
            raise DomainError(f"orbital number must be >= 0, got l={self.l}")
        if abs(self.m) > self.l:
            raise DomainError(f"|m| must not exceed l, got l={self.l}, m={self.m}")

    @property
    def m_abs(self) -> int:
        # entropies depend on m only through |m|
        return abs(self.m)


@dataclass(frozen=True)
class AngularResult:
    """Power integral of |Y_{l,m}|^2 and the derived entropy."""

    lambda_value: float
    renyi: float | None
    method: str
    p: EntropyOrder
    warnings: tuple[str, ...] = ()
    signed_power_value: float | None = None


def norm_const_squared(state: AngularState) -> float:
    """Squared normalisation constant of Y_{l,m} in the Gegenbauer form.

    A^2 = (l + 1/2) (l-m)! Gamma(m+1/2)^2 / (2^{1-2m} pi^2 (l+m)!), m = |m|.
    Returned through an exact rational over pi.
    """
    l, m = state.l, state.m_abs
    r = (Fraction(2 * l + 1, 2) * math.factorial(l - m)
         * Fraction(math.factorial(2 * m), 4 ** m * math.factorial(m)) ** 2
         * Fraction(2 ** (2 * m), 2) / math.factorial(l + m))
    return float(r) / math.pi


def _renyi_from_lambda(lam: float, order: EntropyOrder) -> float | None:
    if order.is_unity:
        return None
    if not lam > 0:
        raise DomainError(f"power integral must be positive to take entropy, got {lam}")
    return math.log(lam) / (1.0 - order.p)


def _check_lattice_limits(l: int, m: int, q: int):
    if q > MAX_TWO_P or (l - m) > MAX_DEGREE:
        raise DomainError(
            f"exact routes support 2p <= {MAX_TWO_P} and l-|m| <= {MAX_DEGREE}, "
            f"got l={l}, m={m}, 2p={q}")


@lru_cache(maxsize=None)
def _ctilde0(l: int, m: int, q: int) -> Fraction:
    """Exact rational core of the linearized 2p-fold Gegenbauer product.

    The nested sum over indices j_1 .. j_q in [0, l-m] collapses through the
    generating polynomial U(z) = sum_j u_j z^j: grouping by the total degree
    J = j_1 + ... + j_q turns it into sum_J (c)_J/(d)_J [z^J] U(z)^q.
    """
    n = l - m
    u = [specfun.pochhammer(m - l, j) * specfun.pochhammer(l + m + 1, j)
         / (specfun.pochhammer(m + 1, j) * math.factorial(j))
         for j in range(n + 1)]
    upoly = specfun.RationalPoly.from_list(u)
    upow = specfun.poly_power(upoly, q) if n > 0 else specfun.RationalPoly.from_list([1])
    c = Fraction(m * q, 2) + 1        # m p + 1
    d = Fraction(m * q + 2)           # 2 m p + 2
    acc = Fraction(0)
    for big_j, coeff in enumerate(upow.coeffs):
        if coeff == 0:
            continue
        acc += specfun.pochhammer(c, big_j) / specfun.pochhammer(d, big_j) * coeff
    return Fraction(math.comb(l, n)) ** q * acc


def _lin_log_prefactor(l: int, m: int, p: float) -> float:
    lg = math.lgamma
    return ((2 * p * (2 * m - 1) + 2) * _LN_2
            + p * math.log(2 * l + 1)
            - (2 * p - 1) * _LN_PI
            + 2 * lg(m * p + 1) - lg(2 * m * p + 2)
            + p * (2 * lg(m + 0.5) + 2 * lg(m + 1.0)
                   + lg(l - m + 1.0) + lg(l + m + 1.0)
                   - 2 * lg(2 * m + 1.0) - 2 * lg(l + 1.0)))


def _signed_exp(sign: int, logmag: float, context) -> float:
    if logmag > 700.0:
        raise UnboundedGrowthError(
            f"exact angular sum overflows floating range for {context}",
            context=context)
    return sign * math.exp(logmag)


def _ambiguity(state: AngularState, order: EntropyOrder, signed: float,
               method: str, rtol: float) -> AngularResult:
    """Package an exact polynomial-power value, resolving odd-2p sign issues.

    For odd 2p with a sign-changing Jacobi factor the polynomial routes
    integrate the signed power rather than the absolute value; the
    definition-faithful value then comes from quadrature and the signed
    result is kept for inspection.
    """
    q = order.two_p
    ambiguous = (q % 2 == 1) and state.l > state.m_abs
    if not ambiguous:
        return AngularResult(signed, _renyi_from_lambda(signed, order),
                             method, order)
    quad = _lambda_quad_value(state, order.p, rtol)
    warn = ("odd 2p with sign-changing polynomial factor; "
            "quadrature value of the absolute power returned",)
    return AngularResult(quad, _renyi_from_lambda(quad, order), method, order,
                         warnings=warn, signed_power_value=signed)


def lambda_linearization(state: AngularState, p, rtol: float = 1e-12) -> AngularResult:
    """Power integral of |Y_{l,m}|^2 via the exact linearization route.

    Requires 2p to be a positive integer; the rational core is evaluated
    exactly and converted to floating point once at the end.
    """
    order = as_order(p)
    q = order.two_p
    if q is None:
        raise DomainError(f"linearization route needs 2p integer, got p={order.p}")
    l, m = state.l, state.m_abs
    _check_lattice_limits(l, m, q)
    core = _ctilde0(l, m, q)
    if core == 0:
        signed = 0.0
    else:
        logmag = _lin_log_prefactor(l, m, 0.5 * q) + specfun.log_fraction(abs(core))
        signed = _signed_exp(1 if core > 0 else -1, logmag, (l, m, order.p))
    return _ambiguity(state, order, signed, "linearization", rtol)


@lru_cache(maxsize=None)
def _bell_core(l: int, m: int, q: int) -> tuple[Fraction, int, Fraction]:
    """Exact even-k sum of the Bell route: (sum, pi-half-power, norm_square)."""
    n = l - m
    onj = specfun.orthonormal_jacobi(n, m, m)
    cs = onj.base.coeffs
    top = n * q
    args = [math.factorial(i + 1) * (cs[i] if i <= n else Fraction(0))
            for i in range(top + 1)]
    qfact = math.factorial(q)
    acc = Fraction(0)
    pi_half = None
    for k in range(0, top + 1, 2):
        b = specfun.bell_partial(k + q, q, args[:k + 1])
        g1, h1 = specfun.gamma_half_exact(k + 1)
        g2, h2 = specfun.gamma_half_exact(3 + k + m * q)
        if pi_half is None:
            pi_half = h1 - h2
        elif pi_half != h1 - h2:  # parity is fixed for even k
            raise AssertionError("inconsistent pi powers in Bell sum")
        if b == 0:
            continue
        acc += Fraction(qfact, math.factorial(k + q)) * b * 2 * g1 / g2
    return acc, (0 if pi_half is None else pi_half), onj.norm_square


def lambda_bell(state: AngularState, p, rtol: float = 1e-12) -> AngularResult:
    """Power integral of |Y_{l,m}|^2 via the Bell-polynomial route.

    Expands the 2p-th power of the orthonormal Jacobi factor with partial
    Bell polynomials over its exact coefficients; only the final assembly
    leaves rational arithmetic.
    """
    order = as_order(p)
    q = order.two_p
    if q is None:
        raise DomainError(f"Bell route needs 2p integer, got p={order.p}")
    l, m = state.l, state.m_abs
    _check_lattice_limits(l, m, q)
    acc, pi_half, norm_sq = _bell_core(l, m, q)
    if acc == 0:
        signed = 0.0
    else:
        gm, hm = specfun.gamma_half_exact(m * q + 2)  # Gamma(m p + 1)
        logmag = (specfun.log_fraction(gm) + 0.5 * hm * _LN_PI
                  - 0.5 * q * _LN_2 + (1.0 - 0.5 * q) * _LN_PI
                  - 0.5 * q * specfun.log_fraction(norm_sq)
                  + specfun.log_fraction(abs(acc)) + 0.5 * pi_half * _LN_PI)
        signed = _signed_exp(1 if acc > 0 else -1, logmag, (l, m, order.p))
    return _ambiguity(state, order, signed, "bell", rtol)


@lru_cache(maxsize=None)
def _angular_roots(l: int, m: int) -> tuple[float, ...]:
    return tuple(specfun.gegenbauer_roots(l - m, Fraction(2 * m + 1, 2)))


def _lambda_quad_value(state: AngularState, p: float, rtol: float) -> float:
    l, m = state.l, state.m_abs
    mp = m * p
    lam = Fraction(2 * m + 1, 2)
    n = l - m
    log_a2 = math.log(norm_const_squared(state))

    def f(t: float) -> float:
        c = specfun.gegenbauer_eval(n, lam, t)
        if c == 0.0:
            return 0.0
        base = (1.0 - t * t)
        return abs(c) ** (2.0 * p) * (base ** mp if m else 1.0)

    spec = specfun.QuadratureSpec(rel_tol=rtol, abs_tol=1e-14, max_subdivisions=400)
    integral = specfun.integrate(f, -1.0, 1.0, spec=spec,
                                 breakpoints=_angular_roots(l, m))
    return 2.0 * math.pi * math.exp(p * log_a2) * integral


def lambda_quadrature(state: AngularState, p, rtol: float = 1e-12) -> AngularResult:
    """Power integral of |Y_{l,m}|^2 by adaptive quadrature.

    Valid for any real p > 0; panels are split at the Gegenbauer roots where
    |.|^{2p} loses smoothness.
    """
    order = as_order(p)
    val = _lambda_quad_value(state, order.p, rtol)
    return AngularResult(val, _renyi_from_lambda(val, order), "quadrature", order)


def lambda_closed(state: AngularState, p) -> AngularResult | None:
    """Closed-form power integral for the (l, l) and (l, l-1) families.

    Returns None when the state is outside both families.  Valid for all
    real p > 0.
    """
    order = as_order(p)
    l, m = state.l, state.m_abs
    pf = order.p
    lg = math.lgamma
    if m == l:
        loglam = (((2 * l - 1) * pf + 1) * _LN_2 + pf * math.log(l + 0.5)
                  - (2 * pf - 1.5) * _LN_PI
                  + 2 * pf * lg(l + 0.5) + lg(l * pf + 1)
                  - pf * lg(2 * l + 1.0) - lg(l * pf + 1.5))
    elif m == l - 1:
        log_k = (math.log(l + 0.5) + 2 * math.log(2.0 * l - 1) + 2 * lg(l - 0.5)
                 - (3 - 2 * l) * _LN_2 - lg(2.0 * l) - 2 * _LN_PI)
        loglam = (_LN_2 + _LN_PI + pf * log_k + lg(pf + 0.5)
                  + lg(pf * (l - 1) + 1) - lg(pf * l + 1.5))
    else:
        return None
    val = math.exp(loglam)
    return AngularResult(val, _renyi_from_lambda(val, order), "closed_form", order)


def renyi_angular(state: AngularState, p, rtol: float = 1e-12) -> AngularResult:
    """Renyi entropy of the angular density, best available route.

    Dispatch: closed form when the state belongs to a closed family (any
    real p), else the exact linearization on the half-integer lattice, else
    quadrature.
    """
    order = as_order(p)
    if order.is_unity:
        raise DomainError("p = 1 is the Shannon limit; use shannon_angular")
    closed = lambda_closed(state, order)
    if closed is not None:
        return closed
    if order.on_lattice and order.two_p <= MAX_TWO_P and (state.l - state.m_abs) <= MAX_DEGREE:
        return lambda_linearization(state, order, rtol)
    return lambda_quadrature(state, order, rtol)


def _shannon_closed(state: AngularState) -> float | None:
    l, m = state.l, state.m_abs
    psi = specfun.digamma
    lg = math.lgamma
    if m == l:
        return (-l * (psi(l + 1.0) - psi(l + 1.5) + 2 * _LN_2)
                + math.log(4 * math.pi ** 2 / (2 * l + 1))
                + lg(2 * l + 1.0) - 2 * lg(l + 0.5))
    if m == l - 1:
        log_k = (math.log(l + 0.5) + 2 * math.log(2.0 * l - 1) + 2 * lg(l - 0.5)
                 - (3 - 2 * l) * _LN_2 - lg(2.0 * l) - 2 * _LN_PI)
        return (-log_k - psi(1.5) - (l - 1) * psi(float(l)) + l * psi(l + 1.5))
    return None


def _shannon_quadrature(state: AngularState, rtol: float) -> float:
    l, m = state.l, state.m_abs
    n = l - m
    lam = Fraction(2 * m + 1, 2)
    a2 = norm_const_squared(state)

    def f(t: float) -> float:
        c = specfun.gegenbauer_eval(n, lam, t)
        y = a2 * c * c * ((1.0 - t * t) ** m if m else 1.0)
        if y <= 0.0:
            return 0.0
        return -y * math.log(y)

    spec = specfun.QuadratureSpec(rel_tol=rtol, abs_tol=1e-13, max_subdivisions=400)
    integral = specfun.integrate(f, -1.0, 1.0, spec=spec,
                                 breakpoints=_angular_roots(l, m))
    return 2.0 * math.pi * integral


def shannon_angular(state: AngularState, method: str = "auto",
                    rtol: float = 1e-11) -> float:
    """Shannon entropy of the angular density.

    method: "auto" prefers the digamma closed forms for the (l, l) and
    (l, l-1) families and falls back to quadrature of -y ln y; "closed" and
    "quadrature" force a route.
    """
    if method not in ("auto", "closed", "quadrature"):
        raise DomainError(f"unknown shannon method {method!r}")
    if method != "quadrature":
        closed = _shannon_closed(state)
        if closed is not None:
            return closed
        if method == "closed":
            raise DomainError(
                f"no closed Shannon form for (l, m) = ({state.l}, {state.m})")
    return _shannon_quadrature(state, rtol)
