"""High-n asymptotics of the radial Renyi entropy and its regime constants.

For n -> infinity the Laguerre norm integral is dominated by different
regions of the half-line depending on the order p: the oscillatory bulk
(cosine regime, p < 3/2), the origin where the polynomials look like Bessel
functions (p > 3/2), or the matching region between the two (p = 3/2).
Each branch carries its own constant; the transition branch has an unknown
O(1) remainder and is flagged with a caveat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq
from scipy.special import jv, zeta

from . import specfun
from .errors import AccuracyError, DomainError
from .order import as_order

__all__ = [
    "P_STAR", "RegimeConstant", "AsymptoticValue", "cosine_constant",
    "bessel_constant", "bessel_zeros", "renyi_radial_asymptotic",
    "shannon_radial_asymptotic",
]

P_STAR = 1.5

_LN_2 = math.log(2.0)
_LN_PI = math.log(math.pi)

# transition-branch prefactor 8 sqrt(2) / (3 pi^{5/2})
_TRANSITION_CONST = 8.0 * math.sqrt(2.0) / (3.0 * math.pi ** 2.5)


@dataclass(frozen=True)
class RegimeConstant:
    """Constant of one asymptotic regime; value = inf marks divergence."""

    kind: str                 # "cosine" | "bessel"
    value: float
    alpha: float | None       # Bessel order; None for the cosine kind
    beta: float
    p: float

    @property
    def divergent(self) -> bool:
        return math.isinf(self.value)


@dataclass(frozen=True)
class AsymptoticValue:
    """Leading-order entropy value with its regime classification."""

    value: float
    regime: str               # "cosine" | "transition" | "bessel"
    leading_exponent: float   # coefficient of ln n
    caveat: bool              # unknown O(1)/o(1) remainder
    n: int
    l: int
    p: float


def _is_pole(a: float) -> bool:
    return a <= 0 and abs(a - round(a)) < 1e-12


def cosine_constant(p) -> RegimeConstant:
    """Bulk-regime constant C(beta, p) with beta = (1-p)/2.

    C = 2^{beta+1}/pi^{p+1/2} Gamma(3/2-p) Gamma(1-p/2) Gamma(p+1/2)
        / (Gamma(beta+2-p) Gamma(1+p)).
    Diverges exactly at p = 3/2 where Gamma(3/2-p) has its pole.
    """
    order = as_order(p)
    pf = order.p
    beta = 0.5 * (1.0 - pf)
    num_args = (1.5 - pf, 1.0 - 0.5 * pf, pf + 0.5)
    den_args = (beta + 2.0 - pf, 1.0 + pf)
    if any(_is_pole(a) for a in num_args):
        return RegimeConstant("cosine", math.inf, None, beta, pf)
    if any(_is_pole(a) for a in den_args):
        return RegimeConstant("cosine", 0.0, None, beta, pf)
    value = (2.0 ** (beta + 1.0) / math.pi ** (pf + 0.5)
             * math.gamma(num_args[0]) * math.gamma(num_args[1])
             * math.gamma(num_args[2])
             / (math.gamma(den_args[0]) * math.gamma(den_args[1])))
    return RegimeConstant("cosine", value, None, beta, pf)


@lru_cache(maxsize=None)
def bessel_zeros(alpha: float, count: int) -> tuple[float, ...]:
    """First `count` positive zeros of J_alpha, by sign-scan plus brentq.

    Works for any real order >= 0, unlike the integer-only library tables.
    """
    if alpha < 0:
        raise DomainError(f"Bessel order must be >= 0, got {alpha}")
    if count <= 0:
        return ()
    zeros: list[float] = []
    start = max(0.5, 0.9 * alpha)
    h = math.pi / 8.0
    hi = (count + 0.5 * alpha + 2.0) * math.pi + 10.0
    while len(zeros) < count:
        grid = np.arange(start, hi, h)
        vals = jv(alpha, grid)
        sgn = np.sign(vals)
        idx = np.nonzero(sgn[:-1] * sgn[1:] < 0)[0]
        for i in idx:
            z = brentq(lambda z: jv(alpha, z), grid[i], grid[i + 1],
                       xtol=1e-14, rtol=8.9e-16)
            zeros.append(z)
            if len(zeros) == count:
                break
        start, hi = hi, hi + (count - len(zeros) + 4) * math.pi + 10.0
    return tuple(zeros)


def _bessel_partial_terms(alpha: float, beta: float, p: float,
                          kzeros: int, m_nodes: int) -> np.ndarray:
    """Head plus inter-zero contributions to the C_B integral, in t."""
    q2 = 2.0 * p
    mu = 2.0 * beta + 1.0 + q2 * alpha  # origin exponent of t
    zs = np.array(bessel_zeros(alpha, kzeros + 1)) / 2.0  # zeros of J_a(2t)
    terms = np.empty(kzeros + 1)

    def panel(a, b):
        t, w = specfun.gauss_jacobi(m_nodes, q2, q2)
        half = 0.5 * (b - a)
        x = a + half * (1.0 + t)
        g = (np.abs(jv(alpha, 2.0 * x)) / ((x - a) * (b - x))) ** q2
        g = g * x ** (2.0 * beta + 1.0)
        return half ** (2.0 * q2 + 1.0) * np.dot(w, g)

    # head [0, z_1]: weight t^mu at the origin, zero factor at z_1
    t, w = specfun.gauss_jacobi(m_nodes, q2, mu)
    half = 0.5 * zs[0]
    x = half * (1.0 + t)
    g = (np.abs(jv(alpha, 2.0 * x)) / (x ** alpha * (zs[0] - x))) ** q2
    terms[0] = half ** (q2 + mu + 1.0) * np.dot(w, g)
    for k in range(kzeros):
        terms[k + 1] = panel(zs[k], zs[k + 1])
    return terms


@lru_cache(maxsize=None)
def bessel_constant(alpha: float, beta: float, p: float,
                    rtol: float = 1e-7) -> RegimeConstant:
    """Origin-regime constant C_B = 2 int_0^inf t^{2 beta + 1} |J_alpha(2t)|^{2p} dt.

    Summed between consecutive Bessel zeros; the algebraic k^{-s} tail
    (s = p - 2 beta - 1, from the t^{2 beta + 1 - p} envelope) is closed
    with a three-term Hurwitz-zeta fit.  Plain averaging cannot accelerate
    this monotone tail, so the remainder is modelled explicitly instead.
    """
    if alpha < 0:
        raise DomainError(f"Bessel order must be >= 0, got {alpha}")
    if not p > P_STAR:
        raise DomainError(
            f"Bessel-regime integral diverges for p <= 3/2, got p={p}")
    mu = 2.0 * beta + 1.0 + 2.0 * p * alpha
    if not mu > -1.0:
        raise DomainError(
            f"origin exponent {mu} <= -1: integral diverges at zero")
    s = p - 2.0 * beta - 1.0
    if not s > 1.0:
        raise DomainError(
            f"tail exponent s={s} <= 1: integral diverges at infinity")

    def estimate(kzeros: int) -> float:
        terms = _bessel_partial_terms(alpha, beta, p, kzeros, 32)
        partial = float(np.sum(terms))
        # fit T_k = a0 k^{-s} + a1 k^{-s-1} + a2 k^{-s-2} on the last panels
        nfit = min(12, kzeros - 4)
        ks = np.arange(kzeros - nfit + 1, kzeros + 1, dtype=float)
        design = np.stack([ks ** (-s), ks ** (-s - 1), ks ** (-s - 2)], axis=1)
        coef, *_ = np.linalg.lstsq(design, terms[-nfit:], rcond=None)
        rem = (coef[0] * zeta(s, kzeros + 1)
               + coef[1] * zeta(s + 1, kzeros + 1)
               + coef[2] * zeta(s + 2, kzeros + 1))
        return partial + float(rem)

    v1 = estimate(40)
    v2 = estimate(80)
    if abs(v1 - v2) > max(rtol, 1e-9) * abs(v2):
        v3 = estimate(160)
        if abs(v2 - v3) > max(rtol, 1e-9) * abs(v3):
            raise AccuracyError(
                f"Bessel-constant tail did not converge for "
                f"(alpha={alpha}, beta={beta}, p={p})",
                estimate=2.0 * v3, error_bound=abs(v2 - v3) / abs(v3))
        v2 = v3
    return RegimeConstant("bessel", 2.0 * v2, alpha, beta, p)


def renyi_radial_asymptotic(n: int, l: int, params=None, p=2.0) -> AsymptoticValue:
    """Leading-order radial Renyi entropy of a high-n oscillator state.

    Cosine branch (p < 3/2):   [ (3/2)(p-1) ln lam + ln C + ((1-p)/2) ln(2 n^3) ]/(1-p);
    transition (p = 3/2):      -2 ln[ lam^{3/4} (8 sqrt2/(3 pi^{5/2})) n^{-3/4} ln n ],
    with an unknown O(1) inside the logarithm (caveat flag);
    Bessel branch (p > 3/2):   [ (p-1) ln(2 lam^{3/2}) + ln C_B + ((p-3)/2) ln n ]/(1-p),
    with C_B at order alpha = l + 1/2 and beta = (1-p)/2.
    """
    from .radial import OscillatorParams  # cycle-free late import
    if n < 1:
        raise DomainError(f"asymptotic value needs n >= 1, got {n}")
    if l < 0:
        raise DomainError(f"orbital number must be >= 0, got l={l}")
    order = as_order(p)
    if order.is_unity:
        raise DomainError("p = 1 is the Shannon limit; use shannon_radial_asymptotic")
    params = params or OscillatorParams()
    pf = order.p
    lnlam = math.log(params.lam)
    if pf < P_STAR:
        c = cosine_constant(pf)
        value = ((1.5 * (pf - 1.0) * lnlam + math.log(c.value)) / (1.0 - pf)
                 + 0.5 * _LN_2 + 1.5 * math.log(n))
        return AsymptoticValue(value, "cosine", 1.5, False, n, l, pf)
    if pf == P_STAR:
        if n < 2:
            raise DomainError("transition branch needs n >= 2 (ln ln n term)")
        value = -2.0 * (0.75 * lnlam + math.log(_TRANSITION_CONST)
                        - 0.75 * math.log(n) + math.log(math.log(n)))
        return AsymptoticValue(value, "transition", 1.5, True, n, l, pf)
    cb = bessel_constant(l + 0.5, 0.5 * (1.0 - pf), pf)
    value = (((pf - 1.0) * (_LN_2 + 1.5 * lnlam) + math.log(cb.value))
             / (1.0 - pf) + 0.5 * (pf - 3.0) / (1.0 - pf) * math.log(n))
    return AsymptoticValue(value, "bessel", 0.5 * (pf - 3.0) / (1.0 - pf),
                           False, n, l, pf)


def shannon_radial_asymptotic(n: int, params=None) -> float:
    """Leading term of the radial Shannon entropy for large n.

    S ~ (3/2) ln n - (3/2) ln lam + ln pi - 1.
    """
    from .radial import OscillatorParams
    if n < 1:
        raise DomainError(f"asymptotic value needs n >= 1, got {n}")
    params = params or OscillatorParams()
    return 1.5 * math.log(n) - 1.5 * math.log(params.lam) + _LN_PI - 1.0
