"""Special-function kernel.

Exact rational orthogonal-polynomial coefficients, Gamma-family helpers on
the half-integer lattice, partial Bell polynomials, polynomial powers with a
dual-route consistency assertion, stable high-degree Laguerre evaluation in
extended precision, and adaptive quadrature plumbing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
import scipy.integrate
import scipy.special

from .errors import AccuracyError, DomainError

__all__ = [
    "log_gamma", "digamma", "gamma_half_exact", "log_fraction", "pochhammer",
    "binomial_exact", "RationalPoly", "OrthonormalPoly", "bell_partial",
    "poly_power", "jacobi_poly", "orthonormal_jacobi", "gegenbauer_eval",
    "gegenbauer_roots", "laguerre_poly", "laguerre_eval",
    "laguerre_orthonormal_weighted", "laguerre_eval_negparam", "bessel_j",
    "QuadratureSpec", "integrate", "gauss_legendre", "gauss_jacobi",
]


# ---------------------------------------------------------------------------
# Gamma family

def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def digamma(x: float) -> float:
    """Logarithmic derivative of Gamma at x > 0."""
    if not x > 0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    return float(scipy.special.digamma(x))


def gamma_half_exact(two_x: int) -> tuple[Fraction, int]:
    """Gamma(two_x / 2) represented exactly as (r, h) meaning r * pi**(h/2).

    Only arguments on the positive half-integer lattice are supported; these
    are the ones arising in the exact entropy sums.
    """
    if two_x <= 0:
        raise DomainError(f"gamma_half_exact requires a positive argument, got {two_x}/2")
    if two_x % 2 == 0:
        return Fraction(math.factorial(two_x // 2 - 1)), 0
    j = (two_x - 1) // 2
    # Gamma(j + 1/2) = (2j)! sqrt(pi) / (4^j j!)
    return Fraction(math.factorial(2 * j), 4 ** j * math.factorial(j)), 1


def log_fraction(fr: Fraction) -> float:
    """log of a positive rational, safe for huge numerators/denominators."""
    if fr <= 0:
        raise DomainError("log_fraction requires a positive rational")
    return math.log(fr.numerator) - math.log(fr.denominator)


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial (x)_n over exact rationals."""
    if n < 0:
        raise DomainError(f"pochhammer order must be >= 0, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def binomial_exact(x, k: int) -> Fraction:
    """Generalised binomial coefficient C(x, k) with rational x."""
    if k < 0:
        raise DomainError(f"binomial order must be >= 0, got {k}")
    return pochhammer(Fraction(x) - k + 1, k) / math.factorial(k)


# ---------------------------------------------------------------------------
# Exact polynomials

@dataclass(frozen=True)
class RationalPoly:
    """Dense univariate polynomial with exact rational coefficients.

    coeffs[k] multiplies x**k; trailing zeros are trimmed so the last
    coefficient is nonzero unless the polynomial is identically zero.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_list(cs: Sequence) -> "RationalPoly":
        cs = [Fraction(c) for c in cs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        return RationalPoly(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Horner evaluation; exact for Fraction input, numeric otherwise."""
        if isinstance(x, Fraction):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        xs = np.asarray(x)
        acc = np.zeros_like(xs, dtype=xs.dtype if xs.dtype.kind == "f" else float)
        for c in reversed(self.coeffs):
            acc = acc * xs + float(c)
        return acc if acc.shape else float(acc)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(other.coeffs):
            cs[i] += c
        return RationalPoly.from_list(cs)

    def __mul__(self, other):
        if isinstance(other, RationalPoly):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RationalPoly.from_list(out)
        s = Fraction(other)
        return RationalPoly.from_list([c * s for c in self.coeffs])

    __rmul__ = __mul__


@dataclass(frozen=True)
class OrthonormalPoly:
    """Classical polynomial together with its exact squared norm."""

    base: RationalPoly
    norm_square: Fraction


def bell_partial(n: int, k: int, xs: Sequence):
    """Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).

    Works over any commutative numeric type (Fractions give exact results).
    """
    if k < 0 or k > n:
        raise DomainError(f"bell_partial requires 0 <= k <= n, got n={n}, k={k}")
    if n == 0:
        return xs[0] * 0 + 1 if xs else 1
    if len(xs) < n - k + 1:
        raise DomainError("bell_partial needs arguments x_1 .. x_{n-k+1}")
    zero = xs[0] * 0
    # B[j][i] = B_{j,i}; recurrence over the first argument index.  Entries
    # that would need arguments beyond x_{n-k+1} cannot contribute to the
    # target B_{n,k}, so missing arguments act as zeros.
    table = [[zero for _ in range(k + 1)] for _ in range(n + 1)]
    table[0][0] = zero + 1
    for j in range(1, n + 1):
        top = min(j, k)
        for i in range(1, top + 1):
            acc = zero
            for s in range(1, min(j - i + 1, len(xs)) + 1):
                x = xs[s - 1]
                if x == 0:
                    continue
                acc += math.comb(j - 1, s - 1) * x * table[j - s][i - 1]
            table[j][i] = acc
    return table[n][k]


def _poly_power_conv(poly: RationalPoly, q: int) -> RationalPoly:
    out = RationalPoly.from_list([1])
    for _ in range(q):
        out = out * poly
    return out


def _poly_power_bell(poly: RationalPoly, q: int) -> RationalPoly:
    # [sum_k c_k x^k]^q = sum_k  q!/(k+q)! B_{k+q,q}(1! c_0, 2! c_1, ...) x^k
    deg = poly.degree
    cs = list(poly.coeffs)
    top = deg * q
    args = [math.factorial(i + 1) * (cs[i] if i <= deg else Fraction(0))
            for i in range(top + 1)]
    out = []
    qfact = math.factorial(q)
    for k in range(top + 1):
        b = bell_partial(k + q, q, args[:k + 1])
        out.append(Fraction(qfact, math.factorial(k + q)) * b)
    return RationalPoly.from_list(out)


def poly_power(poly: RationalPoly, q: int) -> RationalPoly:
    """q-th power of an exact polynomial, computed by two independent routes.

    Repeated convolution and the Bell-polynomial expansion must agree
    coefficient by coefficient; a mismatch indicates a kernel bug and raises.
    """
    if q < 1:
        raise DomainError(f"poly_power requires q >= 1, got {q}")
    conv = _poly_power_conv(poly, q)
    bell = _poly_power_bell(poly, q)
    if conv.coeffs != bell.coeffs:
        raise AssertionError(
            f"polynomial power routes disagree for degree {poly.degree}, q={q}")
    return conv


@lru_cache(maxsize=None)
def _jacobi_cached(n: int, a2: int, b2: int) -> RationalPoly:
    a = Fraction(a2, 2)
    b = Fraction(b2, 2)
    half_minus = RationalPoly.from_list([Fraction(-1, 2), Fraction(1, 2)])  # (x-1)/2
    half_plus = RationalPoly.from_list([Fraction(1, 2), Fraction(1, 2)])    # (x+1)/2
    out = RationalPoly.from_list([0])
    for s in range(n + 1):
        coef = binomial_exact(n + a, n - s) * binomial_exact(n + b, s)
        if coef == 0:
            continue
        term = RationalPoly.from_list([coef])
        for _ in range(s):
            term = term * half_minus
        for _ in range(n - s):
            term = term * half_plus
        out = out + term
    return out


def jacobi_poly(n: int, a, b) -> RationalPoly:
    """Classical Jacobi polynomial P_n^{(a,b)} with exact coefficients.

    Parameters a, b may be rationals on the half-integer lattice; both must
    exceed -1.
    """
    if n < 0:
        raise DomainError(f"jacobi_poly degree must be >= 0, got {n}")
    a = Fraction(a)
    b = Fraction(b)
    if a <= -1 or b <= -1:
        raise DomainError(f"jacobi parameters must exceed -1, got ({a}, {b})")
    if a.denominator not in (1, 2) or b.denominator not in (1, 2):
        raise DomainError("jacobi parameters must lie on the half-integer lattice")
    return _jacobi_cached(n, int(2 * a), int(2 * b))


def orthonormal_jacobi(n: int, a, b) -> OrthonormalPoly:
    """Jacobi polynomial plus its exact squared norm for weight (1-x)^a (1+x)^b.

    norm_square = 2^{a+b+1} G(a+n+1) G(b+n+1) / (n! (a+b+2n+1) G(a+b+n+1));
    kept as an exact rational, which requires integer a and b.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a.denominator != 1 or b.denominator != 1:
        raise DomainError("orthonormal_jacobi keeps the norm exact only for integer parameters")
    if a < 0 or b < 0:
        raise DomainError(f"orthonormal_jacobi requires a, b >= 0, got ({a}, {b})")
    ai, bi = int(a), int(b)
    base = jacobi_poly(n, ai, bi)
    ns = (Fraction(2 ** (ai + bi + 1)) * math.factorial(ai + n) * math.factorial(bi + n)
          / (math.factorial(n) * (ai + bi + 2 * n + 1) * math.factorial(ai + bi + n)))
    return OrthonormalPoly(base=base, norm_square=ns)


@lru_cache(maxsize=None)
def _gegenbauer_parts(n: int, lam2: int) -> tuple[Fraction, RationalPoly]:
    lam = Fraction(lam2, 2)
    pref = pochhammer(2 * lam, n) / pochhammer(lam + Fraction(1, 2), n)
    base = jacobi_poly(n, lam - Fraction(1, 2), lam - Fraction(1, 2))
    return pref, base


def gegenbauer_eval(n: int, lam, t):
    """Gegenbauer C_n^{(lam)}(t) via the exact Jacobi route.

    Uses C_n^{(lam)} = (2 lam)_n / (lam + 1/2)_n * P_n^{(lam-1/2, lam-1/2)}.
    """
    if n < 0:
        raise DomainError(f"gegenbauer degree must be >= 0, got {n}")
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"gegenbauer parameter must be positive, got {lam}")
    if lam.denominator not in (1, 2):
        raise DomainError("gegenbauer parameter must lie on the half-integer lattice")
    pref, base = _gegenbauer_parts(n, int(2 * lam))
    if isinstance(t, Fraction):
        return pref * base(t)
    return float(pref) * base(t)


def gegenbauer_roots(n: int, lam) -> np.ndarray:
    """Roots of C_n^{(lam)} in (-1, 1) by sign-change bracketing and bisection."""
    if n == 0:
        return np.array([])
    grid = np.linspace(-1.0, 1.0, max(200, 40 * n) + 1)[1:-1]
    vals = gegenbauer_eval(n, lam, grid)
    roots = []
    for i in range(len(grid) - 1):
        a, b = grid[i], grid[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0:
            roots.append(a)
            continue
        if fa * fb < 0:
            for _ in range(80):
                mid = 0.5 * (a + b)
                fm = gegenbauer_eval(n, lam, mid)
                if fm == 0.0:
                    a = b = mid
                    break
                if fa * fm < 0:
                    b = mid
                else:
                    a, fa = mid, fm
            roots.append(0.5 * (a + b))
    if len(roots) != n:
        raise AccuracyError(f"expected {n} roots, bracketed {len(roots)}")
    return np.array(roots)


# ---------------------------------------------------------------------------
# Laguerre family

@lru_cache(maxsize=None)
def _laguerre_cached(n: int, a2: int) -> RationalPoly:
    a = Fraction(a2, 2)
    cs = []
    for k in range(n + 1):
        cs.append((-1) ** k * pochhammer(a + k + 1, n - k)
                  / (math.factorial(n - k) * math.factorial(k)))
    return RationalPoly.from_list(cs)


def laguerre_poly(n: int, alpha) -> RationalPoly:
    """Generalised Laguerre L_n^{(alpha)} with exact coefficients (alpha > -1)."""
    a = Fraction(alpha)
    if a <= -1:
        raise DomainError(f"laguerre parameter must exceed -1, got {a}")
    if a.denominator not in (1, 2):
        raise DomainError("laguerre parameter must lie on the half-integer lattice")
    return _laguerre_cached(n, int(2 * a))


def _laguerre_recurrence(n: int, alpha: float, x, orthonormal: bool, weighted: bool):
    xs = np.asarray(x, dtype=np.longdouble)
    a = np.longdouble(alpha)
    if weighted:
        start = np.exp(-xs / 2)
    else:
        start = np.ones_like(xs)
    if orthonormal:
        start = start * np.exp(np.longdouble(-0.5 * math.lgamma(alpha + 1.0)))
        p0 = start
        if n == 0:
            return p0
        p1 = (a + 1 - xs) * p0 / np.sqrt(a + 1)
        for k in range(1, n):
            kk = np.longdouble(k)
            c1 = 1 / np.sqrt((kk + 1) * (kk + 1 + a))
            c2 = np.sqrt(kk * (kk + a))
            p0, p1 = p1, c1 * ((2 * kk + a + 1 - xs) * p1 - c2 * p0)
        return p1
    p0 = start
    if n == 0:
        return p0
    p1 = (a + 1 - xs) * start
    for k in range(1, n):
        kk = np.longdouble(k)
        p0, p1 = p1, ((2 * kk + a + 1 - xs) * p1 - (kk + a) * p0) / (kk + 1)
    return p1


def laguerre_eval(n: int, alpha: float, x, orthonormal: bool = False):
    """L_n^{(alpha)}(x) (or its orthonormal variant) by a stable recurrence.

    The three-term recurrence is accumulated in extended precision
    (80-bit significand on x86) so that degrees up to a few hundred keep
    full double accuracy.
    """
    if n < 0:
        raise DomainError(f"laguerre degree must be >= 0, got {n}")
    if not alpha > -1:
        raise DomainError(f"laguerre parameter must exceed -1, got {alpha}")
    out = _laguerre_recurrence(n, float(alpha), x, orthonormal, weighted=False)
    if np.ndim(x) == 0:
        return float(out)
    return np.asarray(out, dtype=float)


def laguerre_orthonormal_weighted(n: int, alpha: float, x):
    """Orthonormal Laguerre times exp(-x/2), the bounded oscillator kernel.

    Returned in extended precision; the square times x**alpha integrates
    to one over (0, inf).
    """
    if n < 0:
        raise DomainError(f"laguerre degree must be >= 0, got {n}")
    if not alpha > -1:
        raise DomainError(f"laguerre parameter must exceed -1, got {alpha}")
    return _laguerre_recurrence(n, float(alpha), x, orthonormal=True, weighted=True)


def laguerre_eval_negparam(n: int, alpha, x):
    """L_n^{(alpha)}(x) for arbitrary (possibly very negative) parameter.

    Evaluated through the explicit finite sum with exact rational
    coefficients, which stays valid below alpha = -1 where the recurrence
    normalisation breaks down. Exact when alpha and x are rational.
    """
    if n < 0:
        raise DomainError(f"laguerre degree must be >= 0, got {n}")
    a = Fraction(alpha)
    xf = Fraction(x)
    acc = Fraction(0)
    for k in range(n + 1):
        term = ((-1) ** k * pochhammer(a + k + 1, n - k)
                / (math.factorial(n - k) * math.factorial(k)))
        acc += term * xf ** k
    if isinstance(alpha, Fraction) or isinstance(x, Fraction):
        return acc
    return float(acc)


def bessel_j(alpha: float, x):
    """Bessel function of the first kind J_alpha(x) for alpha >= 0, x >= 0."""
    if alpha < 0:
        raise DomainError(f"bessel order must be >= 0, got {alpha}")
    out = scipy.special.jv(alpha, x)
    if np.ndim(x) == 0:
        return float(out)
    return np.asarray(out, dtype=float)


# ---------------------------------------------------------------------------
# Quadrature

@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerance and subdivision policy for adaptive quadrature."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 200
    oscillation_hint: int | None = None
    tail_decay: float | None = None  # algebraic tail exponent; None = exponential


@lru_cache(maxsize=None)
def gauss_legendre(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Cached Gauss-Legendre nodes and weights on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(m)
    return x, w


@lru_cache(maxsize=None)
def gauss_jacobi(m: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Cached Gauss-Jacobi rule for weight (1-x)^a (1+x)^b on [-1, 1]."""
    if a == 0.0 and b == 0.0:
        return gauss_legendre(m)
    x, w = scipy.special.roots_jacobi(m, a, b)
    return x, w


def _quad_finite(f, lo, hi, spec, points):
    inner = [p for p in points if lo < p < hi]
    try:
        val, err = scipy.integrate.quad(
            f, lo, hi, points=inner if inner else None,
            epsabs=spec.abs_tol, epsrel=spec.rel_tol,
            limit=max(spec.max_subdivisions, 50))
    except Exception as exc:  # quadpack failures surface as accuracy errors
        raise AccuracyError(f"quadrature failed on [{lo}, {hi}]: {exc}") from exc
    return val, err


def integrate(f: Callable[[float], float], lo: float, hi: float,
              spec: QuadratureSpec | None = None,
              breakpoints: Sequence[float] | None = None) -> float:
    """Adaptive quadrature of f over [lo, hi] (hi may be inf).

    Oscillatory integrands can be pre-split either through explicit
    breakpoints or through spec.oscillation_hint (uniform pre-split so each
    panel spans at most one oscillation). Infinite upper limits are mapped,
    not truncated: exponentially decaying tails go through the standard
    semi-infinite transformation, algebraically decaying ones (exponent s
    supplied via spec.tail_decay, s > 1) through a rational substitution.
    """
    spec = spec or QuadratureSpec()
    if not hi > lo:
        raise DomainError(f"integration limits must satisfy lo < hi, got [{lo}, {hi}]")
    pts = sorted(float(p) for p in (breakpoints or []))

    if math.isinf(hi):
        cut = pts[-1] if pts else (lo + 1.0)
        total = 0.0
        errs = 0.0
        if cut > lo:
            v, e = _quad_finite(f, lo, cut, spec, pts)
            total += v
            errs += e
        else:
            cut = lo
        if spec.tail_decay is not None:
            s = spec.tail_decay
            if not s > 1:
                raise DomainError(f"algebraic tail decay must exceed 1, got {s}")
            scale = max(abs(cut), 1.0)

            def mapped(u):
                x = cut + scale * (1.0 - u) / u
                return f(x) * scale / (u * u)

            v, e = _quad_finite(mapped, 0.0, 1.0, spec, [])
        else:
            try:
                v, e = scipy.integrate.quad(
                    f, cut, np.inf, epsabs=spec.abs_tol, epsrel=spec.rel_tol,
                    limit=max(spec.max_subdivisions, 50))
            except Exception as exc:
                raise AccuracyError(f"tail quadrature failed beyond {cut}: {exc}") from exc
        total += v
        errs += e
        bound = max(spec.abs_tol, spec.rel_tol * abs(total))
        if errs > 50 * bound:
            raise AccuracyError("quadrature error estimate exceeds tolerance",
                                estimate=total, error_bound=errs)
        return total

    if spec.oscillation_hint:
        k = max(int(spec.oscillation_hint), 1)
        edges = np.linspace(lo, hi, k + 1)
        pts = sorted(set(pts) | set(edges[1:-1].tolist()))
    val, err = _quad_finite(f, lo, hi, spec, pts)
    bound = max(spec.abs_tol, spec.rel_tol * abs(val))
    if err > 50 * bound:
        raise AccuracyError("quadrature error estimate exceeds tolerance",
                            estimate=val, error_bound=err)
    return val
