"""Bessel J_nu, its zeros, and truncated discrete orthogonality sums.

The E and F families are orthogonal for discrete measures supported on the
points -a_k^2, a_k = 1/j_{c-1,k}, with j_{nu,k} the zeros of J_nu:

    4c sum_k a_k^2 E_n(-a_k^2) E_m(-a_k^2)
        = c / (2^{4n} (c)_{2n}^2 (2n+c)) * delta_{mn}                 (c > 0)
    16c^2(c+1) sum_k a_k^4 F_n(-a_k^2) F_m(-a_k^2)
        = (c+1) / (2^{4n} (c+1)_{2n}^2 (2n+1+c)) * delta_{mn}    (c > -1, c != 0)

For -1 < c < 0 the order c-1 lies in (-2, -1), where J_nu has, besides its
real zeros, one pair of purely imaginary zeros +-iy.  That pair carries
a^2 = -1/y^2 and has to be included for the F identity to hold.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceFailure, DomainError
from .exactalg import UniPoly, pochhammer
from .families import FamilySpec, family_poly_series

SERIES_LIMIT = 12.0
_HANKEL_TERMS = 10
_NEWTON_STEPS = 50


def _check_order(nu: float) -> None:
    # Real orders above -2 except -1; (-2, -1) only serves the F extension.
    if not nu > -2 or nu == -1:
        raise DomainError(f"order nu={nu} outside (-2, -1) U (-1, inf)")


def _series(nu: float, x: np.ndarray, sign: int = -1) -> np.ndarray:
    """sum_n sign^n (x/2)^{nu+2n} / (Gamma(n+nu+1) n!); sign=+1 gives I_nu.

    Summed in long double: near x = 12 the alternating terms cancel by
    about four digits.
    """
    half = np.asarray(x, dtype=np.longdouble) / 2
    term = np.ones_like(half)
    total = term.copy()
    q = sign * half * half
    for n in range(1, 200):
        term = term * q / (n * (n + np.longdouble(nu)))
        total = total + term
        if np.all(np.abs(term) <= 1e-21 * np.abs(total)):
            break
    return (total * np.power(half, nu)).astype(float) / math.gamma(nu + 1)


def _hankel(nu: float, x: np.ndarray) -> np.ndarray:
    """Large-argument expansion, amplitude-phase form with 10 terms in P and Q."""
    mu = 4 * nu * nu
    a = [1.0]
    for k in range(1, 2 * _HANKEL_TERMS):
        a.append(a[-1] * (mu - (2 * k - 1) ** 2) / (k * 8))
    inv = 1 / x
    P = np.zeros_like(x)
    Q = np.zeros_like(x)
    for k in range(_HANKEL_TERMS):
        P += (-1) ** k * a[2 * k] * inv ** (2 * k)
        Q += (-1) ** k * a[2 * k + 1] * inv ** (2 * k + 1)
    chi = x - (nu / 2 + 0.25) * math.pi
    return np.sqrt(2 / (math.pi * x)) * (P * np.cos(chi) - Q * np.sin(chi))


def bessel_j(nu: float, x):
    """J_nu(x) for x >= 0; accepts a scalar or an array."""
    _check_order(nu)
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError("x must be non-negative")
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.empty_like(arr)
    small = arr <= SERIES_LIMIT
    if np.any(small):
        xs = arr[small]
        with np.errstate(divide="ignore"):
            out[small] = _series(nu, xs)
        # J_nu(0): 1 for nu = 0, 0 for nu > 0; singular for nu < 0
        zero = xs == 0
        if np.any(zero):
            vals = out[small]
            vals[zero] = 1.0 if nu == 0 else (0.0 if nu > 0 else math.copysign(math.inf, math.gamma(nu + 1)))
            out[small] = vals
    if np.any(~small):
        out[~small] = _hankel(nu, arr[~small])
    return float(out[0]) if scalar else out


def bessel_j_prime(nu: float, x):
    """J'_nu(x) = (nu/x) J_nu(x) - J_{nu+1}(x)."""
    x = np.asarray(x, dtype=float)
    return nu / x * bessel_j(nu, x) - bessel_j(nu + 1, x)


def _mcmahon(nu: float, k: np.ndarray) -> np.ndarray:
    mu = 4 * nu * nu
    # for -2 < nu < -1 the first positive zero sits where k=2 would
    shift = 1 if nu < -1 else 0
    b = (k + shift + nu / 2 - 0.25) * math.pi
    e = 8 * b
    return (
        b
        - (mu - 1) / e
        - 4 * (mu - 1) * (7 * mu - 31) / (3 * e**3)
        - 32 * (mu - 1) * (83 * mu**2 - 982 * mu + 3779) / (15 * e**5)
    )


def _bisect(fn, lo: float, hi: float, iters: int = 200) -> float:
    flo = fn(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0 or hi - lo <= 4e-16 * mid:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _scan_zeros(nu: float, count: int, step: float = 0.02) -> list[float]:
    """First `count` positive zeros by sign changes on a grid plus bisection."""
    found = []
    fn = lambda t: bessel_j(nu, t)
    x = step
    fx = fn(x)
    while len(found) < count:
        nx = x + step
        fnx = fn(nx)
        if fx == 0:
            found.append(x)
        elif (fx < 0) != (fnx < 0):
            found.append(_bisect(fn, x, nx))
        x, fx = nx, fnx
    return found


def _newton(nu: float, seeds: np.ndarray, first_k: int) -> np.ndarray:
    x = seeds.copy()
    active = np.ones_like(x, dtype=bool)
    for _ in range(_NEWTON_STEPS):
        xa = x[active]
        step = bessel_j(nu, xa) / bessel_j_prime(nu, xa)
        x[active] = xa - step
        # quadratic convergence: the step after a 1e-12 step is below rounding
        done = np.abs(step) <= 1e-12 * np.abs(xa)
        idx = np.flatnonzero(active)
        active[idx[done]] = False
        if not active.any():
            return x
    raise ConvergenceFailure(first_k + int(np.flatnonzero(active)[0]))


@lru_cache(maxsize=32)
def _zeros_cached(nu: float, K: int) -> tuple[float, ...]:
    n_scan = min(K, 5)
    head = _scan_zeros(nu, n_scan)
    # polish the bracketed zeros with Newton
    head = list(_newton(nu, np.array(head), 1)) if head else []
    if K > n_scan:
        k = np.arange(n_scan + 1, K + 1, dtype=float)
        tail = _newton(nu, _mcmahon(nu, k), n_scan + 1)
        zeros = np.concatenate([np.array(head), tail])
    else:
        zeros = np.array(head)
    if np.any(np.diff(zeros) <= 0):
        raise ConvergenceFailure(int(np.flatnonzero(np.diff(zeros) <= 0)[0]) + 2)
    # consecutive zeros must enclose exactly one sign change
    if len(zeros) > 1:
        mids = bessel_j(nu, 0.5 * (zeros[1:] + zeros[:-1]))
        if np.any(np.sign(mids[1:]) == np.sign(mids[:-1])):
            raise ConvergenceFailure(int(np.flatnonzero(np.sign(mids[1:]) == np.sign(mids[:-1]))[0]) + 2)
    return tuple(float(z) for z in zeros)


def bessel_zeros(nu: float, K: int) -> np.ndarray:
    """The first K positive zeros of J_nu, increasing."""
    _check_order(nu)
    if K < 1:
        raise ValueError("K must be positive")
    return np.array(_zeros_cached(float(nu), int(K)))


def imaginary_zero(nu: float) -> float:
    """y > 0 with J_nu(iy) = 0, i.e. I_nu(y) = 0; exists only for -2 < nu < -1."""
    if not -2 < nu < -1:
        raise DomainError("purely imaginary zeros exist only for -2 < nu < -1")
    fn = lambda y: float(_series(nu, np.array([y]), sign=1)[0])
    lo, hi = 1e-3, 1.0
    while fn(hi) < 0:
        hi *= 2
    return _bisect(fn, lo, hi)


def eval_poly_float(P: UniPoly, x):
    """Horner evaluation with coefficients rounded to double."""
    acc = np.zeros_like(np.asarray(x, dtype=float))
    for c in reversed(P.coeffs):
        acc = acc * x + float(c)
    if not P.coeffs:
        return acc * 0.0
    return float(acc) if np.ndim(acc) == 0 else acc


def _fsum(values) -> float:
    return math.fsum(np.asarray(values, dtype=float).tolist())


def e_rhs(c, n: int, m: int) -> Fraction:
    c = Fraction(c)
    if n != m:
        return Fraction(0)
    return c / (2 ** (4 * n) * pochhammer(c, 2 * n) ** 2 * (2 * n + c))


def f_rhs(c, n: int, m: int) -> Fraction:
    c = Fraction(c)
    if n != m:
        return Fraction(0)
    return (c + 1) / (2 ** (4 * n) * pochhammer(c + 1, 2 * n) ** 2 * (2 * n + 1 + c))


def discrete_gram_E(c, n: int, m: int, K: int) -> tuple[float, float]:
    """Truncated E sum over the first K zeros of J_{c-1}; returns (lhs, rhs)."""
    c = Fraction(c)
    if c <= 0:
        raise DomainError("the E identity requires c > 0")
    a2 = bessel_zeros(float(c - 1), K) ** -2.0
    En = eval_poly_float(family_poly_series(FamilySpec.e(c), n), -a2)
    Em = eval_poly_float(family_poly_series(FamilySpec.e(c), m), -a2)
    lhs = 4 * float(c) * _fsum(a2 * En * Em)
    return lhs, float(e_rhs(c, n, m))


def discrete_gram_F(c, n: int, m: int, K: int) -> tuple[float, float]:
    """Truncated F sum over the first K zeros of J_{c-1}; returns (lhs, rhs).

    For -1 < c < 0 the imaginary zero pair of J_{c-1} is added as one more
    node, at -a^2 = 1/y^2 with weight a^4 = 1/y^4.
    """
    c = Fraction(c)
    if not (c > -1 and c != 0):
        raise DomainError("the F identity requires c > -1, c != 0")
    nu = float(c - 1)
    a2 = bessel_zeros(nu, K) ** -2.0
    pts = -a2
    if nu < -1:
        y = imaginary_zero(nu)
        a2 = np.append(a2, -(y**-2.0))
        pts = np.append(pts, y**-2.0)
    Fn = eval_poly_float(family_poly_series(FamilySpec.f(c), n), pts)
    Fm = eval_poly_float(family_poly_series(FamilySpec.f(c), m), pts)
    weight = 16 * float(c) ** 2 * float(c + 1)
    lhs = weight * _fsum(a2 * a2 * Fn * Fm)
    return lhs, float(f_rhs(c, n, m))


def tail_estimate(family: str, c, n: int, m: int, K: int) -> float:
    """Leading-order size of the omitted terms k > K.

    a_k ~ 1/(k pi) and the polynomials tend to their constant terms, so the
    E tail is 4c E_n(0) E_m(0) / (pi^2 K) and the F tail is
    16c^2(c+1) F_n(0) F_m(0) / (3 pi^4 K^3).
    """
    c = Fraction(c)
    if family == "e":
        p0 = float(family_poly_series(FamilySpec.e(c), n)(0) * family_poly_series(FamilySpec.e(c), m)(0))
        return abs(4 * float(c) * p0 / (math.pi**2 * K))
    p0 = float(family_poly_series(FamilySpec.f(c), n)(0) * family_poly_series(FamilySpec.f(c), m)(0))
    return abs(16 * float(c) ** 2 * float(c + 1) * p0 / (3 * math.pi**4 * K**3))
