"""Lommel polynomials h_n^{(c)} and their link to the E and F families.

The recursion is h_{n+1} = 2z(n+c) h_n - h_{n-1} with h_{-1} = 0, h_0 = 1.
Squaring the argument, E_n(-z^2) and z F_n(-z^2) are the even and odd
Lommel polynomials up to the factors 2^m (c)_m, m = 2n or 2n+1.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .exactalg import UniPoly, pochhammer
from .families import FamilySpec, family_poly_series


def lommel_rec(c, N: int) -> list[UniPoly]:
    """h_0 .. h_N from the three-term recursion."""
    if N < 0:
        raise ValueError("N must be non-negative")
    c = Fraction(c)
    z = UniPoly([0, 1], "z")
    prev, cur = UniPoly([], "z"), UniPoly([1], "z")
    out = [cur]
    for n in range(N):
        prev, cur = cur, z * cur * (2 * (n + c)) - prev
        out.append(cur)
    return out


def lommel_explicit(c, m: int) -> UniPoly:
    """h_m from its closed-form sum.

    For m = 2n:   (-1)^n sum_k C(n+k, 2k)   (n+c-k)_{2k}   (-1)^k (2z)^{2k}
    For m = 2n+1: (-1)^n sum_k C(n+k+1, 2k+1) (n+c-k)_{2k+1} (-1)^k (2z)^{2k+1}
    """
    if m < 0:
        raise ValueError("index must be non-negative")
    c = Fraction(c)
    n, odd = divmod(m, 2)
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(n + 1):
        e = 2 * k + odd
        term = comb(n + k + odd, e) * pochhammer(n + c - k, e) * 2**e
        coeffs[e] = term * (-1) ** (n + k)
    return UniPoly(coeffs, "z")


def _neg_square_arg(P: UniPoly) -> UniPoly:
    """P(-z^2) as a polynomial in z."""
    coeffs = [Fraction(0)] * (2 * P.degree + 1) if P else []
    for k, a in enumerate(P.coeffs):
        coeffs[2 * k] = a * (-1) ** k
    return UniPoly(coeffs, "z")


def e_explicit(c, n: int) -> UniPoly:
    """Monic E_n^{(c)} from its finite sum in powers of z."""
    c = Fraction(c)
    s = [comb(n + k, 2 * k) * pochhammer(n + c - k, 2 * k) * 4**k for k in range(n + 1)]
    scale = 1 / (4**n * pochhammer(c, 2 * n))
    return UniPoly([x * scale for x in s], "z")


def f_explicit(c, n: int) -> UniPoly:
    """Monic F_n^{(c)} from its finite sum in powers of z."""
    c = Fraction(c)
    s = [comb(n + k + 1, 2 * k + 1) * pochhammer(n + c - k, 2 * k + 1) * 4**k for k in range(n + 1)]
    scale = 1 / (4**n * pochhammer(c, 2 * n + 1))
    return UniPoly([x * scale for x in s], "z")


def _require_c(c: Fraction) -> None:
    FamilySpec.e(c).require_valid()


def ef_lommel_check(c, n: int) -> dict:
    """Compare E_n(-z^2) and z F_n(-z^2) with the scaled Lommel polynomials.

    Returns a dict with the two (lhs, rhs, equal) triples under "E" and "F",
    the two explicit-sum checks and an overall "equal" flag.
    """
    c = Fraction(c)
    _require_c(c)
    h = lommel_rec(c, 2 * n + 1)
    z = UniPoly([0, 1], "z")
    E = family_poly_series(FamilySpec.e(c), n).with_symbol("z")
    F = family_poly_series(FamilySpec.f(c), n).with_symbol("z")
    sign = (-1) ** n
    e_lhs = _neg_square_arg(E)
    e_rhs = h[2 * n] * Fraction(sign, 2 ** (2 * n)) * (1 / pochhammer(c, 2 * n))
    f_lhs = z * _neg_square_arg(F)
    f_rhs = h[2 * n + 1] * Fraction(sign, 2 ** (2 * n + 1)) * (1 / pochhammer(c, 2 * n + 1))
    e_sum_ok = e_explicit(c, n) == E
    f_sum_ok = f_explicit(c, n) == F
    out = {
        "E": (e_lhs, e_rhs, e_lhs == e_rhs),
        "F": (f_lhs, f_rhs, f_lhs == f_rhs),
        "E_explicit": e_sum_ok,
        "F_explicit": f_sum_ok,
    }
    out["equal"] = out["E"][2] and out["F"][2] and e_sum_ok and f_sum_ok
    return out


def g_sequence(c, N: int) -> list[UniPoly]:
    """G_0 .. G_N assembled from monic E_n, F_n and rescaled by 2^m (c)_m.

    Without the factor 2^m (c)_m the interleaved sequence does not obey
    G_{n+1} = 2(c+n) z G_n - G_{n-1}; with it, G_m = h_m.  Both the
    recursion and G_m = h_m are asserted.
    """
    c = Fraction(c)
    _require_c(c)
    if N < 0:
        raise ValueError("N must be non-negative")
    z = UniPoly([0, 1], "z")
    G = []
    for m in range(N + 1):
        n, odd = divmod(m, 2)
        if odd:
            base = z * _neg_square_arg(family_poly_series(FamilySpec.f(c), n).with_symbol("z"))
        else:
            base = _neg_square_arg(family_poly_series(FamilySpec.e(c), n).with_symbol("z"))
        G.append(base * ((-1) ** n * 2**m * pochhammer(c, m)))
    h = lommel_rec(c, N)
    for m in range(N + 1):
        if G[m] != h[m]:
            raise AssertionError(f"G_{m} differs from the Lommel polynomial")
    for n in range(1, N):
        if G[n + 1] - z * G[n] * (2 * (c + n)) + G[n - 1]:
            raise AssertionError(f"G recursion fails at n={n}")
    return G


def g_recursion_residual(G: list[UniPoly], c, n: int) -> UniPoly:
    """G_{n+1} - 2(c+n) z G_n + G_{n-1}."""
    z = UniPoly([0, 1], "z")
    return G[n + 1] - z * G[n] * (2 * (Fraction(c) + n)) + G[n - 1]
