from fractions import Fraction as F

import pytest
from scipy.special import jv

from jacobitype.errors import InvalidParams
from jacobitype.exactalg import UniPoly, pochhammer
from jacobitype.lommel import (
    e_explicit,
    ef_lommel_check,
    f_explicit,
    g_recursion_residual,
    g_sequence,
    lommel_explicit,
    lommel_rec,
)
from jacobitype.families import FamilySpec, family_poly_series

CS = [F(1), F(3, 2), F(7, 3), F(-1, 4)]
z = UniPoly([0, 1], "z")


def test_first_terms():
    c = F(3, 2)
    h = lommel_rec(c, 2)
    assert h[0] == UniPoly([1], "z")
    assert h[1] == z * (2 * c)
    assert h[2] == z**2 * (4 * c * (c + 1)) - 1


@pytest.mark.parametrize("c", CS, ids=str)
def test_explicit_matches_recursion(c):
    h = lommel_rec(c, 20)
    for m in range(21):
        assert lommel_explicit(c, m) == h[m]


@pytest.mark.parametrize("m", [3, 6, 9])
@pytest.mark.parametrize("nu", [0.5, 1.25, 3.0])
def test_bessel_oracle(nu, m):
    # J_{nu+m}(x) = h_m^{(nu)}(1/x) J_nu(x) - h_{m-1}^{(nu+1)}(1/x) J_{nu-1}(x)
    c = F(nu).limit_denominator(100)
    for x in (2.5, 7.0, 13.3):
        hm = lommel_rec(c, m)[m]
        hm1 = lommel_rec(c + 1, m - 1)[m - 1]
        a = float(hm(F(1) / F(x))) * jv(nu, x)
        b = float(hm1(F(1) / F(x))) * jv(nu - 1, x)
        # the two terms cancel when J_{nu+m}(x) is small; compare on their scale
        assert abs(a - b - jv(nu + m, x)) <= 1e-12 * (abs(a) + abs(b))


def test_explicit_sum_sign():
    # h_2 has constant term -1: the sign of the k=0 term is (-1)^(n+k)
    assert lommel_explicit(F(1), 2)[0] == -1
    assert lommel_explicit(F(1), 4)[0] == 1


@pytest.mark.parametrize("c", CS, ids=str)
def test_ef_identities(c):
    for n in range(16):
        res = ef_lommel_check(c, n)
        assert res["equal"], (c, n)
        assert res["E"][2] and res["F"][2]


def test_ef_example():
    res = ef_lommel_check(1, 1)
    lhs, rhs, ok = res["E"]
    assert ok and lhs == UniPoly([F(1, 8), 0, -1], "z")


def test_explicit_monic_sums():
    for c in CS:
        for n in range(8):
            assert e_explicit(c, n) == family_poly_series(FamilySpec.e(c), n)
            assert f_explicit(c, n) == family_poly_series(FamilySpec.f(c), n)


def test_g_sequence():
    for c in (F(1), F(5, 2)):
        G = g_sequence(c, 12)
        assert G == lommel_rec(c, 12)
        for n in range(1, 12):
            assert g_recursion_residual(G, c, n).is_zero()


def neg_sq(P):
    out = [F(0)] * (2 * P.degree + 1)
    for k, a in enumerate(P.coeffs):
        out[2 * k] = a * (-1) ** k
    return UniPoly(out, "z")


def test_unscaled_sequence_breaks_recursion():
    c = F(1)
    E = [family_poly_series(FamilySpec.e(c), n).with_symbol("z") for n in range(3)]
    Fs = [family_poly_series(FamilySpec.f(c), n).with_symbol("z") for n in range(3)]
    raw = [neg_sq(E[0]), z * neg_sq(Fs[0]), neg_sq(E[1]), z * neg_sq(Fs[1])]
    assert any(not g_recursion_residual(raw, c, n).is_zero() for n in (1, 2))


def test_scaling_factor():
    c = F(7, 3)
    G = g_sequence(c, 3)
    assert G[3].lead == 2**3 * pochhammer(c, 3)


def test_invalid_c():
    with pytest.raises(InvalidParams):
        ef_lommel_check(-2, 3)
    with pytest.raises(InvalidParams):
        g_sequence(0, 3)
