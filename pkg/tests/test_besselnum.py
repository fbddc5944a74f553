import math
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.optimize import brentq
from scipy.special import iv, jn_zeros, jv

from jacobitype.besselnum import (
    bessel_j,
    bessel_j_prime,
    bessel_zeros,
    discrete_gram_E,
    discrete_gram_F,
    e_rhs,
    eval_poly_float,
    f_rhs,
    imaginary_zero,
    tail_estimate,
)
from jacobitype.errors import DomainError
from jacobitype.exactalg import UniPoly

ORDERS = [0.0, 0.5, 1.0, 2.3, 5.0, -0.5, -1.5]


@pytest.mark.parametrize("nu", ORDERS)
def test_values_against_scipy(nu):
    x = np.concatenate([np.linspace(0.1, 30, 600), np.linspace(30, 500, 200)])
    ours = bessel_j(nu, x)
    ref = jv(nu, x)
    scale = np.sqrt(2 / (np.pi * x))  # envelope: compare near zeros on this scale
    assert np.max(np.abs(ours - ref) / np.maximum(scale, np.abs(ref))) < 1e-9


def test_scalar_and_origin():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(2, 0.0) == 0.0
    assert isinstance(bessel_j(1, 2.0), float)
    assert bessel_j(1, 2.0) == pytest.approx(jv(1, 2.0), rel=1e-14)


def test_derivative():
    x = np.linspace(0.5, 40, 50)
    # scipy derivative: (J_{nu-1} - J_{nu+1}) / 2
    assert np.allclose(bessel_j_prime(1.5, x), (jv(0.5, x) - jv(2.5, x)) / 2, atol=1e-10)


def test_domain():
    with pytest.raises(DomainError):
        bessel_j(-1, 1.0)
    with pytest.raises(DomainError):
        bessel_j(-2.5, 1.0)
    with pytest.raises(DomainError):
        bessel_j(0, -1.0)
    with pytest.raises(ValueError):
        bessel_zeros(0, 0)


@pytest.mark.parametrize("nu", [0, 1, 4])
def test_integer_zeros_against_scipy(nu):
    ours = bessel_zeros(nu, 2000)
    ref = jn_zeros(nu, 2000)
    assert np.max(np.abs(ours - ref) / ref) < 1e-12


def test_half_order_zeros_are_multiples_of_pi():
    ours = bessel_zeros(0.5, 10000)
    k = np.arange(1, 10001)
    assert np.max(np.abs(ours - k * math.pi) / (k * math.pi)) < 1e-12


@pytest.mark.parametrize("nu", [2.3, -0.5, -0.75, -1.5, 7 / 3 - 1])
def test_zeros_against_brentq(nu):
    ours = bessel_zeros(nu, 60)
    for x in ours[:: 7]:
        ref = brentq(lambda t: jv(nu, t), x - 0.3, x + 0.3, xtol=1e-15)
        assert abs(x - ref) <= 1e-12 * ref
    # interlacing guarantees no zero was skipped: j_{nu,k} < j_{nu+1,k}
    if nu > -1:
        assert np.all(ours < bessel_zeros(nu + 1, 60))


def test_order_minus_three_halves():
    # J_{-3/2}(x) is proportional to cos(x)/x + sin(x)
    zs = bessel_zeros(-1.5, 20)
    for k, x in enumerate(zs):
        ref = brentq(lambda t: math.cos(t) / t + math.sin(t), (k + 0.5) * math.pi, (k + 1) * math.pi, xtol=1e-15)
        assert abs(x - ref) <= 1e-12 * ref


def test_imaginary_zero():
    for nu in (-1.5, -1.25, -1.9):
        y = imaginary_zero(nu)
        assert abs(iv(nu, y)) < 1e-13
    y = imaginary_zero(-1.5)
    assert y * math.tanh(y) == pytest.approx(1.0, abs=1e-13)
    with pytest.raises(DomainError):
        imaginary_zero(-0.5)


def test_eval_poly_float():
    P = UniPoly([1, F(1, 2), 3], "z")
    assert eval_poly_float(P, 2.0) == 14.0
    assert np.allclose(eval_poly_float(P, np.array([0.0, 1.0])), [1.0, 4.5])


def test_rhs_values():
    assert e_rhs(1, 0, 0) == 1
    assert e_rhs(1, 1, 1) == F(1, 192)
    assert f_rhs(1, 0, 0) == F(1, 1)
    assert e_rhs(1, 0, 1) == 0


class TestDiscreteGram:
    def test_e_diagonal(self):
        lhs, rhs = discrete_gram_E(1, 1, 1, 10000)
        assert rhs == pytest.approx(1 / 192)
        assert abs(lhs - rhs) / rhs < 1e-3

    def test_e_off_diagonal_within_tail(self):
        lhs, rhs = discrete_gram_E(1, 0, 1, 5000)
        assert rhs == 0
        tail = tail_estimate("e", 1, 0, 1, 5000)
        assert abs(lhs) <= 1.5 * tail
        # the truncation error is the tail: it halves when K doubles
        lhs2, _ = discrete_gram_E(1, 0, 1, 10000)
        assert lhs2 / lhs == pytest.approx(0.5, rel=0.02)

    def test_f_fast_convergence(self):
        lhs, rhs = discrete_gram_F(1, 1, 1, 2000)
        assert abs(lhs - rhs) / rhs < 1e-8
        lhs, rhs = discrete_gram_F(1, 0, 2, 2000)
        assert abs(lhs) < 1e-10

    def test_f_negative_c_needs_imaginary_node(self):
        lhs, rhs = discrete_gram_F(F(-1, 2), 0, 0, 2000)
        assert abs(lhs - rhs) < 1e-9
        lhs, rhs = discrete_gram_F(F(-1, 2), 1, 1, 2000)
        assert abs(lhs - rhs) / abs(rhs) < 1e-8

    def test_domains(self):
        with pytest.raises(DomainError):
            discrete_gram_E(F(-1, 2), 0, 0, 10)
        with pytest.raises(DomainError):
            discrete_gram_F(0, 0, 0, 10)
        with pytest.raises(DomainError):
            discrete_gram_F(-1, 0, 0, 10)
