from fractions import Fraction as F

import pytest

from jacobitype.errors import IndeterminateAtPoint, NotSeparable, PoleAtPoint, ZeroDenominator
from jacobitype.exactalg import (
    BiPoly,
    BiRat,
    S,
    U,
    UniPoly,
    bigcd,
    evaluate,
    parse_poly_expr as P,
    pochhammer,
    pochhammer_poly,
    reduce,
    scalar,
    separate_sum_diff,
    shift,
)


def test_scalar_parsing():
    assert scalar("3/6") == F(1, 2)
    assert scalar(" -4 ") == -4
    assert scalar(F(2, 4)).denominator == 2


class TestUniPoly:
    def test_trailing_zeros_stripped(self):
        assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert UniPoly([0, 0]).coeffs == ()
        assert UniPoly([]).degree == -1

    def test_arithmetic(self):
        t = UniPoly([0, 1], "t")
        p = (t + 1) * (t - 2)
        assert p.coeffs == (-2, -1, 1)
        q, r = divmod(p, t + 1)
        assert q == t - 2 and not r
        assert p(3) == 4
        assert p.shift(1) == (t + 2) * (t - 1)
        assert p.derivative() == 2 * t - 1

    def test_gcd_and_roots(self):
        t = UniPoly([0, 1], "t")
        a = (t - F(1, 2)) * (t + 3) ** 2
        b = (t + 3) * (t - 7)
        assert a.gcd(b) == t + 3
        assert sorted(a.rational_roots()) == [-3, F(1, 2)]

    def test_printer(self):
        assert str(UniPoly([0, -2, 1], "t")) == "t^2 - 2*t"


class TestPochhammer:
    def test_examples(self):
        t = UniPoly([0, 1], "t")
        assert pochhammer_poly(F(1, 2), 1) == t + F(1, 2)
        assert pochhammer_poly(F(-1, 2), 3) == (t - F(1, 2)) * (t + F(1, 2)) * (t + F(3, 2))
        assert pochhammer_poly(5, 0) == UniPoly([1], "t")

    def test_scalar(self):
        assert pochhammer(3, 4) == 3 * 4 * 5 * 6
        assert pochhammer(F(1, 2), 0) == 1
        assert pochhammer(-2, 3) == 0


class TestReduce:
    def test_cancel_common_factor(self):
        r = reduce((U - S) * (S + 1), (S + 1) ** 2)
        assert r.num == U - S
        assert r == BiRat(U - S, S + 1)
        assert r.den == S + 1

    def test_already_coprime(self):
        r = reduce(U - S, S + 1)
        assert r.num == U - S and r.den == S + 1

    def test_coprime_with_content(self):
        num = 3 * (S - U) * (S + U + 2)
        r = reduce(num, (S + 1) ** 2)
        assert r.num == num
        assert r.den == (S + 1) ** 2
        assert bigcd(r.num, r.den).is_constant()

    def test_denominator_sign_and_content(self):
        r = reduce(U, -2 * S - 4)
        assert r.den == S + 2
        assert r.num == U * F(-1, 2)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            reduce(U, BiPoly())


class TestShift:
    def test_examples(self):
        assert shift(S**2, "s", 1) == S**2 + 2 * S + 1
        assert shift(BiRat(U - S, S + 1), "s", -1) == BiRat(U - S + 1, S)
        assert shift(U * S, "u", 2) == U * S + 2 * S

    def test_inverse(self):
        x = BiRat(U * S + 3, (S + U + 1) * (S - 2))
        assert shift(shift(x, "u", 1), "u", -1) == x


class TestEval:
    def test_examples(self):
        f = BiRat(S - U, S + 1)
        assert evaluate(f, 1, 0) == -1
        with pytest.raises(PoleAtPoint):
            evaluate(f, 0, -1)
        assert evaluate(U * S, 2, 3) == 6

    def test_indeterminate(self):
        # coprime, yet both vanish at (u, s) = (0, 0)
        f = BiRat(U, S)
        assert f.den == S
        with pytest.raises(IndeterminateAtPoint):
            f.eval(0, 0)


class TestSeparate:
    def test_trivial(self):
        kappa, q, p = separate_sum_diff((S - U) * (S + U + 2))
        assert kappa == 1
        assert q == UniPoly([2, 1], "t") and p == UniPoly([0, 1], "t")

    def test_e_row(self):
        c = 3
        x = (S + U + 1) * (S + U + c) * (S - U) * (S - U + 1 - c)
        kappa, q, p = separate_sum_diff(x)
        assert kappa == 1
        assert q == UniPoly.from_roots([-1, -3], "t")
        assert p == UniPoly.from_roots([0, 2], "t")

    def test_constant_factor(self):
        kappa, q, p = separate_sum_diff(F(-5, 3) * (S - U) ** 2)
        assert kappa == F(-5, 3) and q.degree == 0 and p == UniPoly([0, 0, 1], "t")

    def test_not_separable(self):
        with pytest.raises(NotSeparable):
            separate_sum_diff(S**2 + U)

    def test_zero(self):
        with pytest.raises(ValueError):
            separate_sum_diff(BiPoly())


def test_birat_arithmetic():
    f = BiRat(S - U, S + 1)
    g = BiRat(S + 1, S + U + 2)
    assert f * g == BiRat(S - U, S + U + 2)
    assert f / f == BiRat(BiPoly.const(1))
    assert (f + g) - g == f
    assert f ** -2 == (f * f).inverse()


def test_parse_agrees_with_operators():
    assert P("(s-u)*(s+u+2)") == (S - U) * (S + U + 2)
