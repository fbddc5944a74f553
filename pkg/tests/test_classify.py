from fractions import Fraction as F

import pytest
import sympy

from conftest import RESCALES, VALID_SPECS
from jacobitype.classify import classify_jacobi_type, decompose_rational_f
from jacobitype.errors import (
    ClassifyNotSeparable,
    MissingForcedFactor,
    NoMatch,
    NotJacobiType,
    NotRationalNormalForm,
    NotSeparable,
)
from jacobitype.exactalg import BiPoly, BiRat, S, U, UniPoly, format_poly, parse_poly_expr
from jacobitype.families import FamilySpec, assemble_f, family_f, family_pqw
from jacobitype.gauge import diffshift_f_displayed, p_c_lambda_data

ss, uu = sympy.symbols("s u")


def to_sympy(P) -> sympy.Expr:
    if isinstance(P, BiRat):
        return to_sympy(P.num) / to_sympy(P.den)
    if isinstance(P, UniPoly):
        return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in P.coeffs])) or [0], sympy.Symbol(P.symbol)).as_expr()
    return sympy.sympify(format_poly(P).replace("^", "**"), locals={"s": ss, "u": uu})


def sympy_assemble(dec) -> sympy.Expr:
    """kappa q(s+u) p(s-u) g(u, s+1) / (w(s) g(u, s)), assembled in sympy."""
    t = sympy.Symbol("t")
    p, q, w = to_sympy(dec.p), to_sympy(dec.q), to_sympy(dec.w.with_symbol("s"))
    g = to_sympy(dec.g)
    k = sympy.Rational(dec.kappa.numerator, dec.kappa.denominator)
    return k * q.subs(t, ss + uu) * p.subs(t, ss - uu) * g.subs(ss, ss + 1) / (w * g)


def same_function(birat, expr) -> bool:
    return sympy.cancel(to_sympy(birat) - expr) == 0


class TestClassify:
    @pytest.mark.parametrize("spec", VALID_SPECS, ids=lambda s: s.label())
    @pytest.mark.parametrize("r", RESCALES, ids=str)
    def test_round_trip(self, spec, r):
        spec = spec.with_rescale(r)
        f = family_f(spec)
        res = classify_jacobi_type(f.num, f.den)
        assert res.spec == spec
        assert res.decomposition.g == BiPoly.const(1)
        assert same_function(f, sympy_assemble(res.decomposition))

    def test_unreduced_input(self):
        f = family_f(FamilySpec.jacobi(2, 1))
        extra = S + U + 7
        assert classify_jacobi_type(f.num * extra, f.den * extra).spec == FamilySpec.jacobi(2, 1)

    def test_laguerre_example(self):
        res = classify_jacobi_type(parse_poly_expr("s - u"), parse_poly_expr("(s+1)*(s+5/2)"))
        assert res.spec == FamilySpec.laguerre(F(5, 2))

    def test_u_in_denominator(self):
        with pytest.raises(NotJacobiType):
            classify_jacobi_type(parse_poly_expr("s-u"), parse_poly_expr("(s+1)*(u+1)"))

    def test_not_separable(self):
        with pytest.raises(ClassifyNotSeparable) as info:
            classify_jacobi_type(S * U, S + 1)
        assert isinstance(info.value, NotSeparable)

    def test_missing_factors(self):
        with pytest.raises(MissingForcedFactor):
            classify_jacobi_type(S + U + 1, (S + 1) * (S + 2))
        with pytest.raises(MissingForcedFactor):
            classify_jacobi_type(S - U, (S + 2) * (S + 3))

    def test_no_match_shape(self):
        with pytest.raises(NoMatch) as info:
            classify_jacobi_type((S - U) * (S + U + 1) ** 3, (S + 1) * (S + 2))
        assert info.value.partial["q"].degree == 3

    def test_quasi_invalid_match(self):
        f = assemble_f(1, *family_pqw(FamilySpec.jacobi(0, 1)))
        with pytest.raises(NoMatch) as info:
            classify_jacobi_type(f.num, f.den)
        assert info.value.partial["spec"] == FamilySpec.jacobi(0, 1)

    def test_e_f_disambiguation(self):
        for c in [F(1, 2), F(3), F(-5, 4)]:
            for spec in (FamilySpec.e(c), FamilySpec.f(c)):
                if spec.is_quasi_valid():
                    f = family_f(spec)
                    assert classify_jacobi_type(f.num, f.den).spec == spec


class TestDecompose:
    @pytest.mark.parametrize("spec", VALID_SPECS, ids=lambda s: s.label())
    def test_jacobi_type_has_trivial_g(self, spec):
        dec = decompose_rational_f(family_f(spec))
        assert dec.g.is_constant()
        assert same_function(family_f(spec), sympy_assemble(dec))

    def test_simple(self):
        dec = decompose_rational_f(BiRat(S - U, S + 1))
        assert dec.p == UniPoly([0, 1], "t") and dec.q == UniPoly([1], "t")
        assert dec.w == UniPoly([1, 1], "s") and dec.g.is_constant()

    def test_p_c_lambda(self):
        g, p, q, w = p_c_lambda_data(2, F(1, 2))
        f = assemble_f(1, p, q, w, g)
        dec = decompose_rational_f(f)
        assert dec.p == UniPoly([0, -2, 1], "t")
        assert dec.q == UniPoly.from_roots([-1, -3], "t")
        assert dec.w == UniPoly.from_roots([-1, F(-3, 2)], "s")
        assert same_function(f, sympy_assemble(dec))
        g = sympy.expand(to_sympy(dec.g))
        target = uu**2 - ss**2 + 3 * uu + 5 * ss + 4
        assert sympy.simplify(g / target).is_constant()

    def test_p_c_lambda_negative(self):
        g, p, q, w = p_c_lambda_data(F(3, 2), -3)
        f = assemble_f(1, p, q, w, g)
        dec = decompose_rational_f(f)
        g = sympy.expand(to_sympy(dec.g))
        target = 8 * uu**2 - 8 * ss**2 + 20 * uu - 14 * ss + 3
        assert sympy.simplify(g / target).is_constant()
        assert same_function(f, sympy_assemble(dec))

    def test_diffshift(self):
        f = diffshift_f_displayed(2)
        dec = decompose_rational_f(f)
        assert not dec.g.is_constant()
        assert same_function(f, sympy_assemble(dec))

    def test_search_bound(self):
        den = (S + 1) * (S + 2) * (S + 3) * (S + 4) * (S + 5) * (U + S + 9)
        with pytest.raises(NotRationalNormalForm):
            decompose_rational_f(BiRat(S - U, den))

    def test_no_normal_form(self):
        with pytest.raises(NotRationalNormalForm):
            decompose_rational_f(BiRat(S * U + 1, S + 1))

    def test_zero(self):
        with pytest.raises(ValueError):
            decompose_rational_f(BiRat(BiPoly.const(0)))
