"""Exact rational arithmetic: univariate and bivariate polynomials,
reduced rational functions, shift operators and the text parser."""
from fractions import Fraction

from .bipoly import S, U, BiPoly, BiRat, bigcd, evaluate, reduce, shift
from .parse import format_poly, parse_poly_expr
from .separate import separate_sum_diff, to_sum_diff
from .unipoly import UniPoly, pochhammer, pochhammer_poly


def scalar(x) -> Fraction:
    """Parse an exact scalar from an int, Fraction or a "p/q" string."""
    if isinstance(x, str):
        x = x.strip()
    return Fraction(x)


__all__ = [
    "BiPoly",
    "BiRat",
    "Fraction",
    "S",
    "U",
    "UniPoly",
    "bigcd",
    "evaluate",
    "format_poly",
    "parse_poly_expr",
    "pochhammer",
    "pochhammer_poly",
    "reduce",
    "scalar",
    "separate_sum_diff",
    "shift",
    "to_sum_diff",
]
