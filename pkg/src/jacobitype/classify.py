"""Recover a family from its coefficient-ratio function f = N/D.

:func:`classify_jacobi_type` handles denominators free of ``u`` and maps the
separated numerator onto the five tabulated (p, q, w) shapes.
:func:`decompose_rational_f` finds the general normal form

    f = kappa · q(s+u) · p(s-u) · g(u, s+1) / (w(s) · g(u, s))

for rational-type f, with g a polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    Ambiguous,
    ClassifyNotSeparable,
    MissingForcedFactor,
    NoMatch,
    NotJacobiType,
    NotRationalNormalForm,
    NotSeparable,
)
from .exactalg import BiPoly, BiRat, UniPoly, bigcd, separate_sum_diff
from .families import FamilySpec, assemble_f


@dataclass(frozen=True)
class Decomposition:
    kappa: Fraction
    p: UniPoly
    q: UniPoly
    w: UniPoly
    g: BiPoly

    def assemble(self) -> BiRat:
        return assemble_f(self.kappa, self.p, self.q, self.w, self.g)

    def as_dict(self) -> dict:
        return {"kappa": self.kappa, "p": self.p, "q": self.q, "w": self.w, "g": self.g}


@dataclass(frozen=True)
class ClassifyResult:
    spec: FamilySpec
    decomposition: Decomposition


def classify_jacobi_type(N: BiPoly, D: BiPoly) -> ClassifyResult:
    """Identify the Jacobi-type family (with rescale) whose f equals N/D."""
    f = BiRat(N, D)
    if f.den.depends_on("u"):
        raise NotJacobiType("reduced denominator depends on u", {"numerator": f.num, "denominator": f.den})
    if not f.num:
        raise NoMatch("f is identically zero", {"numerator": f.num, "denominator": f.den})
    den = f.den.as_unipoly("s")
    d_lead = den.lead
    w = den.monic()
    try:
        kappa_n, q, p = separate_sum_diff(f.num)
    except NotSeparable as exc:
        raise ClassifyNotSeparable(str(exc), {"numerator": f.num, "w": w}) from None
    kappa = kappa_n / d_lead
    dec = Decomposition(kappa, p, q, w, BiPoly.const(1))
    partial = dec.as_dict()
    if p(0) != 0:
        raise MissingForcedFactor("p(0) != 0: numerator lacks the factor (s-u)", partial)
    if w.degree < 1 or w(-1) != 0:
        raise MissingForcedFactor("w(-1) != 0: denominator lacks the factor (s+1)", partial)

    t = lambda roots: UniPoly.from_roots(roots, "t")
    w1 = w.exact_div(UniPoly([1, 1], "s"))
    p1 = p.exact_div(UniPoly([0, 1], "t"))
    spec = None
    if p.degree == 1:
        if q.degree == 1 and w.degree == 2:
            spec = FamilySpec.jacobi(q[0], w1[0], kappa)
        elif q.degree == 1 and w.degree == 1:
            spec = FamilySpec.bessel(q[0], kappa)
        elif q.degree == 0 and w.degree == 2:
            spec = FamilySpec.laguerre(w1[0], kappa)
    elif p.degree == 2 and q.degree == 2 and w.degree == 2:
        c = 1 - p1[0]
        if w1 == UniPoly([Fraction(1, 2), 1], "s") and q == t([-1, -c]):
            spec = FamilySpec.e(c, kappa)
        elif w1 == UniPoly([Fraction(3, 2), 1], "s") and q == t([-2, -c - 1]):
            spec = FamilySpec.f(c, kappa)
    if spec is None:
        raise NoMatch(
            f"(p, q, w) = ({p}, {q}, {w}) matches no family of Jacobi type", partial
        )
    violation = spec.quasi_violation()
    if violation:
        raise NoMatch(f"{spec.label()} matches the table but {violation}", partial | {"spec": spec})
    return ClassifyResult(spec, dec)


# -- general normal form -------------------------------------------------------

def _s_factors(w: UniPoly) -> list[UniPoly]:
    """Split a polynomial in s into monic factors: rational linear factors
    (with multiplicity) plus one leftover factor without rational roots."""
    out = []
    rest = w.monic()
    for r in w.rational_roots():
        lin = UniPoly([-r, 1], w.symbol)
        while rest.degree >= 1 and rest(r) == 0:
            out.append(lin)
            rest = rest.exact_div(lin)
    if rest.degree >= 1:
        out.append(rest)
    return out


def _split_u_part(den: BiPoly) -> tuple[BiPoly, UniPoly]:
    """den = G(u, s) · C(s) with C the content of den viewed in Q[s][u]."""
    coeffs = den.coeffs_in("u")
    cont = UniPoly((), "s")
    for c in coeffs:
        if c:
            cont = cont.gcd(c)
    if cont.degree <= 0:
        return den, UniPoly([1], "s")
    G = den.exact_div(BiPoly.from_unipoly(cont, "s"))
    return G, cont


def _is_unit(a: BiPoly, b: BiPoly) -> bool:
    return bigcd(a, b).is_constant()


def _try_g(f: BiRat, g: BiPoly, max_rounds: int = 8):
    """Grow g by leftover u-dependent denominator factors until f·g/Sg has an
    s-only denominator; return (g, remainder) or None."""
    for _ in range(max_rounds):
        r = f * BiRat(g, g.shift("s", 1))
        if not r.den.depends_on("u"):
            return g, r
        G, _ = _split_u_part(r.den)
        g = (g * G).normalized()
    return None


def decompose_rational_f(f: BiRat, max_s_factors: int = 4) -> Decomposition:
    """Normal form (kappa, p, q, w, g) of a rational-type coefficient ratio."""
    if not f:
        raise ValueError("f must be nonzero")
    G, cont = _split_u_part(f.den)
    s_fac = _s_factors(cont)
    if len(s_fac) > max_s_factors:
        raise NotRationalNormalForm(f"{len(s_fac)} s-only denominator factors exceed the search bound")
    found: dict[tuple, Decomposition] = {}
    seen_g = set()
    for m in range(len(s_fac) + 1):
        for subset in combinations(range(len(s_fac)), m):
            g0 = G
            for i in subset:
                g0 = g0 * BiPoly.from_unipoly(s_fac[i], "s")
            grown = _try_g(f, g0.normalized())
            if grown is None:
                continue
            g, r = grown
            if g in seen_g:
                continue
            seen_g.add(g)
            try:
                kappa_n, q, p = separate_sum_diff(r.num)
            except NotSeparable:
                continue
            den = r.den.as_unipoly("s")
            w = den.monic()
            kappa = kappa_n / den.lead
            # uniqueness side conditions: g coprime to p(s-u), q(s+u), w(s-1)
            if not g.is_constant():
                if not _is_unit(g, BiPoly.from_linear_form(p, -1, 1)):
                    continue
                if not _is_unit(g, BiPoly.from_linear_form(q, 1, 1)):
                    continue
                if not _is_unit(g, BiPoly.from_unipoly(w.shift(-1), "s")):
                    continue
            dec = Decomposition(kappa, p, q, w, g)
            if dec.assemble() != f:
                continue
            found[(g, p, q, w, kappa)] = dec
    if not found:
        raise NotRationalNormalForm("no g assignment yields the normal form")
    if len(found) > 1:
        raise Ambiguous(
            f"{len(found)} distinct normal forms satisfy the side conditions",
            {"candidates": list(found.values())},
        )
    return next(iter(found.values()))
