"""Bivariate polynomials and rational functions in the symbols ``u`` and ``s``.

``u`` plays the role of the degree index n and ``s`` of the coefficient
index k.  A :class:`BiPoly` stores a sparse map ``(deg_u, deg_s) -> Fraction``;
a :class:`BiRat` is a reduced quotient of two of them.

Monomials are ordered graded-lex with ``u > s``: higher total degree first,
then higher power of ``u``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm
from types import MappingProxyType
from typing import Iterable, Mapping

from ..errors import IndeterminateAtPoint, PoleAtPoint, ZeroDenominator
from .unipoly import Scalar, UniPoly

Exponent = tuple[int, int]
VARS = ("u", "s")


def _order_key(e: Exponent) -> tuple[int, int]:
    return (e[0] + e[1], e[0])


class BiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Exponent, Fraction] = {}
        for e, c in items:
            c = Fraction(c)
            if c:
                d[(int(e[0]), int(e[1]))] = d.get((int(e[0]), int(e[1])), Fraction(0)) + c
        self._terms = {e: c for e, c in d.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, d: dict[Exponent, Fraction]) -> BiPoly:
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def var(cls, name: str) -> BiPoly:
        if name == "u":
            return cls({(1, 0): 1})
        if name == "s":
            return cls({(0, 1): 1})
        raise ValueError(f"unknown symbol {name!r}")

    @classmethod
    def from_unipoly(cls, p: UniPoly, var: str) -> BiPoly:
        if var == "u":
            return cls._raw({(k, 0): c for k, c in enumerate(p.coeffs) if c})
        if var == "s":
            return cls._raw({(0, k): c for k, c in enumerate(p.coeffs) if c})
        raise ValueError(f"unknown symbol {var!r}")

    @classmethod
    def from_linear_form(cls, p: UniPoly, cu: Scalar, cs: Scalar, c0: Scalar = 0) -> BiPoly:
        """Return p(cu·u + cs·s + c0)."""
        lin = cls({(1, 0): cu, (0, 1): cs, (0, 0): c0})
        out = cls()
        for c in reversed(p.coeffs):
            out = out * lin + c
        return out

    # -- queries -------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def depends_on(self, var: str) -> bool:
        idx = VARS.index(var)
        return any(e[idx] for e in self._terms)

    def degree(self, var: str | None = None) -> int:
        if not self._terms:
            return -1
        if var is None:
            return max(i + j for i, j in self._terms)
        idx = VARS.index(var)
        return max(e[idx] for e in self._terms)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        e = max(self._terms, key=_order_key)
        return e, self._terms[e]

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> BiPoly:
        if isinstance(x, BiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return BiPoly.const(x)
        return NotImplemented

    def __add__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self._terms)
        for e, c in other._terms.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return BiPoly._raw(d)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly()
            return BiPoly._raw({e: c * other for e, c in self._terms.items()})
        if isinstance(other, BiRat):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d: dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                d[e] = d.get(e, 0) + c1 * c2
        return BiPoly._raw({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return BiRat(self, other)

    def __rtruediv__(self, other):
        return BiRat(other, self)

    def __pow__(self, e: int) -> BiPoly:
        result = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other: BiPoly) -> BiPoly:
        """Quotient self/other; raises ArithmeticError when not exact."""
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("bivariate division is not exact")
        return q

    def divides(self, other: BiPoly) -> bool:
        return not other.divmod(self)[1]

    def divmod(self, other: BiPoly) -> tuple[BiPoly, BiPoly]:
        """Division by leading terms; the remainder is zero iff other | self."""
        if not other:
            raise ZeroDenominator("division by the zero polynomial")
        (bi, bj), bc = other.leading_term()
        rem = dict(self._terms)
        quot: dict[Exponent, Fraction] = {}
        stuck: dict[Exponent, Fraction] = {}
        while rem:
            e = max(rem, key=_order_key)
            c = rem[e]
            if e[0] >= bi and e[1] >= bj:
                qe = (e[0] - bi, e[1] - bj)
                qc = c / bc
                quot[qe] = quot.get(qe, 0) + qc
                for (i, j), oc in other._terms.items():
                    te = (i + qe[0], j + qe[1])
                    v = rem.get(te, 0) - qc * oc
                    if v:
                        rem[te] = v
                    else:
                        rem.pop(te, None)
            else:
                stuck[e] = c
                del rem[e]
        return BiPoly._raw({e: c for e, c in quot.items() if c}), BiPoly._raw(stuck)

    # -- evaluation and substitution -----------------------------------------

    def eval(self, u0: Scalar, s0: Scalar) -> Fraction:
        u0, s0 = Fraction(u0), Fraction(s0)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * u0**i * s0**j
        return total

    def compose(self, u_expr: BiPoly, s_expr: BiPoly) -> BiPoly:
        """Substitute u := u_expr and s := s_expr."""
        out = BiPoly()
        du, ds = self.degree("u"), self.degree("s")
        upow = [BiPoly.const(1)]
        for _ in range(du):
            upow.append(upow[-1] * u_expr)
        spow = [BiPoly.const(1)]
        for _ in range(ds):
            spow.append(spow[-1] * s_expr)
        for (i, j), c in self._terms.items():
            out = out + upow[i] * spow[j] * c
        return out

    def shift(self, var: str, delta: Scalar) -> BiPoly:
        """Substitute var := var + delta."""
        delta = Fraction(delta)
        if not delta:
            return self
        idx = VARS.index(var)
        d: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            k = e[idx]
            dpow = Fraction(1)
            for m in range(k, -1, -1):
                ne = (m, e[1]) if idx == 0 else (e[0], m)
                d[ne] = d.get(ne, 0) + c * comb(k, m) * dpow
                dpow *= delta
        return BiPoly._raw({e: c for e, c in d.items() if c})

    def restrict_diagonal(self, offset: Scalar) -> UniPoly:
        """Univariate polynomial in u given by s := u + offset."""
        offset = Fraction(offset)
        p = UniPoly((), "u")
        lin = UniPoly([offset, 1], "u")
        for (i, j), c in self._terms.items():
            p = p + UniPoly.monomial(i, c, "u") * lin**j
        return p

    def as_unipoly(self, var: str) -> UniPoly:
        """View a polynomial in ``var`` alone as a UniPoly."""
        other = "s" if var == "u" else "u"
        if self.depends_on(other):
            raise ValueError(f"polynomial depends on {other}")
        idx = VARS.index(var)
        n = self.degree(var)
        coeffs = [Fraction(0)] * (n + 1)
        for e, c in self._terms.items():
            coeffs[e[idx]] = c
        return UniPoly(coeffs, var)

    def coeffs_in(self, var: str) -> list[UniPoly]:
        """Coefficients of var^k as polynomials in the other symbol."""
        idx = VARS.index(var)
        other = VARS[1 - idx]
        n = self.degree(var)
        buckets: list[dict[int, Fraction]] = [dict() for _ in range(n + 1)]
        for e, c in self._terms.items():
            buckets[e[idx]][e[1 - idx]] = c
        out = []
        for b in buckets:
            m = max(b) if b else -1
            out.append(UniPoly([b.get(k, 0) for k in range(m + 1)], other))
        return out

    @classmethod
    def from_coeffs_in(cls, var: str, coeffs: Iterable[UniPoly]) -> BiPoly:
        idx = VARS.index(var)
        d: dict[Exponent, Fraction] = {}
        for k, p in enumerate(coeffs):
            for m, c in enumerate(p.coeffs):
                if c:
                    d[(k, m) if idx == 0 else (m, k)] = c
        return cls._raw(d)

    # -- normalization -------------------------------------------------------

    def content_normalized(self) -> tuple[Fraction, BiPoly]:
        """Return (scale, P) with self = scale·P, P having coprime integer
        coefficients and a positive graded-lex leading coefficient."""
        if not self._terms:
            return Fraction(0), self
        den = lcm(*(c.denominator for c in self._terms.values()))
        g = gcd(*(int(c * den) for c in self._terms.values()))
        scale = Fraction(g, den)
        if self.leading_term()[1] < 0:
            scale = -scale
        return scale, BiPoly._raw({e: c / scale for e, c in self._terms.items()})

    def normalized(self) -> BiPoly:
        return self.content_normalized()[1]

    def monic(self) -> BiPoly:
        """Scale so the graded-lex leading coefficient is 1."""
        return self * (1 / self.leading_term()[1])

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        from .parse import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"


U = BiPoly.var("u")
S = BiPoly.var("s")


# -- gcd over Q[u][s] --------------------------------------------------------

def _u_content(coeffs: list[UniPoly]) -> UniPoly:
    g = UniPoly((), "u")
    for c in coeffs:
        if c:
            g = g.gcd(c)
            if g.degree == 0:
                break
    return g


def _primitive(coeffs: list[UniPoly]) -> list[UniPoly]:
    cont = _u_content(coeffs)
    if cont.degree <= 0:
        return _scale_rational(coeffs)
    return _scale_rational([c.exact_div(cont) for c in coeffs])


def _scale_rational(coeffs: list[UniPoly]) -> list[UniPoly]:
    # keep coefficient size under control: clear to coprime integers
    nz = [x for c in coeffs for x in c.coeffs if x]
    if not nz:
        return coeffs
    den = lcm(*(x.denominator for x in nz))
    g = gcd(*(int(x * den) for x in nz))
    f = Fraction(den, g)
    return [c * f for c in coeffs]


def _trim(coeffs: list[UniPoly]) -> list[UniPoly]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _prem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    a = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        la = a[-1]
        a = [c * lc for c in a]
        for j, bc in enumerate(b):
            a[j + shift] = a[j + shift] - la * bc
        a = _trim(a)
    return a


def bigcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Greatest common divisor, content-normalized (1 for coprime inputs)."""
    if not a:
        return b.normalized() if b else BiPoly()
    if not b:
        return a.normalized()
    ca, cb = a.coeffs_in("s"), b.coeffs_in("s")
    cont = _u_content(ca).gcd(_u_content(cb))
    pa, pb = _primitive(ca), _primitive(cb)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while len(pb) > 1:
        r = _prem(pa, pb)
        pa = pb
        pb = _primitive(r) if r else []
        if not pb:
            break
    if pb and len(pb) == 1:
        # a nonzero element of Q[u] that is primitive, hence a unit
        pa = [UniPoly([1], "u")]
    g = BiPoly.from_coeffs_in("s", pa) * BiPoly.from_unipoly(cont, "u")
    return g.normalized()


# -- rational functions -------------------------------------------------------

class BiRat:
    """Reduced quotient num/den of bivariate polynomials.

    The denominator is content-normalized (coprime integers, positive
    leading coefficient); any scalar lives in the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _reduced: bool = False):
        num = num if isinstance(num, BiPoly) else BiPoly.const(num)
        den = den if isinstance(den, BiPoly) else BiPoly.const(den)
        if not den:
            raise ZeroDenominator("rational function with zero denominator")
        if not _reduced:
            if not num:
                num, den = BiPoly(), BiPoly.const(1)
            else:
                g = bigcd(num, den)
                if not g.is_constant():
                    num, den = num.exact_div(g), den.exact_div(g)
                scale, den = den.content_normalized()
                num = num * (1 / scale)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> BiRat:
        if isinstance(x, BiRat):
            return x
        if isinstance(x, BiPoly):
            return cls(x, BiPoly.const(1), _reduced=True)
        if isinstance(x, (int, Fraction)):
            return cls(BiPoly.const(x), BiPoly.const(1), _reduced=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to BiRat")

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def depends_on(self, var: str) -> bool:
        return self.num.depends_on(var) or self.den.depends_on(var)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, BiPoly)):
            other = BiRat.coerce(other)
        if not isinstance(other, BiRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other) -> BiRat:
        other = BiRat.coerce(other)
        if self.den == other.den:
            return BiRat(self.num + other.num, self.den)
        return BiRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> BiRat:
        return BiRat(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> BiRat:
        return self + (-BiRat.coerce(other))

    def __rsub__(self, other) -> BiRat:
        return BiRat.coerce(other) - self

    def __mul__(self, other) -> BiRat:
        other = BiRat.coerce(other)
        # cross-cancel before multiplying keeps intermediate sizes small
        g1 = bigcd(self.num, other.den) if self.num and not other.den.is_constant() else BiPoly.const(1)
        g2 = bigcd(other.num, self.den) if other.num and not self.den.is_constant() else BiPoly.const(1)
        n1, d2 = (self.num.exact_div(g1), other.den.exact_div(g1)) if not g1.is_constant() else (self.num, other.den)
        n2, d1 = (other.num.exact_div(g2), self.den.exact_div(g2)) if not g2.is_constant() else (other.num, self.den)
        num, den = n1 * n2, d1 * d2
        if not num:
            return BiRat(BiPoly(), 1, _reduced=True)
        scale, den = den.content_normalized()
        return BiRat(num * (1 / scale), den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> BiRat:
        if not self.num:
            raise ZeroDenominator("inverse of zero")
        return BiRat(self.den, self.num)

    def __truediv__(self, other) -> BiRat:
        return self * BiRat.coerce(other).inverse()

    def __rtruediv__(self, other) -> BiRat:
        return BiRat.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> BiRat:
        if e < 0:
            return self.inverse() ** (-e)
        return BiRat(self.num**e, self.den**e, _reduced=True) if e else BiRat.coerce(1)

    def shift(self, var: str, delta: Scalar) -> BiRat:
        num, den = self.num.shift(var, delta), self.den.shift(var, delta)
        scale, den = den.content_normalized()
        return BiRat(num * (1 / scale), den, _reduced=True)

    def compose(self, u_expr: BiPoly, s_expr: BiPoly) -> BiRat:
        return BiRat(self.num.compose(u_expr, s_expr), self.den.compose(u_expr, s_expr))

    def eval(self, u0: Scalar, s0: Scalar) -> Fraction:
        d = self.den.eval(u0, s0)
        if d == 0:
            if self.num.eval(u0, s0) == 0:
                raise IndeterminateAtPoint(f"0/0 at (u, s) = ({u0}, {s0})")
            raise PoleAtPoint(f"pole at (u, s) = ({u0}, {s0})")
        return self.num.eval(u0, s0) / d

    def __call__(self, u0: Scalar, s0: Scalar = 0) -> Fraction:
        return self.eval(u0, s0)

    def __str__(self) -> str:
        if self.den == BiPoly.const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"BiRat({str(self)!r})"


def reduce(num: BiPoly, den: BiPoly) -> BiRat:
    """Coprime, sign-canonical representative of num/den."""
    return BiRat(num, den)


def shift(x: BiPoly | BiRat, var: str, delta: Scalar):
    return x.shift(var, delta)


def evaluate(x: BiPoly | BiRat, u0: Scalar, s0: Scalar) -> Fraction:
    return x.eval(u0, s0)
