"""Dense univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence

Scalar = Fraction | int


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    """Polynomial in one named symbol, coefficients stored ascending.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "symbol")

    def __init__(self, coeffs: Iterable[Scalar] = (), symbol: str = "z"):
        self.coeffs = _strip(coeffs)
        self.symbol = symbol

    @classmethod
    def constant(cls, c: Scalar, symbol: str = "z") -> UniPoly:
        return cls([c], symbol)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, symbol: str = "z") -> UniPoly:
        return cls([0] * k + [c], symbol)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], symbol: str = "z") -> UniPoly:
        p = cls([1], symbol)
        for r in roots:
            p = p * cls([-Fraction(r), 1], symbol)
        return p

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def with_symbol(self, symbol: str) -> UniPoly:
        return UniPoly(self.coeffs, symbol)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other], self.symbol)
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def __add__(self, other) -> UniPoly:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)], self.symbol)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs], self.symbol)

    def __sub__(self, other) -> UniPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> UniPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs], self.symbol)
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly((), self.symbol)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.symbol)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniPoly:
        result = UniPoly([1], self.symbol)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple[UniPoly, UniPoly]:
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lc
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return UniPoly(quot, self.symbol), UniPoly(rem[:dq], self.symbol)

    def __floordiv__(self, other) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> UniPoly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> UniPoly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        return self * (1 / self.lead)

    def gcd(self, other: UniPoly) -> UniPoly:
        """Monic gcd (zero only if both inputs are zero)."""
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic()

    # -- evaluation and substitution -----------------------------------------

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a: Scalar) -> UniPoly:
        """Return p(t + a)."""
        a = Fraction(a)
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            apow = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += c * comb(k, j) * apow
                apow *= a
        return UniPoly(out, self.symbol)

    def scale(self, r: Scalar) -> UniPoly:
        """Return p(r·t)."""
        r = Fraction(r)
        return UniPoly([c * r**k for k, c in enumerate(self.coeffs)], self.symbol)

    def derivative(self) -> UniPoly:
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.symbol)

    def integer_content(self) -> tuple[Fraction, tuple[int, ...]]:
        """Split into (content, primitive integer coefficients)."""
        if not self.coeffs:
            return Fraction(0), ()
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = gcd(*ints)
        return Fraction(g, den), tuple(i // g for i in ints)

    def rational_roots(self) -> list[Fraction]:
        """Distinct rational roots, ascending."""
        p = self
        roots: list[Fraction] = []
        while p and p[0] == 0:
            if Fraction(0) not in roots:
                roots.append(Fraction(0))
            p = UniPoly(p.coeffs[1:], p.symbol)
        if p.degree < 1:
            return sorted(roots)
        _, ints = p.integer_content()
        a0, an = abs(ints[0]), abs(ints[-1])
        for num in _divisors(a0):
            for den in _divisors(an):
                for sign in (1, -1):
                    r = Fraction(sign * num, den)
                    if r not in roots and p(r) == 0:
                        roots.append(r)
        return sorted(roots)

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.symbol if k == 1 else f"{self.symbol}^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r}, symbol={self.symbol!r})"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [0]
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def pochhammer_poly(shift: Scalar, length: int, symbol: str = "t") -> UniPoly:
    """Rising factorial (t + shift)(t + shift + 1)...(t + shift + length - 1)."""
    if length < 0:
        raise ValueError("length must be non-negative")
    shift = Fraction(shift)
    return UniPoly.from_roots([-(shift + j) for j in range(length)], symbol)


def pochhammer(x: Scalar, k: int) -> Fraction:
    """Rising factorial (x)_k for a scalar x."""
    out = Fraction(1)
    x = Fraction(x)
    for j in range(k):
        out *= x + j
    return out


def as_unipoly(p: UniPoly | Sequence[Scalar], symbol: str = "z") -> UniPoly:
    return p if isinstance(p, UniPoly) else UniPoly(p, symbol)
