"""Detect products of the form κ·q(s+u)·p(s-u)."""
from __future__ import annotations

from fractions import Fraction
from itertools import islice

from ..errors import NotSeparable, ProbeFailure
from .bipoly import BiPoly
from .unipoly import UniPoly

# In the (a, b) = (s+u, s-u) coordinates a BiPoly's two slots hold a and b.
_A_OF = BiPoly({(1, 0): Fraction(1, 2), (0, 1): Fraction(-1, 2)})  # u = (a-b)/2
_S_OF = BiPoly({(1, 0): Fraction(1, 2), (0, 1): Fraction(1, 2)})   # s = (a+b)/2


def _primes():
    n = 2
    while True:
        if all(n % p for p in range(2, int(n**0.5) + 1)):
            yield n
        n += 1


def probe_points(limit: int = 64):
    """Deterministic probe sequence (1,0), (0,1), (2,3), (5,7), (11,13), ..."""
    yield (Fraction(1), Fraction(0))
    yield (Fraction(0), Fraction(1))
    primes = _primes()
    for _ in range(limit):
        yield (Fraction(next(primes)), Fraction(next(primes)))


def to_sum_diff(x: BiPoly) -> BiPoly:
    """Rewrite x(u, s) as T(a, b) with a = s+u, b = s-u (slots: a, b)."""
    return x.compose(_A_OF, _S_OF)


def _slice(t: BiPoly, a0=None, b0=None) -> UniPoly:
    if a0 is not None:
        return BiPoly([((0, j), c * a0**i) for (i, j), c in t.terms.items()]).as_unipoly("s").with_symbol("t")
    return BiPoly([((i, 0), c * b0**j) for (i, j), c in t.terms.items()]).as_unipoly("u").with_symbol("t")


def separate_sum_diff(x: BiPoly) -> tuple[Fraction, UniPoly, UniPoly]:
    """Write x = κ·q(s+u)·p(s-u) with monic p, q in the symbol t.

    Returns ``(kappa, q, p)``; raises NotSeparable otherwise.
    """
    if not x:
        raise ValueError("cannot separate the zero polynomial")
    t = to_sum_diff(x)
    for a0, b0 in islice(probe_points(), 66):
        v = t.eval(a0, b0)
        if v == 0:
            continue
        qa = _slice(t, b0=b0)       # T(a, b0)
        pb = _slice(t, a0=a0)       # T(a0, b)
        lhs = t * v
        rhs = BiPoly.from_unipoly(qa.with_symbol("u"), "u") * BiPoly.from_unipoly(pb.with_symbol("s"), "s")
        if lhs != rhs:
            raise NotSeparable(f"{x} is not of the form q(s+u)p(s-u) (probe {a0}, {b0})")
        q, p = qa.monic(), pb.monic()
        kappa = v / (q(a0) * p(b0))
        recon = BiPoly.from_linear_form(q, 1, 1) * BiPoly.from_linear_form(p, -1, 1) * kappa
        assert recon == x, "separation reconstruction failed"
        return kappa, q, p
    raise ProbeFailure("no probe point with T(a0, b0) != 0")
