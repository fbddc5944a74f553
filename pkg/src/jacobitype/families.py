"""The five hypergeometric families of Jacobi type.

Each family can be produced three ways, which are cross-checked against one
another:

* ``Series``: the truncated hypergeometric sum, made monic;
* ``RatioProduct``: c(n,k) = prod_{i=k}^{n-1} f(n,i)^{-1} from the
  coefficient-ratio function f(u,s);
* ``Recurrence``: z P_n = P_{n+1} + alpha(n) P_n + beta(n) P_{n-1} with the
  tabulated alpha, beta and the starting value c0 = P_1(0).

All families are monic; ``rescale = r`` replaces P_n(z) by r^{-n} P_n(r z).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import (
    BetaVanishes,
    IndeterminateAtPoint,
    InsufficientMoments,
    InvalidParams,
    NotThreeTerm,
    PoleAtPoint,
    RatioPole,
    RatioVanishes,
    TableMismatch,
)
from .exactalg import BiPoly, BiRat, U, UniPoly

Scalar = Fraction | int


class Kind(str, enum.Enum):
    JACOBI = "jacobi"
    LAGUERRE = "laguerre"
    BESSEL = "bessel"
    E = "e"
    F = "f"


class Provenance(str, enum.Enum):
    SERIES = "Series"
    RATIO_PRODUCT = "RatioProduct"
    RECURRENCE = "Recurrence"
    GAUGE = "Gauge"
    LOMMEL = "Lommel"


_PARAMS = {
    Kind.JACOBI: ("a", "b"),
    Kind.LAGUERRE: ("b",),
    Kind.BESSEL: ("a",),
    Kind.E: ("c",),
    Kind.F: ("c",),
}


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def _neg_int(x: Fraction) -> bool:
    """x in Z_{<0}"""
    return _is_int(x) and x < 0


def _nonpos_int(x: Fraction) -> bool:
    """x in Z_{<=0}"""
    return _is_int(x) and x <= 0


@dataclass(frozen=True)
class FamilySpec:
    """One of the five Jacobi-type families with exact parameters."""

    kind: Kind
    a: Fraction | None = None
    b: Fraction | None = None
    c: Fraction | None = None
    rescale: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, Fraction(v))
        object.__setattr__(self, "rescale", Fraction(self.rescale))
        needed = _PARAMS[self.kind]
        for name in ("a", "b", "c"):
            present = getattr(self, name) is not None
            if present != (name in needed):
                what = "requires" if name in needed else "does not take"
                raise InvalidParams(f"{self.kind.value} family {what} parameter {name}")
        if self.rescale == 0:
            raise InvalidParams("rescale must be nonzero")

    # convenience constructors
    @classmethod
    def jacobi(cls, a, b, rescale=1):
        return cls(Kind.JACOBI, a=a, b=b, rescale=rescale)

    @classmethod
    def laguerre(cls, b, rescale=1):
        return cls(Kind.LAGUERRE, b=b, rescale=rescale)

    @classmethod
    def bessel(cls, a, rescale=1):
        return cls(Kind.BESSEL, a=a, rescale=rescale)

    @classmethod
    def e(cls, c, rescale=1):
        return cls(Kind.E, c=c, rescale=rescale)

    @classmethod
    def f(cls, c, rescale=1):
        return cls(Kind.F, c=c, rescale=rescale)

    @property
    def params(self) -> dict[str, Fraction]:
        return {name: getattr(self, name) for name in _PARAMS[self.kind]}

    def with_rescale(self, r) -> FamilySpec:
        return FamilySpec(self.kind, self.a, self.b, self.c, Fraction(r))

    def quasi_violation(self) -> str | None:
        """Name the violated quasi-orthogonality constraint, or None."""
        a, b, c = self.a, self.b, self.c
        if self.kind is Kind.JACOBI:
            if _neg_int(a):
                return "jacobi quasi-orthogonality requires a not in Z_{<0}"
            if _neg_int(b - 1):
                return "jacobi quasi-orthogonality requires b-1 not in Z_{<0}"
            if _neg_int(a - b):
                return "jacobi quasi-orthogonality requires a-b not in Z_{<0}"
            if _nonpos_int(b):
                return "jacobi quasi-orthogonality requires b not in Z_{<=0}"
        elif self.kind is Kind.LAGUERRE:
            if _nonpos_int(b):
                return "laguerre quasi-orthogonality requires b not in Z_{<=0}"
        elif self.kind is Kind.BESSEL:
            if _neg_int(a):
                return "bessel quasi-orthogonality requires a not in Z_{<0}"
        elif _nonpos_int(c):
            return f"{self.kind.value} quasi-orthogonality requires c not in Z_{{<=0}}"
        return None

    def is_quasi_valid(self) -> bool:
        return self.quasi_violation() is None

    def is_orthogonal(self) -> bool:
        """Orthogonality domain for real parameters (rescale must be positive
        for the positivity of beta to survive the z -> r z change)."""
        a, b, c = self.a, self.b, self.c
        if self.kind is Kind.JACOBI:
            ok = a > b - 1 and b > 0
        elif self.kind is Kind.LAGUERRE:
            ok = b > 0
        elif self.kind is Kind.BESSEL:
            ok = False
        elif self.kind is Kind.E:
            ok = c > 0
        else:
            ok = c > -1 and c != 0
        return ok and self.is_quasi_valid()

    def require_valid(self) -> None:
        msg = self.quasi_violation()
        if msg:
            raise InvalidParams(msg)

    def label(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        r = "" if self.rescale == 1 else f", rescale={self.rescale}"
        return f"{self.kind.value}({ps}{r})"


@dataclass(frozen=True)
class PolySeq:
    """Monic polynomials P_0..P_N with P_n of degree n."""

    polys: tuple[UniPoly, ...]
    provenance: Provenance

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> UniPoly:
        return self.polys[n]

    def __iter__(self):
        return iter(self.polys)

    def coefficient(self, n: int, k: int) -> Fraction:
        return self.polys[n][k]


# -- hypergeometric parameters and the series route -------------------------

def family_pfq_params(spec: FamilySpec, n: int) -> tuple[list[Fraction], list[Fraction]]:
    """Upper parameters (including -n) and lower parameters at degree n."""
    a, b, c = spec.a, spec.b, spec.c
    n = Fraction(n)
    if spec.kind is Kind.JACOBI:
        return [-n, n + a], [b]
    if spec.kind is Kind.LAGUERRE:
        return [-n], [b]
    if spec.kind is Kind.BESSEL:
        return [-n, n + a], []
    if spec.kind is Kind.E:
        return [-n, 1 - n - c, n + 1, n + c], [Fraction(1, 2)]
    return [-n, 1 - n - c, n + 2, n + c + 1], [Fraction(3, 2)]


def truncated_pfq(gammas: Sequence[Scalar], deltas: Sequence[Scalar], n: int) -> list[Fraction]:
    """Coefficients of sum_{k<=n} prod(gamma)_k / (prod(delta)_k k!) z^k."""
    term = Fraction(1)
    out = [term]
    for k in range(n):
        num = Fraction(1)
        for g in gammas:
            num *= g + k
        den = Fraction(k + 1)
        for d in deltas:
            den *= d + k
        if den == 0:
            raise InvalidParams(f"lower parameter hits a non-positive integer at k={k}")
        term = term * num / den
        out.append(term)
    return out


def _apply_rescale(coeffs: Sequence[Fraction], r: Fraction) -> list[Fraction]:
    n = len(coeffs) - 1
    if r == 1:
        return list(coeffs)
    return [c * r ** (k - n) for k, c in enumerate(coeffs)]


def family_poly_series(spec: FamilySpec, n: int, normalization: str = "monic") -> UniPoly:
    """P_n from the truncated hypergeometric series."""
    spec.require_valid()
    if n < 0:
        raise ValueError("degree must be non-negative")
    gammas, deltas = family_pfq_params(spec, n)
    coeffs = truncated_pfq(gammas, deltas, n)
    lead = coeffs[n]
    assert lead != 0, f"leading coefficient vanishes for {spec.label()} at n={n}"
    coeffs = _apply_rescale([x / lead for x in coeffs], spec.rescale)
    p = UniPoly(coeffs, "z")
    return normalize_output(p, normalization)


def normalize_output(p: UniPoly, normalization: str) -> UniPoly:
    if normalization == "monic":
        return p.monic()
    if normalization == "hyper":
        if p[0] == 0:
            raise ValueError("P(0) = 0: the value-one-at-zero normalization is undefined")
        return p * (1 / p[0])
    raise ValueError(f"unknown normalization {normalization!r}")


def series_sequence(spec: FamilySpec, N: int) -> PolySeq:
    return PolySeq(tuple(family_poly_series(spec, n) for n in range(N + 1)), Provenance.SERIES)


# -- f, p, q, w and the ratio-product route ----------------------------------

def family_pqw(spec: FamilySpec) -> tuple[UniPoly, UniPoly, UniPoly]:
    """(p, q, w) with f = rescale·q(s+u)·p(s-u)/w(s); p, q in t, w in s."""
    a, b, c = spec.a, spec.b, spec.c
    t = lambda roots: UniPoly.from_roots(roots, "t")
    w = lambda roots: UniPoly.from_roots(roots, "s")
    if spec.kind is Kind.JACOBI:
        return t([0]), t([-a]), w([-1, -b])
    if spec.kind is Kind.LAGUERRE:
        return t([0]), t([]), w([-1, -b])
    if spec.kind is Kind.BESSEL:
        return t([0]), t([-a]), w([-1])
    if spec.kind is Kind.E:
        return t([0, c - 1]), t([-1, -c]), w([-1, Fraction(-1, 2)])
    return t([0, c - 1]), t([-2, -c - 1]), w([-1, Fraction(-3, 2)])


def assemble_f(kappa: Scalar, p: UniPoly, q: UniPoly, w: UniPoly, g: BiPoly | None = None) -> BiRat:
    """kappa·q(s+u)·p(s-u)·g(u,s+1) / (w(s)·g(u,s))."""
    num = BiPoly.from_linear_form(q, 1, 1) * BiPoly.from_linear_form(p, -1, 1) * Fraction(kappa)
    den = BiPoly.from_unipoly(w, "s")
    if g is not None:
        num = num * g.shift("s", 1)
        den = den * g
    return BiRat(num, den)


@lru_cache(maxsize=256)
def family_f(spec: FamilySpec) -> BiRat:
    """Coefficient-ratio function f(u, s) = c(u, s+1)/c(u, s)."""
    spec.require_valid()
    p, q, w = family_pqw(spec)
    return assemble_f(spec.rescale, p, q, w)


def coeffs_from_f(f: BiRat, n: int) -> list[Fraction]:
    """c(n,0..n) from c(n,n) = 1 and c(n,k) = c(n,k+1)/f(n,k)."""
    out = [Fraction(0)] * (n + 1)
    out[n] = Fraction(1)
    for i in range(n - 1, -1, -1):
        try:
            v = f.eval(n, i)
        except (PoleAtPoint, IndeterminateAtPoint):
            raise RatioPole(n, i) from None
        if v == 0:
            raise RatioVanishes(n, i)
        out[i] = out[i + 1] / v
    return out


def assemble(coeffs: Sequence[Fraction]) -> UniPoly:
    return UniPoly(coeffs, "z")


def ratio_sequence(f: BiRat, N: int) -> PolySeq:
    return PolySeq(tuple(assemble(coeffs_from_f(f, n)) for n in range(N + 1)), Provenance.RATIO_PRODUCT)


# -- alpha, beta --------------------------------------------------------------

def alpha_beta_from_f(f: BiRat) -> tuple[BiRat, BiRat]:
    """alpha(u), beta(u) of a monic rational-type family from its f.

    alpha = f(u,u-1)^{-1} - f(u+1,u)^{-1}
    beta  = f(u,u-2)^{-1} f(u,u-1)^{-1} - f(u+1,u-1)^{-1} f(u+1,u)^{-1}
            - f(u,u-1)^{-2} + f(u,u-1)^{-1} f(u+1,u)^{-1}
    """
    at = lambda du, ds: f.compose(U + du, U + ds).inverse()
    f0_m1 = at(0, -1)
    f1_0 = at(1, 0)
    f0_m2 = at(0, -2)
    f1_m1 = at(1, -1)
    alpha = f0_m1 - f1_0
    beta = f0_m2 * f0_m1 - f1_m1 * f1_0 - f0_m1 * f0_m1 + f0_m1 * f1_0
    return alpha, beta


def _table_alpha_beta(spec: FamilySpec) -> tuple[BiRat, BiRat]:
    a, b, c = spec.a, spec.b, spec.c
    u = U
    if spec.kind is Kind.JACOBI:
        alpha = BiRat(2 * u * u + 2 * a * u + b * (a - 1), (2 * u + a - 1) * (2 * u + a + 1))
        beta = BiRat(
            u * (u + a - 1) * (u + b - 1) * (u + a - b),
            (2 * u + a) * (2 * u + a - 1) ** 2 * (2 * u + a - 2),
        )
    elif spec.kind is Kind.LAGUERRE:
        alpha = BiRat(2 * u + b)
        beta = BiRat(u * (u + b - 1))
    elif spec.kind is Kind.BESSEL:
        alpha = BiRat(BiPoly.const(a - 1), (2 * u + a - 1) * (2 * u + a + 1))
        beta = BiRat(-(u * (u + a - 1)), (2 * u + a) * (2 * u + a - 1) ** 2 * (2 * u + a - 2))
    elif spec.kind is Kind.E:
        alpha = BiRat(BiPoly.const(-1), 2 * (2 * u + c - 1) * (2 * u + c + 1))
        beta = BiRat(BiPoly.const(1), 16 * (2 * u + c) * (2 * u + c - 1) ** 2 * (2 * u + c - 2))
    else:
        alpha = BiRat(BiPoly.const(-1), 2 * (2 * u + c) * (2 * u + c + 2))
        beta = BiRat(BiPoly.const(1), 16 * (2 * u + c + 1) * (2 * u + c) ** 2 * (2 * u + c - 1))
    r = spec.rescale
    return alpha * (1 / r), beta * (1 / (r * r))


@lru_cache(maxsize=256)
def alpha_beta_closed(spec: FamilySpec) -> tuple[BiRat, BiRat]:
    """Tabulated alpha(u), beta(u), checked against the values derived from f."""
    spec.require_valid()
    alpha, beta = _table_alpha_beta(spec)
    d_alpha, d_beta = alpha_beta_from_f(family_f(spec))
    if alpha != d_alpha or beta != d_beta:
        raise TableMismatch(f"tabulated alpha/beta of {spec.label()} disagree with f")
    return alpha, beta


def family_c0(spec: FamilySpec) -> Fraction:
    """P_1(0).

    Equal to -alpha(0) computed from the unreduced tabulated alpha, except
    for E; the reduced alpha loses this value when a = 1 (Jacobi, Bessel).
    """
    spec.require_valid()
    a, b, c = spec.a, spec.b, spec.c
    if spec.kind is Kind.JACOBI:
        c0 = -b / (a + 1)
    elif spec.kind is Kind.LAGUERRE:
        c0 = -b
    elif spec.kind is Kind.BESSEL:
        c0 = -1 / (a + 1)
    elif spec.kind is Kind.E:
        c0 = 1 / (4 * c * (c + 1))
    else:
        c0 = 1 / (2 * c * (c + 2))
    return c0 / spec.rescale


def beta_one_actual(spec: FamilySpec) -> Fraction:
    """beta_1 of the actual recurrence.

    Differs from the tabulated beta(1) exactly when q(0) = 0, i.e. for the
    Bessel and Jacobi families with a = 0.
    """
    alpha, beta = alpha_beta_closed(spec)
    r2 = spec.rescale * spec.rescale
    if spec.kind is Kind.BESSEL and spec.a == 0:
        return Fraction(-1, 2) / r2
    if spec.kind is Kind.JACOBI and spec.a == 0:
        return spec.b * (1 - spec.b) / 2 / r2
    return beta.eval(1, 0)


def _as_callable(x) -> Callable[[int], Fraction]:
    if isinstance(x, BiRat):
        return lambda n: x.eval(n, 0)
    if callable(x):
        return x
    return lambda n: Fraction(x[n])


def recurrence_generate(alpha, beta, c0: Scalar, N: int) -> PolySeq:
    """P_0 = 1, P_1 = z + c0, P_{n+1} = (z - alpha(n)) P_n - beta(n) P_{n-1}."""
    if N < 0:
        raise ValueError("N must be non-negative")
    alpha, beta = _as_callable(alpha), _as_callable(beta)
    z = UniPoly([0, 1], "z")
    polys = [UniPoly([1], "z")]
    if N >= 1:
        polys.append(UniPoly([c0, 1], "z"))
    for n in range(1, N):
        bn = beta(n)
        if bn == 0:
            raise BetaVanishes(n)
        polys.append((z - alpha(n)) * polys[n] - polys[n - 1] * bn)
    return PolySeq(tuple(polys), Provenance.RECURRENCE)


def recurrence_sequence(spec: FamilySpec, N: int) -> PolySeq:
    alpha, beta = alpha_beta_closed(spec)
    b1 = beta_one_actual(spec)
    beta_fn = lambda n: b1 if n == 1 else beta.eval(n, 0)
    return recurrence_generate(alpha, beta_fn, family_c0(spec), N)


def actual_recurrence_coeffs(Pprev: UniPoly, P: UniPoly, Pnext: UniPoly) -> tuple[Fraction, Fraction]:
    """(alpha_n, beta_n) with z P = Pnext + alpha_n P + beta_n Pprev."""
    n = P.degree
    if Pprev.degree != n - 1 or Pnext.degree != n + 1:
        raise ValueError("expected consecutive degrees n-1, n, n+1")
    if any(x.lead != 1 for x in (Pprev, P, Pnext)):
        raise ValueError("polynomials must be monic")
    z = UniPoly([0, 1], P.symbol)
    r = z * P - Pnext
    alpha = r[n]
    r = r - P * alpha
    beta = r[n - 1]
    r = r - Pprev * beta
    if r:
        raise NotThreeTerm(f"residual {r} at degree {n}")
    return alpha, beta


def actual_recurrence_table(seq: Sequence[UniPoly]) -> tuple[list[Fraction], list[Fraction]]:
    """alpha_n, beta_n for 1 <= n < len(seq)-1; index 0 carries the
    bookkeeping alpha_0 = -P_1(0) and beta_0 = 0."""
    alphas = [-seq[1][0]]
    betas = [Fraction(0)]
    for n in range(1, len(seq) - 1):
        a, b = actual_recurrence_coeffs(seq[n - 1], seq[n], seq[n + 1])
        alphas.append(a)
        betas.append(b)
    return alphas, betas


# -- moments, Gram matrix, ODE ------------------------------------------------

def moment_functional(alpha: Sequence[Scalar], beta: Sequence[Scalar], c0: Scalar, K: int) -> list[Fraction]:
    """Moments mu_0..mu_K of the functional with M(1) = 1, M(P_n) = 0 (n >= 1).

    alpha[n], beta[n] are the recurrence coefficients for n >= 1; alpha[0]
    is ignored and replaced by -c0 so that z P_0 = P_1 + alpha_0 P_0.
    """
    mus = [Fraction(1)]
    v = [Fraction(1)]  # coordinates of z^k in the P-basis
    try:
        for k in range(1, K + 1):
            top = min(k, K - k)  # coordinates above K-k never return to P_0
            new = [Fraction(0)] * (top + 1)
            for j, x in enumerate(v):
                if not x:
                    continue
                if j + 1 <= top:
                    new[j + 1] += x
                if j <= top:
                    aj = -Fraction(c0) if j == 0 else Fraction(alpha[j])
                    new[j] += aj * x
                if j >= 1 and j - 1 <= top:
                    new[j - 1] += Fraction(beta[j]) * x
            v = new
            mus.append(v[0])
    except IndexError:
        raise ValueError(f"alpha/beta lists too short for {K} moments") from None
    return mus


def gram_matrix(P: Sequence[UniPoly], mu: Sequence[Fraction]) -> list[list[Fraction]]:
    """Q_ij = M(P_i P_j)."""
    maxdeg = max(p.degree for p in P)
    if len(mu) < 2 * maxdeg + 1:
        raise InsufficientMoments(f"need {2 * maxdeg + 1} moments, got {len(mu)}")
    m = len(P)
    Q = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            total = Fraction(0)
            for a, ca in enumerate(P[i].coeffs):
                if ca:
                    for b, cb in enumerate(P[j].coeffs):
                        if cb:
                            total += ca * cb * mu[a + b]
            Q[i][j] = Q[j][i] = total
    return Q


def pfq_ode_residual(gammas: Sequence[Scalar], deltas: Sequence[Scalar], P: UniPoly) -> UniPoly:
    """[D prod(D + delta - 1) - z prod(D + gamma)] P with D = z d/dz."""
    out = []
    for k in range(P.degree + 2):
        lhs = Fraction(k) * P[k]
        for d in deltas:
            lhs *= k + Fraction(d) - 1
        rhs = P[k - 1] if k >= 1 else Fraction(0)
        for g in gammas:
            rhs *= k - 1 + Fraction(g)
        out.append(lhs - rhs)
    return UniPoly(out, P.symbol)
