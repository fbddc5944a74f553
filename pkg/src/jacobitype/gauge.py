"""Rational-type families beyond Jacobi type.

A gauge g(u, s) acts on coefficients by c(n, k) -> g(n, k) c(n, k), i.e.
P_n -> g(n, z d/dz) P_n.  Three constructions are provided:

* R^{l,lambda}: the Jacobi family a=1, b=l+1/2 gauged by r(s) + lambda r(u),
  r(t) = (t-l+3/2)_{2l-1}, which mixes it with its partner b' = 3/2-l;
* the difference family R_n = monic(Q_{n+1} - P_{n+1}) of the same pair;
* P^{c,lambda}, interpolating between F^{(c)} (lambda=0) and E^{(c+1)}
  (lambda=1).

Each comes with f, h, alpha, beta and c0, and :func:`verify_rational_family`
checks the identities tying them together.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    GaugeVanishesOnDiagonal,
    IdentityFailure,
    IndeterminateAtPoint,
    InvalidDecomposition,
    InvalidParams,
    PoleAtPoint,
)
from .exactalg import BiPoly, BiRat, S, U, UniPoly, pochhammer_poly
from .families import (
    FamilySpec,
    PolySeq,
    Provenance,
    actual_recurrence_coeffs,
    alpha_beta_closed,
    beta_one_actual,
    family_c0,
    family_f,
    family_pqw,
    ratio_sequence,
    series_sequence,
)

Z = UniPoly([0, 1], "z")


@dataclass(frozen=True)
class RationalFamily:
    f: BiRat
    h: BiRat | None
    alpha: BiRat
    beta: BiRat
    c0: Fraction
    label: str
    # actual beta_n where the rational beta(n) is not the recurrence value
    beta_overrides: dict = field(default_factory=dict, compare=False)

    @property
    def is_jacobi_type(self) -> bool:
        return not self.f.den.depends_on("u")

    def beta_at(self, n: int) -> Fraction:
        if n in self.beta_overrides:
            return self.beta_overrides[n]
        return self.beta.eval(n, 0)


# -- gauge action ---------------------------------------------------------------

def _value(g, n: int, k: int) -> Fraction:
    return g.eval(n, k) if isinstance(g, (BiPoly, BiRat)) else Fraction(g)


def apply_gauge(g: BiPoly | BiRat, Q) -> PolySeq:
    """c(n,k) -> g(n,k) c(n,k) / g(n,n), with n the degree of each input."""
    out = []
    for P in Q:
        n = P.degree
        gnn = _value(g, n, n)
        if gnn == 0:
            raise GaugeVanishesOnDiagonal(n)
        out.append(UniPoly([_value(g, n, k) * P[k] / gnn for k in range(n + 1)], P.symbol))
    return PolySeq(tuple(out), Provenance.GAUGE)


def h_closed_form(p: UniPoly, q: UniPoly, w: UniPoly, kappa=1) -> BiRat:
    """h = c(u+1, s)/c(u, s) for f = kappa q(s+u) p(s-u) / w(s):

        h = w(u) q(u+s) / (kappa q(2u) q(2u+1) p(s-u-1))
    """
    num = BiPoly.from_unipoly(w.with_symbol("u"), "u") * BiPoly.from_linear_form(q, 1, 1)
    den = (
        BiPoly.from_linear_form(q, 2, 0)
        * BiPoly.from_linear_form(q, 2, 0, 1)
        * BiPoly.from_linear_form(p, -1, 1, -1)
        * Fraction(kappa)
    )
    h = BiRat(num, den)
    f = BiRat(BiPoly.from_linear_form(q, 1, 1) * BiPoly.from_linear_form(p, -1, 1) * Fraction(kappa),
              BiPoly.from_unipoly(w, "s"))
    if f.shift("u", 1) * h != h.shift("s", 1) * f:
        raise InvalidDecomposition("Uf/f = Sh/h fails for the given (p, q, w)")
    return h


def jacobi_type_family(spec: FamilySpec) -> RationalFamily:
    """The data of one of the five tabulated families."""
    p, q, w = family_pqw(spec)
    alpha, beta = alpha_beta_closed(spec)
    overrides = {}
    b1 = beta_one_actual(spec)
    try:
        if beta.eval(1, 0) != b1:
            overrides[1] = b1
    except (PoleAtPoint, IndeterminateAtPoint):
        overrides[1] = b1
    return RationalFamily(
        f=family_f(spec),
        h=h_closed_form(p, q, w, spec.rescale),
        alpha=alpha,
        beta=beta,
        c0=family_c0(spec),
        label=spec.label(),
        beta_overrides=overrides,
    )


# -- Jacobi a=1, b=l+1/2 and its partner b'=3/2-l ------------------------------

def _r_poly(l: int) -> UniPoly:
    """r(t) = (t-l+3/2)_{2l-1}."""
    return pochhammer_poly(Fraction(3, 2) - l, 2 * l - 1, "t")


def _check_l(l) -> None:
    if not isinstance(l, int) or l < 1:
        raise InvalidParams("l must be a positive integer")


def family_r_l_lambda(l: int, lam, N: int) -> tuple[RationalFamily, PolySeq]:
    """lambda P + Q renormalized, P = Jacobi(1, l+1/2), Q = Jacobi(1, 3/2-l).

    Q_{n,k} = r(k)/r(n) P_{n,k}, so this is the gauge G = r(s) + lambda r(u)
    applied to P.
    """
    _check_l(l)
    lam = Fraction(lam)
    if lam == -1:
        raise InvalidParams("lambda = -1 is degenerate; use family_diffshift")
    P_spec = FamilySpec.jacobi(1, l + Fraction(1, 2))
    Q_spec = FamilySpec.jacobi(1, Fraction(3, 2) - l)
    r = _r_poly(l)
    G = BiPoly.from_unipoly(r.with_symbol("s"), "s") + BiPoly.from_unipoly(r.with_symbol("u"), "u") * lam
    base = jacobi_type_family(P_spec)
    f = base.f * BiRat(G.shift("s", 1), G)
    diag = G.compose(U, U)
    h = base.h * BiRat(G.shift("u", 1), G) * BiRat(diag, diag.shift("u", 1))
    c0 = (lam * family_c0(P_spec) + family_c0(Q_spec)) / (lam + 1)
    fam = RationalFamily(f, h, base.alpha, base.beta, c0, f"R^(l={l}, lambda={lam})")
    seq = apply_gauge(G, series_sequence(P_spec, N))
    return fam, seq


def gauge_numerator_r_l_lambda(l: int, lam) -> BiPoly:
    """Content-normalized r(s) + lambda r(u)."""
    _check_l(l)
    r = _r_poly(l)
    G = BiPoly.from_unipoly(r.with_symbol("s"), "s") + BiPoly.from_unipoly(r.with_symbol("u"), "u") * Fraction(lam)
    return G.normalized()


def family_diffshift(l: int, N: int) -> tuple[RationalFamily, PolySeq]:
    """R_n = monic(Q_{n+1} - P_{n+1}); degree n since P, Q are monic.

    Q - P obeys the shared three-term recursion and has constant leading
    coefficient, so alpha_R(n) = alpha(n+1) and beta_R(n) = beta(n+1).
    """
    _check_l(l)
    P_spec = FamilySpec.jacobi(1, l + Fraction(1, 2))
    Q_spec = FamilySpec.jacobi(1, Fraction(3, 2) - l)
    M = max(N, 1)
    P = series_sequence(P_spec, M + 1)
    Q = series_sequence(Q_spec, M + 1)
    polys = []
    for n in range(M + 1):
        d = Q[n + 1] - P[n + 1]
        if d.degree != n:
            raise AssertionError(f"Q_{n + 1} - P_{n + 1} has degree {d.degree}")
        polys.append(d.monic())
    seq = PolySeq(tuple(polys[: N + 1]), Provenance.GAUGE)

    r = _r_poly(l)
    rs = lambda shift: BiPoly.from_unipoly(r.shift(shift).with_symbol("s"), "s")
    ru = lambda shift: BiPoly.from_unipoly(r.shift(shift).with_symbol("u"), "u")
    # c_R(n, k) is proportional to (r(k) - r(n+1)) / r(n+1) * c_P(n+1, k)
    G = BiRat(rs(0) - ru(1), ru(1))
    fP = jacobi_type_family(P_spec)
    f = BiRat(rs(1) - ru(1), rs(0) - ru(1)) * fP.f.shift("u", 1)
    h = fP.h.shift("u", 1) * G.shift("u", 1) * G.inverse()
    fam = RationalFamily(
        f, h, fP.alpha.shift("u", 1), fP.beta.shift("u", 1), polys[1][0], f"diffshift(l={l})"
    )
    return fam, seq


def diffshift_f_displayed(l: int) -> BiRat:
    """(r(s+1)-r(u+1))/(r(s)-r(u+1)) * (s-u-1)(s+u+2)/((s+1)(s+l+1/2))."""
    r = _r_poly(l)
    rs = lambda shift: BiPoly.from_unipoly(r.shift(shift).with_symbol("s"), "s")
    ru = lambda shift: BiPoly.from_unipoly(r.shift(shift).with_symbol("u"), "u")
    return BiRat(rs(1) - ru(1), rs(0) - ru(1)) * BiRat(
        (S - U - 1) * (S + U + 2), (S + 1) * (S + l + Fraction(1, 2))
    )


# -- P^{c, lambda}: between F^{(c)} and E^{(c+1)} ---------------------------------

def p_c_lambda_data(c, lam) -> tuple[BiPoly, UniPoly, UniPoly, UniPoly]:
    """(g, p, q, w) of the P^{c,lambda} family."""
    c, lam = Fraction(c), Fraction(lam)
    if c.denominator == 1 and c <= 0:
        raise InvalidParams("P^{c,lambda} requires c not in Z_{<=0}")
    g = (U + S + 1) * (S - U - c) - (U + S + c + 1) * (S - U) * lam
    p = UniPoly.from_roots([0, c], "t")
    q = UniPoly.from_roots([-1, -c - 1], "t")
    w = UniPoly.from_roots([-1, Fraction(-3, 2)], "s")
    return g, p, q, w


def family_p_c_lambda(c, lam, N: int) -> tuple[RationalFamily, PolySeq]:
    """P^{c,lambda} generated from f by c(n,k) = prod_{i=k}^{n-1} f(n,i)^{-1}.

    Raises IdentityFailure at the first (n, k) where a coefficient relation
    or the three-term relation fails.
    """
    c, lam = Fraction(c), Fraction(lam)
    g, p, q, w = p_c_lambda_data(c, lam)
    pq = BiPoly.from_linear_form(p, -1, 1) * BiPoly.from_linear_form(q, 1, 1)
    f = BiRat(pq * g.shift("s", 1), BiPoly.from_unipoly(w, "s") * g)
    h = BiRat(
        BiPoly.from_unipoly(w.with_symbol("u"), "u")
        * BiPoly.from_linear_form(q, 1, 1)
        * g.compose(U, U)
        * g.shift("u", 1),
        BiPoly.from_linear_form(q, 2, 0)
        * BiPoly.from_linear_form(q, 2, 0, 1)
        * BiPoly.from_linear_form(p, -1, 1, -1)
        * g.compose(U + 1, U + 1)
        * g,
    )
    u = U
    alpha = BiRat(BiPoly.const(-1), 2 * (2 * u + c) * (2 * u + c + 2))
    beta = BiRat(BiPoly.const(1), 16 * (2 * u + c + 1) * (2 * u + c) ** 2 * (2 * u + c - 1))
    c0 = f.eval(1, 0) ** -1
    fam = RationalFamily(f, h, alpha, beta, c0, f"P^(c={c}, lambda={lam})")
    seq = ratio_sequence(f, N)
    report = verify_rational_family(fam, N, seq)
    if not report["passed"]:
        bad = report["first_failure"]
        raise IdentityFailure(bad["check"], bad.get("n"), bad.get("k"))
    return fam, seq


# -- verification -----------------------------------------------------------------

def verify_rational_family(fam: RationalFamily, N: int, seq: PolySeq | None = None) -> dict:
    """Check Uf/f = Sh/h, S^{-1}(f)^{-1} = h + alpha + beta/U^{-1}(h), the
    coefficient relations by f and h, and the three-term relation.

    Returns {"passed", "checks": [...], "first_failure", "exceptional"}.
    Lattice points where f or h has a pole or 0/0 are listed under
    "exceptional" rather than counted as failures.
    """
    checks = []
    exceptional = []

    def record(name, ok, **detail):
        entry = {"check": name, "passed": ok} | detail
        checks.append(entry)
        return entry

    f, h = fam.f, fam.h
    if h is not None:
        res = f.shift("u", 1) * h - h.shift("s", 1) * f
        record("consistency", not res, residual=str(res.num) if res else "0")
        rhs = h + fam.alpha + fam.beta * h.shift("u", -1).inverse()
        res = f.shift("s", -1).inverse() - rhs
        record("three_term_identity", not res, residual=str(res.num) if res else "0")

    if seq is None:
        seq = ratio_sequence(f, N)
    # coefficient relations on the lattice
    bad = None
    for n in range(len(seq)):
        for k in range(n):
            try:
                v = f.eval(n, k)
            except (PoleAtPoint, IndeterminateAtPoint) as exc:
                exceptional.append({"function": "f", "n": n, "k": k, "reason": type(exc).__name__})
                continue
            if seq[n][k + 1] != v * seq[n][k]:
                bad = bad or {"n": n, "k": k}
    record("ratio_f", bad is None, **(bad or {}))
    if h is not None:
        bad = None
        for n in range(len(seq) - 1):
            for k in range(n + 1):
                try:
                    v = h.eval(n, k)
                except (PoleAtPoint, IndeterminateAtPoint) as exc:
                    exceptional.append({"function": "h", "n": n, "k": k, "reason": type(exc).__name__})
                    continue
                if seq[n + 1][k] != v * seq[n][k]:
                    bad = bad or {"n": n, "k": k}
        record("ratio_h", bad is None, **(bad or {}))

    # three-term relation z P_n = P_{n+1} + alpha(n) P_n + beta(n) P_{n-1}
    bad = None
    if len(seq) >= 2 and seq[1] != Z + fam.c0:
        bad = {"n": 0, "residual": str(seq[1] - Z - fam.c0)}
    for n in range(1, len(seq) - 1):
        if bad:
            break
        try:
            a, b = fam.alpha.eval(n, 0), fam.beta_at(n)
        except (PoleAtPoint, IndeterminateAtPoint):
            bad = {"n": n, "residual": "alpha or beta undefined"}
            break
        res = Z * seq[n] - seq[n + 1] - seq[n] * a - seq[n - 1] * b
        if res:
            bad = {"n": n, "residual": str(res)}
    record("three_term", bad is None, **(bad or {}))

    failures = [c for c in checks if not c["passed"]]
    return {
        "label": fam.label,
        "passed": not failures,
        "checks": checks,
        "first_failure": failures[0] if failures else None,
        "exceptional": exceptional,
        "beta_overrides": dict(fam.beta_overrides),
        "is_jacobi_type": fam.is_jacobi_type,
    }


def actual_alpha_beta(seq: PolySeq) -> list[tuple[Fraction, Fraction]]:
    """(alpha_n, beta_n) read off a generated sequence, n = 1 .. len-2."""
    return [actual_recurrence_coeffs(seq[n - 1], seq[n], seq[n + 1]) for n in range(1, len(seq) - 1)]
