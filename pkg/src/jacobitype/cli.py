"""Command-line front end: gen, verify, classify, ortho.

stdout carries one JSON (or CSV) document; human messages go to stderr.
Exit codes: 0 success, 1 verification failure, 2 bad input,
3 denominator depends on u, 4 no table match, 5 numerator not separable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import besselnum, families, gauge, lommel
from .classify import classify_jacobi_type
from .errors import (
    ClassifyError,
    DomainError,
    IdentityFailure,
    InvalidParams,
    JacobiTypeError,
    NotJacobiType,
    NotSeparable,
    PolySyntaxError,
)
from .exactalg import BiPoly, BiRat, UniPoly, format_poly, parse_poly_expr
from .families import FamilySpec, Kind

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_FAIL, EXIT_BAD_INPUT = 0, 1, 2
EXIT_NOT_JACOBI, EXIT_NO_MATCH, EXIT_NOT_SEPARABLE = 3, 4, 5


class UsageError(Exception):
    """Bad command-line input; maps to exit code 2."""


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (float, np.floating)):
        return float(x)
    if isinstance(x, UniPoly):
        return [str(c) for c in x.coeffs]
    if isinstance(x, BiPoly):
        return format_poly(x)
    if isinstance(x, BiRat):
        return {"num": format_poly(x.num), "den": format_poly(x.den)}
    if isinstance(x, FamilySpec):
        return {"kind": x.kind.value, "params": jsonable(x.params), "rescale": str(x.rescale)}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def emit_json(command: str, results, out) -> None:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "results": jsonable(results)}
    out.write(json.dumps(doc, sort_keys=True, indent=2, allow_nan=False))
    out.write("\n")


def _rational(text: str | None, name: str) -> Fraction | None:
    if text is None:
        return None
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--{name}: {text!r} is not a rational p/q") from None


def _parse_params(text: str | None) -> dict[str, str]:
    """"a=2,b=1/2" -> {"a": "2", "b": "1/2"}."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or key.strip() not in ("a", "b", "c"):
            raise UsageError(f"--params: cannot read {item!r}; expected a=..,b=..,c=..")
        out[key.strip()] = value.strip()
    return out


def _spec_from_args(args) -> FamilySpec:
    given = _parse_params(getattr(args, "params", None))
    for name in ("a", "b", "c"):
        v = getattr(args, name, None)
        if v is not None:
            given[name] = v
    vals = {k: _rational(v, k) for k, v in given.items()}
    rescale = _rational(getattr(args, "rescale", None), "rescale")
    if rescale is None:
        rescale = Fraction(1)
    try:
        spec = FamilySpec(Kind(args.family), vals.get("a"), vals.get("b"), vals.get("c"), rescale)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    spec.require_valid()
    return spec


def _poly_records(seq, normalization: str = "monic") -> list[dict]:
    return [{"n": n, "coeffs": families.normalize_output(P, normalization)} for n, P in enumerate(seq)]


# -- gen -----------------------------------------------------------------------

def cmd_gen(args, out) -> int:
    spec = _spec_from_args(args)
    N = args.n
    routes = {
        "series": lambda: families.series_sequence(spec, N),
        "ratio": lambda: families.ratio_sequence(families.family_f(spec), N),
        "recurrence": lambda: families.recurrence_sequence(spec, N),
    }
    results = {"family": spec, "method": args.method, "normalization": args.normalization, "n_max": N}
    if args.method == "all":
        seqs = {name: make() for name, make in routes.items()}
        base = seqs["series"]
        results["agreement"] = [
            {"n": n, "agree": seqs["ratio"][n] == base[n] == seqs["recurrence"][n]} for n in range(N + 1)
        ]
    else:
        base = routes[args.method]()
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "n", "k", "value"])
        for rec in _poly_records(base, args.normalization):
            for k, c in enumerate(rec["coeffs"].coeffs):
                writer.writerow([spec.label(), rec["n"], k, str(c)])
        out.write(buf.getvalue())
    else:
        results["polynomials"] = _poly_records(base, args.normalization)
        emit_json("gen", results, out)
    if args.method == "all" and not all(a["agree"] for a in results["agreement"]):
        return EXIT_FAIL
    return EXIT_OK


# -- verify ----------------------------------------------------------------------

def _family_checks(spec: FamilySpec, max_n: int) -> list[dict]:
    checks = []
    ser = families.series_sequence(spec, max_n + 1)
    rat = families.ratio_sequence(families.family_f(spec), max_n + 1)
    rec = families.recurrence_sequence(spec, max_n + 1)
    bad = [n for n in range(max_n + 2) if not (ser[n] == rat[n] == rec[n])]
    checks.append({"check": "triple_agreement", "passed": not bad, "first_n": bad[0] if bad else None})

    alphas, betas = families.actual_recurrence_table(ser)
    mu = families.moment_functional(alphas, betas, families.family_c0(spec), 2 * max_n)
    Q = families.gram_matrix(ser.polys[: max_n + 1], mu)
    off = [(i, j) for i in range(max_n + 1) for j in range(max_n + 1) if i != j and Q[i][j]]
    diag_ok = True
    prod = Fraction(1)
    for i in range(max_n + 1):
        if i:
            prod *= betas[i]
        diag_ok &= Q[i][i] == prod and prod != 0
    if spec.is_orthogonal() and spec.rescale > 0:
        diag_ok &= all(Q[i][i] > 0 for i in range(max_n + 1))
    checks.append({"check": "gram_diagonal", "passed": not off and diag_ok, "offdiagonal_nonzero": off[:5]})

    alpha, beta = families.alpha_beta_closed(spec)
    fam = gauge.jacobi_type_family(spec)
    mism = []
    for n in range(1, max_n + 1):
        if alpha.eval(n, 0) != alphas[n] or fam.beta_at(n) != betas[n]:
            mism.append(n)
    exception = bool(fam.beta_overrides)
    checks.append({
        "check": "alpha_beta_closed_form",
        "passed": not mism,
        "beta1_exception": exception,
        "first_n": mism[0] if mism else None,
    })

    bad = []
    for n in range(max_n + 1):
        gam, dels = families.family_pfq_params(spec, n)
        P = families.family_poly_series(spec.with_rescale(1), n, normalization="hyper")
        if families.pfq_ode_residual(gam, dels, P):
            bad.append(n)
    checks.append({"check": "ode_residual", "passed": not bad, "first_n": bad[0] if bad else None})

    rep = gauge.verify_rational_family(fam, max_n)
    for c in rep["checks"]:
        checks.append(c | {"check": "identity_" + c["check"]})
    return checks


def cmd_verify(args, out) -> int:
    max_n = args.max_n
    if args.preset is None:
        if args.family is None:
            raise UsageError("verify needs --family or --preset")
        spec = _spec_from_args(args)
        checks = _family_checks(spec, max_n)
        beta1 = any(c.get("beta1_exception") for c in checks)
        results = {"family": spec, "max_n": max_n, "checks": checks, "beta1_exception": beta1}
    elif args.preset == "appendix-pcl":
        c = _rational(args.c, "c") if args.c is not None else Fraction(2)
        lam = _rational(args.lam, "lambda") if args.lam is not None else Fraction(1, 2)
        try:
            fam, seq = gauge.family_p_c_lambda(c, lam, max_n)
            rep = gauge.verify_rational_family(fam, max_n, seq)
        except IdentityFailure as exc:
            rep = {"passed": False, "checks": [{"check": exc.which, "passed": False, "n": exc.n, "k": exc.k}]}
        checks = rep["checks"]
        results = {"preset": "appendix-pcl", "c": c, "lambda": lam, "max_n": max_n, "checks": checks,
                   "is_jacobi_type": rep.get("is_jacobi_type")}
    elif args.preset == "appendix-rl":
        l = args.l if args.l is not None else 1
        lam = _rational(args.lam, "lambda") if args.lam is not None else Fraction(2)
        if lam == -1:
            fam, seq = gauge.family_diffshift(l, max_n)
        else:
            fam, seq = gauge.family_r_l_lambda(l, lam, max_n)
        rep = gauge.verify_rational_family(fam, max_n, seq)
        checks = rep["checks"]
        results = {"preset": "appendix-rl", "l": l, "lambda": lam, "max_n": max_n, "checks": checks,
                   "is_jacobi_type": rep["is_jacobi_type"]}
    else:
        c = _rational(args.c, "c") if args.c is not None else Fraction(1)
        checks = _lommel_checks(c, max_n)
        results = {"preset": "lommel", "c": c, "max_n": max_n, "checks": checks}
    results["passed"] = all(ch["passed"] for ch in checks)
    emit_json("verify", results, out)
    return EXIT_OK if results["passed"] else EXIT_FAIL


def _lommel_checks(c: Fraction, max_n: int) -> list[dict]:
    h = lommel.lommel_rec(c, max_n)
    bad = [n for n in range(max_n + 1) if h[n] != lommel.lommel_explicit(c, n)]
    checks = [{"check": "lommel_explicit", "passed": not bad, "first_n": bad[0] if bad else None}]
    bad = [n for n in range(max_n // 2 + 1) if not lommel.ef_lommel_check(c, n)["equal"]]
    checks.append({"check": "ef_lommel", "passed": not bad, "first_n": bad[0] if bad else None})
    try:
        lommel.g_sequence(c, max_n)
        checks.append({"check": "g_sequence", "passed": True})
    except AssertionError as exc:
        checks.append({"check": "g_sequence", "passed": False, "detail": str(exc)})
    return checks


# -- classify ----------------------------------------------------------------------

def cmd_classify(args, out) -> int:
    try:
        N = parse_poly_expr(args.numerator)
        D = parse_poly_expr(args.denominator)
    except PolySyntaxError as exc:
        raise UsageError(str(exc)) from None
    if not D:
        raise UsageError("denominator is zero")
    try:
        res = classify_jacobi_type(N, D)
    except ClassifyError as exc:
        if isinstance(exc, NotJacobiType):
            code = EXIT_NOT_JACOBI
        elif isinstance(exc, NotSeparable):
            code = EXIT_NOT_SEPARABLE
        else:
            code = EXIT_NO_MATCH
        emit_json("classify", {"error": type(exc).__name__, "message": str(exc), "partial": exc.partial}, out)
        print(f"classify: {exc}", file=sys.stderr)
        return code
    dec = res.decomposition
    results = {
        "family": res.spec.kind.value,
        "params": res.spec.params,
        "rescale": res.spec.rescale,
        "decomposition": {"kappa": dec.kappa, "p": dec.p, "q": dec.q, "w": dec.w, "g": dec.g},
    }
    emit_json("classify", results, out)
    return EXIT_OK


# -- ortho ----------------------------------------------------------------------

def cmd_ortho(args, out) -> int:
    c = _rational(args.c, "c")
    if c is None:
        raise UsageError("ortho needs --c")
    fam = args.family
    if fam == "e" and not c > 0:
        raise UsageError("the E orthogonality needs c > 0")
    if fam == "f" and not (c > -1 and c != 0):
        raise UsageError("the F orthogonality needs c > -1, c != 0")
    gram = besselnum.discrete_gram_E if fam == "e" else besselnum.discrete_gram_F
    K, M = args.zeros, args.max_n
    entries = {(n, m): gram(c, n, m, K) for n in range(M + 1) for m in range(M + 1)}
    max_rhs = max(abs(rhs) for _, rhs in entries.values())
    grid = []
    for (n, m), (lhs, rhs) in sorted(entries.items()):
        err = abs(lhs - rhs)
        grid.append({
            "n": n, "m": m, "lhs": lhs, "rhs": rhs, "abs_err": err,
            "rel_err": err / abs(rhs) if rhs else err / max_rhs,
            "tail_bound": besselnum.tail_estimate(fam, c, n, m, K),
        })
    results = {"family": fam, "c": c, "zeros": K, "max_n": M, "grid": grid}
    if fam == "f" and c < 0:
        results["imaginary_zero"] = besselnum.imaginary_zero(float(c - 1))
    emit_json("ortho", results, out)
    return EXIT_OK


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jacobitype", description="Exact tools for hypergeometric orthogonal polynomial families.")
    sub = ap.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in Kind]

    g = sub.add_parser("gen", help="generate monic polynomials of a family")
    g.add_argument("--family", choices=kinds, required=True)
    for name in ("a", "b", "c"):
        g.add_argument(f"--{name}")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--method", choices=["series", "ratio", "recurrence", "all"], default="series")
    g.add_argument("--rescale")
    g.add_argument("--format", choices=["json", "csv"], default="json")
    g.add_argument("--normalization", choices=["monic", "hyper"], default="monic")

    v = sub.add_parser("verify", help="run the identity checks for a family or a preset")
    v.add_argument("--family", choices=kinds)
    v.add_argument("--params")
    for name in ("a", "b", "c"):
        v.add_argument(f"--{name}")
    v.add_argument("--rescale")
    v.add_argument("--preset", choices=["appendix-pcl", "appendix-rl", "lommel"])
    v.add_argument("--lambda", dest="lam")
    v.add_argument("--l", type=int)
    v.add_argument("--max-n", dest="max_n", type=int, default=10)

    c = sub.add_parser("classify", help="identify the family of f = numerator/denominator")
    c.add_argument("--numerator", required=True)
    c.add_argument("--denominator", required=True)

    o = sub.add_parser("ortho", help="truncated discrete orthogonality sums")
    o.add_argument("--family", choices=["e", "f"], required=True)
    o.add_argument("--c", required=True)
    o.add_argument("--max-n", dest="max_n", type=int, default=2)
    o.add_argument("--zeros", type=int, default=2000)
    return ap


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite `--c -1/2` as `--c=-1/2`; argparse only accepts negative
    values that look like plain numbers."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok.startswith("--") and "=" not in tok and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == "."):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


COMMANDS = {"gen": cmd_gen, "verify": cmd_verify, "classify": cmd_classify, "ortho": cmd_ortho}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_negative_values(argv))
    for name in ("n", "max_n", "zeros"):
        v = getattr(args, name, None)
        if v is not None and v < (1 if name == "zeros" else 0):
            print(f"--{name.replace('_', '-')} out of range", file=sys.stderr)
            return EXIT_BAD_INPUT
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, InvalidParams, DomainError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except JacobiTypeError as exc:
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
