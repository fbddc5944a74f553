"""Recover a family from its coefficient ratio, then a non-Jacobi-type one."""
from fractions import Fraction

from jacobitype.classify import classify_jacobi_type, decompose_rational_f
from jacobitype.errors import NotJacobiType
from jacobitype.exactalg import parse_poly_expr
from jacobitype.families import FamilySpec, family_f
from jacobitype.gauge import family_p_c_lambda

hidden = FamilySpec.f(Fraction(5, 2), rescale=Fraction(-2))
f = family_f(hidden)
print("f =", f)
result = classify_jacobi_type(f.num, f.den)
print("classified as", result.spec.label())

num = parse_poly_expr("(s - u)*(s + u + 2)")
den = parse_poly_expr("(s + 1)*(u + 3)")
try:
    classify_jacobi_type(num, den)
except NotJacobiType as exc:
    print("\n(s-u)(s+u+2)/((s+1)(u+3)):", exc)

fam, _ = family_p_c_lambda(2, Fraction(1, 2), 4)
dec = decompose_rational_f(fam.f)
print("\nP^{c=2, lambda=1/2} normal form:")
print("  kappa =", dec.kappa)
print("  p(t) =", dec.p, "   q(t) =", dec.q, "   w(s) =", dec.w)
print("  g(u, s) =", dec.g)
