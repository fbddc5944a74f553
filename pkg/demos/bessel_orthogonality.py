"""Discrete orthogonality of E and F over reciprocal Bessel zeros."""
from fractions import Fraction

from jacobitype.besselnum import bessel_zeros, discrete_gram_E, discrete_gram_F, imaginary_zero, tail_estimate

print("first zeros of J_0:", bessel_zeros(0, 5))

c = Fraction(1)
for K in (1000, 4000, 16000):
    lhs, rhs = discrete_gram_E(c, 1, 1, K)
    off, _ = discrete_gram_E(c, 0, 1, K)
    print(f"E, c=1, K={K:>5}: diagonal {lhs:.8f} vs {rhs:.8f}; "
          f"off-diagonal {off:+.2e} (tail estimate {tail_estimate('e', c, 0, 1, K):.2e})")

c = Fraction(-1, 2)
y = imaginary_zero(float(c - 1))
print(f"\nJ_(-3/2) vanishes at i*{y:.12f}; this node joins the real ones for F with c = -1/2")
for n, m in ((0, 0), (1, 1), (0, 2)):
    lhs, rhs = discrete_gram_F(c, n, m, 2000)
    print(f"F, c=-1/2, (n, m)=({n}, {m}): {lhs:+.12f} vs {rhs:+.12f}")
