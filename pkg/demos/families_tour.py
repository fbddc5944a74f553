"""Generate a family three ways and look at its recurrence and moments."""
from fractions import Fraction

from jacobitype.families import (
    FamilySpec,
    actual_recurrence_table,
    family_c0,
    family_f,
    gram_matrix,
    moment_functional,
    ratio_sequence,
    recurrence_sequence,
    series_sequence,
)

spec = FamilySpec.e(Fraction(3, 2))
N = 6

series = series_sequence(spec, N)
ratio = ratio_sequence(family_f(spec), N)
recurrence = recurrence_sequence(spec, N)

print(f"{spec.label()}: coefficient ratio f(u, s) = {family_f(spec)}")
for n in range(N + 1):
    same = series[n] == ratio[n] == recurrence[n]
    print(f"  P_{n} = {series[n]}    routes agree: {same}")

alphas, betas = actual_recurrence_table(series)
print("\nrecurrence z P_n = P_{n+1} + alpha_n P_n + beta_n P_{n-1}:")
for n in range(1, N):
    print(f"  n={n}: alpha={alphas[n]}, beta={betas[n]}")

mu = moment_functional(alphas, betas, family_c0(spec), 2 * (N - 1))
print("\nfirst moments:", ", ".join(str(m) for m in mu[:5]))
Q = gram_matrix(series.polys[:N], mu)
print("Gram diagonal:", ", ".join(str(Q[i][i]) for i in range(N)))
print("off-diagonal all zero:", all(Q[i][j] == 0 for i in range(N) for j in range(N) if i != j))
