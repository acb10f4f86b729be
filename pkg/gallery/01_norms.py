"""Hardy and Bergman norms of a few functions, next to their closed forms.

Monomials have unit boundary modulus, so every Hardy norm is 1, while the
Bergman norm of z^n with exponent q is (2/(nq+2))^(1/q).
"""

from diskineq import Monomial, TaylorPair, TaylorSeries, bergman_norm, hardy_norm

print("n  q  hardy      bergman    closed form")
for n in (1, 3, 8):
    for q in (2, 4):
        h = hardy_norm(Monomial(n), q).value
        b = bergman_norm(Monomial(n), q).value
        print(f"{n}  {q}  {h:.8f} {b:.8f} {(2 / (n * q + 2)) ** (1 / q):.8f}")

# Re z = (z + conj z) / 2 as a pair of Taylor series.
re_z = TaylorPair(TaylorSeries([0, 0.5]), TaylorSeries([0, 0.5]))
res = hardy_norm(re_z, 4)
print(f"\n||Re z||_h4 = {res.value:.10f}  (3/8)^(1/4) = {(3 / 8) ** 0.25:.10f}")
print(f"nodes used: {res.nodes_used}, error estimate {res.err_est:.1e}")

# Non-even exponents have kinks at the zeros of Re z, so the rule keeps doubling.
res = hardy_norm(re_z, 1.5)
print(f"||Re z||_h1.5 = {res.value:.10f} with {res.nodes_used[0]} nodes")
