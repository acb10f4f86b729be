"""The constant table across exponents, plus the crossover exponent p1."""

from diskineq import constants as K

print(f"p1 = {K.p1_root():.8f}")
print(f"{'p':>5} {'R_p':>10} {'L_p':>10} {'C_p':>10} {'newt':>10}")
for p in (1.25, 1.5, 2, 3, 4, 6):
    t = K.table(p)
    print(f"{p:5g} {t.R_p:10.6f} {t.L_p:10.6f} {t.C_p:10.6f} {t.newt:10.6f}")

# C_p and M_{2p} are the same number computed by two branch formulas.
for p in (1.5, 2, 3, 4):
    print(f"C_{p} - M_{2 * p} = {K.carleman_C(p) - K.M(2 * p):+.1e}")
