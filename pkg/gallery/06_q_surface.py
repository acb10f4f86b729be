"""The normalized ratio Q(s) of the regularized Laplacians.

Q stays above 1 for p < 4, below 1 for p > 4 and is identically 1 at p = 4.
Its extrema sit at multiples of pi/4.
"""

import numpy as np

from diskineq.inequal import q_report, q_value

s = np.linspace(0, np.pi / 2, 9)
for p in (3, 4, 5):
    row = " ".join(f"{q:.4f}" for q in q_value(s, 0.7, 0.1, p))
    print(f"p = {p}: {row}")

for p in (2.5, 3.5, 4.5, 6):
    rep = q_report(0.95, 0.01, p)
    print(f"p = {p}: min {rep.values['min']:.6f} max {rep.values['max']:.6f} {rep.status}")
