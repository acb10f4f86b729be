"""Flux through a circle equals the integral of the Laplacian inside it.

The flux side uses a central difference of G in r.  The area side uses
either a closed-form Laplacian or a five-point stencil.
"""

import numpy as np

from diskineq import TaylorSeries
from diskineq.inequal import EpsFamily, eps_laplacians, green_check

r = green_check(lambda z: np.abs(z) ** 4, 0.5)
print(f"|z|^4, r = 0.5: flux {r.lhs:.9f} area {r.rhs:.9f} exact {8 * np.pi * 0.5 ** 4:.9f}")

fam = EpsFamily(0.5, 3)
F = TaylorSeries([0.2, 1, -0.4j])
rep = green_check(lambda z: fam.F_eps(F(z)), 0.8, lambda z: eps_laplacians(F, fam, z)[0])
print(f"F_eps, r = 0.8: flux {rep.lhs:.9f} area {rep.rhs:.9f} {rep.status}")
