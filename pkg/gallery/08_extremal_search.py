"""Nelder-Mead search for large norm ratios within low-degree polynomials.

For the upper Riesz ratio the extremal F = z lies in the family and the
search finds sqrt 2.  For the Carleman-type ratio the search stays well
below C_2, and a degree-6 polynomial does not come close to the value
approached by Re(z/(1-az)).
"""

import math

from diskineq import constants as K
from diskineq.search import FamilySpec, extremal_search

res = extremal_search(FamilySpec("trig_poly", 3, 2, "riesz_upper"), seed=0, restarts=4)
print(f"riesz_upper: best {res.best_ratio:.8f} vs sqrt 2 = {math.sqrt(2):.8f}")

res = extremal_search(FamilySpec("trig_poly", 4, 2, "cp"), seed=0, restarts=6)
print(f"cp degree 4: best {res.best_ratio:.6f} vs C_2 = {K.carleman_C(2):.6f}")
print("restart ratios:", " ".join(f"{x:.4f}" for x in res.restart_ratios))
print("counterexample:", res.counterexample)
