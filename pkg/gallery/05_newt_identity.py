"""At p = 4 the H^4 norm splits exactly into the h^4 norms of Re F and Im F.

For F(0) = 0, ||F||^4 = (4/3)(||u||^4 + ||v||^4).  Below 4 the left side is
bounded above by the right side and above 4 the inequality reverses.
"""

import numpy as np

from diskineq import holomorphic
from diskineq.inequal import check_newt, newt_means

rng = np.random.default_rng(0)
c = np.concatenate([[0], rng.standard_normal(5) + 1j * rng.standard_normal(5)])
F = holomorphic(c)
mF, mu, mv = newt_means(F, 4)
print(f"||F||^4 = {mF.value:.12f}")
print(f"(4/3)(||u||^4 + ||v||^4) = {4 / 3 * (mu.value + mv.value):.12f}")

for p in (2, 3, 4, 5, 6):
    r = check_newt(F, p)
    print(f"p = {p}: {r.lhs:.6f} {r.relation} {r.rhs:.6f}  margin {r.margin:+.2e}  {r.status}")
