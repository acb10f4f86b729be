"""Ratio of the b^4 and h^2 norms along Re(z/(1-az)) as a approaches 1.

The ratio climbs toward (5/2)^(1/4), which stays below C_2.  The limit is
estimated by polynomial extrapolation in 1-a, never by evaluating at a = 1.
"""

from diskineq import constants as K
from diskineq.search import sweep_fa

res = sweep_fa(2, [0.5, 0.9, 0.99, 0.999])
print(res.to_csv())
print(f"extrapolated limit {res.limit:.6f} (+/- {res.limit_err:.1e})")
print(f"(5/2)^(1/4)        {2.5 ** 0.25:.6f}")
print(f"C_2                {K.carleman_C(2):.6f}")
