"""Two-sided Riesz bounds on the circle, and where the angle hypothesis bites.

F = z attains the upper constant at p = 2.  F = i is gated out by the angle
condition.  F = 1 satisfies the angle condition yet violates the lower bound,
so the printed hypothesis alone does not suffice; randomized suites
therefore draw F with F(0) = 0.
"""

from diskineq import Monomial, holomorphic
from diskineq.inequal import check_riesz

for label, F, p in (
    ("z", Monomial(1), 2),
    ("z^2", Monomial(2), 4),
    ("i", holomorphic([1j]), 3),
    ("1", holomorphic([1]), 2),
    ("-i + z", holomorphic([-1j, 1]), 2),
):
    r = check_riesz(F, p)
    ratio = r.values.get("ratio")
    shown = f"{ratio:.10f}" if ratio is not None else "n/a"
    print(f"F = {label:7s} p = {p}: ratio {shown}  status {r.status}")
