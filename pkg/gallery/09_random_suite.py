"""A seeded randomized suite, as run by ``diskineq verify --suite random``."""

from diskineq.suite import run_suite

for thm, p in (("cp", 3), ("riesz", 1.5), ("newt", 5), ("abx", None)):
    res = run_suite(thm, 200, seed=7, degree=8, p=p, tol=1e-8)
    print(
        f"{thm:6s} p={p}: passed {res.passed}, failed {res.failed}, "
        f"not applicable {res.not_applicable}, worst margin {res.worst_margin:.3e}"
    )
