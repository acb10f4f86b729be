import numpy as np
import pytest

from diskineq.suite import THEOREMS, random_series, run_suite


@pytest.mark.parametrize(
    "thm,p",
    [
        ("isoper", None), ("carleman-exp", None), ("cp", 1.5), ("cp", 3), ("c4", None),
        ("riesz", 1.5), ("riesz", 4), ("hed", 3), ("newt", 2), ("newt", 5), ("ipl", 0.5),
        ("lemma-new", 3), ("lemma-new", 5), ("green", 3), ("abx", None),
    ],
)
def test_small_suites_pass(thm, p):
    res = run_suite(thm, 20, seed=11, degree=6, p=p, tol=1e-8)
    assert res.ok, res.failures[:1]
    assert res.passed + res.not_applicable == 20


def test_thread_count_does_not_change_result():
    a = run_suite("cp", 12, seed=3, p=3, tol=1e-8, threads=1).to_json()
    b = run_suite("cp", 12, seed=3, p=3, tol=1e-8, threads=3).to_json()
    assert a == b


def test_random_series_vanishing():
    rng = np.random.default_rng(0)
    for _ in range(20):
        s = random_series(rng, 4, vanish_at_zero=True)
        assert s.coeffs[0] == 0 and 1 <= s.degree <= 4


def test_unknown_theorem():
    with pytest.raises(ValueError):
        run_suite("nope", 1, 0)
    assert len(THEOREMS) == 11
