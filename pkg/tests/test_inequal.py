import math

import numpy as np
import pytest

from diskineq import constants as K
from diskineq import inequal as I
from diskineq.errors import DegenerateZero, NotRealValued, OutOfRange, PreconditionFailed
from diskineq.functions import FaFamily, Monomial, TaylorPair, TaylorSeries, holomorphic, real_pair

RE_Z = real_pair(TaylorSeries([0, 1]))


def _random_series(rng, degree):
    return TaylorSeries(rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1))


# ---------------------------------------------------------------- reports


def test_margin_semantics():
    le = I.make_report("x", {}, 1.0, 2.0)
    assert le.margin == 1.0 and le.passed
    ge = I.make_report("x", {}, 1.0, 2.0, relation=">=")
    assert ge.margin == -1.0 and ge.passed is False
    eq = I.make_report("x", {}, 1.0, 1.0 + 1e-17, relation="=")
    assert eq.passed
    na = I.make_report("x", {}, 5.0, 1.0, hypothesis_ok=False)
    assert na.passed is None and na.to_json()["pass"] == "not-applicable"


# --------------------------------------------------------------- isoper


def test_isoper_examples():
    assert abs(I.check_isoperimetric(holomorphic([2 - 1j])).margin) < 1e-13
    r = I.check_isoperimetric(Monomial(1))
    assert r.lhs == pytest.approx(0.5) and r.rhs == pytest.approx(1.0) and r.passed
    r = I.check_isoperimetric(holomorphic([1, 1]))
    assert r.lhs == pytest.approx(1.5, abs=1e-12)
    assert r.rhs == pytest.approx((4 / math.pi) ** 2, rel=1e-9)


def test_isoper_requires_holomorphic():
    with pytest.raises(PreconditionFailed):
        I.check_isoperimetric(RE_Z)


# --------------------------------------------------------- carleman-exp


def test_carleman_exp_constants():
    r = I.check_carleman_exp(holomorphic([0]))
    assert r.lhs == pytest.approx(1) and r.rhs == pytest.approx(1)
    r = I.check_carleman_exp(holomorphic([math.log(2)]))
    assert r.lhs == pytest.approx(4) and r.rhs == pytest.approx(4) and r.passed


def test_carleman_exp_re_z_monte_carlo(rng):
    r = I.check_carleman_exp(RE_Z)
    assert r.passed and r.margin > 0
    rad = np.sqrt(rng.uniform(size=10**6))
    x = rad * np.cos(2 * np.pi * rng.uniform(size=rad.size))
    assert r.lhs == pytest.approx(np.mean(np.exp(2 * x)), rel=5e-3)


def test_carleman_exp_requires_real():
    with pytest.raises(NotRealValued):
        I.check_carleman_exp(Monomial(1))


# ------------------------------------------------------------------- cp


@pytest.mark.parametrize("p", [1.5, 2, 3])
def test_cp_constant(p):
    r = I.check_thm_cp(holomorphic([1]), p)
    assert r.lhs == pytest.approx(1) and r.rhs == pytest.approx(K.carleman_C(p)) and r.passed


def test_cp_re_z():
    r = I.check_thm_cp(RE_Z, 2)
    # int_U x^4 dsigma = (3/8) * 2 / 6 = 1/8
    assert r.lhs == pytest.approx((1 / 8) ** 0.25, rel=1e-10)
    assert r.rhs == pytest.approx(K.carleman_C(2) * math.sqrt(0.5), rel=1e-10)
    assert r.passed


def test_cp_fa_near_one():
    r = I.check_thm_cp(FaFamily(0.99), 2)
    assert r.passed
    assert 1.2 <= r.values["ratio"] <= K.carleman_C(2)


# ------------------------------------------------------------------- c4


def test_c4_examples():
    f = TaylorPair(TaylorSeries([0, 1]), TaylorSeries([0, 0, 1]))
    assert I.check_thm_c4(f).passed
    z = I.check_thm_c4(holomorphic([0]))
    assert z.passed and "trivial" in z.flags
    m = I.check_thm_c4(Monomial(1))
    assert m.lhs == pytest.approx(0.2 ** 0.125, rel=1e-12)
    assert m.rhs == pytest.approx(2.5629154, rel=1e-7)


# ---------------------------------------------------------------- riesz


def test_riesz_z_equality_upper():
    r = I.check_riesz(Monomial(1), 2)
    assert r.values["ratio"] == pytest.approx(math.sqrt(2), abs=1e-10)
    assert r.passed


def test_riesz_hypothesis_gate():
    r = I.check_riesz(holomorphic([1j]), 3)
    assert r.hypothesis_ok is False and r.status == "not-applicable"


def test_riesz_z_squared_p4():
    r = I.check_riesz(Monomial(2), 4)
    assert r.values["norm_F"] == pytest.approx(1, abs=1e-12)
    assert r.values["norm_re"] == pytest.approx((3 / 8) ** 0.25, abs=1e-12)
    assert r.passed


@pytest.mark.parametrize("coeffs", [[1], [-1j, 1]])
def test_riesz_documented_counterexamples(coeffs):
    # The angle hypothesis holds for these F, yet the lower bound fails.
    r = I.check_riesz(holomorphic(coeffs), 2)
    assert r.hypothesis_ok
    assert r.passed is False


# ------------------------------------------------------------------ hed


@pytest.mark.parametrize("p", [3, 4])
def test_hed_z(p):
    r = I.check_bergman_riesz(Monomial(1), p)
    assert r.passed
    assert r.values["norm_F"] == pytest.approx((2 / (p + 2)) ** (1 / p), rel=1e-9)


def test_hed_zero_and_domain():
    r = I.check_bergman_riesz(holomorphic([0]), 3)
    assert r.passed and "trivial" in r.flags
    with pytest.raises(OutOfRange):
        I.check_bergman_riesz(Monomial(1), 2)


# ----------------------------------------------------------------- newt


def test_newt_examples():
    r = I.check_newt(Monomial(1), 4)
    assert abs(r.margin) <= 1e-9 and r.passed
    r = I.check_newt(holomorphic([0, 1, 1]), 4)
    assert r.values["mean_F"] == pytest.approx(6, rel=1e-12)
    assert r.values["mean_u"] == pytest.approx(9 / 4, rel=1e-12)
    assert r.values["mean_v"] == pytest.approx(9 / 4, rel=1e-12)
    assert r.passed
    r = I.check_newt(Monomial(1), 2)
    assert r.margin == pytest.approx(math.sqrt(2) - 1, abs=1e-10)


def test_newt_preconditions():
    with pytest.raises(PreconditionFailed):
        I.check_newt(holomorphic([1, 1]), 3)
    with pytest.raises((PreconditionFailed, OutOfRange)):
        I.check_newt(Monomial(1), 1.5)


# ---------------------------------------------------- log laplacian, ipl


def test_log_laplacian_examples(rng):
    assert I.log_laplacian(TaylorSeries([0, 1]), TaylorSeries([1]), 0) == pytest.approx(4)
    assert I.log_laplacian(TaylorSeries([2 + 1j]), TaylorSeries([0]), 0.3) == pytest.approx(0, abs=1e-15)
    with pytest.raises(DegenerateZero):
        I.log_laplacian(TaylorSeries([0, 1]), TaylorSeries([0]), 0)


def test_log_laplacian_finite_difference(rng):
    a, b = _random_series(rng, 5), _random_series(rng, 5)
    z = np.array([complex(*rng.uniform(-0.6, 0.6, 2)) for _ in range(20)])
    closed = I.log_laplacian(a, b, z)
    fd = I.fd_laplacian(lambda w: np.log(np.abs(a(w)) ** 2 + np.abs(b(w)) ** 2), z, 1e-4)
    assert np.allclose(fd, closed, rtol=1e-5, atol=1e-6 * np.abs(closed).max())


def test_ipl_examples():
    r = I.check_ipl(TaylorSeries([1]), TaylorSeries([0]), 1.7)
    assert abs(r.margin) < 1e-12
    r = I.check_ipl(TaylorSeries([0, 1]), TaylorSeries([0]), 1)
    assert r.lhs == pytest.approx(1 / 3, abs=1e-13) and r.rhs == pytest.approx(1)
    r = I.check_ipl(TaylorSeries([0, 1]), TaylorSeries([1]), 1)
    assert r.lhs == pytest.approx(7 / 3, abs=1e-12) and r.rhs == pytest.approx(4) and r.passed


# ------------------------------------------------------------------ abx


def test_abx_examples():
    A, B, X, reps = I.abx_trace(TaylorSeries([0, 1]), TaylorSeries([0]))
    assert (A, B, X) == pytest.approx((1, 0, 1), abs=1e-13)
    assert all(r.passed for r in reps)
    c = 2 ** -0.5
    A, B, X, reps = I.abx_trace(TaylorSeries([0, c]), TaylorSeries([0, c]))
    assert A == pytest.approx(1) and B == pytest.approx(1)
    assert reps[0].margin == pytest.approx(0, abs=1e-13)
    A, B, X, reps = I.abx_trace(TaylorSeries([0]), TaylorSeries([0]))
    assert (A, B, X) == (0, 0, 0)
    assert all(r.margin == 0 for r in reps)


def test_abx_hypothesis_recorded():
    reps = I.abx_trace(TaylorSeries([1, 1]), TaylorSeries([1, 0.5]))[3]
    assert [r.hypothesis_ok for r in reps] == [True, True, False, False, False]


# --------------------------------------------------------- eps machinery


def test_eps_p4_identity(rng):
    fam = I.EpsFamily(0.3, 4)
    F = _random_series(rng, 6)
    z = np.array([0.1 + 0.2j, -0.5j, 0.7])
    dF, dU, dV = I.eps_laplacians(F, fam, z)
    assert np.allclose(dU + dV, 0.75 * dF, rtol=1e-12)


def test_eps_example_p2():
    dF, _, _ = I.eps_laplacians(TaylorSeries([0, 1]), I.EpsFamily(1.0, 2), 0)
    assert dF == pytest.approx(4)


@pytest.mark.parametrize("p", [2.5, 3, 4, 5])
def test_eps_finite_difference(rng, p):
    fam = I.EpsFamily(0.2, p)
    F = _random_series(rng, 4)
    z = np.array([complex(*rng.uniform(-0.6, 0.6, 2)) for _ in range(20)])
    dF, dU, dV = I.eps_laplacians(F, fam, z)
    for closed, G in ((dF, fam.F_eps), (dU, fam.U_eps), (dV, fam.V_eps)):
        fd = I.fd_laplacian(lambda w: G(F(w)), z, 1e-4)
        assert np.allclose(fd, closed, rtol=1e-5, atol=1e-7 * np.abs(closed).max())


def test_eps_domain():
    with pytest.raises(OutOfRange):
        I.EpsFamily(0, 3)


# -------------------------------------------------------------------- Q


def test_q_quarter_at_p4():
    for r, eps in ((0.3, 0.01), (0.9, 1.0)):
        assert abs(I.q_value(math.pi / 4, r, eps, 4) - 1) <= 1e-15


def test_q_closed_forms():
    for p in (2.5, 3, 5):
        assert I.q_value(0.0, 0.7, 0.1, p) == pytest.approx(I.q_at_zero(0.7, 0.1, p), rel=1e-13)
        assert I.q_value(math.pi / 4, 0.7, 0.1, p) == pytest.approx(I.q_at_quarter(0.7, 0.1, p), rel=1e-13)


def test_q_against_eps_laplacians():
    r, eps = 0.7, 0.1
    for p in (3, 5):
        fam = I.EpsFamily(eps, p)
        for s in np.linspace(0, 2 * np.pi, 9):
            F = TaylorSeries([r * np.exp(1j * s), 1])
            dF, dU, dV = I.eps_laplacians(F, fam, 0)
            assert I.q_value(s, r, eps, p) == pytest.approx((dU + dV) / ((p - 1) / p * dF), rel=1e-12)


def test_q_report_examples():
    r = I.q_report(0.7, 0.1, 3)
    assert r.values["min"] >= 1 - 1e-9 and r.passed
    r = I.q_report(0.7, 0.1, 5)
    assert r.values["max"] <= 1 + 1e-9 and r.passed
    r = I.q_report(0.5, 0.2, 2)
    assert r.values["min"] == pytest.approx(2) and r.values["max"] == pytest.approx(2)


def test_lemma_new_sweep(rng):
    F = TaylorSeries([0, 1, 1])
    for eps in (0.01, 1.0):
        for _ in range(50):
            z = complex(*rng.uniform(-0.7, 0.7, 2))
            assert I.check_lemma_new(F, 3, eps, z).margin >= -1e-12
            assert I.check_lemma_new(F, 6, eps, z).margin >= -1e-12
            assert I.check_lemma_new(F, 4, eps, z).passed


# ---------------------------------------------------------------- green


def test_green_examples():
    r = I.green_check(lambda z: np.abs(z) ** 4, 0.5)
    assert r.lhs == pytest.approx(8 * math.pi * 0.5**4, rel=1e-6)
    assert r.passed
    r = I.green_check(lambda z: np.ones(np.shape(z)), 0.5)
    assert r.lhs == 0 and r.passed
    fam = I.EpsFamily(0.5, 3)
    F = TaylorSeries([0, 1])
    r = I.green_check(lambda z: fam.F_eps(F(z)), 0.8, lambda z: I.eps_laplacians(F, fam, z)[0])
    assert abs(r.lhs - r.rhs) <= 1e-6 * abs(r.lhs) and r.passed


def test_green_radius_domain():
    with pytest.raises(OutOfRange):
        I.green_check(lambda z: z.real, 1.0)
