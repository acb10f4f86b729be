import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskineq.errors import NotRealValued
from diskineq.functions import (
    EvalPoint,
    ExpOfHarmonic,
    FaFamily,
    Monomial,
    TaylorPair,
    TaylorSeries,
    analytic_completion,
    as_series,
    eval,
    holomorphic,
    is_real,
    parse_function,
    real_pair,
)

coef = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


def test_monomial_at_one():
    assert eval(Monomial(1), EvalPoint(1, 0)) == 1


def test_pair_at_i_is_zero():
    f = TaylorPair(TaylorSeries([0, 1]), TaylorSeries([0, 1]))
    assert abs(eval(f, EvalPoint(1, math.pi / 2))) < 1e-15


def test_fa_closed_form_and_truncation():
    f = FaFamily(0.5)
    assert eval(f, EvalPoint(1, 0)) == pytest.approx(2.0, abs=1e-15)
    trunc = f.truncation(50)
    z = np.exp(1j * np.linspace(0, 6, 13)) * 0.9
    assert np.allclose(trunc.values(z), f.values(z), atol=1e-14)


def test_fa_rejects_a_one():
    with pytest.raises(ValueError):
        FaFamily(1.0)


def test_evalpoint_range_and_reduction():
    with pytest.raises(ValueError):
        EvalPoint(1.5, 0)
    assert EvalPoint(0.5, 7 * math.pi).theta == pytest.approx(math.pi)


def test_series_is_immutable():
    s = TaylorSeries([1, 2])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_degree_cap():
    with pytest.raises(ValueError):
        TaylorSeries(np.ones(300))


def test_completion_examples():
    u = TaylorPair(TaylorSeries([0, 0.5]), TaylorSeries([0, 0.5]))
    assert analytic_completion(u) == TaylorSeries([0, 1])
    assert analytic_completion(holomorphic([3])) == TaylorSeries([3])
    a = 0.5
    F = analytic_completion(FaFamily(a).truncation(30))
    expected = np.concatenate([[0], a ** np.arange(30)])
    assert np.allclose(F.coeffs, expected, atol=1e-15)


def test_completion_rejects_complex():
    with pytest.raises(NotRealValued):
        analytic_completion(Monomial(1))


def test_is_real_examples():
    assert not is_real(Monomial(1))
    assert is_real(FaFamily(0.3))
    # f = (1+2i) + z + conj(1-2i) + conj(z) = 2 + 4i + 2 Re z: not real.
    f = TaylorPair(TaylorSeries([1 + 2j, 1]), TaylorSeries([1 - 2j, 1]))
    assert not is_real(f)
    assert is_real(TaylorPair(TaylorSeries([1 + 2j, 1]), TaylorSeries([1 + 2j, 1])))
    assert is_real(ExpOfHarmonic(FaFamily(0.2)))


@settings(max_examples=50, deadline=None)
@given(st.lists(coef, min_size=1, max_size=9), st.lists(coef, min_size=1, max_size=9))
def test_boundary_values_match_trig_form(g, h):
    f = TaylorPair(TaylorSeries(g), TaylorSeries(h))
    t = np.linspace(0, 2 * np.pi, 17)
    trig = sum(c * np.exp(1j * n * t) for n, c in enumerate(g)) + sum(
        np.conj(c) * np.exp(-1j * n * t) for n, c in enumerate(h)
    )
    got = f.values(np.exp(1j * t))
    scale = 1 + sum(map(abs, g)) + sum(map(abs, h))
    assert np.max(np.abs(got - trig)) <= 1e-14 * scale


@settings(max_examples=50, deadline=None)
@given(st.lists(coef, min_size=1, max_size=9))
def test_real_pair_completes_back(c):
    F = TaylorSeries(c)
    u = real_pair(F)
    assert is_real(u)
    G = analytic_completion(u)
    z = np.array([0.3 + 0.4j, -0.7j, 0.9])
    assert np.allclose(G(z).real, F(z).real, atol=1e-12 * (1 + np.abs(F.coeffs).sum()))
    assert abs(G.coeffs[0].imag) == 0


@settings(max_examples=30, deadline=None)
@given(st.lists(coef, min_size=1, max_size=6), st.floats(0, 2 * np.pi))
def test_rotation(c, alpha):
    s = TaylorSeries(c)
    z = np.array([0.2 + 0.1j, 0.5j])
    assert np.allclose(s.rotated(alpha)(z), s(np.exp(1j * alpha) * z), atol=1e-12 * (1 + np.abs(s.coeffs).sum()))


def test_derivative_and_arithmetic():
    s = TaylorSeries([1, 2, 3])
    assert s.derivative() == TaylorSeries([2, 6])
    assert (s + TaylorSeries([1])) == TaylorSeries([2, 2, 3])
    assert (2 * s) == TaylorSeries([2, 4, 6])
    assert hash(TaylorSeries([1, 0])) == hash(TaylorSeries([1]))


def test_json_roundtrip():
    for f in [
        TaylorPair(TaylorSeries([1j, 2]), TaylorSeries([0, 0, 1])),
        Monomial(3),
        FaFamily(0.25),
        ExpOfHarmonic(FaFamily(0.25), 2.0),
    ]:
        g = parse_function(json.dumps(f.to_json()))
        z = np.array([0.1 + 0.2j, -0.5])
        assert np.allclose(g.values(z), f.values(z))


def test_parse_rejects_unknown():
    with pytest.raises(ValueError):
        parse_function({"type": "nope"})


def test_as_series_requires_holomorphic():
    with pytest.raises(TypeError):
        as_series(TaylorPair(TaylorSeries([0, 1]), TaylorSeries([0, 1])))
    assert as_series(Monomial(2)) == TaylorSeries([0, 0, 1])
