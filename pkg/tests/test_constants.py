import math

import pytest

from diskineq import constants as K
from diskineq.errors import OutOfRange


def test_riesz_examples():
    assert K.riesz_R(2) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert K.riesz_R(4) == pytest.approx(2.61312593, abs=1e-8)
    assert K.riesz_L(2) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert K.riesz_L(4) == pytest.approx(1.08239220, abs=1e-8)
    assert K.riesz_L(1e6) == pytest.approx(1.0, abs=1e-10)


def test_riesz_near_one_is_finite_and_large():
    v = K.riesz_R(1.0001)
    assert v == pytest.approx(1 / math.cos(math.pi / 2.0002), rel=1e-12)
    assert 6000 < v < 7000


def test_carleman_examples():
    assert K.carleman_C(2) == pytest.approx(1.30656296, abs=1e-8)
    assert K.carleman_C(4) == pytest.approx(2.56291545, abs=1e-8)
    for p in (1.5, 2, 3, 4):
        assert K.carleman_C(p) == pytest.approx(K.M(2 * p), abs=1e-15)


def test_M_examples():
    assert K.M(4) == pytest.approx(math.cos(math.pi / 8) / math.sin(math.pi / 4), abs=1e-15)
    assert K.M(8) == pytest.approx(2.56291545, abs=1e-8)
    assert K.M(3) == pytest.approx(math.sqrt(3), abs=1e-14)
    with pytest.raises(OutOfRange):
        K.M(2)


def test_newt_and_p1():
    assert K.newt_constant(2) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert K.newt_constant(4) == pytest.approx(1.07456993, abs=1e-8)
    assert K.p1_root() == pytest.approx(2.42484, abs=5e-6)


@pytest.mark.parametrize("p", [1.5, 3, 4])
def test_conjugate_swap(p):
    q = p / (p - 1)
    assert K.riesz_R(p) == pytest.approx(K.riesz_R(q), rel=1e-14)
    assert K.riesz_L(p) == pytest.approx(K.riesz_L(q), rel=1e-14)


def test_domain():
    for fn in (K.riesz_R, K.riesz_L, K.carleman_C, K.newt_constant):
        with pytest.raises(OutOfRange):
            fn(1.0)


def test_table():
    t = K.table(4).to_json()
    assert t["C_p"] == pytest.approx(2.56291545, abs=1e-8)
    assert t["E4"] == pytest.approx(math.cos(math.pi / 8))
    low = K.table(0.5)
    assert low.R_p is None and low.M_p is None and low.p1 > 2
