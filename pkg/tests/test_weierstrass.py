import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.special import ellipj, ellipk

from src.TPZErrors import TPZError
from src.TPZLevelSet import TPZLevelSet


@pytest.fixture(scope='module')
def wp():
    return TPZLevelSet.WeierstrassTable()


def test_half_period(wp):
    assert_allclose(wp.fHalfPeriod, ellipk(0.5) / np.sqrt(2), rtol=1e-12)
    assert round(wp.fHalfPeriod, 9) == 1.311028777


def test_minimum_at_the_half_period(wp):
    assert_allclose(wp.Evaluate(wp.fHalfPeriod), 1., atol=1e-12)
    assert_allclose(wp.Derivative(wp.fHalfPeriod), 0., atol=1e-10)
    assert np.all(wp.fLookup.fSamples >= 1. - 1e-12)


def test_pole_at_the_origin(wp):
    assert wp.Evaluate(0.01) > 1e3
    assert np.isinf(wp.Evaluate(0.))


def test_differential_equation(wp):
    x = np.linspace(0.3, 2 * wp.fHalfPeriod - 0.3, 400)

    assert np.max(wp.Residual(x)) <= 1e-8


def test_jacobi_form(wp):
    x = np.linspace(0.1, 2.5, 97)
    sn, _, _, _ = ellipj(np.sqrt(2) * x, 0.5)

    assert_allclose(wp.Evaluate(x), -1 + 2 / sn**2, rtol=1e-9)


def test_series_and_table_join(wp):
    cut = wp.cut
    value, slope = wp.Laurent(cut)

    assert_allclose(wp.Evaluate(cut + 1e-12), value, rtol=1e-10)
    assert_allclose(wp.Derivative(cut + 1e-12), slope, rtol=1e-8)


def test_periodicity_and_symmetry(wp):
    omega = wp.fHalfPeriod
    x = np.linspace(0.2, 1.2, 11)

    assert_allclose(wp.Evaluate(x + 2 * omega), wp.Evaluate(x), rtol=1e-12)
    assert_allclose(wp.Evaluate(-x), wp.Evaluate(x), rtol=1e-12)
    assert_allclose(wp.Derivative(2 * omega - x), -wp.Derivative(x), rtol=1e-12)


def test_low_resolution_is_rejected():
    from src.TPZWeierstrassP import TPZWeierstrassP

    with pytest.raises(TPZError):
        TPZWeierstrassP(resolution=512)
