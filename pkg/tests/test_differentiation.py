import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.TPZDifferentiation import TPZDifferentiation


def test_classical_stencils():
    assert_allclose(TPZDifferentiation.StencilWeights([-1, 0, 1], 2), [1., -2., 1.], atol=1e-14)
    assert_allclose(TPZDifferentiation.StencilWeights([-1, 0, 1], 1), [-0.5, 0., 0.5], atol=1e-14)
    assert_allclose(TPZDifferentiation.StencilWeights([-2, -1, 0, 1, 2], 1), np.array([1., -8., 0., 8., -1.]) / 12, atol=1e-14)


@pytest.mark.parametrize('derivative, accuracy', [(1, 2), (1, 4), (2, 2), (2, 4)])
def test_matrix_is_exact_on_polynomials(derivative, accuracy):
    x = np.linspace(0., 1., 21)
    matrix = TPZDifferentiation.DifferentiationMatrix(len(x), x[1] - x[0], derivative, accuracy)

    degree = derivative + accuracy - 1
    polynomial = np.polynomial.Polynomial(np.arange(1., degree + 2.))
    assert_allclose(matrix @ polynomial(x), polynomial.deriv(derivative)(x), atol=1e-8)


def test_matrix_converges_at_fourth_order():
    errors = []
    for n in (41, 81):
        x = np.linspace(0., 1., n)
        matrix = TPZDifferentiation.DifferentiationMatrix(n, x[1] - x[0], 1, 4)
        errors.append(np.max(np.abs(matrix @ np.sin(3 * x) - 3 * np.cos(3 * x))))

    assert 12. < errors[0] / errors[1] < 20.


def test_periodic_second_derivative():
    x = np.linspace(0., 2 * np.pi, 64, endpoint=False)
    matrix = TPZDifferentiation.DifferentiationMatrix(64, x[1], 2, 6, periodic=True)
    assert_allclose(matrix @ np.sin(x), -np.sin(x), atol=1e-7)


def test_spectral_derivative():
    x = np.linspace(0., 2 * np.pi, 32, endpoint=False)
    assert_allclose(TPZDifferentiation.SpectralDerivative(np.sin(3 * x), 2 * np.pi), 3 * np.cos(3 * x), atol=1e-12)
    assert_allclose(TPZDifferentiation.SpectralDerivative(np.cos(x), 2 * np.pi, order=2), -np.cos(x), atol=1e-12)


def test_apply_along_axis():
    x = np.linspace(0., 1., 15)
    matrix = TPZDifferentiation.DifferentiationMatrix(15, x[1], 1, 4)
    grid = np.add.outer(x**2, 3 * x)

    assert_allclose(TPZDifferentiation.ApplyAlongAxis(matrix, grid, 0), np.add.outer(2 * x, 0 * x), atol=1e-10)
    assert_allclose(TPZDifferentiation.ApplyAlongAxis(matrix, grid, 1), np.full_like(grid, 3.), atol=1e-10)
