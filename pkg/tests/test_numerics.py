import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.TPZDenseMatrix import TPZDenseMatrix
from src.TPZErrors import TPZBlowupError, TPZNoBracketError, TPZRangeError, TPZShapeError, TPZSingularError
from src.TPZGridFunction import TPZGridFunction
from src.TPZNumerics import TPZNumerics


#   ******************
#        ROOTS
#   ******************
def test_find_root_critical_ratio(w0):
    assert round(w0, 5) == 1.19968
    assert abs(w0 * np.tanh(w0) - 1.) <= 1e-12


def test_find_root_outer_branch():
    root = TPZNumerics.FindRoot(lambda w: np.cosh(w) - 2 * w, 0.1, 1., tol=1e-12)
    assert round(root, 5) == 0.58939


def test_find_root_odd_function():
    assert abs(TPZNumerics.FindRoot(lambda x: x, -1., 1.)) <= 1e-12


def test_find_root_brackets_the_root():
    tol = 1e-9
    f = lambda x: x**3 - 2.
    root = TPZNumerics.FindRoot(f, 0., 2., tol=tol)
    assert np.sign(f(root - tol)) != np.sign(f(root + tol))


def test_find_root_without_sign_change():
    with pytest.raises(TPZNoBracketError):
        TPZNumerics.FindRoot(lambda x: x**2 + 1., -1., 1.)


#   ******************
#      RUNGE KUTTA
#   ******************
def test_rk4_exponential():
    trajectory = TPZNumerics.Rk4Integrate(lambda t, y: y, [1.], 0., 1., 1000)
    assert trajectory.shape == (1001, 1)
    assert abs(trajectory[-1, 0] - np.e) <= 1e-10


def test_rk4_constant_and_decaying():
    constant = TPZNumerics.Rk4Integrate(lambda t, y: np.zeros_like(y), [3.5], 0., 2., 10)
    assert_allclose(constant, 3.5)

    decaying = TPZNumerics.Rk4Integrate(lambda t, y: -y**3, [1.], 0., 5., 200)
    assert len(decaying) == 201
    assert np.all(np.isfinite(decaying))


def test_rk4_fourth_order_convergence():
    errors = [abs(TPZNumerics.Rk4Integrate(lambda t, y: y, [1.], 0., 1., steps)[-1, 0] - np.e) for steps in (10, 20)]
    assert 14. < errors[0] / errors[1] < 18.


def test_rk4_blowup_reports_last_time():
    with pytest.raises(TPZBlowupError) as info:
        TPZNumerics.Rk4Integrate(lambda t, y: y**2, [1.], 0., 2., 2000)

    assert 0.9 < info.value.fLastTime < 1.1


def test_rk4_needs_a_step():
    with pytest.raises(TPZRangeError):
        TPZNumerics.Rk4Integrate(lambda t, y: y, [1.], 0., 1., 0)


#   ******************
#      QUADRATURE
#   ******************
def test_quad_sech_squared(w0):
    value = TPZNumerics.Quad(lambda v: 1 / np.cosh(v)**2, 0., w0)
    assert_allclose(value, 1 / w0, atol=1e-12)
    assert round(value, 5) == 0.83356


def test_quad_trivial_cases():
    assert TPZNumerics.Quad(lambda x: 0., 0., 1.) == 0.
    assert abs(TPZNumerics.Quad(lambda x: x, -1., 1.)) <= 1e-15


def test_quad_linear_and_exact_on_cubics():
    f = lambda x: x**3 - 2 * x + 1
    g = lambda x: 4 * x**2
    assert_allclose(TPZNumerics.Quad(lambda x: 2 * f(x) + 3 * g(x), 0., 2.),
                    2 * TPZNumerics.Quad(f, 0., 2.) + 3 * TPZNumerics.Quad(g, 0., 2.), rtol=1e-12)
    assert_allclose(TPZNumerics.Quad(f, 0., 2.), 4. - 4. + 2., rtol=1e-12)


def test_quad_infinite_range_with_breakpoint():
    value = TPZNumerics.Quad(lambda z: 1 / np.cosh(z)**2, -np.inf, np.inf, breakpoints=(0.,))
    assert_allclose(value, 2., rtol=1e-10)


#   ******************
#  FINITE DIFFERENCES
#   ******************
def test_fd_first_derivative():
    assert_allclose(TPZNumerics.FdDeriv(lambda x: x**2, 3., order=1, h=1e-4), 6., atol=1e-8)


def test_fd_second_derivatives():
    assert abs(TPZNumerics.FdDeriv(np.sin, 0., order=2, h=1e-3)) <= 1e-12
    assert_allclose(TPZNumerics.FdDeriv(np.cosh, 1., order=2, h=1e-3), np.cosh(1.), rtol=1e-6)
    assert_allclose(TPZNumerics.FdDeriv(np.cosh, 1., order=2, h=1e-2, accuracy=4), np.cosh(1.), rtol=1e-8)


def test_fd_mixed_partial():
    f = lambda p: np.sin(p[0]) * np.exp(2 * p[1])
    point = np.array([0.3, -0.2])
    exact = 2 * np.cos(0.3) * np.exp(-0.4)
    assert_allclose(TPZNumerics.FdDeriv(f, point, directions=(0, 1), order=2, h=1e-4), exact, rtol=1e-6)
    assert_allclose(TPZNumerics.FdDeriv(f, point, directions=(0, 1), order=2, h=1e-2, accuracy=4), exact, rtol=1e-7)


def test_fd_third_derivative_is_refused():
    with pytest.raises(TPZRangeError):
        TPZNumerics.FdDeriv(np.sin, 0., order=3)


#   ******************
#     DENSE MATRICES
#   ******************
def test_inverse_of_identity_and_diagonal():
    identity = TPZDenseMatrix.FromArray(np.eye(3))
    assert_allclose(TPZNumerics.MatInverse(identity).AsArray(), np.eye(3))

    diagonal = TPZDenseMatrix(2, 2, [2., 0., 0., 4.])
    assert_allclose(TPZNumerics.MatInverse(diagonal).AsArray(), np.diag([0.5, 0.25]))


def test_inverse_of_tridiagonal():
    tridiagonal = TPZDenseMatrix.FromArray([[2., -1., 0.], [-1., 2., -1.], [0., -1., 2.]])
    inverse = TPZNumerics.MatInverse(tridiagonal)
    assert_allclose(inverse.AsArray(), np.array([[3., 2., 1.], [2., 4., 2.], [1., 2., 3.]]) / 4, atol=1e-14)
    assert_allclose(TPZNumerics.MatMul(tridiagonal, inverse).AsArray(), np.eye(3), atol=1e-10)
    assert_allclose(TPZNumerics.MatDet(tridiagonal), 4., rtol=1e-12)


def test_determinant_sign_with_pivoting():
    swap = TPZDenseMatrix.FromArray([[0., 1.], [1., 0.]])
    assert_allclose(TPZNumerics.MatDet(swap), -1.)


def test_singular_matrix():
    singular = TPZDenseMatrix.FromArray([[1., 2.], [2., 4.]])
    with pytest.raises(TPZSingularError):
        TPZNumerics.MatInverse(singular)
    assert TPZNumerics.MatDet(singular) == 0.


def test_dense_matrix_shape_check():
    with pytest.raises(TPZShapeError):
        TPZDenseMatrix(2, 3, [1., 2.])


def test_product_of_mismatched_matrices():
    with pytest.raises(TPZShapeError):
        TPZNumerics.MatMul(TPZDenseMatrix.FromArray(np.eye(2)), TPZDenseMatrix.FromArray(np.ones((3, 1))))


def test_rectangular_matrix_has_no_inverse():
    rectangular = TPZDenseMatrix.FromArray(np.ones((2, 3)))
    with pytest.raises(TPZShapeError):
        TPZNumerics.MatInverse(rectangular)
    with pytest.raises(TPZShapeError):
        TPZNumerics.MatDet(rectangular)


def test_grid_function_periodic_evaluation():
    x = np.linspace(0., 2 * np.pi, 64, endpoint=False)
    function = TPZGridFunction(np.sin(x), x0=0., dx=x[1], periodic=True)
    assert_allclose(function.Period(), 2 * np.pi)
    assert_allclose(function.Evaluate(2 * np.pi + x[5]), np.sin(x[5]), atol=1e-12)
    assert abs(function.Integral()) <= 1e-12
