import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.TPZErrors import TPZError
from src.TPZSLProblem import TPZSLProblem
from src.TPZSturmLiouville import TPZSturmLiouville


def Sech2Well(v):
    return -2. / np.cosh(v)**2


def test_critical_catenoid_ground_state(w0):
    result = TPZSturmLiouville(TPZSLProblem(Sech2Well, -w0, w0)).Solve(0)

    assert abs(result.fEigenvalue) <= 1e-8
    assert result.fIndex == 0
    assert result.fEigenfunction.SupDistance(lambda v: 1 - v * np.tanh(v)) <= 1e-6


def test_bound_state_on_the_line():
    result = TPZSturmLiouville(TPZSLProblem.Decaying(Sech2Well, 25.)).Solve(0)

    assert_allclose(result.fEigenvalue, -1., atol=1e-8)
    assert result.fEigenfunction.SupDistance(lambda z: 1 / np.cosh(z)) <= 1e-6


def test_free_laplacian():
    solver = TPZSturmLiouville(TPZSLProblem(lambda v: 0. * v, 0., np.pi))

    ground = solver.Solve(0)
    assert_allclose(ground.fEigenvalue, 1., atol=1e-8)
    assert ground.fEigenfunction.SupDistance(np.sin) <= 1e-6

    excited = solver.Solve(2)
    assert_allclose(excited.fEigenvalue, 9., atol=1e-7)
    assert TPZSturmLiouville.InteriorNodes(excited.fEigenfunction) == 2


def test_eigenvalues_are_ordered():
    solver = TPZSturmLiouville(TPZSLProblem(Sech2Well, -3., 3.))
    eigenvalues = [solver.Solve(index).fEigenvalue for index in range(3)]

    assert eigenvalues[0] < eigenvalues[1] < eigenvalues[2]


def test_shrinking_interval_raises_the_ground_state():
    values = [TPZSturmLiouville(TPZSLProblem(Sech2Well, -w, w)).Solve(0).fEigenvalue for w in (2.5, 2.0, 1.5)]

    assert values[0] < values[1] < values[2]


def test_invalid_problem():
    with pytest.raises(TPZError):
        TPZSLProblem(Sech2Well, 1., -1.)

    with pytest.raises(TPZError):
        TPZSLProblem(Sech2Well, -1., 1., boundary='neumann')
