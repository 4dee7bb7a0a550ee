"""
Shared fixtures
"""
import numpy as np
import pytest

from src.TPZNumerics import TPZNumerics


@pytest.fixture(scope='session')
def w0() -> float:
    return TPZNumerics.FindRoot(lambda w: w * np.tanh(w) - 1., 1., 2., tol=1e-14)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240613)
