"""
Parametrized surface in the unit three sphere with analytic first derivatives
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
from typing import Callable, ClassVar

import numpy as np
from scipy.linalg import null_space

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZErrors import TPZSingularPointError
from src.TPZFundamentalForms import TPZFundamentalForms
from src.TPZNumerics import TPZNumerics

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZSurfaceMapS3(TPZBasicDataStructure):
    """
    Fields:
        - position: (phi1, phi2) -> unit 4-vector
        - jacobian: (phi1, phi2) -> 4x2 matrix of first derivatives

    Second derivatives are taken by central differences on the jacobian.
    """
    fdStep: ClassVar[float] = 1e-3
    metricFloor: ClassVar[float] = 1e-12

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, position: Callable, jacobian: Callable) -> None:
        super().__init__()

        self.fPosition: Callable = position
        self.fJacobian: Callable = jacobian

        self.DeactivateAttr()

        return

#   ******************
#        METHODS
#   ******************
    def Position(self, phi1: float, phi2: float) -> np.ndarray:
        return np.asarray(self.fPosition(phi1, phi2), dtype=float)

    def Jacobian(self, phi1: float, phi2: float) -> np.ndarray:
        return np.asarray(self.fJacobian(phi1, phi2), dtype=float)

    def Metric(self, phi1: float, phi2: float) -> np.ndarray:
        jac = self.Jacobian(phi1, phi2)
        g = jac.T @ jac

        if np.linalg.det(g) < self.metricFloor:
            raise TPZSingularPointError(f'degenerate metric at ({phi1}, {phi2})')

        return g

    def SecondDerivatives(self, phi1: float, phi2: float, h: float = None) -> np.ndarray:
        """
        Array d[a, b] = d_a d_b x of shape (2, 2, 4), fourth order differences of the jacobian
        """
        h = self.fdStep if h is None else h
        point = np.array([phi1, phi2], dtype=float)

        second = np.empty((2, 2, 4))
        for a in range(2):
            second[a] = TPZNumerics.FdDeriv(lambda p: self.Jacobian(p[0], p[1]).T, point, (a,), h=h, accuracy=4)

        return 0.5 * (second + second.transpose(1, 0, 2))

    def Laplacian(self, phi1: float, phi2: float, h: float = None) -> np.ndarray:
        """
        Laplace-Beltrami of the embedding, g^ab times the normal part of d_a d_b x
        """
        jac = self.Jacobian(phi1, phi2)
        g = self.Metric(phi1, phi2)
        ginv = np.linalg.inv(g)
        second = self.SecondDerivatives(phi1, phi2, h)

        tangential = jac @ ginv @ jac.T
        laplacian = np.zeros(4)
        for a in range(2):
            for b in range(2):
                laplacian += ginv[a, b] * (second[a, b] - tangential @ second[a, b])

        return laplacian

    def MinimalityResidual(self, phi1: float, phi2: float, h: float = None) -> float:
        """
        |Delta x + 2x|, zero for minimal surfaces of the unit three sphere
        """
        return float(np.linalg.norm(self.Laplacian(phi1, phi2, h) + 2 * self.Position(phi1, phi2)))

    def Normal(self, phi1: float, phi2: float) -> np.ndarray:
        """
        Unit normal tangent to the sphere, oriented so that its first nonzero component is positive
        """
        x = self.Position(phi1, phi2)
        basis = np.column_stack([x, self.Jacobian(phi1, phi2)])

        normal = null_space(basis.T)[:, 0]
        pivot = normal[np.argmax(np.abs(normal) > 1e-8)]

        return normal if pivot > 0 else -normal

    def NumericalForms(self, phi1: float, phi2: float, h: float = None) -> TPZFundamentalForms:
        normal = self.Normal(phi1, phi2)
        second = self.SecondDerivatives(phi1, phi2, h)

        return TPZFundamentalForms(self.Metric(phi1, phi2), second @ normal, normal='null-space')
