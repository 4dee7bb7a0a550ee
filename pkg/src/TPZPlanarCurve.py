"""
Closed plane curve u(phi) given with its first two derivatives
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
from typing import Callable

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZPlanarCurve(TPZBasicDataStructure):
    """
    Fields:
        - position: phi -> u(phi), vectorized, returning an array of shape (2, ...)
        - velocity: phi -> u'(phi)
        - acceleration: phi -> u''(phi)
        - period: parameter period
    """
#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, position: Callable, velocity: Callable, acceleration: Callable, period: float = 2 * np.pi) -> None:
        super().__init__()

        self.fPosition: Callable = position
        self.fVelocity: Callable = velocity
        self.fAcceleration: Callable = acceleration
        self.fPeriod: float = float(period)

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if not self.fPeriod > 0:
            self.DebugStop(f'ERROR: period must be positive, got {self.fPeriod}')

        return

#   ******************
#        METHODS
#   ******************
    def Position(self, phi) -> np.ndarray:
        return np.asarray(self.fPosition(phi), dtype=float)

    def Velocity(self, phi) -> np.ndarray:
        return np.asarray(self.fVelocity(phi), dtype=float)

    def Acceleration(self, phi) -> np.ndarray:
        return np.asarray(self.fAcceleration(phi), dtype=float)

    def Radius(self, phi):
        return np.hypot(*self.Position(phi))

    def PolarAngle(self, phi):
        x, y = self.Position(phi)
        return np.arctan2(y, x)

    def Sample(self, npoints: int) -> np.ndarray:
        """
        Points of one period as an (npoints, 2) array, endpoint excluded
        """
        phi = np.linspace(0., self.fPeriod, npoints, endpoint=False)
        return self.Position(phi).T

    def DerivativeDefect(self, phi, h: float = 1e-5) -> float:
        """
        Largest mismatch between central differences of u, u' and the given u', u''
        """
        phi = np.asarray(phi, dtype=float)

        slope = (self.Position(phi + h) - self.Position(phi - h)) / (2 * h)
        curvature = (self.Velocity(phi + h) - self.Velocity(phi - h)) / (2 * h)

        return float(max(np.max(np.abs(slope - self.Velocity(phi))), np.max(np.abs(curvature - self.Acceleration(phi)))))
