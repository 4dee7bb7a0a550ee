"""
Epicycloid solutions u(phi) = R^n(phi)e1/(2n) +- R^k(phi)e1/(2k) of the rotating shape equation
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZErrors import TPZRangeError
from src.TPZPlanarCurve import TPZPlanarCurve

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZEpicycloid(TPZBasicDataStructure):
    """
    Fields:
        - n, k: winding numbers, nonzero, distinct and of equal sign
        - sign: '+' or '-'
        - q: 4nk/(n-k)^2
        - w2: squared angular velocity 4n^2k^2/(n-k)^2
    """
    signs: ClassVar[tuple] = ('+', '-')

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, n: int, k: int, sign: str = '+') -> None:
        super().__init__()

        self.fN: int = n
        self.fK: int = k
        self.fSign: str = sign
        self.fQ: float = 0.
        self.fW2: float = 0.

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fSign not in self.signs:
            self.DebugStop(f'ERROR: epicycloid sign must be + or -, got {self.fSign}')

        if self.fN == 0 or self.fK == 0 or self.fN == self.fK or self.fN * self.fK < 0:
            self.DebugStop(f'ERROR: need nonzero n != k with nk > 0, got n={self.fN}, k={self.fK}', TPZRangeError)

        n, k = self.fN, self.fK
        self.fQ = 4 * n * k / (n - k)**2
        self.fW2 = 4 * n**2 * k**2 / (n - k)**2

        return

#   ******************
#        METHODS
#   ******************
    def Orientation(self) -> float:
        return 1. if self.fSign == '+' else -1.

    def AngularVelocity(self) -> float:
        return float(np.sqrt(self.fW2))

    def Gamma0(self) -> float:
        """
        |n+k|/|n-k|, the constant of the first integral
        """
        return float(np.sqrt(1 + self.fQ))

    def Gamma(self) -> float:
        return -self.fQ / (1 + self.fQ)

    def Curve(self) -> TPZPlanarCurve:
        n, k, sigma = self.fN, self.fK, self.Orientation()

        def Position(phi):
            return np.array([np.cos(n * phi) / (2 * n) + sigma * np.cos(k * phi) / (2 * k),
                             np.sin(n * phi) / (2 * n) + sigma * np.sin(k * phi) / (2 * k)])

        def Velocity(phi):
            return 0.5 * np.array([-np.sin(n * phi) - sigma * np.sin(k * phi),
                                   np.cos(n * phi) + sigma * np.cos(k * phi)])

        def Acceleration(phi):
            return -0.5 * np.array([n * np.cos(n * phi) + sigma * k * np.cos(k * phi),
                                    n * np.sin(n * phi) + sigma * k * np.sin(k * phi)])

        return TPZPlanarCurve(Position, Velocity, Acceleration, 2 * np.pi)

    def HalfAngleSquare(self, phi):
        """
        c^2 = cos^2((n-k)phi/2) on the plus branch, s^2 = sin^2((n-k)phi/2) on the minus branch
        """
        half = (self.fN - self.fK) * np.asarray(phi, dtype=float) / 2

        return np.cos(half)**2 if self.fSign == '+' else np.sin(half)**2

    def Speed2(self, phi):
        """
        u'^2, equal to the half angle square
        """
        return self.HalfAngleSquare(phi)

    def ScaledRadius2(self, phi):
        """
        w^2 u^2 = 1 + q c^2 (resp. 1 + q s^2)
        """
        return 1 + self.fQ * self.HalfAngleSquare(phi)

    def Sin2(self, phi):
        """
        sin^2 of the angle between u and u'
        """
        square = self.HalfAngleSquare(phi)

        return (1 + self.fQ) * square / (1 + self.fQ * square)

    def CuspAngles(self) -> np.ndarray:
        """
        Zeros of u'^2 in one period
        """
        m = abs(self.fN - self.fK)
        offset = np.pi / m if self.fSign == '+' else 0.

        return offset + 2 * np.pi * np.arange(m) / m
