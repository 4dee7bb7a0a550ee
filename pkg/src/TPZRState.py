"""
Canonical pair (R, p) of the radius equation
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZDifferentiation import TPZDifferentiation
from src.TPZErrors import TPZRangeError
from src.TPZGridFunction import TPZGridFunction

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZRState(TPZBasicDataStructure):
    """
    Fields:
        - phi: grid. Periodic grids omit the endpoint, open grids span
        [origin, origin + length] with both ends
        - R: radius, positive
        - p: conjugate momentum, equal to the time derivative of R
        - length: period of the grid, or its extent when open
        - periodic: closed or open grid
        - origin: first grid point
    """
    accuracy: ClassVar[int] = 4

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, R, p, length: float = 2 * np.pi, periodic: bool = True, origin: float = 0.) -> None:
        super().__init__()

        self.fR: np.ndarray = np.array(R, dtype=float)
        self.fP: np.ndarray = np.array(p, dtype=float)
        self.fLength: float = float(length)
        self.fPeriodic: bool = periodic
        self.fOrigin: float = float(origin)
        self.fPhi: np.ndarray = None

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fR.shape != self.fP.shape or self.fR.ndim != 1:
            self.DebugStop('ERROR: R and p must be samples on the same grid')

        if not np.all(self.fR > 0):
            self.DebugStop(f'ERROR: R must be positive, min R = {np.min(self.fR)}', TPZRangeError)

        n = len(self.fR)
        self.fPhi = self.fOrigin + self.fLength * np.arange(n) / (n if self.fPeriodic else n - 1)

        return

#   ******************
#        METHODS
#   ******************
    def Like(self, R, p) -> 'TPZRState':
        """
        New state on the same grid
        """
        return TPZRState(R, p, self.fLength, self.fPeriodic, self.fOrigin)

    def Spacing(self) -> float:
        return self.fLength / (len(self.fR) if self.fPeriodic else len(self.fR) - 1)

    def Derivative(self, field, order: int = 1) -> np.ndarray:
        """
        Along the last axis: spectral on periodic grids, fourth order differences
        with one sided ends otherwise
        """
        if self.fPeriodic:
            return TPZDifferentiation.SpectralDerivative(field, self.fLength, order)

        matrix = TPZDifferentiation.CachedMatrix(len(self.fR), self.Spacing(), order, self.accuracy)
        field = np.asarray(field, dtype=float)

        return TPZDifferentiation.ApplyAlongAxis(matrix, field, field.ndim - 1)

    def Integral(self, samples) -> float:
        return TPZGridFunction(samples, self.fOrigin, self.Spacing(), periodic=self.fPeriodic).Integral()

    def Energy(self) -> float:
        """
        H = 1/2 int (p^2 + R^2 R'^2) dphi
        """
        dR = self.Derivative(self.fR)

        return 0.5 * self.Integral(self.fP**2 + self.fR**2 * dR**2)

    def Momentum(self) -> float:
        """
        int p R' dphi, the period of zeta
        """
        return self.Integral(self.fP * self.Derivative(self.fR))
