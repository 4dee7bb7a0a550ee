"""
Axially symmetric membrane in the physical gauge: profile (r, z) over a
parameter phi with velocities, subject to

    rdot r' + zdot z' = 0,   rdot^2 + zdot^2 + r^2 (r'^2 + z'^2) = eps^2.
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
class TPZMembraneState(TPZBasicDataStructure):
    """
    Fields:
        - phi: parameter grid. Periodic grids omit the endpoint; open grids
        include both pinned ends
        - r, z, rDot, zDot: profile and velocities
        - eps: constraint constant
        - periodic: torus-like topology
        - zSlope: z - zSlope*phi is periodic (zero for closed profiles, the
        pitch for a cylinder)
    """
    accuracy: ClassVar[int] = 4

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, phi, r, z, rDot, zDot, eps: float, periodic: bool = True, zSlope: float = 0.) -> None:
        super().__init__()

        self.fPhi: np.ndarray = np.asarray(phi, dtype=float)
        self.fR: np.ndarray = np.array(r, dtype=float)
        self.fZ: np.ndarray = np.array(z, dtype=float)
        self.fRDot: np.ndarray = np.array(rDot, dtype=float)
        self.fZDot: np.ndarray = np.array(zDot, dtype=float)
        self.fEps: float = float(eps)
        self.fPeriodic: bool = periodic
        self.fZSlope: float = float(zSlope)

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        shape = self.fPhi.shape
        if any(array.shape != shape for array in (self.fR, self.fZ, self.fRDot, self.fZDot)):
            self.DebugStop('ERROR: membrane fields live on different grids')

        if not np.all(self.fR > 0):
            self.DebugStop(f'ERROR: radius must be positive, min r = {np.min(self.fR)}', TPZRangeError)

        if not self.fEps > 0:
            self.DebugStop(f'ERROR: constraint constant must be positive, got {self.fEps}')

        return

#   ******************
#      DERIVATIVES
#   ******************
    def Spacing(self) -> float:
        return float(self.fPhi[1] - self.fPhi[0])

    def Length(self) -> float:
        if self.fPeriodic:
            return self.Spacing() * len(self.fPhi)

        return float(self.fPhi[-1] - self.fPhi[0])

    def Derivative(self, field, order: int = 1, slope: float = 0.) -> np.ndarray:
        """
        Spectral derivative on periodic grids, fourth order differences with
        one sided ends otherwise. slope is the linear part of field in phi.
        """
        field = np.asarray(field, dtype=float)

        if not self.fPeriodic:
            matrix = TPZDifferentiation.CachedMatrix(len(self.fPhi), self.Spacing(), order, self.accuracy)
            return matrix @ field

        derivative = TPZDifferentiation.SpectralDerivative(field - slope * self.fPhi, self.Length(), order)

        return derivative + slope if order == 1 else derivative

    def Slopes(self) -> tuple:
        """
        (r', z')
        """
        return self.Derivative(self.fR), self.Derivative(self.fZ, slope=self.fZSlope)

#   ******************
#      CONSTRAINTS
#   ******************
    def Constraints(self) -> tuple:
        """
        Pointwise (C1, C2)
        """
        dr, dz = self.Slopes()
        first = self.fRDot * dr + self.fZDot * dz
        second = self.fRDot**2 + self.fZDot**2 + self.fR**2 * (dr**2 + dz**2) - self.fEps**2

        return first, second

    def MaxDefect(self) -> float:
        return float(max(np.max(np.abs(c)) for c in self.Constraints()))

    def UAngles(self) -> tuple:
        """
        Angles u+ and u- of the two points on the circle of radius eps,
        (rr' + rdot, rz' + zdot) = eps (sin u+, cos u+) and
        (rr' - rdot, rz' - zdot) = eps (-sin u-, cos u-).
        Returns (u+, u-, largest departure of either point from the circle).
        """
        dr, dz = self.Slopes()
        plus = (self.fR * dr + self.fRDot, self.fR * dz + self.fZDot)
        minus = (self.fRDot - self.fR * dr, self.fR * dz - self.fZDot)

        defect = max(np.max(np.abs(np.hypot(*plus) - self.fEps)), np.max(np.abs(np.hypot(*minus) - self.fEps)))

        return np.arctan2(*plus), np.arctan2(*minus), float(defect)

    def RadiusIntegral(self) -> float:
        """
        int r dphi
        """
        return TPZGridFunction(self.fR, self.fPhi[0], self.Spacing(), periodic=self.fPeriodic).Integral()

    #   ******************
    #        PACKING
    #   ******************
    def Pack(self) -> np.ndarray:
        return np.array([self.fR, self.fZ, self.fRDot, self.fZDot])

    def Unpack(self, y) -> 'TPZMembraneState':
        """
        New state on the same grid with the fields of a packed array
        """
        r, z, rDot, zDot = y

        return TPZMembraneState(self.fPhi, r, z, rDot, zDot, self.fEps, self.fPeriodic, self.fZSlope)
