"""
Membrane embedding over the null coordinates theta+, theta-
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZDifferentiation import TPZDifferentiation
from src.TPZErrors import TPZChartBreakdownError, TPZRangeError

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZCharacteristicFields(TPZBasicDataStructure):
    """
    Fields:
        - thetaPlus, thetaMinus: uniform axes. Axis 0 of every grid array runs
        along theta+, axis 1 along theta-
        - t, r, z: embedding on the grid
        - plus, minus: (3, n+, n-) arrays of (t, r, z) derivatives. Finite
        differences of the embedding when not given
    """
    accuracy: ClassVar[int] = 6
    metric: ClassVar[np.ndarray] = np.array([1., -1., -1.])

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, thetaPlus, thetaMinus, t, r, z, plus=None, minus=None) -> None:
        super().__init__()

        self.fThetaPlus: np.ndarray = np.asarray(thetaPlus, dtype=float)
        self.fThetaMinus: np.ndarray = np.asarray(thetaMinus, dtype=float)
        self.fT: np.ndarray = np.asarray(t, dtype=float)
        self.fR: np.ndarray = np.asarray(r, dtype=float)
        self.fZ: np.ndarray = np.asarray(z, dtype=float)
        self.fPlus: np.ndarray = None if plus is None else np.asarray(plus, dtype=float)
        self.fMinus: np.ndarray = None if minus is None else np.asarray(minus, dtype=float)

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        shape = (len(self.fThetaPlus), len(self.fThetaMinus))
        if any(field.shape != shape for field in (self.fT, self.fR, self.fZ)):
            self.DebugStop(f'ERROR: embedding arrays must have the grid shape {shape}')

        for axis in (self.fThetaPlus, self.fThetaMinus):
            if not np.allclose(np.diff(axis), axis[1] - axis[0]):
                self.DebugStop('ERROR: null coordinate axes must be uniform')

        if not np.all(self.fR > 0):
            self.DebugStop(f'ERROR: radius must be positive, min r = {np.min(self.fR)}', TPZRangeError)

        if self.fPlus is None:
            self.fPlus = self.DPlus(self.Position())
        if self.fMinus is None:
            self.fMinus = self.DMinus(self.Position())

        if self.fPlus.shape != (3, *shape) or self.fMinus.shape != (3, *shape):
            self.DebugStop('ERROR: derivative arrays must have shape (3, n+, n-)')

        return

#   ******************
#    EXACT SOLUTIONS
#   ******************
    @staticmethod
    def Catenoid(thetaPlus, thetaMinus, rapidity: float = 0., reparametrization=None) -> 'TPZCharacteristicFields':
        """
        Static catenoid sigma = (theta+ - theta-)/2, t = (theta+ + theta-)/2,
        r = sqrt(1 + sigma^2), z = asinh(sigma), with exact derivatives.

        Inputs:
        ------
        rapidity : float
            Lorentz boost of the (t, z) plane.
        reparametrization : tuple
            ((f+, f+'), (f-, f-')) applied as theta -> f(theta) before evaluation.
        """
        thetaPlus = np.asarray(thetaPlus, dtype=float)
        thetaMinus = np.asarray(thetaMinus, dtype=float)

        identity = (lambda x: x, np.ones_like)
        (fPlus, dfPlus), (fMinus, dfMinus) = reparametrization or (identity, identity)

        up, um = np.meshgrid(fPlus(thetaPlus), fMinus(thetaMinus), indexing='ij')
        jp, jm = np.meshgrid(dfPlus(thetaPlus), dfMinus(thetaMinus), indexing='ij')

        sigma = (up - um) / 2
        r = np.sqrt(1 + sigma**2)
        position = np.array([(up + um) / 2, r, np.arcsinh(sigma)])
        plus = np.array([np.full_like(r, 0.5), sigma / (2 * r), 1 / (2 * r)]) * jp
        minus = np.array([np.full_like(r, 0.5), -sigma / (2 * r), -1 / (2 * r)]) * jm

        boost = np.array([[np.cosh(rapidity), 0., np.sinh(rapidity)],
                          [0., 1., 0.],
                          [np.sinh(rapidity), 0., np.cosh(rapidity)]])
        position, plus, minus = (np.tensordot(boost, array, axes=1) for array in (position, plus, minus))

        return TPZCharacteristicFields(thetaPlus, thetaMinus, *position, plus, minus)

#   ******************
#      DERIVATIVES
#   ******************
    def Position(self) -> np.ndarray:
        return np.array([self.fT, self.fR, self.fZ])

    def DPlus(self, field) -> np.ndarray:
        """
        Derivative along theta+ of a grid field, possibly with leading component axes
        """
        field = np.asarray(field, dtype=float)
        h = float(self.fThetaPlus[1] - self.fThetaPlus[0])
        matrix = TPZDifferentiation.CachedMatrix(len(self.fThetaPlus), h, 1, self.accuracy)

        return TPZDifferentiation.ApplyAlongAxis(matrix, field, field.ndim - 2)

    def DMinus(self, field) -> np.ndarray:
        field = np.asarray(field, dtype=float)
        h = float(self.fThetaMinus[1] - self.fThetaMinus[0])
        matrix = TPZDifferentiation.CachedMatrix(len(self.fThetaMinus), h, 1, self.accuracy)

        return TPZDifferentiation.ApplyAlongAxis(matrix, field, field.ndim - 1)

    def Mixed(self) -> np.ndarray:
        """
        x+- as the average of both orders of differentiation
        """
        return 0.5 * (self.DMinus(self.fPlus) + self.DPlus(self.fMinus))

    @staticmethod
    def Dot(a, b) -> np.ndarray:
        """
        Minkowski product along the leading axis
        """
        return np.tensordot(TPZCharacteristicFields.metric, np.asarray(a) * np.asarray(b), axes=1)

    def W(self) -> np.ndarray:
        """
        x+ . x-
        """
        return self.Dot(self.fPlus, self.fMinus)

#   ******************
#    RESIDUAL SUITES
#   ******************
    @staticmethod
    def SecondOrderRhs(r, plus, minus) -> np.ndarray:
        """
        x+- demanded by the field equations
            2r t+- + r+ t- + r- t+ = 0,   2r z+- + r+ z- + r- z+ = 0,
            2r r+- + r+ r- + t+ t- - z+ z- = 0
        """
        (tp, rp, zp), (tm, rm, zm) = plus, minus

        return -np.array([rp * tm + rm * tp,
                          rp * rm + tp * tm - zp * zm,
                          rp * zm + rm * zp]) / (2 * r)

    def NullDefects(self) -> tuple:
        """
        (x+ . x+, x- . x-)
        """
        return self.Dot(self.fPlus, self.fPlus), self.Dot(self.fMinus, self.fMinus)

    def EquationResiduals(self) -> np.ndarray:
        return self.Mixed() - self.SecondOrderRhs(self.fR, self.fPlus, self.fMinus)

    def MVector(self) -> np.ndarray:
        """
        Lower index m = (r+ z- - r- z+, z+ t- - z- t+, t+ r- - t- r+)
        """
        (tp, rp, zp), (tm, rm, zm) = self.fPlus, self.fMinus

        return np.array([rp * zm - rm * zp, zp * tm - zm * tp, tp * rm - tm * rp])

    def SVector(self) -> np.ndarray:
        (tp, rp, zp), (tm, rm, zm) = self.fPlus, self.fMinus

        return np.array([rp * zm + rm * zp, zp * tm + zm * tp, tp * rm + tm * rp])

    def MIdentities(self) -> tuple:
        """
        Defects of m1^2 + m2^2 = 2 t+ t- w and m0^2 - m1^2 - m2^2 = -w^2
        """
        m, w = self.MVector(), self.W()
        first = m[1]**2 + m[2]**2 - 2 * self.fPlus[0] * self.fMinus[0] * w
        second = m[0]**2 - m[1]**2 - m[2]**2 + w**2

        return first, second

    def SymmetricResiduals(self) -> tuple:
        """
        Defects of t+- S0 = z+- S2 = r+- S1
        """
        mixed, S = self.Mixed(), self.SVector()

        return mixed[0] * S[0] - mixed[2] * S[2], mixed[2] * S[2] - mixed[1] * S[1]

    def PQResidual(self) -> np.ndarray:
        """
        r+ p- + r- q+ with tanh p = z+/t+ and tanh q = z-/t-
        """
        ratios = self.fPlus[2] / self.fPlus[0], self.fMinus[2] / self.fMinus[0]
        if any(np.max(np.abs(ratio)) >= 1 for ratio in ratios):
            raise TPZChartBreakdownError('z/t reaches the light cone, the rapidities p and q are undefined')

        p, q = (np.arctanh(ratio) for ratio in ratios)

        return self.fPlus[1] * self.DMinus(p) + self.fMinus[1] * self.DPlus(q)

    def Normal(self) -> np.ndarray:
        """
        Upper index unit normal n = (m0, -m1, -m2)/w, n . n = -1
        """
        m = self.MVector()

        return np.array([m[0], -m[1], -m[2]]) / self.W()

    def Report(self) -> dict:
        """
        Largest absolute value of every residual suite
        """
        report = {
            'null': max(np.max(np.abs(defect)) for defect in self.NullDefects()),
            'equations': np.max(np.abs(self.EquationResiduals())),
            'm_identities': max(np.max(np.abs(defect)) for defect in self.MIdentities()),
            'symmetric': max(np.max(np.abs(defect)) for defect in self.SymmetricResiduals()),
            'pq': np.max(np.abs(self.PQResidual())),
        }
        report = {name: float(value) for name, value in report.items()}

        logger.debug('characteristic residuals: %s', report)

        return report
