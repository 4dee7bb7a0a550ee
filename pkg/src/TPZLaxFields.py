"""
Fields entering the Lax pair
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZCharacteristicFields import TPZCharacteristicFields
from src.TPZErrors import TPZNullDegeneracyError, TPZRangeError, TPZUsageError

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZLaxFields(TPZBasicDataStructure):
    """
    Fields:
        - fields: the TPZCharacteristicFields the coefficients come from
        - a, c: x- . x++ / w and x+ . x-- / w
        - b, d, e: -n . x++, -n . x-- and -n . x+-
        - w: x+ . x-
        - lambda, lambdaPlus, lambdaMinus: spectral gauge function and its derivatives,
        sampled from the analytic triple (one when no gauge is given)
    """
    degeneracyTol: ClassVar[float] = 1e-12

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, fields: TPZCharacteristicFields, lam: tuple = None) -> None:
        super().__init__()

        self.fFields: TPZCharacteristicFields = fields
        self.fA: np.ndarray = None
        self.fB: np.ndarray = None
        self.fC: np.ndarray = None
        self.fD: np.ndarray = None
        self.fE: np.ndarray = None
        self.fW: np.ndarray = None
        self.fLambda: np.ndarray = None
        self.fLambdaPlus: np.ndarray = None
        self.fLambdaMinus: np.ndarray = None

        self.DeactivateAttr()

        self.__post_init__(lam)

        return

    def __post_init__(self, lam: tuple) -> None:
        fields = self.fFields
        self.fW = fields.W()

        if np.min(self.fW) < self.degeneracyTol:
            self.DebugStop(f'ERROR: x+ . x- must stay positive, min = {np.min(self.fW)}', TPZNullDegeneracyError)

        plusPlus = fields.DPlus(fields.fPlus)
        minusMinus = fields.DMinus(fields.fMinus)
        normal = fields.Normal()

        self.fA = fields.Dot(fields.fMinus, plusPlus) / self.fW
        self.fC = fields.Dot(fields.fPlus, minusMinus) / self.fW
        self.fB = -fields.Dot(normal, plusPlus)
        self.fD = -fields.Dot(normal, minusMinus)
        self.fE = -fields.Dot(normal, fields.Mixed())

        thetaPlus, thetaMinus = np.meshgrid(fields.fThetaPlus, fields.fThetaMinus, indexing='ij')
        ones = np.ones_like(self.fW)

        if lam is None:
            self.fLambda, self.fLambdaPlus, self.fLambdaMinus = ones, np.zeros_like(ones), np.zeros_like(ones)
            return

        if not isinstance(lam, tuple) or len(lam) != 3 or not all(callable(handle) for handle in lam):
            self.DebugStop('ERROR: a spectral gauge is the triple (lambda, d lambda/d theta+, d lambda/d theta-)', TPZUsageError)

        self.fLambda, self.fLambdaPlus, self.fLambdaMinus = (np.asarray(handle(thetaPlus, thetaMinus), dtype=float) * ones
                                                             for handle in lam)

        if not np.all(self.fLambda > 0):
            self.DebugStop('ERROR: the spectral gauge function must be positive', TPZRangeError)

        return

#   ******************
#        METHODS
#   ******************
    def HMatrix(self) -> np.ndarray:
        """
        H = [[-b, -e], [-e, -d]] on the grid, shape (2, 2, n+, n-)
        """
        return -np.array([[self.fB, self.fE], [self.fE, self.fD]])

    def LogDerivativeDefects(self) -> tuple:
        """
        (a - (ln w)+, c - (ln w)-)
        """
        logW = np.log(self.fW)

        return self.fA - self.fFields.DPlus(logW), self.fC - self.fFields.DMinus(logW)

    def GcmpResiduals(self) -> dict:
        """
        Codazzi pair e+ - a e - b- and e- - c e - d+, and the Gauss equation written
        through both c+ and a-.
        """
        fields = self.fFields
        gauss = (self.fE**2 - self.fB * self.fD) / self.fW

        return {
            'codazzi_plus': fields.DPlus(self.fE) - self.fA * self.fE - fields.DMinus(self.fB),
            'codazzi_minus': fields.DMinus(self.fE) - self.fC * self.fE - fields.DPlus(self.fD),
            'gauss_c': fields.DPlus(self.fC) - gauss,
            'gauss_a': fields.DMinus(self.fA) - gauss,
        }

    def MinimalityDefect(self) -> np.ndarray:
        """
        e - m1/(2r)
        """
        return self.fE - self.fFields.MVector()[1] / (2 * self.fFields.fR)
