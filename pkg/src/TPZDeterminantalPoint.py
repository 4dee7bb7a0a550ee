"""
Rank q-1 matrix (a_1, ..., a_{q-1}, sum_i lambda_i a_i) of size p x q
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZErrors import TPZDegenerateChartError

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZDeterminantalPoint(TPZBasicDataStructure):
    """
    Fields:
        - vectors: p x (q-1) array of independent columns a_i
        - lambdas: q-1 coefficients of the dependent last column
        - p, q: sizes, p > q >= 2
    """
    rankTol: ClassVar[float] = 1e-10

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, vectors, lambdas) -> None:
        super().__init__()

        self.fVectors: np.ndarray = np.array(vectors, dtype=float)
        self.fLambdas: np.ndarray = np.atleast_1d(np.array(lambdas, dtype=float))
        self.fP: int = 0
        self.fQ: int = 0

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fVectors.ndim == 1:
            self.fVectors = self.fVectors[:, None]

        self.fP, columns = self.fVectors.shape
        self.fQ = columns + 1

        if len(self.fLambdas) != columns:
            self.DebugStop(f'ERROR: {columns} vectors need {columns} coefficients, got {len(self.fLambdas)}')

        if not self.fP > self.fQ >= 2:
            self.DebugStop(f'ERROR: need p > q >= 2, got p={self.fP}, q={self.fQ}')

        singular = np.linalg.svd(self.fVectors, compute_uv=False)
        if singular[-1] <= self.rankTol * singular[0]:
            self.DebugStop(f'ERROR: chart vectors are dependent, singular values {singular}', TPZDegenerateChartError)

        return

#   ******************
#        METHODS
#   ******************
    def Matrix(self) -> np.ndarray:
        return np.column_stack([self.fVectors, self.fVectors @ self.fLambdas])

    def Flat(self) -> np.ndarray:
        """
        Columns stacked one after the other
        """
        return self.Matrix().T.ravel()

    def Mu2(self) -> float:
        return float(1 + self.fLambdas @ self.fLambdas)

    def Dim(self) -> int:
        return (self.fP + 1) * (self.fQ - 1)
