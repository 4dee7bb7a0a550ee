#%% ******************
#   IMPORTED MODULES
#   ******************
from itertools import combinations
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZStiefelPoint(TPZBasicDataStructure):
    """
    Fields:
        - frame: n x k array whose columns are the vectors x_1, ..., x_k
        - n, k: sizes, 2 <= k <= n
        - s2: squared length of the first vector

    Flat coordinates put vector a in the slots a*n, ..., a*n + n - 1.
    Constraints come as u^{ab} = x_a . x_b for a < b in lexicographic order,
    followed by v^a = (|x_a|^2 - |x_{a+1}|^2)/2.
    """
    manifoldTol: ClassVar[float] = 1e-10

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, frame) -> None:
        super().__init__()

        self.fFrame: np.ndarray = np.array(frame, dtype=float)
        self.fN: int = 0
        self.fK: int = 0
        self.fS2: float = 0.

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fFrame.ndim != 2:
            self.DebugStop('ERROR: a Stiefel point is an n x k array')

        self.fN, self.fK = self.fFrame.shape
        if not 2 <= self.fK <= self.fN:
            self.DebugStop(f'ERROR: need 2 <= k <= n, got n={self.fN}, k={self.fK}')

        self.fS2 = float(self.fFrame[:, 0] @ self.fFrame[:, 0])

        return

#   ******************
#        METHODS
#   ******************
    def Flat(self) -> np.ndarray:
        return self.fFrame.T.ravel()

    def ConstraintCount(self) -> int:
        return self.fK * (self.fK + 1) // 2 - 1

    def Pairs(self) -> list:
        return list(combinations(range(self.fK), 2))

    def _Block(self, a: int) -> slice:
        return slice(a * self.fN, (a + 1) * self.fN)

    def Values(self) -> np.ndarray:
        x = self.fFrame
        pairs = [x[:, a] @ x[:, b] for a, b in self.Pairs()]
        lengths = [(x[:, a] @ x[:, a] - x[:, a + 1] @ x[:, a + 1]) / 2 for a in range(self.fK - 1)]

        return np.array(pairs + lengths)

    def Gradients(self) -> np.ndarray:
        """
        K x nk matrix of constraint gradients
        """
        x = self.fFrame
        gradients = np.zeros((self.ConstraintCount(), self.fN * self.fK))

        for row, (a, b) in enumerate(self.Pairs()):
            gradients[row, self._Block(a)] = x[:, b]
            gradients[row, self._Block(b)] = x[:, a]

        offset = len(self.Pairs())
        for a in range(self.fK - 1):
            gradients[offset + a, self._Block(a)] = x[:, a]
            gradients[offset + a, self._Block(a + 1)] = -x[:, a + 1]

        return gradients

    def Hessians(self) -> np.ndarray:
        """
        K x nk x nk constant second derivatives
        """
        k, identity = self.fK, np.eye(self.fN)
        hessians = []

        for a, b in self.Pairs():
            pattern = np.zeros((k, k))
            pattern[a, b] = pattern[b, a] = 1.
            hessians.append(np.kron(pattern, identity))

        for a in range(k - 1):
            pattern = np.zeros((k, k))
            pattern[a, a], pattern[a + 1, a + 1] = 1., -1.
            hessians.append(np.kron(pattern, identity))

        return np.array(hessians)

    def ConstraintDefect(self) -> float:
        """
        Largest constraint value relative to s^2
        """
        return float(np.max(np.abs(self.Values())) / max(self.fS2, np.finfo(float).tiny))

    def OnManifold(self) -> bool:
        return self.ConstraintDefect() <= self.manifoldTol
