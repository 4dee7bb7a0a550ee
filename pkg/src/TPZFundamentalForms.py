"""
First and second fundamental forms of a surface at one point
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZFundamentalForms(TPZBasicDataStructure):
    """
    Fields:
        - g: 2x2 induced metric
        - h: 2x2 second fundamental form
        - normal: tag of the normal convention the sign of h refers to
    """
#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, g, h, normal: str = 'closed-form') -> None:
        super().__init__()

        self.fG: np.ndarray = np.asarray(g, dtype=float)
        self.fH: np.ndarray = np.asarray(h, dtype=float)
        self.fNormal: str = normal

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fG.shape != (2, 2) or self.fH.shape != (2, 2):
            self.DebugStop('ERROR: fundamental forms must be 2x2')

        return

#   ******************
#        METHODS
#   ******************
    def MeanCurvatureTrace(self) -> float:
        """
        g^ab h_ab
        """
        return float(np.trace(np.linalg.solve(self.fG, self.fH)))

    def DeterminantDefect(self) -> float:
        """
        det h + det g, zero when the Gauss curvature of the ambient-reduced form is -1
        """
        return float(np.linalg.det(self.fH) + np.linalg.det(self.fG))

    def Distance(self, other: 'TPZFundamentalForms', up_to_sign: bool = False) -> float:
        """
        Largest entry of |g - g'| and |h - h'|, optionally allowing h' -> -h'
        """
        metric = np.max(np.abs(self.fG - other.fG))
        second = np.max(np.abs(self.fH - other.fH))
        if up_to_sign:
            second = min(second, np.max(np.abs(self.fH + other.fH)))

        return float(max(metric, second))
