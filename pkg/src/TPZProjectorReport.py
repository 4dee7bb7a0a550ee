"""
Outcome of the projector minimality test for a constraint-defined cone
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZProjectorReport(TPZBasicDataStructure):
    """
    Fields:
        - residuals: Tr(P d^2 W^A) per constraint, None off the manifold
        - idempotency: |P^2 - P|
        - orthogonality: |P grad W^A|
        - constraintDefect: largest constraint value relative to s^2
    """
#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, residuals, idempotency: float, orthogonality: float, constraintDefect: float) -> None:
        super().__init__()

        self.fResiduals: np.ndarray = None if residuals is None else np.asarray(residuals, dtype=float)
        self.fIdempotency: float = idempotency
        self.fOrthogonality: float = orthogonality
        self.fConstraintDefect: float = constraintDefect

        self.DeactivateAttr()

        return

#   ******************
#        METHODS
#   ******************
    def MaxResidual(self) -> float:
        if self.fResiduals is None:
            return float('nan')

        return float(np.max(np.abs(self.fResiduals)))

    def IsMinimal(self, tol: float = 1e-9) -> bool:
        return self.fResiduals is not None and self.MaxResidual() <= tol
