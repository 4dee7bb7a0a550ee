"""
Class to test the cones over Stiefel manifolds for minimality
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging

import numpy as np
from scipy.linalg import block_diag

from src.TPZDenseMatrix import TPZDenseMatrix
from src.TPZNumerics import TPZNumerics
from src.TPZProjectorReport import TPZProjectorReport
from src.TPZStiefelPoint import TPZStiefelPoint

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZStiefelCone:
    """
    Toolkit acting on TPZStiefelPoint
    """
    @staticmethod
    def RandomPoint(n: int, k: int, rng: np.random.Generator, scale: float = None) -> TPZStiefelPoint:
        """
        Orthonormalized Gaussian frame times a random length in [0.5, 2)
        """
        frame, _ = np.linalg.qr(rng.standard_normal((n, k)))
        scale = rng.uniform(0.5, 2.) if scale is None else scale

        return TPZStiefelPoint(scale * frame)

    @staticmethod
    def QMatrix(k: int) -> np.ndarray:
        """
        Q_ab = k min(a, b) - ab for a, b = 1, ..., k-1
        """
        index = np.arange(1, k)

        return k * np.minimum.outer(index, index) - np.outer(index, index).astype(float)

    @staticmethod
    def GramMatrix(point: TPZStiefelPoint) -> np.ndarray:
        gradients = point.Gradients()

        return gradients @ gradients.T

    @staticmethod
    def ClosedFormGram(k: int, s2: float) -> np.ndarray:
        """
        s^2 blockdiag(2 I, tridiag(-1, 2, -1)), the Gram matrix on the manifold
        """
        pairs = k * (k - 1) // 2
        tridiagonal = 2 * np.eye(k - 1) - np.eye(k - 1, k=1) - np.eye(k - 1, k=-1)

        return s2 * block_diag(2 * np.eye(pairs), tridiagonal)

    @staticmethod
    def ClosedFormInverse(k: int, s2: float) -> np.ndarray:
        pairs = k * (k - 1) // 2

        return block_diag(k / 2 * np.eye(pairs), TPZStiefelCone.QMatrix(k)) / (k * s2)

    @staticmethod
    def Projector(point: TPZStiefelPoint, closedForm: bool = None) -> np.ndarray:
        """
        P = I - grad W M^{-1} grad W^T. The closed form inverse is used on the
        manifold unless closedForm says otherwise; the generic one goes through LU.
        """
        closedForm = point.OnManifold() if closedForm is None else closedForm
        gradients = point.Gradients()

        if closedForm:
            inverse = TPZStiefelCone.ClosedFormInverse(point.fK, point.fS2)
        else:
            inverse = TPZNumerics.MatInverse(TPZDenseMatrix.FromArray(gradients @ gradients.T)).AsArray()

        return np.eye(point.fN * point.fK) - gradients.T @ inverse @ gradients

    @staticmethod
    def Minimality(point: TPZStiefelPoint) -> TPZProjectorReport:
        """
        Traces Tr(P d^2 W^A) per constraint, with the projector defects. Off the
        manifold only the defects are reported.
        """
        projector = TPZStiefelCone.Projector(point)
        gradients = point.Gradients()

        idempotency = float(np.max(np.abs(projector @ projector - projector)))
        orthogonality = float(np.max(np.abs(projector @ gradients.T)))
        defect = point.ConstraintDefect()

        if not point.OnManifold():
            logger.warning('Stiefel point off the manifold: constraint defect %.3g', defect)
            return TPZProjectorReport(None, idempotency, orthogonality, defect)

        residuals = np.einsum('ij,aji->a', projector, point.Hessians())
        logger.debug('Stiefel (%d, %d): max trace %.3g', point.fN, point.fK, np.max(np.abs(residuals)))

        return TPZProjectorReport(residuals, idempotency, orthogonality, defect)
