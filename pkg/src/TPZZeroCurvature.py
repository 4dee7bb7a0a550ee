"""
Lax pair of the membrane equations and its zero curvature test
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np

from src.TPZCharacteristicFields import TPZCharacteristicFields
from src.TPZLaxFields import TPZLaxFields

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZZeroCurvature:
    # (T0, T1, T2) with [T1, T2] = T0, [T2, T0] = -T1, [T0, T1] = -T2
    generators3: ClassVar[tuple] = (
        np.array([[0., 0., 0.], [0., 0., -1.], [0., 1., 0.]]),
        np.array([[0., 0., 1.], [0., 0., 0.], [1., 0., 0.]]),
        np.array([[0., 1., 0.], [1., 0., 0.], [0., 0., 0.]]),
    )
    generators2: ClassVar[tuple] = (
        np.array([[0., -0.5], [0.5, 0.]]),
        np.array([[0., 0.5], [0.5, 0.]]),
        np.array([[0.5, 0.], [0., -0.5]]),
    )
    metric: ClassVar[np.ndarray] = np.diag([1., -1., -1.])

    #   ******************
    #       LAX PAIR
    #   ******************
    @staticmethod
    def Combine(generators: tuple, minus, t2, plus) -> np.ndarray:
        """
        minus (T1 - T0) + t2 T2 + plus (T1 + T0) on the grid, shape (k, k, n+, n-)
        """
        T0, T1, T2 = generators

        return (np.multiply.outer(T1 - T0, minus) + np.multiply.outer(T2, t2) + np.multiply.outer(T1 + T0, plus))

    @staticmethod
    def Coefficients(lax: TPZLaxFields) -> tuple:
        """
        (T1 - T0, T2, T1 + T0) coefficients of A and of B
        """
        s, L = np.sqrt(2 * lax.fW), lax.fLambda

        A = (L * lax.fB / s, lax.fA / 2 + lax.fLambdaPlus / L, lax.fE / (L * s))
        B = (L * lax.fE / s, -(lax.fC / 2 - lax.fLambdaMinus / L), lax.fD / (L * s))

        return A, B

    @staticmethod
    def LaxPair(lax: TPZLaxFields, generators: tuple = None) -> tuple:
        """
        A = lambda b/s (T1 - T0) + (a/2 + lambda+/lambda) T2 + e/(lambda s) (T1 + T0)
        B = lambda e/s (T1 - T0) - (c/2 - lambda-/lambda) T2 + d/(lambda s) (T1 + T0)
        with s = sqrt(2w)
        """
        generators = generators or TPZZeroCurvature.generators3
        A, B = TPZZeroCurvature.Coefficients(lax)

        return TPZZeroCurvature.Combine(generators, *A), TPZZeroCurvature.Combine(generators, *B)

    @staticmethod
    def Curvature(lax: TPZLaxFields) -> tuple:
        """
        (T1 - T0, T2, T1 + T0) coefficients of A- - B+ + [A, B]. Only the lambda free
        parts of the pair are differenced; lambda enters through its sampled
        derivatives, and d-(lambda+/lambda) - d+(lambda-/lambda) = 0 is dropped.
        """
        fields = lax.fFields
        s, L = np.sqrt(2 * lax.fW), lax.fLambda
        plusL, minusL = lax.fLambdaPlus, lax.fLambdaMinus
        (am, a2, ap), (bm, b2, bp) = TPZZeroCurvature.Coefficients(lax)

        bOverS, eOverS, dOverS = lax.fB / s, lax.fE / s, lax.fD / s

        # [X, Y] = (x2 ym - xm y2)(T1 - T0) + 2 (xm yp - xp ym) T2 + (xp y2 - x2 yp)(T1 + T0)
        minus = (minusL * bOverS + L * fields.DMinus(bOverS) - plusL * eOverS - L * fields.DPlus(eOverS)
                 + a2 * bm - am * b2)
        t2 = fields.DMinus(lax.fA) / 2 + fields.DPlus(lax.fC) / 2 + 2 * (am * bp - ap * bm)
        plus = (fields.DMinus(eOverS) / L - minusL * eOverS / L**2 - fields.DPlus(dOverS) / L + plusL * dOverS / L**2
                + ap * b2 - a2 * bp)

        return minus, t2, plus

    @staticmethod
    def Residual(fields: TPZCharacteristicFields, lam: tuple = None) -> tuple:
        """
        Largest zero curvature defect in the 3 x 3 and the 2 x 2 representation. The
        curvature is conjugated back by G = diag(sqrt(lambda), 1/sqrt(lambda)) before
        its Frobenius norm is taken, so defects of different gauges compare.
        """
        lax = TPZLaxFields(fields, lam)
        minus, t2, plus = TPZZeroCurvature.Curvature(lax)
        minus, plus = minus / lax.fLambda, plus * lax.fLambda

        residuals = tuple(float(np.max(np.sqrt(np.sum(TPZZeroCurvature.Combine(generators, minus, t2, plus)**2, axis=(0, 1)))))
                          for generators in (TPZZeroCurvature.generators3, TPZZeroCurvature.generators2))

        logger.info('zero curvature residual: %.3g (3 x 3), %.3g (2 x 2)', *residuals)

        return residuals

    #   ******************
    #    GAUGE TRANSPORT
    #   ******************
    @staticmethod
    def GaugeTransport(lax: TPZLaxFields) -> np.ndarray:
        """
        2 x 2 A conjugated by G = diag(sqrt(lambda), 1/sqrt(lambda)),
        G^-1 (A - lambda+/(2 lambda) sigma3) G. Independent of lambda.
        """
        A, _ = TPZZeroCurvature.LaxPair(lax, TPZZeroCurvature.generators2)
        root = np.sqrt(lax.fLambda)
        shift = lax.fLambdaPlus / (2 * lax.fLambda)

        transported = A.copy()
        transported[0, 0] -= shift
        transported[1, 1] += shift
        transported[0, 1] /= root**2
        transported[1, 0] *= root**2

        return transported

    @staticmethod
    def LaxFrame(lax: TPZLaxFields) -> tuple:
        """
        Frame M with rows v+- = (lambda x+ +- x-/lambda)/sqrt(2w) and n.

        Returns:
        --------
        (M of shape (3, 3, n+, n-), largest defect of M eta M^T = eta, largest defect of M+ = A M)
        """
        fields = lax.fFields
        s, L = np.sqrt(2 * lax.fW), lax.fLambda

        frame = np.array([(L * fields.fPlus + fields.fMinus / L) / s,
                          (L * fields.fPlus - fields.fMinus / L) / s,
                          fields.Normal()])

        eta = TPZZeroCurvature.metric
        gram = np.einsum('iuab,uv,jvab->ijab', frame, eta, frame)
        metricDefect = float(np.max(np.abs(gram - eta[:, :, None, None])))

        A, _ = TPZZeroCurvature.LaxPair(lax)
        transportDefect = float(np.max(np.abs(fields.DPlus(frame) - np.einsum('ijab,jkab->ikab', A, frame))))

        return frame, metricDefect, transportDefect
