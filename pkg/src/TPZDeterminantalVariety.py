"""
Class to test the determinantal varieties of rank q-1 for minimality
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import Callable, ClassVar

import numpy as np
from scipy.linalg import null_space

from src.TPZDenseMatrix import TPZDenseMatrix
from src.TPZDeterminantalPoint import TPZDeterminantalPoint
from src.TPZErrors import TPZDegenerateChartError, TPZSingularError
from src.TPZNumerics import TPZNumerics

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZDeterminantalVariety:
    """
    Charts:
        - lambda chart: parameters (a_1, ..., a_{q-1}, lambda_1, ..., lambda_{q-1}),
        x = (a_1; ...; a_{q-1}; sum_i lambda_i a_i)
        - SVD chart (p = 3, q = 2): parameters (sigma, theta, phi, psi),
        x = sigma (cos psi u; sin psi u) with u the unit vector of polar angles theta, phi
    """
    fdStep: ClassVar[float] = 1e-4

    #   ******************
    #     LAMBDA CHART
    #   ******************
    @staticmethod
    def RandomPoint(p: int, q: int, rng: np.random.Generator) -> TPZDeterminantalPoint:
        return TPZDeterminantalPoint(rng.standard_normal((p, q - 1)), rng.uniform(-2., 2., q - 1))

    @staticmethod
    def LambdaTangents(point: TPZDeterminantalPoint) -> np.ndarray:
        """
        pq x (p+1)(q-1) matrix of chart derivatives
        """
        p, q = point.fP, point.fQ
        last = (q - 1) * p
        tangents = np.zeros((p * q, point.Dim()))

        for i in range(q - 1):
            for alpha in range(p):
                column = i * p + alpha
                tangents[column, column] = 1.
                tangents[last + alpha, column] = point.fLambdas[i]

            tangents[last:, (q - 1) * p + i] = point.fVectors[:, i]

        return tangents

    @staticmethod
    def LambdaSecondDerivatives(point: TPZDeterminantalPoint) -> np.ndarray:
        """
        Array S[A, B] of shape (D, D, pq); only the mixed (a_i, lambda_i) entries survive
        """
        p, q = point.fP, point.fQ
        last = (q - 1) * p
        second = np.zeros((point.Dim(), point.Dim(), p * q))

        for i in range(q - 1):
            for alpha in range(p):
                column, coefficient = i * p + alpha, (q - 1) * p + i
                second[column, coefficient, last + alpha] = 1.
                second[coefficient, column, last + alpha] = 1.

        return second

    @staticmethod
    def EVectors(point: TPZDeterminantalPoint) -> np.ndarray:
        """
        Orthonormal e_1, ..., e_{p-q+1} orthogonal to every a_i. The a_i are
        orthonormalized first, then the standard basis vector with the largest
        residual joins the frame at each step. Returns a p x (p-q+1) array.
        """
        p = point.fP
        frame = np.zeros((p, 0))

        def Residual(vectors):
            # two passes keep the frame orthogonal to rounding
            for _ in range(2):
                vectors = vectors - frame @ (frame.T @ vectors)
            return vectors

        for a in point.fVectors.T:
            residual = Residual(a[:, None])
            norm = np.linalg.norm(residual)
            if norm <= TPZDeterminantalPoint.rankTol * np.linalg.norm(a):
                raise TPZDegenerateChartError('lambda chart needs independent a_i')
            frame = np.hstack([frame, residual / norm])

        count = frame.shape[1]
        candidates = np.eye(p)
        while frame.shape[1] < p:
            residuals = Residual(candidates)
            norms = np.linalg.norm(residuals, axis=0)
            best = int(np.argmax(norms))
            frame = np.hstack([frame, residuals[:, best:best + 1] / norms[best]])
            candidates = np.delete(candidates, best, axis=1)

        return frame[:, count:]

    @staticmethod
    def LambdaNormals(point: TPZDeterminantalPoint) -> np.ndarray:
        """
        Orthonormal normals (lambda_1 e; ...; lambda_{q-1} e; -e)/mu, one per e vector.
        Returns a pq x (p-q+1) array.
        """
        vectors = TPZDeterminantalVariety.EVectors(point)
        mu = np.sqrt(point.Mu2())

        blocks = [coefficient * vectors for coefficient in point.fLambdas] + [-vectors]

        return np.vstack(blocks) / mu

    @staticmethod
    def BorderedInverse(inverse: np.ndarray, border: np.ndarray, corner: float) -> np.ndarray:
        """
        Inverse of [[M, b], [b^T, c]] from the inverse of M.

        Inputs:
        ------
        inverse : np.ndarray
            M^-1, symmetric.
        border : np.ndarray
            b.
        corner : float
            c.

        Returns:
        --------
        [[M^-1 + rho w w^T, -rho w], [-rho w^T, rho]] with w = M^-1 b and rho = 1/(c - b . w)
        """
        w = inverse @ border
        schur = corner - border @ w

        if abs(schur) <= np.finfo(float).eps * max(abs(corner), 1.):
            raise TPZSingularError(f'bordered matrix is singular, Schur complement {schur:.3g}')

        rho = 1 / schur
        n = len(border)
        result = np.empty((n + 1, n + 1))
        result[:n, :n] = inverse + rho * np.outer(w, w)
        result[:n, n] = result[n, :n] = -rho * w
        result[n, n] = rho

        return result

    @staticmethod
    def LambdaInverseMetric(point: TPZDeterminantalPoint) -> np.ndarray:
        """
        Inverse of the induced metric in the lambda chart. The a block
        (1 + lambda lambda^T) x I_p inverts in closed form to (1 - lambda lambda^T/mu^2) x I_p;
        each lambda coordinate then borders it once.
        """
        p, q = point.fP, point.fQ
        lam = point.fLambdas
        tangents = TPZDeterminantalVariety.LambdaTangents(point)
        metric = tangents.T @ tangents

        inverse = np.kron(np.eye(q - 1) - np.outer(lam, lam) / point.Mu2(), np.eye(p))

        for column in range((q - 1) * p, point.Dim()):
            inverse = TPZDeterminantalVariety.BorderedInverse(inverse, metric[:column, column], metric[column, column])

        return inverse

    @staticmethod
    def Traces(tangents: np.ndarray, second: np.ndarray, normals: np.ndarray, inverse: np.ndarray = None) -> np.ndarray:
        """
        G^AB n . d_A d_B x for every normal column n. Without an inverse metric
        the metric is inverted by LU.
        """
        if inverse is None:
            metric = tangents.T @ tangents
            inverse = TPZNumerics.MatInverse(TPZDenseMatrix.FromArray(metric)).AsArray()

        forms = np.einsum('abk,kn->nab', second, normals)

        return np.einsum('ab,nab->n', inverse, forms)

    @staticmethod
    def MeanCurvature(point: TPZDeterminantalPoint) -> np.ndarray:
        tangents = TPZDeterminantalVariety.LambdaTangents(point)
        normals = TPZDeterminantalVariety.LambdaNormals(point)

        defect = np.max(np.abs(normals.T @ tangents))
        if defect > 1e-10:
            logger.warning('lambda chart normals not orthogonal: %.3g', defect)

        traces = TPZDeterminantalVariety.Traces(tangents, TPZDeterminantalVariety.LambdaSecondDerivatives(point), normals,
                                                TPZDeterminantalVariety.LambdaInverseMetric(point))
        logger.debug('determinantal (%d, %d): max trace %.3g', point.fP, point.fQ, np.max(np.abs(traces)))

        return traces

    @staticmethod
    def DeterminantFormula(point: TPZDeterminantalPoint) -> tuple:
        """
        Returns:
        --------
        (det of the induced metric, (1 + sum lambda^2)^(p-q+1) det(a_i . a_j))
        """
        tangents = TPZDeterminantalVariety.LambdaTangents(point)
        lhs = np.linalg.det(tangents.T @ tangents)
        rhs = point.Mu2()**(point.fP - point.fQ + 1) * np.linalg.det(point.fVectors.T @ point.fVectors)

        return float(lhs), float(rhs)

    #   ******************
    #       SVD CHART
    #   ******************
    @staticmethod
    def _Direction(theta: float, phi: float, dTheta: int = 0, dPhi: int = 0) -> np.ndarray:
        """
        Partial derivatives of u = (sin theta cos phi, sin theta sin phi, cos theta)
        """
        trig = lambda angle, order: np.cos(angle + order * np.pi / 2)
        sinTheta = lambda order: trig(theta - np.pi / 2, order)
        cosTheta = lambda order: trig(theta, order)

        if dPhi == 0:
            return np.array([sinTheta(dTheta) * np.cos(phi), sinTheta(dTheta) * np.sin(phi), cosTheta(dTheta)])

        return np.array([sinTheta(dTheta) * trig(phi, dPhi), sinTheta(dTheta) * trig(phi - np.pi / 2, dPhi), 0.])

    @staticmethod
    def SvdPosition(params) -> np.ndarray:
        sigma, theta, phi, psi = params
        u = TPZDeterminantalVariety._Direction(theta, phi)

        return sigma * np.concatenate([np.cos(psi) * u, np.sin(psi) * u])

    @staticmethod
    def SvdTangents(params) -> np.ndarray:
        sigma, theta, phi, psi = params
        direction = TPZDeterminantalVariety._Direction
        c, s = np.cos(psi), np.sin(psi)

        u = direction(theta, phi)
        columns = [np.concatenate([c * u, s * u]),
                   sigma * np.concatenate([c * direction(theta, phi, dTheta=1), s * direction(theta, phi, dTheta=1)]),
                   sigma * np.concatenate([c * direction(theta, phi, dPhi=1), s * direction(theta, phi, dPhi=1)]),
                   sigma * np.concatenate([-s * u, c * u])]

        return np.column_stack(columns)

    @staticmethod
    def SvdFit(matrix) -> np.ndarray:
        """
        Chart parameters (sigma, theta, phi, psi) of a rank one 3 x 2 matrix
        """
        matrix = np.asarray(matrix, dtype=float)
        left, singular, right = np.linalg.svd(matrix)

        if singular[1] > TPZDeterminantalPoint.rankTol * singular[0]:
            raise TPZDegenerateChartError(f'SVD chart needs rank one, singular values {singular}')

        u, v = left[:, 0], right[0]
        theta = np.arccos(np.clip(u[2], -1., 1.))
        phi = np.arctan2(u[1], u[0])
        psi = np.arctan2(v[1], v[0])

        return np.array([singular[0], theta, phi, psi])

    #   ******************
    #     GENERIC CHART
    #   ******************
    @staticmethod
    def ChartMeanCurvature(tangentMap: Callable, params, h: float = None) -> np.ndarray:
        """
        Mean curvature traces of any chart given its tangent map, with second
        derivatives by fourth order differences and normals from the null space
        """
        h = TPZDeterminantalVariety.fdStep if h is None else h
        params = np.asarray(params, dtype=float)
        tangents = np.asarray(tangentMap(params))

        second = np.array([TPZNumerics.FdDeriv(lambda y: np.asarray(tangentMap(y)).T, params, (a,), h=h, accuracy=4)
                           for a in range(len(params))])
        second = 0.5 * (second + second.transpose(1, 0, 2))

        return TPZDeterminantalVariety.Traces(tangents, second, null_space(tangents.T))
