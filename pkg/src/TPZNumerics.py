"""
Shared numerical kernel: bracketed roots, fixed step Runge-Kutta, adaptive
quadrature, finite difference derivatives and small dense matrix algebra.
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import Callable, ClassVar

import numpy as np
from scipy import integrate, linalg, optimize

from src.TPZDenseMatrix import TPZDenseMatrix
from src.TPZErrors import (TPZAccuracyError, TPZBlowupError, TPZNoBracketError, TPZRangeError, TPZShapeError,
                           TPZSingularError)

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZNumerics:
    maxIterations: ClassVar[int] = 500
    quadLimit: ClassVar[int] = 200
    pivotThreshold: ClassVar[float] = 1e-12

    #   ******************
    #       ROOTS
    #   ******************
    @staticmethod
    def FindRoot(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> float:
        """
        Root of f in the bracket [a, b] (Brent's method, bisection safeguarded).

        Inputs:
        ------
        f : callable
            Continuous scalar function.
        a, b : float
            Bracket with f(a)*f(b) <= 0.
        tol : float
            Absolute tolerance on the root location.

        Returns:
        --------
        float
            The root.
        """
        fa, fb = f(a), f(b)

        if fa == 0.:
            return a

        if fb == 0.:
            return b

        if fa * fb > 0:
            raise TPZNoBracketError(f'no sign change of f on [{a}, {b}]: f(a)={fa}, f(b)={fb}')

        root = optimize.brentq(f, a, b, xtol=tol, maxiter=TPZNumerics.maxIterations)

        return float(root)

    #   ******************
    #     RUNGE KUTTA
    #   ******************
    @staticmethod
    def Rk4Step(field: Callable, t: float, y: np.ndarray, dt: float) -> np.ndarray:
        """
        One classical fourth order Runge-Kutta step of y' = field(t, y)
        """
        k1 = field(t, y)
        k2 = field(t + dt / 2, y + dt / 2 * k1)
        k3 = field(t + dt / 2, y + dt / 2 * k2)
        k4 = field(t + dt, y + dt * k3)

        return y + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)

    @staticmethod
    def Rk4Integrate(field: Callable, y0, t0: float, t1: float, steps: int) -> np.ndarray:
        """
        Fixed step RK4 trajectory with steps+1 states, the first one being y0.
        A non finite state raises TPZBlowupError carrying the last finite time.
        """
        if steps < 1:
            raise TPZRangeError(f'steps must be positive, got {steps}')

        y = np.asarray(y0, dtype=float)
        dt = (t1 - t0) / steps

        trajectory = np.empty((steps + 1,) + y.shape)
        trajectory[0] = y

        for i in range(steps):
            t = t0 + i * dt
            y = TPZNumerics.Rk4Step(field, t, y, dt)

            if not np.all(np.isfinite(y)):
                logger.warning('non finite state after t=%.6g', t)
                raise TPZBlowupError(f'non finite state after t={t}', lastTime=t)

            trajectory[i + 1] = y

        return trajectory

    #   ******************
    #      QUADRATURE
    #   ******************
    @staticmethod
    def Quad(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10, breakpoints: tuple = ()) -> float:
        """
        Adaptive quadrature of f over [a, b]. Infinite limits are allowed.
        The interval is split at the given breakpoints, which must lie inside it.
        """
        nodes = [a] + sorted(p for p in breakpoints if a < p < b) + [b]

        total = 0.
        for lower, upper in zip(nodes[:-1], nodes[1:]):
            result = integrate.quad(f, lower, upper, epsabs=tol, epsrel=tol, limit=TPZNumerics.quadLimit, full_output=1)
            value, abserr = result[0], result[1]

            # a fourth entry is the warning message of QUADPACK
            if len(result) > 3 and abserr > 100 * max(tol, tol * abs(value)):
                raise TPZAccuracyError(f'quadrature on [{lower}, {upper}] did not converge: error estimate {abserr:.3g}')

            total += value

        return float(total)

    #   ******************
    #   FINITE DIFFERENCES
    #   ******************
    @staticmethod
    def FdDeriv(f: Callable, x, directions: tuple = (0,), order: int = 1, h: float = 1e-4, accuracy: int = 2):
        """
        Central finite difference derivative of f at x.

        Inputs:
        ------
        f : callable
            Function of a point (scalar or array). Vector valued f is allowed.
        x : float or array
            Evaluation point.
        directions : tuple
            One axis for first derivatives and pure second derivatives, two axes
            for a mixed second derivative.
        order : int
            1 or 2.
        h : float
            Step.
        accuracy : int
            2 or 4 (five point stencils; Richardson for mixed partials).
        """
        scalar = np.ndim(x) == 0
        point = np.atleast_1d(np.asarray(x, dtype=float))

        def Shifted(*shifts):
            y = point.copy()
            for axis, step in shifts:
                y[axis] += step

            return np.asarray(f(y[0] if scalar else y))

        i = directions[0]
        j = directions[1] if len(directions) > 1 else i

        if order == 1:
            if accuracy == 4:
                return (-Shifted((i, 2 * h)) + 8 * Shifted((i, h)) - 8 * Shifted((i, -h)) + Shifted((i, -2 * h))) / (12 * h)

            return (Shifted((i, h)) - Shifted((i, -h))) / (2 * h)

        if order != 2:
            raise TPZRangeError(f'finite difference order {order} not available')

        if i == j:
            if accuracy == 4:
                return (-Shifted((i, 2 * h)) + 16 * Shifted((i, h)) - 30 * Shifted() + 16 * Shifted((i, -h)) - Shifted((i, -2 * h))) / (12 * h**2)

            return (Shifted((i, h)) - 2 * Shifted() + Shifted((i, -h))) / h**2

        def Mixed(step):
            return (Shifted((i, step), (j, step)) - Shifted((i, step), (j, -step))
                    - Shifted((i, -step), (j, step)) + Shifted((i, -step), (j, -step))) / (4 * step**2)

        if accuracy == 4:
            return (4 * Mixed(h / 2) - Mixed(h)) / 3

        return Mixed(h)

    #   ******************
    #     DENSE MATRICES
    #   ******************
    @staticmethod
    def LuFactor(m: TPZDenseMatrix) -> tuple:
        """
        LU factorization with partial pivoting. Raises TPZSingularError when a pivot
        falls below pivotThreshold * norm(m).
        """
        if not m.IsSquare():
            raise TPZShapeError(f'matrix {m.fRows}x{m.fCols} is not square')

        array = m.AsArray()
        scale = np.linalg.norm(array)
        lu, piv = linalg.lu_factor(array, check_finite=True)

        if scale == 0. or np.min(np.abs(np.diag(lu))) < TPZNumerics.pivotThreshold * scale:
            raise TPZSingularError(f'numerically singular {m.fRows}x{m.fCols} matrix')

        return lu, piv

    @staticmethod
    def MatInverse(m: TPZDenseMatrix) -> TPZDenseMatrix:
        lu, piv = TPZNumerics.LuFactor(m)

        inverse = linalg.lu_solve((lu, piv), np.eye(m.fRows))

        return TPZDenseMatrix.FromArray(inverse)

    @staticmethod
    def MatMul(a: TPZDenseMatrix, b: TPZDenseMatrix) -> TPZDenseMatrix:
        if a.fCols != b.fRows:
            raise TPZShapeError(f'cannot multiply {a.fRows}x{a.fCols} by {b.fRows}x{b.fCols}')

        return TPZDenseMatrix.FromArray(a.AsArray() @ b.AsArray())

    @staticmethod
    def MatDet(m: TPZDenseMatrix) -> float:
        """
        Determinant from the LU factors; a singular matrix has determinant 0.
        """
        try:
            lu, piv = TPZNumerics.LuFactor(m)
        except TPZSingularError:
            return 0.

        swaps = np.count_nonzero(piv != np.arange(m.fRows))

        return float(np.prod(np.diag(lu)) * (-1) ** swaps)
