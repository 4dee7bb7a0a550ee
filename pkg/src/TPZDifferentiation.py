"""
Finite difference and spectral derivative operators on uniform grids
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
from functools import lru_cache
from math import factorial

import numpy as np

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZDifferentiation:
    @staticmethod
    def StencilWeights(offsets, derivative: int) -> np.ndarray:
        """
        Weights w with sum_j w_j f(x + s_j h) = h^derivative f^(derivative)(x) + O(h^(len(offsets)))
        obtained from the Vandermonde system of the offsets s_j.
        """
        offsets = np.asarray(offsets, dtype=float)
        npoints = len(offsets)

        if derivative >= npoints:
            raise ValueError(f'{npoints} points cannot resolve derivative {derivative}')

        vandermonde = np.vander(offsets, npoints, increasing=True).T
        rhs = np.zeros(npoints)
        rhs[derivative] = factorial(derivative)

        return np.linalg.solve(vandermonde, rhs)

    @staticmethod
    def DifferentiationMatrix(n: int, h: float, derivative: int = 1, accuracy: int = 4, periodic: bool = False) -> np.ndarray:
        """
        Dense n x n finite difference operator.

        Inputs:
        ------
        n : int
            Number of grid points.
        h : float
            Grid spacing.
        derivative : int
            Derivative order.
        accuracy : int
            Even accuracy order of the central stencil. Rows near the ends of a
            non periodic grid use one sided stencils of the same order.
        periodic : bool
            Wrap the central stencil around the grid.
        """
        if accuracy % 2:
            raise ValueError(f'accuracy must be even, got {accuracy}')

        centralPoints = 2 * ((derivative + 1) // 2) - 1 + accuracy
        half = centralPoints // 2

        if n < centralPoints:
            raise ValueError(f'{n} points are too few for a {centralPoints} point stencil')

        central = TPZDifferentiation.StencilWeights(np.arange(-half, half + 1), derivative)
        matrix = np.zeros((n, n))

        if periodic:
            for i in range(n):
                matrix[i, (i + np.arange(-half, half + 1)) % n] += central

            return matrix / h**derivative

        onesided = derivative + accuracy

        for i in range(n):
            if half <= i < n - half:
                matrix[i, i - half: i + half + 1] = central
                continue

            start = min(max(i - onesided // 2, 0), n - onesided)
            columns = np.arange(start, start + onesided)
            matrix[i, columns] = TPZDifferentiation.StencilWeights(columns - i, derivative)

        return matrix / h**derivative

    @staticmethod
    def SpectralDerivative(samples, length: float, order: int = 1) -> np.ndarray:
        """
        Fourier derivative of periodic samples covering one period of the given length.
        Along the last axis of samples.
        """
        samples = np.asarray(samples, dtype=float)
        n = samples.shape[-1]
        k = 2 * np.pi * np.fft.fftfreq(n, d=length / n)

        multiplier = (1j * k) ** order
        if order % 2 and n % 2 == 0:
            multiplier[n // 2] = 0.

        return np.real(np.fft.ifft(np.fft.fft(samples, axis=-1) * multiplier, axis=-1))

    @staticmethod
    @lru_cache(maxsize=64)
    def CachedMatrix(n: int, h: float, derivative: int = 1, accuracy: int = 4, periodic: bool = False) -> np.ndarray:
        """
        Read only DifferentiationMatrix kept for repeated use inside time marches
        """
        matrix = TPZDifferentiation.DifferentiationMatrix(n, h, derivative, accuracy, periodic)
        matrix.setflags(write=False)

        return matrix

    @staticmethod
    def ApplyAlongAxis(matrix: np.ndarray, field: np.ndarray, axis: int) -> np.ndarray:
        """
        Applies a differentiation matrix along one axis of a field of any rank
        """
        field = np.asarray(field, dtype=float)

        return np.moveaxis(np.tensordot(matrix, field, axes=([1], [axis])), 0, axis)
