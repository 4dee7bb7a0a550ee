"""
Class to check the minimal tori of the three sphere
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np
from scipy.spatial import cKDTree

from src.TPZErrors import TPZRangeError
from src.TPZNumerics import TPZNumerics
from src.TPZSurfaceMapS3 import TPZSurfaceMapS3
from src.TPZTorusFamily import TPZTorusFamily

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZS3Torus:
    """
    Toolkit for TPZTorusFamily members
    """
    reparamSteps: ClassVar[int] = 4000
    gridSize: ClassVar[int] = 64

    #   ******************
    #      CONGRUENCE
    #   ******************
    @staticmethod
    def CongruenceMatrix(e: float) -> np.ndarray:
        """
        Orthogonal S with S x_clifford(phi1 + f1, phi2 + f2) = x_e(phi1, phi2)
        """
        c, s = 1 / np.sqrt(1 + e**2), e / np.sqrt(1 + e**2)

        return 0.5 * np.array([[1 + c, -s, 1 - c, -s],
                               [s, 1 + c, -s, -1 + c],
                               [1 - c, s, 1 + c, s],
                               [s, c - 1, -s, 1 + c]])

    @staticmethod
    def ReparamFunctions(family: TPZTorusFamily, phiMax: float = 2 * np.pi, steps: int = None) -> tuple:
        """
        f1, f2 with f1' = u, f2' = v and f1(0) = f2(0) = 0, by RK4 on a uniform grid.

        Returns:
        --------
        (phi grid, f1 samples, f2 samples)
        """
        steps = TPZS3Torus.reparamSteps if steps is None else steps

        def Field(phi, y):
            u, v, _, _ = family.ReparamUV(phi)
            return np.array([u, v])

        trajectory = TPZNumerics.Rk4Integrate(Field, [0., 0.], 0., phiMax, steps)

        return np.linspace(0., phiMax, steps + 1), trajectory[:, 0], trajectory[:, 1]

    @staticmethod
    def CliffordPoint(phi1, phi2) -> np.ndarray:
        return np.array([np.cos(phi1), np.sin(phi1), np.cos(phi2), np.sin(phi2)]) / np.sqrt(2)

    @staticmethod
    def ScalarRelations(family: TPZTorusFamily, phi, f1, f2) -> np.ndarray:
        """
        Defects of the four scalar relations fixing cos f1, sin f1, cos(f2 + phi), sin(f2 + phi)
        """
        e = family.fE
        c, s = 1 / np.sqrt(1 + e**2), e / np.sqrt(1 + e**2)
        theta, _, _ = family.ThetaOfPhi(phi)
        ct, st = np.cos(theta), np.sin(theta)
        cp, sp = np.cos(phi), np.sin(phi)

        root2 = np.sqrt(2)
        return np.array([root2 * np.cos(f1) - ((1 + c) * ct + (1 - c) * st * cp + s * st * sp),
                         root2 * np.sin(f1) - (-s * ct + s * st * cp - (1 - c) * st * sp),
                         root2 * np.cos(f2 + phi) - ((1 - c) * ct + st * ((1 + c) * cp - s * sp)),
                         root2 * np.sin(f2 + phi) - (-s * ct + st * ((1 + c) * sp + s * cp))])

    @staticmethod
    def CongruenceCheck(family: TPZTorusFamily, count: int = 64) -> float:
        """
        Largest defect of the scalar relations and of S x_clifford = x_e over count
        parameter samples, with phi1 = phi2 = phi/2 and phi1 = phi, phi2 = 0 alternating
        """
        if family.fPhi0 != 0.:
            raise TPZRangeError(f'congruence is normalized to phi0 = 0, got {family.fPhi0}')

        grid, f1, f2 = TPZS3Torus.ReparamFunctions(family)
        matrix = TPZS3Torus.CongruenceMatrix(family.fE)

        worst = 0.
        for j, index in enumerate(np.linspace(0, len(grid) - 1, count).astype(int)):
            phi = grid[index]
            phi1 = phi / 2 if j % 2 == 0 else phi
            phi2 = phi - phi1

            relations = TPZS3Torus.ScalarRelations(family, phi, f1[index], f2[index])
            image = matrix @ TPZS3Torus.CliffordPoint(phi1 + f1[index], phi2 + f2[index])

            worst = max(worst, np.max(np.abs(relations)), np.max(np.abs(image - family.Point(phi1, phi2))))

        logger.info('congruence e=%.6g: max defect %.3g over %d samples', family.fE, worst, count)

        return float(worst)

    @staticmethod
    def OrthogonalityDefect(e: float) -> float:
        matrix = TPZS3Torus.CongruenceMatrix(e)

        return float(np.max(np.abs(matrix.T @ matrix - np.eye(4))))

    #   ******************
    #      HOPF MAPS
    #   ******************
    @staticmethod
    def Hopf(q) -> np.ndarray:
        t, x, y, z = q

        return np.array([t**2 + x**2 - y**2 - z**2, 2 * (t * z - x * y), 2 * (t * y + x * z)])

    @staticmethod
    def ConjugateHopf(q) -> np.ndarray:
        """
        Hopf map after exchanging the last two coordinates; constant on phi1 - phi2
        """
        t, x, y, z = q

        return TPZS3Torus.Hopf((t, x, z, y))

    @staticmethod
    def GreatCircleNormal(family: TPZTorusFamily) -> np.ndarray:
        """
        Normal of the plane whose great circle carries the conjugate Hopf image of the family
        """
        e, phi0 = family.fE, family.fPhi0

        return np.array([1., -e * np.sin(phi0), e * np.cos(phi0)]) / np.sqrt(1 + e**2)

    #   ******************
    #   GENERAL PROFILES
    #   ******************
    @staticmethod
    def ProfileAcceleration(k: float, l: float, theta, thetaDot):
        """
        theta'' of the reduced equation for theta(k phi1 + l phi2)
        """
        s, c = np.sin(theta), np.cos(theta)
        bracket = (l**2 - k**2) * s**2 * c**2 + 2 * s**4 * k**2 - 2 * c**4 * l**2

        return -(thetaDot**2 * bracket + s**2 * c**2 * (s**2 - c**2)) / (s * c * (k**2 * s**2 + l**2 * c**2))

    @staticmethod
    def ProfileEnergy(k: float, l: float, theta, thetaDot):
        """
        Conserved s^2 c^2 / sqrt(c^2 s^2 + (k^2 s^2 + l^2 c^2) theta'^2)
        """
        s2, c2 = np.sin(theta)**2, np.cos(theta)**2

        return s2 * c2 / np.sqrt(c2 * s2 + (k**2 * s2 + l**2 * c2) * thetaDot**2)

    @staticmethod
    def ProfileFlow(k: float, l: float, energy: float, t1: float, steps: int) -> np.ndarray:
        """
        RK4 trajectory (theta, theta') from the lower turning point sin(2 theta) = 2E
        """
        if not 0 < energy <= 0.5:
            raise TPZRangeError(f'energy must lie in (0, 1/2], got {energy}')

        def Field(t, y):
            return np.array([y[1], TPZS3Torus.ProfileAcceleration(k, l, y[0], y[1])])

        return TPZNumerics.Rk4Integrate(Field, [np.arcsin(2 * energy) / 2, 0.], 0., t1, steps)

    #   ******************
    #    OTHER SURFACES
    #   ******************
    @staticmethod
    def ProductTorus(theta: float) -> TPZSurfaceMapS3:
        """
        cos(theta) S^1 x sin(theta) S^1, minimal only for theta = pi/4
        """
        c, s = np.cos(theta), np.sin(theta)

        def Position(phi1, phi2):
            return np.array([c * np.cos(phi1), c * np.sin(phi1), s * np.cos(phi2), s * np.sin(phi2)])

        def Jacobian(phi1, phi2):
            return np.array([[-c * np.sin(phi1), 0.], [c * np.cos(phi1), 0.], [0., -s * np.sin(phi2)], [0., s * np.cos(phi2)]])

        return TPZSurfaceMapS3(Position, Jacobian)

    @staticmethod
    def MinimumSeparation(family: TPZTorusFamily, size: int = None) -> float:
        """
        Smallest distance between images of distinct points of a size x size parameter grid
        """
        size = TPZS3Torus.gridSize if size is None else size
        angles = 2 * np.pi * np.arange(size) / size
        phi1, phi2 = np.meshgrid(angles, angles, indexing='ij')

        points = family.Point(phi1.ravel(), phi2.ravel()).T
        distances, _ = cKDTree(points).query(points, k=2)

        return float(np.min(distances[:, 1]))
