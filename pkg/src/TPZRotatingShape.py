"""
Rigidly rotating minimal surfaces of R^{1,2}
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np

from src.TPZEpicycloid import TPZEpicycloid
from src.TPZErrors import TPZRangeError, TPZSingularPointError
from src.TPZNumerics import TPZNumerics
from src.TPZPlanarCurve import TPZPlanarCurve

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZRotatingShape:
    """
    Toolkit for the shape equation w^2 r^2 (1 + gamma sin^2 phi) = 1, phi the angle
    between u and u'.
    """
    degenerateTol: ClassVar[float] = 1e-14
    cuspBand: ClassVar[float] = 1e-2
    quadTol: ClassVar[float] = 1e-12

    #   ******************
    #     SHAPE EQUATION
    #   ******************
    @staticmethod
    def Epicycloid(n: int, k: int, sign: str = '+') -> TPZEpicycloid:
        epicycloid = TPZEpicycloid(n, k, sign)
        logger.debug('epicycloid (%d, %d, %s): w^2=%.15g, gamma0=%.15g', n, k, sign, epicycloid.fW2, epicycloid.Gamma0())

        return epicycloid

    @staticmethod
    def AngleData(curve: TPZPlanarCurve, phi) -> tuple:
        """
        r^2 together with sin and cos of the angle between u and u'
        """
        u, du = curve.Position(phi), curve.Velocity(phi)

        r2 = u[0]**2 + u[1]**2
        speed2 = du[0]**2 + du[1]**2
        if np.any(r2 < TPZRotatingShape.degenerateTol) or np.any(speed2 < TPZRotatingShape.degenerateTol):
            raise TPZSingularPointError('shape equation needs u != 0 and u\' != 0')

        angle = np.arctan2(u[0] * du[1] - u[1] * du[0], u[0] * du[0] + u[1] * du[1])

        return r2, np.sin(angle), np.cos(angle)

    @staticmethod
    def ShapeResidual(curve: TPZPlanarCurve, w: float, gamma: float, phi) -> tuple:
        """
        Residual of the shape equation and the first integral gamma0 at phi.

        Returns:
        --------
        residual : w^2 r^2 (1 + gamma sin^2) - 1
        gamma0 : w r sin / sqrt(1 - w^2 r^2 cos^2), constant along solutions
        """
        r2, sin, cos = TPZRotatingShape.AngleData(curve, phi)

        residual = w**2 * r2 * (1 + gamma * sin**2) - 1
        with np.errstate(invalid='ignore'):
            gamma0 = w * np.sqrt(r2) * np.abs(sin) / np.sqrt(1 - w**2 * r2 * cos**2)

        return residual, gamma0

    @staticmethod
    def InferGamma(curve: TPZPlanarCurve, w: float, phi0: float) -> float:
        """
        gamma = 1/gamma0^2 - 1 with gamma0 measured at the regular point phi0
        """
        _, gamma0 = TPZRotatingShape.ShapeResidual(curve, w, 0., phi0)

        return float(1 / gamma0**2 - 1)

    @staticmethod
    def MinimalityDefect(curve: TPZPlanarCurve, w: float, phi) -> np.ndarray:
        """
        |u'^2 w^2 (u . A u') + (1 - w^2 r^2)(u' . A u'')| with A the rotation generator
        """
        u, du, d2u = curve.Position(phi), curve.Velocity(phi), curve.Acceleration(phi)

        speed2 = du[0]**2 + du[1]**2
        r2 = u[0]**2 + u[1]**2
        uAdu = -u[0] * du[1] + u[1] * du[0]
        duAd2u = -du[0] * d2u[1] + du[1] * d2u[0]

        return np.abs(speed2 * w**2 * uAdu + (1 - w**2 * r2) * duAd2u)

    @staticmethod
    def RegularAngles(curve: TPZPlanarCurve, count: int, band: float = None) -> np.ndarray:
        """
        Equispaced parameters of one period where |u'| is at least band
        """
        band = TPZRotatingShape.cuspBand if band is None else band
        phi = np.linspace(0., curve.fPeriod, count, endpoint=False)
        du = curve.Velocity(phi)

        return phi[np.hypot(du[0], du[1]) >= band]

    @staticmethod
    def CuspCount(curve: TPZPlanarCurve, samples: int = 20000, threshold: float = 1e-4) -> int:
        """
        Number of zeros of u'^2 per period, located as periodic local minima below threshold
        """
        phi = np.linspace(0., curve.fPeriod, samples, endpoint=False)
        du = curve.Velocity(phi)
        speed2 = du[0]**2 + du[1]**2

        minima = (speed2 < np.roll(speed2, 1)) & (speed2 <= np.roll(speed2, -1)) & (speed2 < threshold)

        return int(np.count_nonzero(minima))

    @staticmethod
    def Surface(curve: TPZPlanarCurve, w: float, times, npoints: int) -> np.ndarray:
        """
        Points (t, R(wt)u(phi)) of the rotating surface, shape (len(times), npoints, 3)
        """
        times = np.asarray(times, dtype=float)
        profile = curve.Sample(npoints)

        cos, sin = np.cos(w * times)[:, None], np.sin(w * times)[:, None]
        x = cos * profile[None, :, 0] - sin * profile[None, :, 1]
        y = sin * profile[None, :, 0] + cos * profile[None, :, 1]

        return np.stack([np.broadcast_to(times[:, None], x.shape), x, y], axis=-1)

    #   ******************
    #    ROLLING CIRCLES
    #   ******************
    @staticmethod
    def RollingCircle(a: float, b: float, chi) -> np.ndarray:
        """
        Marked point of a circle of radius a rolling around a circle of radius b,
        (a+b)(cos a chi, sin a chi) - a (cos (a+b)chi, sin (a+b)chi)
        """
        if a <= 0 or b < 0:
            raise TPZRangeError(f'rolling circle needs a > 0 and b >= 0, got a={a}, b={b}')

        chi = np.asarray(chi, dtype=float)

        return np.array([(a + b) * np.cos(a * chi) - a * np.cos((a + b) * chi),
                         (a + b) * np.sin(a * chi) - a * np.sin((a + b) * chi)])

    @staticmethod
    def Rotation(angle: float) -> np.ndarray:
        return np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])

    #   ******************
    #    SHAPE QUADRATURE
    #   ******************
    @staticmethod
    def IntegrateShape(gamma0: float, wValues) -> tuple:
        """
        Polar angle of a shape solution as a function of W = w^2 r^2, measured from
        the turning point W = 1.

        Inputs:
        ------
        gamma0 : float
            First integral, larger than 1.
        wValues : array
            Values of W in [1, gamma0^2).

        Returns:
        --------
        quadrature : int sqrt((W-1)/(1-W/gamma0^2)) dr/r at unit angular velocity
        closed : gamma0 arctan v - arctan(gamma0 v), v = sqrt((W-1)/(gamma0^2-W))
        """
        wValues = np.atleast_1d(np.asarray(wValues, dtype=float))

        if not gamma0 > 1:
            raise TPZRangeError(f'gamma0 must exceed 1, got {gamma0}')

        if np.any(wValues < 1) or np.any(wValues >= gamma0**2):
            raise TPZRangeError(f'W must lie in [1, {gamma0**2}), got [{wValues.min()}, {wValues.max()}]')

        delta = 1 / gamma0**2

        def Integrand(r):
            return np.sqrt(max(r**2 - 1, 0.) / (1 - delta * r**2)) / r

        quadrature = np.array([TPZNumerics.Quad(Integrand, 1., np.sqrt(value), tol=TPZRotatingShape.quadTol)
                               for value in wValues])

        v = np.sqrt((wValues - 1) / (gamma0**2 - wValues))
        closed = gamma0 * np.arctan(v) - np.arctan(gamma0 * v)

        return quadrature, closed

    @staticmethod
    def TangentFormula(a: float, b: float, phi):
        """
        tan of the polar angle of (cos a phi, sin a phi)/(2a) - (cos b phi, sin b phi)/(2b)
        """
        phi = np.asarray(phi, dtype=float)

        return (b * np.sin(a * phi) - a * np.sin(b * phi)) / (b * np.cos(a * phi) - a * np.cos(b * phi))
