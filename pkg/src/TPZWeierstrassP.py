"""
Real Weierstrass function with P'^2 = 4P(P^2 - 1), pole at 0 and minimum 1 at the
half period, tabulated by integrating P'' = 6P^2 - 2 away from the minimum.
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicHermiteSpline

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZGridFunction import TPZGridFunction
from src.TPZNumerics import TPZNumerics

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZWeierstrassP(TPZBasicDataStructure):
    """
    Fields:
        - resolution: grid intervals of the table between the cut and the half period
        - halfPeriod: omega, with P(omega) = 1 and P'(omega) = 0
        - lookup: tabulated P on [cut, omega]
        - slopes: tabulated P' on the same grid

    Below the cut the Laurent series 1/x^2 + x^2/5 + x^6/75 + 2x^10/4875 is used.
    """
    cut: ClassVar[float] = 0.25
    laurent: ClassVar[tuple] = (1 / 5, 1 / 75, 2 / 4875)

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, resolution: int = 8192) -> None:
        super().__init__()

        self.fResolution: int = resolution
        self.fHalfPeriod: float = 0.
        self.fLookup: TPZGridFunction = None
        self.fSlopes: np.ndarray = None
        self.fSpline: CubicHermiteSpline = None

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fResolution < 1024:
            self.DebugStop(f'ERROR: resolution {self.fResolution} is below 1024')

        self.fHalfPeriod = self.HalfPeriod()
        self.Tabulate()

        return

#   ******************
#        METHODS
#   ******************
    @staticmethod
    def HalfPeriod() -> float:
        """
        int_1^inf dP / (2 sqrt(P(P^2-1))) with P = 1 + t^2
        """
        return TPZNumerics.Quad(lambda t: 1 / np.sqrt((1 + t**2) * (2 + t**2)), 0., np.inf, tol=1e-13)

    def Tabulate(self) -> None:
        omega = self.fHalfPeriod
        grid = np.linspace(self.cut, omega, self.fResolution + 1)

        def Field(x, y):
            return [y[1], 6 * y[0]**2 - 2]

        solution = solve_ivp(Field, (omega, self.cut), [1., 0.], method='DOP853', t_eval=grid[::-1], rtol=1e-13, atol=1e-13)

        values, slopes = solution.y[0][::-1], solution.y[1][::-1]
        self.fLookup = TPZGridFunction(values, x0=self.cut, dx=(omega - self.cut) / self.fResolution)
        self.fSlopes = slopes
        self.fSpline = CubicHermiteSpline(grid, values, slopes)

        mismatch = abs(values[0] - self.Laurent(self.cut)[0])
        logger.debug('P table: omega=%.15g, Laurent mismatch at the cut %.3g', omega, mismatch)

        return

    def Laurent(self, x):
        x = np.asarray(x, dtype=float)
        c2, c4, c6 = self.laurent

        value = 1 / x**2 + c2 * x**2 + c4 * x**6 + c6 * x**10
        slope = -2 / x**3 + 2 * c2 * x + 6 * c4 * x**5 + 10 * c6 * x**9

        return value, slope

    def Reduce(self, x) -> tuple[np.ndarray, np.ndarray]:
        """
        Representative in [0, omega] and the sign of P' relative to it
        """
        omega = self.fHalfPeriod
        x = np.mod(np.asarray(x, dtype=float), 2 * omega)

        reflected = x > omega
        reduced = np.where(reflected, 2 * omega - x, x)

        return reduced, np.where(reflected, -1., 1.)

    def Evaluate(self, x):
        """
        P(x); infinite at the lattice points
        """
        reduced, _ = self.Reduce(x)
        near = reduced < self.cut

        with np.errstate(divide='ignore'):
            series, _ = self.Laurent(np.where(near, reduced, 1.))
            series = np.where(reduced == 0., np.inf, series)

        return np.where(near, series, self.fSpline(np.clip(reduced, self.cut, self.fHalfPeriod)))

    def Derivative(self, x):
        reduced, sign = self.Reduce(x)
        near = reduced < self.cut

        _, series = self.Laurent(np.where(near & (reduced > 0), reduced, 1.))
        table = self.fSpline(np.clip(reduced, self.cut, self.fHalfPeriod), 1)

        return sign * np.where(near, series, table)

    def SecondDerivative(self, x):
        return 6 * self.Evaluate(x)**2 - 2

    def Residual(self, x):
        """
        |P'^2 - 4P(P^2-1)| relative to 1 + 4P^3
        """
        value, slope = self.Evaluate(x), self.Derivative(x)

        return np.abs(slope**2 - 4 * value * (value**2 - 1)) / (1 + 4 * value**3)
