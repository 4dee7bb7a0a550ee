"""
Class to build the catenoids spanning two equal coaxial rings
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import Callable, ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZCatenoidBranch import TPZCatenoidBranch
from src.TPZErrors import TPZNoInstabilityError
from src.TPZGridFunction import TPZGridFunction
from src.TPZNumerics import TPZNumerics
from src.TPZSLProblem import TPZSLProblem
from src.TPZStabilityReport import TPZStabilityReport
from src.TPZSturmLiouville import TPZSturmLiouville

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZCatenoid(TPZBasicDataStructure):
    """
    Two ring problem with ring diameter over ring distance rho = 2r/d.

    Fields:
        - rho: the only parameter of the problem
        - resolution: grid intervals of sampled eigenfunctions and modes
    """
    criticalBand: ClassVar[float] = 1e-10
    stabilityTol: ClassVar[float] = 1e-8

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, rho: float, resolution: int = 2048) -> None:
        super().__init__()

        self.fRho: float = rho
        self.fResolution: int = resolution

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if not self.fRho > 0:
            self.DebugStop(f'ERROR: ring ratio must be positive, got {self.fRho}')

        return

#   ******************
#    CRITICAL RATIO
#   ******************
    @staticmethod
    def CriticalRatio() -> tuple[float, float]:
        """
        Returns (w0, rhoBar) with w0 tanh w0 = 1 and rhoBar = cosh(w0)/w0, the smallest
        ring ratio that admits a catenoid.
        """
        w0 = TPZNumerics.FindRoot(lambda w: w * np.tanh(w) - 1., 1., 2., tol=1e-14)

        return w0, np.cosh(w0) / w0

    @staticmethod
    def JacobiPotential(v):
        return -2. / np.cosh(v)**2

#   ******************
#       BRANCHES
#   ******************
    def SolveBranches(self) -> list[TPZCatenoidBranch]:
        """
        Solutions of cosh(w) = rho*w, ordered outer (small w) then inner
        """
        w0, rhoBar = self.CriticalRatio()
        rho = self.fRho

        if abs(rho - rhoBar) <= self.criticalBand:
            return [TPZCatenoidBranch(w0, 'critical')]

        if rho < rhoBar:
            logger.info('rho=%.6g is below the critical ratio %.6g: no catenoid', rho, rhoBar)
            return []

        g = lambda w: np.cosh(w) - rho * w

        upper = 2 * w0
        while g(upper) <= 0:
            upper *= 2

        outer = TPZNumerics.FindRoot(g, 1e-12, w0, tol=1e-14)
        inner = TPZNumerics.FindRoot(g, w0, upper, tol=1e-14)

        return [TPZCatenoidBranch(outer, 'outer'), TPZCatenoidBranch(inner, 'inner')]

    @staticmethod
    def CompareAreas(first: TPZCatenoidBranch, second: TPZCatenoidBranch) -> tuple[float, float]:
        """
        Area difference A2 - A1 (units pi*d^2/2) and the witness sinh(dw) - dw, dw = w2 - w1.
        For branches of the same ring problem A2 - A1 = witness / (w1*w2).
        """
        difference = second.fAreaCoeff - first.fAreaCoeff
        dw = second.fW - first.fW

        return difference, np.sinh(dw) - dw

    def AreaCurve(self, rhoValues) -> list[dict]:
        """
        Both branch areas along a sweep of ring ratios. Ratios without catenoid are skipped.
        """
        rows = []
        for rho in rhoValues:
            branches = TPZCatenoid(rho, self.fResolution).SolveBranches()
            if len(branches) != 2:
                continue

            outer, inner = branches
            rows.append({"rho": rho, "w1": outer.fW, "A1": outer.fAreaCoeff, "w2": inner.fW, "A2": inner.fAreaCoeff})

        return rows

#   ******************
#       SPECTRUM
#   ******************
    def Stability(self, branch: TPZCatenoidBranch) -> TPZStabilityReport:
        """
        Lowest Dirichlet eigenvalue of J on [-w, w]. The critical branch has a zero
        eigenvalue and is reported as not stable with a 'marginal' annotation.
        """
        problem = TPZSLProblem(self.JacobiPotential, -branch.fW, branch.fW)
        result = TPZSturmLiouville(problem, tol=1e-12, resolution=self.fResolution).Solve(0)

        if branch.fBranch == 'critical':
            return TPZStabilityReport(result.fEigenvalue, result.fEigenfunction, False, 'marginal')

        stable = result.fEigenvalue > self.stabilityTol

        return TPZStabilityReport(result.fEigenvalue, result.fEigenfunction, stable)

    def InstabilityMode(self, w2: float) -> tuple[float, TPZGridFunction]:
        """
        Negative mode of J on [-w2, w2] beyond the critical ratio.

        Returns:
        --------
        tuple
            (k, mode) with eigenvalue -k^2 and mode(v) = cosh(kv) - tanh(v) sinh(kv)/k,
            mode(0) = 1.
        """
        w0, _ = self.CriticalRatio()
        if w2 <= w0:
            raise TPZNoInstabilityError(f'w2={w2} does not exceed w0={w0}')

        condition = lambda k: np.cosh(k * w2) - np.tanh(w2) * np.sinh(k * w2) / k
        k = TPZNumerics.FindRoot(condition, 1e-8, 1., tol=1e-14)

        v = np.linspace(-w2, w2, self.fResolution + 1)
        mode = np.cosh(k * v) - np.tanh(v) * np.sinh(k * v) / k

        return k, TPZGridFunction(mode, x0=-w2, dx=2 * w2 / self.fResolution)

    @staticmethod
    def PerturbativeEigenvalue(eps: float) -> tuple[float, float]:
        """
        Lowest eigenvalue near the critical catenoid w = w0 + eps: the closed formula and
        the first order value -3 eps / w0.
        """
        w0, _ = TPZCatenoid.CriticalRatio()
        w = w0 + eps
        t = w * np.tanh(w)

        exact = -6 * (t - 1) / (w**2 * (3 - t))

        return exact, -3 * eps / w0

#   ******************
#        MOMENTS
#   ******************
    @staticmethod
    def JMoment(n: int) -> float:
        w0, _ = TPZCatenoid.CriticalRatio()

        return TPZNumerics.Quad(lambda v: (v * np.tanh(v))**n / np.cosh(v)**2, 0., w0, tol=1e-14)

    @staticmethod
    def KMoment(n: int) -> float:
        w0, _ = TPZCatenoid.CriticalRatio()

        return TPZNumerics.Quad(lambda v: (v * np.tanh(v))**n, 0., w0, tol=1e-14)

    @staticmethod
    def MomentRecursionDefect(n: int) -> float:
        """
        J_n - [tanh(w0) - n K_(n-1) + n J_(n-1)] / (n+1), the integration by parts recursion
        """
        w0, _ = TPZCatenoid.CriticalRatio()
        predicted = (np.tanh(w0) - n * TPZCatenoid.KMoment(n - 1) + n * TPZCatenoid.JMoment(n - 1)) / (n + 1)

        return TPZCatenoid.JMoment(n) - predicted

    @staticmethod
    def JnKnIdentity() -> float:
        """
        (J0 - 3J1 + 3J2 - J3) * 4 / w0^3, which equals 1
        """
        w0, _ = TPZCatenoid.CriticalRatio()
        j = [TPZCatenoid.JMoment(n) for n in range(4)]

        return (j[0] - 3 * j[1] + 3 * j[2] - j[3]) * 4 / w0**3

    @staticmethod
    def FirstOrderEigenvalue(eps: float) -> float:
        """
        First order eigenvalue shift from the moments (Rayleigh quotient of the zero mode
        on the enlarged interval), independent of the closed formula.
        """
        w0, _ = TPZCatenoid.CriticalRatio()
        j = [TPZCatenoid.JMoment(n) for n in range(4)]
        k = [TPZCatenoid.KMoment(n) for n in range(3)]

        return -4 * eps / w0 * (j[0] - 3 * j[1] + 3 * j[2] - j[3]) / (k[0] - 2 * k[1] + k[2])

#   ******************
#    SECOND VARIATION
#   ******************
    @staticmethod
    def FlatDirectionArea(gamma: float) -> float:
        """
        area(gamma) - area(0), in units of pi*d^2/2, of the critical catenoid deformed
        along its zero mode: r/a0 = cosh(u) + gamma*(cosh(u) - u sinh(u)), z = a0*u.
        The difference is cubic in gamma.
        """
        w0, _ = TPZCatenoid.CriticalRatio()
        a0 = 1 / (2 * w0)

        def Integrand(u):
            deformed = np.cosh(u) * (1 + gamma * (1 - u * np.tanh(u)))
            slope = np.sinh(u) - gamma * u * np.cosh(u)
            return deformed * np.sqrt(1 + slope**2) - np.cosh(u)**2

        return 4 * a0**2 * TPZNumerics.Quad(Integrand, -w0, w0, tol=1e-13, breakpoints=(0.,))

    @staticmethod
    def FactorizationDefect(phi: Callable, dphi: Callable, d2phi: Callable, w: float) -> float:
        """
        <phi, J phi> - (||L phi||^2 - ||phi||^2) on [-w, w] with L = d/dv + tanh(v),
        for phi vanishing at both ends.
        """
        quadratic = TPZNumerics.Quad(lambda v: phi(v) * (-d2phi(v) - 2 * phi(v) / np.cosh(v)**2), -w, w, tol=1e-13)
        factorized = TPZNumerics.Quad(lambda v: (dphi(v) + np.tanh(v) * phi(v))**2 - phi(v)**2, -w, w, tol=1e-13)

        return quadratic - factorized
