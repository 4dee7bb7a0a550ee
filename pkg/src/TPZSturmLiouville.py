"""
Shooting eigensolver for -psi'' + V psi = E psi with Dirichlet ends.

The eigenvalue with a given number of interior nodes is bracketed by node
counting of the solution shot from the left end, then refined by matching the
left and right shots at the midpoint of the interval.
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np
from scipy.integrate import solve_ivp

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZEigenResult import TPZEigenResult
from src.TPZErrors import TPZNoBracketError, TPZNotFoundError
from src.TPZGridFunction import TPZGridFunction
from src.TPZNumerics import TPZNumerics
from src.TPZSLProblem import TPZSLProblem

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZSturmLiouville(TPZBasicDataStructure):
    """
    Fields:
        - problem: the TPZSLProblem to solve
        - tol: absolute tolerance on eigenvalues
        - resolution: number of grid intervals of the returned eigenfunctions
    """
    rtol: ClassVar[float] = 1e-12
    atol: ClassVar[float] = 1e-14
    maxExpansions: ClassVar[int] = 60

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, problem: TPZSLProblem, tol: float = 1e-10, resolution: int = 2048) -> None:
        super().__init__()

        self.fProblem: TPZSLProblem = problem
        self.fTol: float = tol
        self.fResolution: int = resolution
        self.fPotentialMin: float = 0.
        self.fPotentialMax: float = 0.

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        samples = self.fProblem.Sample(4001)
        self.fPotentialMin = float(np.min(samples))
        self.fPotentialMax = float(np.max(samples))

        if self.fProblem.fBoundary == 'decay' and self.fProblem.TailValue() > self.fTol:
            logger.warning('potential tail %.3g exceeds the tolerance at the truncation radius', self.fProblem.TailValue())

        return

#   ******************
#        METHODS
#   ******************
    def Shoot(self, energy: float, start: float, end: float, slope: float, dense: bool = False):
        """
        Integrates psi'' = (V - E) psi from start to end with psi(start) = 0
        """
        potential = self.fProblem.fPotential

        def Field(x, y):
            return [y[1], (potential(x) - energy) * y[0]]

        return solve_ivp(Field, (start, end), [0., slope], method='DOP853', rtol=self.rtol, atol=self.atol, dense_output=dense)

    def NodeCount(self, energy: float) -> int:
        """
        Sign changes of the left shot over the whole interval. It equals the number
        of eigenvalues below the given energy.
        """
        a, b = self.fProblem.fA, self.fProblem.fB

        oscillations = np.sqrt(max(energy - self.fPotentialMin, 0.)) * (b - a) / np.pi
        npoints = max(4001, int(40 * oscillations))

        solution = self.Shoot(energy, a, b, 1., dense=True)
        values = solution.sol(np.linspace(a, b, npoints))[0][1:]

        signs = np.sign(values[values != 0.])

        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def MatchingFunction(self, energy: float) -> float:
        """
        Normalized Wronskian of the left and right shots at the midpoint. It vanishes
        exactly at the eigenvalues.
        """
        a, b = self.fProblem.fA, self.fProblem.fB
        middle = (a + b) / 2

        left = self.Shoot(energy, a, middle, 1.).y[:, -1]
        right = self.Shoot(energy, b, middle, -1.).y[:, -1]

        wronskian = left[0] * right[1] - left[1] * right[0]

        return float(wronskian / (np.linalg.norm(left) * np.linalg.norm(right)))

    def Bracket(self, index: int) -> tuple[float, float]:
        """
        Energies lo < hi with exactly index eigenvalues below lo and index+1 below hi
        """
        lower = self.fPotentialMin - 1.
        upper = self.fPotentialMax + 1.5

        nodesUpper = self.NodeCount(upper)
        for _ in range(self.maxExpansions):
            if nodesUpper >= index + 1:
                break
            upper += 2 * (upper - lower)
            nodesUpper = self.NodeCount(upper)
        else:
            raise TPZNotFoundError(f'no eigenvalue bracket for index {index} below E={upper:.6g}')

        nodesLower = self.NodeCount(lower)
        while not (nodesLower == index and nodesUpper == index + 1):
            if upper - lower < self.fTol:
                raise TPZNotFoundError(f'eigenvalues {index} and {index + 1} could not be separated near E={upper:.6g}')

            middle = (lower + upper) / 2
            nodesMiddle = self.NodeCount(middle)

            if nodesMiddle <= index:
                lower, nodesLower = middle, nodesMiddle
            else:
                upper, nodesUpper = middle, nodesMiddle

        logger.debug('eigenvalue %d bracketed in [%.10g, %.10g]', index, lower, upper)

        return lower, upper

    def Eigenvalue(self, index: int) -> float:
        lower, upper = self.Bracket(index)

        try:
            return TPZNumerics.FindRoot(self.MatchingFunction, lower, upper, tol=self.fTol / 10)

        except TPZNoBracketError:
            logger.debug('matching function keeps its sign, refining by node counting')

        while upper - lower > self.fTol / 10:
            middle = (lower + upper) / 2
            if self.NodeCount(middle) <= index:
                lower = middle
            else:
                upper = middle

        return (lower + upper) / 2

    def Eigenfunction(self, energy: float) -> TPZGridFunction:
        """
        Left and right shots glued at the midpoint, normalized to peak value 1
        """
        a, b = self.fProblem.fA, self.fProblem.fB
        middle = (a + b) / 2

        left = self.Shoot(energy, a, middle, 1., dense=True)
        right = self.Shoot(energy, b, middle, -1., dense=True)

        leftEnd, rightEnd = left.y[:, -1], right.y[:, -1]
        scale = np.dot(leftEnd, rightEnd) / np.dot(rightEnd, rightEnd)

        x = np.linspace(a, b, self.fResolution + 1)
        samples = np.where(x <= middle, left.sol(np.minimum(x, middle))[0], scale * right.sol(np.maximum(x, middle))[0])
        samples[0], samples[-1] = 0., 0.

        samples /= samples[np.argmax(np.abs(samples))]

        return TPZGridFunction(samples, x0=a, dx=(b - a) / self.fResolution)

    @staticmethod
    def InteriorNodes(function: TPZGridFunction, threshold: float = 1e-8) -> int:
        values = function.fSamples[1:-1]
        signs = np.sign(values[np.abs(values) > threshold])

        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def Solve(self, index: int = 0) -> TPZEigenResult:
        """
        Eigenpair with the given number of interior nodes (index 0 is the ground state)

        Inputs:
        ------
        index : int
            Number of interior nodes of the wanted eigenfunction.

        Returns:
        --------
        TPZEigenResult
        """
        if index < 0:
            self.DebugStop(f'ERROR: negative eigenvalue index {index}')

        energy = self.Eigenvalue(index)
        eigenfunction = self.Eigenfunction(energy)

        nodes = self.InteriorNodes(eigenfunction)
        if nodes != index:
            logger.warning('eigenfunction %d shows %d interior nodes', index, nodes)

        logger.info('eigenvalue %d: %.12g', index, energy)

        return TPZEigenResult(energy, eigenfunction, index)
