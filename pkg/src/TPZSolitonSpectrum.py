"""
Spectrum of the perturbation operator of the static Lorentzian catenoid

    D = -sech^2(z) (d^2/dz^2 - 2 tanh(z) d/dz + 1) = -d/dz(sech^2 d/dz) - sech^2,

its conjugated form in y = sinh(z) and the exactly solvable operator
H = -d^2/dz^2 - 2 sech^2(z) it factors through: D = sech (H) sech.
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import Callable, ClassVar

import numpy as np

from src.TPZEigenResult import TPZEigenResult
from src.TPZErrors import TPZError
from src.TPZNumerics import TPZNumerics
from src.TPZSLProblem import TPZSLProblem
from src.TPZSturmLiouville import TPZSturmLiouville

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZSolitonSpectrum:
    truncation: ClassVar[float] = 40.
    groundTruncation: ClassVar[float] = 50.
    derivativeStep: ClassVar[float] = 2e-3
    quadTol: ClassVar[float] = 1e-11

    #   ******************
    #      OPERATORS
    #   ******************
    @staticmethod
    def ApplyD(psi: Callable, z, dpsi: Callable = None, d2psi: Callable = None):
        """
        D psi at z. Missing derivative handles are replaced by five point differences.
        """
        h = TPZSolitonSpectrum.derivativeStep
        first = dpsi(z) if dpsi is not None else TPZNumerics.FdDeriv(psi, z, h=h, accuracy=4)
        second = d2psi(z) if d2psi is not None else TPZNumerics.FdDeriv(psi, z, order=2, h=h, accuracy=4)

        return -(second - 2 * np.tanh(z) * first + psi(z)) / np.cosh(z)**2

    @staticmethod
    def ReducedPotential(y):
        """
        Potential of the conjugated operator -d^2/dy^2 + V(y), y = sinh(z)
        """
        p = 1 + np.asarray(y, dtype=float)**2

        return -1 / (4 * p) - 5 / (4 * p**2)

    @staticmethod
    def ApplyReduced(g: Callable, d2g: Callable, y):
        return -d2g(y) + TPZSolitonSpectrum.ReducedPotential(y) * g(y)

    #   ******************
    #   RAYLEIGH QUOTIENTS
    #   ******************
    @staticmethod
    def RayleighQuotient(psi: Callable, dpsi: Callable = None, truncation: float = None) -> float:
        """
        <psi, D psi>/<psi, psi> in the flat pairing, from the symmetric form
        int sech^2 (psi'^2 - psi^2) dz over [-truncation, truncation].
        sech(z) gives -8/15 and tanh(z)sech(z) gives 24/35.

        Inputs:
        ------
        psi : callable
            Trial function of z.
        dpsi : callable, optional
            Its derivative. Five point differences are used when missing.
        truncation : float, optional
            Half width of the integration window.
        """
        truncation = TPZSolitonSpectrum.truncation if truncation is None else truncation
        h = TPZSolitonSpectrum.derivativeStep

        def Slope(z):
            if dpsi is not None:
                return dpsi(z)
            return TPZNumerics.FdDeriv(psi, z, h=h, accuracy=4)

        def Form(z):
            return (Slope(z)**2 - psi(z)**2) / np.cosh(z)**2

        tol = TPZSolitonSpectrum.quadTol
        numerator = TPZNumerics.Quad(Form, -truncation, truncation, tol=tol, breakpoints=(0.,))
        norm = TPZNumerics.Quad(lambda z: psi(z)**2, -truncation, truncation, tol=tol, breakpoints=(0.,))

        if not norm > 0:
            raise TPZError('trial function vanishes on the integration window')

        return numerator / norm

    @staticmethod
    def TrialQuotients(powers=(1., 1.5, 2.)) -> list[float]:
        """
        Rayleigh quotients of sech^p(z)
        """
        quotients = []
        for p in powers:
            psi = lambda z, p=p: np.cosh(z)**(-p)
            dpsi = lambda z, p=p: -p * np.tanh(z) * np.cosh(z)**(-p)
            quotients.append(TPZSolitonSpectrum.RayleighQuotient(psi, dpsi))

        return quotients

    #   ******************
    #      ZERO MODES
    #   ******************
    @staticmethod
    def ZeroModeResiduals(z=None) -> tuple[float, float]:
        """
        Sup of |D eps| over the grid for eps+ = cosh z - z sinh z and eps- = sinh z,
        the modes generated by rescaling and translating the static solution.
        """
        z = np.linspace(-10., 10., 2001) if z is None else np.asarray(z, dtype=float)

        even = TPZSolitonSpectrum.ApplyD(lambda s: np.cosh(s) - s * np.sinh(s), z,
                                         lambda s: -s * np.cosh(s),
                                         lambda s: -np.cosh(s) - s * np.sinh(s))
        odd = TPZSolitonSpectrum.ApplyD(np.sinh, z, np.cosh, np.sinh)

        return float(np.max(np.abs(even))), float(np.max(np.abs(odd)))

    #   ******************
    #     GROUND STATE
    #   ******************
    @staticmethod
    def GroundState(truncation: float = None, index: int = 0) -> TPZEigenResult:
        """
        Eigenpair of -d^2/dy^2 + V(y) on [-truncation, truncation], index 0 being the
        single negative eigenvalue. Higher indices sit in the continuum of the box.
        """
        truncation = TPZSolitonSpectrum.groundTruncation if truncation is None else truncation
        if truncation < 20:
            raise TPZError(f'truncation {truncation} is too small for the 1/y^2 tail')

        problem = TPZSLProblem.Decaying(TPZSolitonSpectrum.ReducedPotential, truncation)
        result = TPZSturmLiouville(problem, tol=1e-10, resolution=4000).Solve(index)

        logger.info('soliton operator eigenvalue %d on |y| <= %g: %.10g', index, truncation, result.fEigenvalue)

        return result

    #   ******************
    #    FORM EQUIVALENCE
    #   ******************
    @staticmethod
    def OperatorFormsDefect(g: Callable, d2g: Callable, y=None) -> float:
        """
        Sup over y of |(1+y^2)^(-1/4) D[(1+y^2)^(1/4) g(sinh z)] - (-g'' + V g)(y)|,
        with D applied by finite differences in z.
        """
        y = np.linspace(-3., 3., 61) if y is None else np.asarray(y, dtype=float)
        z = np.arcsinh(y)

        lifted = lambda s: np.sqrt(np.cosh(s)) * g(np.sinh(s))
        zform = np.array([TPZSolitonSpectrum.ApplyD(lifted, s) for s in z]) / np.sqrt(np.cosh(z))

        return float(np.max(np.abs(zform - TPZSolitonSpectrum.ApplyReduced(g, d2g, y))))

    @staticmethod
    def FactorizedFormDefect(phi: Callable, dphi: Callable, d2phi: Callable, z=None) -> float:
        """
        Sup over z of |D phi - sech (L*L - 1)(sech phi)| with L = d/dz + tanh and L* its
        adjoint. D phi is analytic, the outer derivative of L* by finite differences.
        """
        z = np.linspace(-6., 6., 121) if z is None else np.asarray(z, dtype=float)
        h = TPZSolitonSpectrum.derivativeStep

        def Lowered(s):
            # L(sech phi) = sech phi'
            return dphi(s) / np.cosh(s)

        factorized = []
        for s in z:
            lowered = Lowered(s)
            raised = -TPZNumerics.FdDeriv(Lowered, s, h=h, accuracy=4) + np.tanh(s) * lowered
            factorized.append((raised - phi(s) / np.cosh(s)) / np.cosh(s))

        direct = TPZSolitonSpectrum.ApplyD(phi, z, dphi, d2phi)

        return float(np.max(np.abs(direct - np.array(factorized))))

    #   ******************
    #   SOLVABLE OPERATOR H
    #   ******************
    @staticmethod
    def ScatteringState(k: float, z):
        """
        psi_k(z) = -(ik + tanh z) exp(-ikz) and its second derivative
        """
        z = np.asarray(z, dtype=float)
        t, s = np.tanh(z), 1 / np.cosh(z)**2
        phase = np.exp(-1j * k * z)

        psi = -(1j * k + t) * phase
        d2psi = phase * (2j * k * s + k**2 * (1j * k + t) + 2 * s * t)

        return psi, d2psi

    @staticmethod
    def HEigenCheck(k: float, z=None) -> tuple[float, float]:
        """
        Sup residuals of H psi_k = k^2 psi_k and of H psi0 = -psi0, psi0 = sech/sqrt(2)
        """
        z = np.linspace(-10., 10., 2001) if z is None else np.asarray(z, dtype=float)
        s = 1 / np.cosh(z)**2

        psi, d2psi = TPZSolitonSpectrum.ScatteringState(k, z)
        scattering = -d2psi - 2 * s * psi - k**2 * psi

        bound = 1 / (np.sqrt(2) * np.cosh(z))
        d2bound = bound * (1 - 2 * s)
        boundResidual = -d2bound - 2 * s * bound + bound

        return float(np.max(np.abs(scattering))), float(np.max(np.abs(boundResidual)))

    @staticmethod
    def Orthogonality(k: float, truncation: float = None) -> float:
        """
        |int psi0 psi_k dz| over the window
        """
        truncation = TPZSolitonSpectrum.truncation if truncation is None else truncation
        tol = TPZSolitonSpectrum.quadTol

        def Product(z):
            return -(1j * k + np.tanh(z)) * np.exp(-1j * k * z) / (np.sqrt(2) * np.cosh(z))

        real = TPZNumerics.Quad(lambda z: Product(z).real, -truncation, truncation, tol=tol, breakpoints=(0.,))
        imaginary = TPZNumerics.Quad(lambda z: Product(z).imag, -truncation, truncation, tol=tol, breakpoints=(0.,))

        return float(abs(real + 1j * imaginary))
