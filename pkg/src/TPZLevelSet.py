"""
Class to check level set hypersurfaces for minimality,
separable ones first
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from functools import lru_cache
from itertools import combinations
from typing import Callable, ClassVar

import numpy as np

from src.TPZErrors import (TPZNoBracketError, TPZNoRealProfileError, TPZNotARealSurfaceError, TPZNotFoundError,
                           TPZOffSurfaceError, TPZRangeError, TPZSingularPointError)
from src.TPZGridFunction import TPZGridFunction
from src.TPZLevelSetSpec import TPZLevelSetSpec
from src.TPZNumerics import TPZNumerics
from src.TPZWeierstrassP import TPZWeierstrassP

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZLevelSet:
    surfaceTol: ClassVar[float] = 1e-8
    gradientFloor: ClassVar[float] = 1e-14
    maxAttempts: ClassVar[int] = 200

    names: ClassVar[tuple] = ('catenoid', 'helicoid', 'scherk1', 'scherk2', 'quadric4', 'clifford_cone', 'weier4',
                              'scherk1_variant_mirror', 'scherk1_variant_scaled')

    #   ******************
    #      RESIDUALS
    #   ******************
    @staticmethod
    def LevelsetResidual(gradient: Callable, hessian: Callable, x) -> float:
        """
        ((grad u)^2 lap u - u_i u_j u_ij) / |grad u|^3 at x. It is the mean curvature
        of the level set up to a constant, so it is scale invariant up to the sign of the scale.
        """
        g = np.asarray(gradient(x), dtype=float)
        h = np.asarray(hessian(x), dtype=float)

        norm = np.linalg.norm(g)
        if norm < TPZLevelSet.gradientFloor:
            raise TPZSingularPointError(f'vanishing gradient at {x}')

        return float((norm**2 * np.trace(h) - g @ h @ g) / norm**3)

    @staticmethod
    def SeparableResidual(spec: TPZLevelSetSpec, x) -> float:
        """
        sum_(i != j) f_i'' f_j'^2 / (sum f_j'^2)^(3/2) at a point of the level set
        """
        defect = spec.Value(x)
        if abs(defect) > TPZLevelSet.surfaceTol:
            raise TPZOffSurfaceError(f'{spec.fName}: point is off the surface by {defect:.3g}', defect)

        slopes = spec.Gradient(x)**2
        curvatures = np.diag(spec.Hessian(x))
        total = np.sum(slopes)

        if np.sqrt(total) < TPZLevelSet.gradientFloor:
            raise TPZSingularPointError(f'{spec.fName}: vanishing gradient at {x}')

        return float(np.sum(curvatures * (total - slopes)) / total**1.5)

    @staticmethod
    def SampleSurface(spec: TPZLevelSetSpec, count: int, rng: np.random.Generator) -> np.ndarray:
        """
        Points of the level set: all but the last coordinate uniform in their domains,
        the last one solved by root finding. Draws without a root are rejected.
        """
        *free, (lower, upper) = spec.fDomains
        last = spec.fComponents[-1][0]

        points = []
        for _ in range(TPZLevelSet.maxAttempts * count):
            if len(points) == count:
                break

            head = np.array([rng.uniform(a, b) for a, b in free])
            target = -sum(f(xi) for (f, _, _), xi in zip(spec.fComponents, head))

            try:
                root = TPZNumerics.FindRoot(lambda t: last(t) - target, lower, upper, tol=1e-14)
            except TPZNoBracketError:
                continue

            points.append(np.append(head, root))

        if len(points) < count:
            raise TPZNotFoundError(f'{spec.fName}: only {len(points)} of {count} surface points found')

        return np.array(points)

    #   ******************
    #       CATALOG
    #   ******************
    @staticmethod
    def Catalog(name: str) -> TPZLevelSetSpec:
        """
        Separable form of a known minimal hypersurface, with analytic derivatives.

        Inputs:
        ------
        name : str
            One of TPZLevelSet.names.
        """
        if name == 'catenoid':
            components = [(lambda x: x**2, lambda x: 2 * x, lambda x: 2. + 0 * x),
                          (lambda y: y**2, lambda y: 2 * y, lambda y: 2. + 0 * y),
                          (lambda z: -np.cosh(z)**2, lambda z: -np.sinh(2 * z), lambda z: -2 * np.cosh(2 * z))]
            return TPZLevelSetSpec(name, components, [(0.8, 2.), (0.8, 2.), (0., 3.)])

        if name == 'helicoid':
            components = [(lambda x: -np.log(x), lambda x: -1 / x, lambda x: 1 / x**2),
                          (lambda y: np.log(y), lambda y: 1 / y, lambda y: -1 / y**2),
                          (lambda z: -np.log(np.tan(z)), lambda z: -2 / np.sin(2 * z), lambda z: 4 * np.cos(2 * z) / np.sin(2 * z)**2)]
            triples = [(0., 1., 0., 2.), (0., 0., 1., 2.), (2., 1., 1., 2.)]
            return TPZLevelSetSpec(name, components, [(0.5, 2.), (0.5, 2.), (0.05, np.pi / 2 - 0.05)], triples)

        if name in ('scherk1', 'scherk1_variant_mirror', 'scherk1_variant_scaled'):
            sign = -1. if name == 'scherk1_variant_mirror' else 1.
            scale = 0.5 if name == 'scherk1_variant_scaled' else 1.
            components = [(lambda x: -sign * np.log(np.cos(scale * x)) / scale,
                           lambda x: sign * np.tan(scale * x),
                           lambda x: sign * scale / np.cos(scale * x)**2),
                          (lambda y: sign * np.log(np.cos(scale * y)) / scale,
                           lambda y: -sign * np.tan(scale * y),
                           lambda y: -sign * scale / np.cos(scale * y)**2),
                          (lambda z: sign * z, lambda z: sign + 0 * z, lambda z: 0. * z)]
            kappa = 2 * scale
            growing, decaying = (-1., 1., 0., kappa), (-1., 0., 1., kappa)
            # the mirror swaps the roles of b and c
            triples = [growing, decaying, (1., 0., 0., kappa)] if sign > 0 else [decaying, growing, (1., 0., 0., kappa)]
            limit = 1.2 / scale
            return TPZLevelSetSpec(name, components, [(-limit, limit), (-limit, limit), (-3. / scale, 3. / scale)], triples)

        if name == 'scherk2':
            components = [(lambda x: np.log(np.sinh(x)), lambda x: 1 / np.tanh(x), lambda x: -1 / np.sinh(x)**2),
                          (lambda y: np.log(np.sinh(y)), lambda y: 1 / np.tanh(y), lambda y: -1 / np.sinh(y)**2),
                          (lambda z: -np.log(np.sin(z)), lambda z: -1 / np.tan(z), lambda z: 1 / np.sin(z)**2)]
            triples = [(1., 0., 1., 2.), (1., 0., 1., 2.), (-1., 1., 0., 2.)]
            return TPZLevelSetSpec(name, components, [(0.2, 0.8), (0.2, 0.8), (0.01, np.pi / 2)], triples)

        if name == 'quadric4':
            decreasing = (lambda x: -np.log(x), lambda x: -1 / x, lambda x: 1 / x**2)
            increasing = (lambda x: np.log(x), lambda x: 1 / x, lambda x: -1 / x**2)
            triples = [(0., 1., 0., 2.), (0., 1., 0., 2.), (0., 0., 1., 2.), (0., 0., 1., 2.)]
            return TPZLevelSetSpec(name, [decreasing, decreasing, increasing, increasing], [(0.5, 2.)] * 3 + [(0.1, 10.)], triples)

        if name == 'clifford_cone':
            return TPZLevelSet.ConeSpec([1., 1., -1., -1.], name=name)

        if name == 'weier4':
            return TPZLevelSet.WeierstrassSpec()

        raise KeyError(f'unknown catalog surface {name!r}; known: {", ".join(TPZLevelSet.names)}')

    @staticmethod
    @lru_cache(maxsize=1)
    def WeierstrassTable() -> TPZWeierstrassP:
        return TPZWeierstrassP()

    @staticmethod
    def WeierstrassSpec() -> TPZLevelSetSpec:
        """
        P(x1) P(x2) = P(x3) P(x4) written as sum sigma_i ln P(x_i) = 0
        """
        wp = TPZLevelSet.WeierstrassTable()
        omega = wp.fHalfPeriod

        def Component(sigma):
            return (lambda x: sigma * np.log(wp.Evaluate(x)),
                    lambda x: sigma * wp.Derivative(x) / wp.Evaluate(x),
                    lambda x: 2 * sigma * (wp.Evaluate(x) + 1 / wp.Evaluate(x)))

        components = [Component(1.), Component(1.), Component(-1.), Component(-1.)]
        triples = [(0., 4., -4., 1.), (0., 4., -4., 1.), (0., -4., 4., 1.), (0., -4., 4., 1.)]
        domains = [(0.3, omega), (0.3, omega), (0.6, omega), (0.05, omega)]

        return TPZLevelSetSpec('weier4', components, domains, triples)

    #   ******************
    #  EXPONENTIAL FAMILY
    #   ******************
    @staticmethod
    def PairingHolds(alphas, betas, tol: float = 1e-12) -> bool:
        """
        alpha_L alpha_K = beta_L' beta_K' for every split of the four indices into two pairs
        """
        indices = set(range(4))
        for pair in combinations(range(4), 2):
            complement = sorted(indices - set(pair))
            if abs(alphas[pair[0]] * alphas[pair[1]] - betas[complement[0]] * betas[complement[1]]) > tol:
                return False

        return True

    @staticmethod
    def VerifyExponentialFamily(alphas, betas, kappa: float, ranges=None, count: int = 100,
                                rng: np.random.Generator = None) -> tuple[bool, float]:
        """
        Four dimensional separable family f_L'^2 = J_L(f_L), J_L(v) = alpha_L e^(kappa v) + beta_L e^(-kappa v).
        The residual is evaluated in the variables v_L = f_L(x_L), where f_L'' = J_L'(v_L)/2.

        Inputs:
        ------
        alphas, betas : sequences of 4 reals
        kappa : float
        ranges : list of 4 intervals
            Sampling range of each v_L; the fourth is solved from sum v = 0 and
            draws outside its range are rejected.

        Returns:
        --------
        tuple
            (pairing condition holds, largest normalized residual)
        """
        alphas, betas = np.asarray(alphas, dtype=float), np.asarray(betas, dtype=float)
        ranges = [(0.1, 1.), (0.1, 1.), (-1., -0.1), (-2., -0.05)] if ranges is None else ranges
        rng = np.random.default_rng(0) if rng is None else rng

        def J(v):
            return alphas * np.exp(kappa * v) + betas * np.exp(-kappa * v)

        def DJ(v):
            return kappa * (alphas * np.exp(kappa * v) - betas * np.exp(-kappa * v))

        for i, (a, b) in enumerate(ranges):
            grid = np.linspace(a, b, 201)
            values = alphas[i] * np.exp(kappa * grid) + betas[i] * np.exp(-kappa * grid)
            if np.min(values) < 0:
                raise TPZNotARealSurfaceError(f'J_{i + 1} is negative on [{a}, {b}]')

        worst, accepted = 0., 0
        for _ in range(TPZLevelSet.maxAttempts * count):
            if accepted == count:
                break

            v = np.array([rng.uniform(a, b) for a, b in ranges[:3]])
            v = np.append(v, -np.sum(v))
            if not ranges[3][0] <= v[3] <= ranges[3][1]:
                continue

            slopes, curvatures = J(v), DJ(v) / 2
            total = np.sum(slopes)
            worst = max(worst, abs(np.sum(curvatures * (total - slopes))) / total**1.5)
            accepted += 1

        if accepted < count:
            raise TPZNotFoundError(f'only {accepted} of {count} samples fell in the sampling ranges')

        pairing = TPZLevelSet.PairingHolds(alphas, betas)
        logger.info('exponential family: pairing %s, max residual %.3g', pairing, worst)

        return pairing, float(worst)

    #   ******************
    #     LINEAR CONES
    #   ******************
    @staticmethod
    def LinearConeCoefficients(n: int, r: int) -> list[float]:
        """
        r copies of (n-r-1) and (n-r) copies of -(r-1): the coefficients b_i of the
        minimal quadratic cones sum b_i x_i^2 = 0. The sign flipped set works as well.
        """
        if n < 3 or not 1 <= r <= n / 2:
            raise TPZRangeError(f'need n >= 3 and 1 <= r <= n/2, got n={n}, r={r}')

        return [float(n - r - 1)] * r + [float(-(r - 1))] * (n - r)

    @staticmethod
    def ConeSpec(coefficients, name: str = 'cone') -> TPZLevelSetSpec:
        """
        sum b_i x_i^2 = 0. The last coefficient must be nonzero.
        """
        components, domains = [], []
        for b in coefficients:
            components.append((lambda x, b=b: b * x**2, lambda x, b=b: 2 * b * x, lambda x, b=b: 2 * b + 0 * x))
            domains.append((0.5, 1.5))

        domains[-1] = (0., 3. * np.sqrt(len(coefficients)))

        return TPZLevelSetSpec(name, components, domains)

    #   ******************
    #  ROTATIONAL PROFILES
    #   ******************
    @staticmethod
    def RotationalTrajectory(n: int, c: float, b: float, zmax: float, steps: int = 4000) -> tuple[np.ndarray, np.ndarray]:
        """
        Profile r(z) of the rotational solutions r'^2 + 1 + C(-b^2 r^2/4)^(n-2) = 0, i.e.
        r'^2 = K r^(2(n-2)) - 1 with K = -C(-b^2/4)^(n-2), started at the neck
        r0 = K^(-1/(2(n-2))) with r'(0) = 0 and integrated on [0, zmax].

        Returns:
        --------
        tuple
            (z, states) with states[:, 0] = r and states[:, 1] = r'
        """
        if n < 3:
            raise TPZRangeError(f'rotational reduction needs n >= 3, got {n}')

        k = -c * (-b**2 / 4)**(n - 2)
        if not k > 0:
            raise TPZNoRealProfileError(f'r\'^2 = {k:.6g} r^{2 * (n - 2)} - 1 is negative for every r')

        neck = k**(-1 / (2 * (n - 2)))

        def Field(z, y):
            return np.array([y[1], (n - 2) * k * y[0]**(2 * n - 5)])

        states = TPZNumerics.Rk4Integrate(Field, [neck, 0.], 0., zmax, steps)

        return np.linspace(0., zmax, steps + 1), states

    @staticmethod
    def RotationalProfile(n: int, c: float, b: float, zmax: float, steps: int = 4000) -> TPZGridFunction:
        """
        r(z) on [-zmax, zmax], even about the neck
        """
        _, states = TPZLevelSet.RotationalTrajectory(n, c, b, zmax, steps)
        radius = states[:, 0]

        return TPZGridFunction(np.concatenate([radius[:0:-1], radius]), x0=-zmax, dx=zmax / steps)

    @staticmethod
    def ProfileDefect(n: int, c: float, b: float, zmax: float, steps: int = 4000) -> float:
        """
        Largest |r'^2 + 1 + C(-b^2 r^2/4)^(n-2)| along the integrated profile
        """
        _, states = TPZLevelSet.RotationalTrajectory(n, c, b, zmax, steps)
        r, dr = states[:, 0], states[:, 1]

        return float(np.max(np.abs(dr**2 + 1 + c * (-b**2 * r**2 / 4)**(n - 2))))
