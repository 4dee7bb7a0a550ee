"""
Class to evolve the radius equation and rebuild zeta from it
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np
from scipy.integrate import cumulative_simpson

from src.TPZDifferentiation import TPZDifferentiation
from src.TPZErrors import TPZBlowupError, TPZError
from src.TPZGridFunction import TPZGridFunction
from src.TPZNumerics import TPZNumerics
from src.TPZRState import TPZRState
from src.TPZSolitonSpectrum import TPZSolitonSpectrum
from src.TPZTrajectory import TPZTrajectory

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZRHamiltonian:
    rFloor: ClassVar[float] = 1e-6
    _w1: ClassVar[float] = 1 / (2 - 2**(1 / 3))
    _w0: ClassVar[float] = -2**(1 / 3) / (2 - 2**(1 / 3))
    # fourth order symmetric composition of the leapfrog (drift, kick) pair
    drifts: ClassVar[tuple] = (_w1 / 2, (_w0 + _w1) / 2, (_w0 + _w1) / 2, _w1 / 2)
    kicks: ClassVar[tuple] = (_w1, _w0, _w1)

    #   ******************
    #     RADIUS EQUATION
    #   ******************
    @staticmethod
    def Force(state: TPZRState, R: np.ndarray) -> np.ndarray:
        """
        R (R R')' in the form (R^2 R')' - R R'^2, which is minus the gradient of the
        discrete H. Open grids keep their ends at their initial velocity.
        """
        dR = state.Derivative(R)
        force = state.Derivative(R**2 * dR) - R * dR**2

        if not state.fPeriodic:
            force[[0, -1]] = 0.

        return force

    @staticmethod
    def Evolve(state: TPZRState, dt: float, steps: int, record: int = 1) -> TPZTrajectory:
        """
        Symplectic fourth order march. The monitor holds |H(t) - H(0)|.
        """
        trajectory = TPZTrajectory()
        energy = state.Energy()
        trajectory.Append(0., state, 0.)

        R, p = state.fR.copy(), state.fP.copy()

        for step in range(1, steps + 1):
            for drift, kick in zip(TPZRHamiltonian.drifts, TPZRHamiltonian.kicks):
                R += drift * dt * p
                p += kick * dt * TPZRHamiltonian.Force(state, R)
            R += TPZRHamiltonian.drifts[-1] * dt * p

            t = step * dt
            if not (np.all(np.isfinite(R)) and np.all(np.isfinite(p))) or np.min(R) < TPZRHamiltonian.rFloor:
                location = float(state.fPhi[np.nanargmin(R)]) if np.any(np.isfinite(R)) else None
                trajectory.fBlowup = TPZBlowupError(f'radius equation broke down at t={t:.6g}', lastTime=t - dt, location=location)
                logger.warning('radius equation stopped at t=%.6g, phi=%s', t, location)
                break

            if step % record == 0:
                current = state.Like(R, p)
                trajectory.Append(t, current, abs(current.Energy() - energy))

        logger.info('radius equation: %d snapshots, H = %.12g, drift %.3g', len(trajectory), energy, np.max(trajectory.Monitor()))

        return trajectory

    #   ******************
    #   ZETA RECONSTRUCTION
    #   ******************
    @staticmethod
    def ReconstructZeta(trajectory: TPZTrajectory) -> tuple:
        """
        Integrates zeta' = Rdot R' and zetadot = (Rdot^2 + R^2 R'^2)/2 over a trajectory
        with uniformly spaced snapshots, zeta(0, 0) = 0.

        Returns:
        --------
        (zeta of shape (snapshots, points), compatibility defect d/dt zeta' - d/dphi zetadot
        with fourth order time differences)
        """
        if len(trajectory) < 5:
            raise TPZError(f'zeta reconstruction needs at least 5 snapshots, got {len(trajectory)}')

        first = trajectory.fStates[0]
        R = np.array([state.fR for state in trajectory.fStates])
        p = np.array([state.fP for state in trajectory.fStates])
        dR = first.Derivative(R)

        slope = p * dR
        rate = 0.5 * (p**2 + R**2 * dR**2)

        times = trajectory.Times()
        dt = times[1] - times[0]
        if not np.allclose(np.diff(times), dt):
            raise TPZError('zeta reconstruction needs uniformly spaced snapshots')

        matrix = TPZDifferentiation.CachedMatrix(len(times), float(dt), 1, 4)
        defect = TPZDifferentiation.ApplyAlongAxis(matrix, slope, 0) - first.Derivative(rate)

        base = cumulative_simpson(slope[0], dx=first.Spacing(), initial=0.)
        zeta = base + cumulative_simpson(rate, dx=dt, axis=0, initial=0.)

        logger.debug('zeta reconstruction: max compatibility defect %.3g', np.max(np.abs(defect)))

        return zeta, defect

    #   ******************
    #   LINEARIZED CATENOID
    #   ******************
    @staticmethod
    def LinearizedOperator(z) -> np.ndarray:
        """
        Fourth order matrix of D = -sech^2 (d^2/dz^2 - 2 tanh d/dz + 1) on a uniform grid
        """
        z = np.asarray(z, dtype=float)
        n, h = len(z), float(z[1] - z[0])
        first = TPZDifferentiation.CachedMatrix(n, h, 1, 4)
        second = TPZDifferentiation.CachedMatrix(n, h, 2, 4)

        inner = second - 2 * np.tanh(z)[:, None] * first + np.eye(n)

        return -inner / np.cosh(z)[:, None]**2

    @staticmethod
    def EvolveLinearized(eps0: TPZGridFunction, dt: float, steps: int, velocity=None) -> np.ndarray:
        """
        RK4 solution of epsddot + D eps = 0 with the end values moving at their initial
        velocity. Returns eps at every step, shape (steps + 1, points).
        """
        z = eps0.Abscissa()
        operator = TPZRHamiltonian.LinearizedOperator(z)
        velocity = np.zeros_like(z) if velocity is None else np.asarray(velocity, dtype=float)

        def Field(t, y):
            acceleration = -operator @ y[0]
            acceleration[[0, -1]] = 0.
            return np.array([y[1], acceleration])

        trajectory = TPZNumerics.Rk4Integrate(Field, np.array([eps0.fSamples, velocity]), 0., dt * steps, steps)

        return trajectory[:, 0]

    @staticmethod
    def GroundMode(truncation: float = 6., npoints: int = 601) -> tuple:
        """
        Unstable mode sqrt(cosh z) g(sinh z) of D built from the ground state g of the
        conjugated operator, scaled to unit maximum.

        Returns:
        --------
        (eigenvalue, TPZGridFunction on [-truncation, truncation])
        """
        ground = TPZSolitonSpectrum.GroundState()
        z = np.linspace(-truncation, truncation, npoints)

        samples = np.sqrt(np.cosh(z)) * ground.fEigenfunction.Evaluate(np.sinh(z))
        samples /= samples[npoints // 2]
        samples /= np.max(np.abs(samples))

        return ground.fEigenvalue, TPZGridFunction(samples, z[0], z[1] - z[0])

    @staticmethod
    def GrowthRate(times, amplitudes) -> float:
        """
        kappa of a cosh(kappa t) law fitted through the origin
        """
        times = np.asarray(times, dtype=float)
        ratio = np.maximum(np.asarray(amplitudes, dtype=float) / amplitudes[0], 1.)
        angles = np.arccosh(ratio)

        return float(times @ angles / (times @ times))
