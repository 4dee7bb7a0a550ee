"""
Solutions of the radius equation read in the physical gauge
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging

import numpy as np
from scipy.integrate import cumulative_simpson, trapezoid
from scipy.interpolate import CubicSpline

from src.TPZErrors import TPZRangeError
from src.TPZMembraneState import TPZMembraneState
from src.TPZPhysicalGauge import TPZPhysicalGauge
from src.TPZRHamiltonian import TPZRHamiltonian
from src.TPZRState import TPZRState
from src.TPZTrajectory import TPZTrajectory

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZGaugeMap:
    """
    A radius equation trajectory with its zeta describes the surface
    t = tau + zeta/2, z = tau - zeta/2, r = R(tau, phi). Cutting it at a fixed t and
    relabelling the cut by its swept area gives the physical gauge profile with eps = 1.
    """
    #   ******************
    #     INITIAL DATA
    #   ******************
    @staticmethod
    def RippledPlane(npoints: int = 81, amplitude: float = 0.05, center: float = 2.5, width: float = 0.25,
                     extent: tuple = (1., 4.)) -> TPZRState:
        """
        Plane z = 0 at rest, R = 2 sqrt(phi), with a gaussian ripple of R on an open
        grid. At tau = 0 the sheet is flat and its points move along z.
        """
        phi = np.linspace(extent[0], extent[1], npoints)
        R = 2 * np.sqrt(phi) + amplitude * np.exp(-((phi - center) / width)**2 / 2)
        state = TPZRState(R, np.zeros(npoints), extent[1] - extent[0], periodic=False, origin=extent[0])

        if np.min(state.Derivative(R)) <= 0:
            raise TPZRangeError(f'ripple amplitude {amplitude} folds the sheet over the transverse plane')

        return state

    #   ******************
    #    PHYSICAL SLICES
    #   ******************
    @staticmethod
    def PhysicalSlice(trajectory: TPZTrajectory, zeta: np.ndarray, time: float, origin: float = 0.) -> tuple:
        """
        Cut of the surface at physical time t, one point per phi.

        Inputs:
        ------
        trajectory : TPZTrajectory
            Radius equation snapshots, uniformly spaced.
        zeta : np.ndarray
            Its reconstruction, shape (snapshots, points).
        time : float
            Physical time of the cut. Every phi line must reach it.
        origin : float
            Area label of the first grid point.

        Returns:
        --------
        (area label v, r, z, rdot, zdot) on the phi grid. The velocity is the
        normal one, so the tuple satisfies the physical gauge constraints with eps = 1.
        """
        first = trajectory.fStates[0]
        tau = trajectory.Times()[:, None]
        R = np.array([state.fR for state in trajectory.fStates])
        p = np.array([state.fP for state in trajectory.fStates])
        rate = 0.5 * (p**2 + R**2 * first.Derivative(R)**2)

        # t grows along every phi line since dt/dtau = 1 + zetadot/2 >= 1
        t = tau + zeta / 2
        z = tau - zeta / 2

        if not np.max(t[0]) <= time <= np.min(t[-1]):
            raise TPZRangeError(f'physical time {time} outside the covered window [{np.max(t[0]):.6g}, {np.min(t[-1]):.6g}]')

        cut = np.array([CubicSpline(t[:, j], np.stack([R[:, j], z[:, j], p[:, j], rate[:, j]], axis=-1))(time)
                        for j in range(t.shape[1])])
        r, z, rDot, zetaDot = cut.T

        lapse = 1 + zetaDot / 2
        uR, uZ = rDot / lapse, (1 - zetaDot / 2) / lapse

        dr, dz = first.Derivative(r), first.Derivative(z)
        along = (uR * dr + uZ * dz) / (dr**2 + dz**2)
        rDot, zDot = uR - along * dr, uZ - along * dz

        speed = np.hypot(rDot, zDot)
        if np.max(speed) >= 1:
            raise TPZRangeError(f'cut at t={time} reaches the speed of light')

        density = r * np.hypot(dr, dz) / np.sqrt(1 - speed**2)
        v = origin + cumulative_simpson(density, dx=first.Spacing(), initial=0.)

        return v, r, z, rDot, zDot

    @staticmethod
    def MembraneState(cut: tuple) -> TPZMembraneState:
        """
        Open physical gauge state resampled from a cut onto a uniform area grid
        """
        v, *fields = cut

        if not np.all(np.diff(v) > 0):
            raise TPZRangeError('area label of the cut is not increasing')

        grid = np.linspace(v[0], v[-1], len(v))
        r, z, rDot, zDot = CubicSpline(v, np.array(fields), axis=1)(grid)

        return TPZMembraneState(grid, r, z, rDot, zDot, 1., periodic=False)

    @staticmethod
    def ProfileDistance(cut: tuple, state: TPZMembraneState) -> float:
        """
        L2 distance in v between the (r, z) of a cut and of a physical gauge state
        """
        v, r, z = cut[:3]
        physical = CubicSpline(state.fPhi, np.array([state.fR, state.fZ]), axis=1)(v)

        return float(np.sqrt(trapezoid((r - physical[0])**2 + (z - physical[1])**2, v)))

    #   ******************
    #       COMPARISON
    #   ******************
    @staticmethod
    def CrossGauge(state: TPZRState, duration: float, dt: float, physicalDt: float) -> tuple:
        """
        Evolves state with the radius equation, cuts the result at the first
        physical time t0 every phi line reaches, evolves that cut in the physical
        gauge for duration and compares both at t0 + duration.

        Returns:
        --------
        (L2 distance at t0 + duration, t0, physical gauge trajectory)
        """
        physicalSteps = int(round(duration / physicalDt))
        if physicalSteps < 1 or not np.isclose(physicalSteps * physicalDt, duration):
            raise TPZRangeError(f'duration {duration} is not a multiple of the physical step {physicalDt}')

        base = cumulative_simpson(state.fP * state.Derivative(state.fR), dx=state.Spacing(), initial=0.)
        start = float(np.max(base)) / 2
        # t >= tau + zeta(0, phi)/2 on every line, four extra snapshots keep the cut inside
        steps = int(np.ceil((start + duration - np.min(base) / 2) / dt)) + 4

        trajectory = TPZRHamiltonian.Evolve(state, dt, steps)
        if trajectory.BlewUp():
            raise trajectory.fBlowup

        zeta, _ = TPZRHamiltonian.ReconstructZeta(trajectory)

        initial = TPZGaugeMap.MembraneState(TPZGaugeMap.PhysicalSlice(trajectory, zeta, start))
        physical = TPZPhysicalGauge.Evolve(initial, physicalDt, physicalSteps)
        if physical.BlewUp():
            raise physical.fBlowup

        distance = TPZGaugeMap.ProfileDistance(TPZGaugeMap.PhysicalSlice(trajectory, zeta, start + duration), physical.Final())

        logger.info('cross gauge on %d points: t0 = %.6g, L2 distance %.3g after %.6g', len(state.fR), start, distance, duration)

        return distance, start, physical
