"""
Method of lines evolution of the axially symmetric membrane in the physical gauge

    zddot = (z' r^2)',   rddot = (r^2 r')' - (r'^2 + z'^2) r,

with the initial data builders and the search for a finite time singularity.
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np

from src.TPZErrors import TPZBlowupError, TPZConstraintLoss, TPZRangeError
from src.TPZMembraneState import TPZMembraneState
from src.TPZNumerics import TPZNumerics
from src.TPZTrajectory import TPZTrajectory

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZPhysicalGauge:
    rFloor: ClassVar[float] = 1e-6
    slopeCeiling: ClassVar[float] = 1e6
    driftTol: ClassVar[float] = 1e-4
    rootTol: ClassVar[float] = 1e-14

    #   ******************
    #     INITIAL DATA
    #   ******************
    @staticmethod
    def StaticCatenoid(npoints: int = 101, zMax: float = 1.5, eps: float = 1.) -> TPZMembraneState:
        """
        r = cosh z, z in [-zMax, zMax], at rest and pinned at the ends. The parameter
        makes r^2 |x'| = eps, so phi(z) = (z/2 + sinh(2z)/4)/eps is inverted per grid point.
        """
        Phi = lambda s: (s / 2 + np.sinh(2 * s) / 4) / eps
        phi = np.linspace(Phi(-zMax), Phi(zMax), npoints)

        lower, upper = -zMax - 0.5, zMax + 0.5
        z = np.array([TPZNumerics.FindRoot(lambda s, p=p: Phi(s) - p, lower, upper, tol=TPZPhysicalGauge.rootTol) for p in phi])
        rest = np.zeros(npoints)

        logger.debug('static catenoid on %d points, z in [%g, %g]', npoints, -zMax, zMax)

        return TPZMembraneState(phi, np.cosh(z), z, rest, rest, eps, periodic=False)

    @staticmethod
    def CollapsingCircle(npoints: int = 32, radius: float = 1.) -> TPZMembraneState:
        """
        Cylinder r = radius, z = phi/radius at rest with eps = 1. The exact
        evolution is r = radius cos(t/radius).
        """
        phi = 2 * np.pi * np.arange(npoints) / npoints
        rest = np.zeros(npoints)

        return TPZMembraneState(phi, np.full(npoints, radius), phi / radius, rest, rest, 1., zSlope=1 / radius)

    @staticmethod
    def Torus(npoints: int = 64, major: float = 2., minor: float = 0.5, bump: float = 0.) -> TPZMembraneState:
        """
        Closed profile r = major + minor cos s + bump cos 2s, z = minor sin s at rest,
        reparametrized so that r |x'| is constant. The constant is eps.
        """
        if major - minor - abs(bump) <= 0:
            raise TPZRangeError(f'profile reaches the axis: major={major}, minor={minor}, bump={bump}')

        Radius = lambda s: major + minor * np.cos(s) + bump * np.cos(2 * s)
        Speed = lambda s: np.hypot(minor * np.sin(s) + 2 * bump * np.sin(2 * s), minor * np.cos(s))
        Density = lambda s: Radius(s) * Speed(s)
        Swept = lambda s: TPZNumerics.Quad(Density, 0., s, tol=1e-13)

        eps = Swept(2 * np.pi) / (2 * np.pi)
        phi = 2 * np.pi * np.arange(npoints) / npoints
        s = np.array([TPZNumerics.FindRoot(lambda x, p=p: Swept(x) - eps * p, -0.5, 2 * np.pi, tol=TPZPhysicalGauge.rootTol)
                      for p in phi])
        rest = np.zeros(npoints)

        logger.info('torus data on %d points: eps = %.12g', npoints, eps)

        return TPZMembraneState(phi, Radius(s), minor * np.sin(s), rest, rest, eps)

    #   ******************
    #       EVOLUTION
    #   ******************
    @staticmethod
    def Acceleration(template: TPZMembraneState, r: np.ndarray, z: np.ndarray) -> tuple:
        dr = template.Derivative(r)
        dz = template.Derivative(z, slope=template.fZSlope)

        rAcc = template.Derivative(r**2 * dr) - (dr**2 + dz**2) * r
        zAcc = template.Derivative(dz * r**2)

        if not template.fPeriodic:
            rAcc[[0, -1]] = 0.
            zAcc[[0, -1]] = 0.

        return rAcc, zAcc

    @staticmethod
    def Evolve(state: TPZMembraneState, dt: float, steps: int, record: int = 1) -> TPZTrajectory:
        """
        RK4 march of the packed fields. Open grids keep their ends pinned.

        Inputs:
        ------
        state : TPZMembraneState
            Initial data.
        dt : float
            Time step.
        steps : int
            Number of steps.
        record : int
            A snapshot is kept every record steps.

        Returns:
        --------
        TPZTrajectory whose monitor is the largest constraint defect. A radius below
        rFloor, a non finite field or a slope beyond slopeCeiling stops the march and
        is stored as fBlowup. Drift beyond driftTol*eps^2 is recorded as a constraint loss.
        """
        trajectory = TPZTrajectory()
        trajectory.Append(0., state, state.MaxDefect())

        def Field(t, y):
            rAcc, zAcc = TPZPhysicalGauge.Acceleration(state, y[0], y[1])
            return np.array([y[2], y[3], rAcc, zAcc])

        tolerance = TPZPhysicalGauge.driftTol * state.fEps**2
        y = state.Pack()

        for step in range(1, steps + 1):
            t = step * dt
            y = TPZNumerics.Rk4Step(Field, t - dt, y, dt)

            breakdown = TPZPhysicalGauge._Breakdown(state, y)
            if breakdown:
                location = float(state.fPhi[np.argmin(y[0])]) if np.all(np.isfinite(y[0])) else None
                trajectory.fBlowup = TPZBlowupError(f'{breakdown} at t={t:.6g}', lastTime=t - dt, location=location)
                logger.warning('membrane evolution stopped: %s at t=%.6g, phi=%s', breakdown, t, location)
                break

            current = state.Unpack(y)
            defect = current.MaxDefect()

            if defect > tolerance:
                if not trajectory.fLosses:
                    logger.warning('constraint drift %.3g beyond %.3g at t=%.6g', defect, tolerance, t)
                trajectory.fLosses.append(TPZConstraintLoss(step, t, defect, tolerance))

            if step % record == 0:
                trajectory.Append(t, current, defect)

        logger.info('membrane evolution: %d snapshots up to t=%.6g, max defect %.3g',
                    len(trajectory), trajectory.fTimes[-1], np.max(trajectory.Monitor()))

        return trajectory

    @staticmethod
    def _Breakdown(template: TPZMembraneState, y: np.ndarray) -> str:
        if not np.all(np.isfinite(y)):
            return 'non finite state'

        if np.min(y[0]) < TPZPhysicalGauge.rFloor:
            return f'radius {np.min(y[0]):.3g} below the floor'

        dr = template.Derivative(y[0])
        dz = template.Derivative(y[1], slope=template.fZSlope)
        if max(np.max(np.abs(dr)), np.max(np.abs(dz))) > TPZPhysicalGauge.slopeCeiling:
            return 'slope beyond the ceiling'

        return ''

    #   ******************
    #   SINGULARITY SEARCH
    #   ******************
    @staticmethod
    def SingularitySearch(trajectory: TPZTrajectory) -> tuple:
        """
        Acceleration of I(t) = int r dphi along a trajectory with uniformly spaced snapshots.

        Returns:
        --------
        (times, I, discrete second derivative of I at the interior snapshots,
        extrapolated time where I vanishes, or None unless I is decreasing)
        """
        times = trajectory.Times()
        integrals = np.array([state.RadiusIntegral() for state in trajectory.fStates])

        if len(times) < 3:
            return times, integrals, np.array([]), None

        dt = times[1] - times[0]
        accelerations = (integrals[2:] - 2 * integrals[1:-1] + integrals[:-2]) / dt**2

        tail = integrals[len(integrals) // 2:]
        blowupTime = None

        if np.all(np.diff(tail) < 0):
            coefficients = np.polyfit(times, integrals, 2)
            roots = np.roots(coefficients)
            ahead = [root.real for root in roots if abs(root.imag) < 1e-12 and root.real > times[-1]]

            if ahead:
                blowupTime = float(min(ahead))
            else:
                slope = (integrals[-1] - integrals[-2]) / dt
                blowupTime = float(times[-1] - integrals[-1] / slope)

            logger.info('int r dphi decreasing: extrapolated zero at t=%.6g', blowupTime)

        if np.all(accelerations < 0):
            logger.info('int r dphi decelerates at every snapshot')
        else:
            logger.info('int r dphi acceleration reaches %.3g', np.max(accelerations))

        return times, integrals, accelerations, blowupTime
