import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.TPZErrors import TPZError, TPZRangeError
from src.TPZGaugeMap import TPZGaugeMap
from src.TPZGridFunction import TPZGridFunction
from src.TPZMembraneState import TPZMembraneState
from src.TPZPhysicalGauge import TPZPhysicalGauge
from src.TPZRHamiltonian import TPZRHamiltonian
from src.TPZRState import TPZRState


def RippledRing(npoints: int, amplitude: float = 0.1) -> TPZRState:
    phi = 2 * np.pi * np.arange(npoints) / npoints
    return TPZRState(1 + amplitude * np.cos(phi), np.zeros(npoints))


# physical gauge

def test_collapsing_circle_follows_cosine():
    state = TPZPhysicalGauge.CollapsingCircle(32, radius=1.)
    trajectory = TPZPhysicalGauge.Evolve(state, 0.01, 100)

    assert not trajectory.BlewUp()
    assert_allclose(trajectory.Times()[-1], 1.)
    assert_allclose(trajectory.Final().fR, np.cos(1.), atol=1e-8)
    assert_allclose(trajectory.Final().fZ, state.fPhi, atol=1e-12)


def test_collapsing_circle_of_other_radius():
    state = TPZPhysicalGauge.CollapsingCircle(16, radius=2.)
    trajectory = TPZPhysicalGauge.Evolve(state, 0.01, 100)

    assert state.MaxDefect() <= 1e-14
    assert_allclose(trajectory.Final().fR, 2 * np.cos(0.5), atol=1e-8)


def test_constraint_drift_is_fourth_order():
    state = TPZPhysicalGauge.CollapsingCircle(32)
    coarse = TPZPhysicalGauge.Evolve(state, 0.1, 12)
    fine = TPZPhysicalGauge.Evolve(state, 0.05, 24)

    assert not coarse.fLosses
    assert coarse.Monitor()[-1] / fine.Monitor()[-1] > 8


def test_collapsing_circle_blows_up():
    trajectory = TPZPhysicalGauge.Evolve(TPZPhysicalGauge.CollapsingCircle(32), 0.01, 200)

    assert trajectory.BlewUp()
    assert 'below the floor' in str(trajectory.fBlowup)
    assert abs(trajectory.fBlowup.fLastTime - np.pi / 2) < 0.01
    assert trajectory.fBlowup.fLocation is not None
    assert np.min(trajectory.Final().fR) > 0


def test_singularity_search_on_collapse():
    trajectory = TPZPhysicalGauge.Evolve(TPZPhysicalGauge.CollapsingCircle(32), 0.01, 200)
    times, integrals, accelerations, blowupTime = TPZPhysicalGauge.SingularitySearch(trajectory)

    assert_allclose(integrals, 2 * np.pi * np.cos(times), atol=1e-7)
    assert len(accelerations) == len(times) - 2
    assert np.all(accelerations < 0)
    assert blowupTime is not None
    assert blowupTime > times[-1]
    assert abs(blowupTime - np.pi / 2) < 0.05


def test_static_catenoid_data_satisfy_constraints():
    state = TPZPhysicalGauge.StaticCatenoid(201)

    assert_allclose(state.fR, np.cosh(state.fZ), atol=1e-13)
    assert state.MaxDefect() <= 1e-5
    assert not state.fPeriodic


def test_static_catenoid_acceleration_is_fourth_order():
    residuals = []
    for npoints in (101, 201):
        state = TPZPhysicalGauge.StaticCatenoid(npoints)
        rAcc, zAcc = TPZPhysicalGauge.Acceleration(state, state.fR, state.fZ)
        residuals.append(max(np.max(np.abs(rAcc[4:-4])), np.max(np.abs(zAcc[4:-4]))))

    assert residuals[1] <= 1e-4
    assert residuals[0] / residuals[1] > 10


def test_static_catenoid_stays_at_rest():
    state = TPZPhysicalGauge.StaticCatenoid(101)
    trajectory = TPZPhysicalGauge.Evolve(state, 0.002, 100)

    assert not trajectory.BlewUp()
    assert np.max(np.abs(trajectory.Final().fR - state.fR)) <= 1e-4
    assert_allclose(trajectory.Final().fR[[0, -1]], state.fR[[0, -1]])

    _, integrals, accelerations, _ = TPZPhysicalGauge.SingularitySearch(trajectory)
    assert np.max(np.abs(accelerations)) <= 1e-3 * integrals[0]


def test_torus_constant_is_the_swept_area_rate():
    state = TPZPhysicalGauge.Torus(32, major=2., minor=0.5)

    assert_allclose(state.fEps, 1., rtol=1e-10)
    assert_allclose(state.fR * np.hypot(*state.Slopes()), 1., atol=1e-8)


def test_torus_constraints_propagate():
    state = TPZPhysicalGauge.Torus(64, major=2., minor=0.5, bump=0.1)
    trajectory = TPZPhysicalGauge.Evolve(state, 0.005, 100, record=10)

    assert len(trajectory) == 11
    assert not trajectory.BlewUp()
    assert not trajectory.fLosses
    assert np.max(trajectory.Monitor()) <= 1e-6


def test_u_angles_lie_on_the_constraint_circle():
    state = TPZPhysicalGauge.Torus(64, bump=0.1)
    uPlus, uMinus, defect = state.UAngles()

    assert defect <= 1e-7
    # at rest the two points mirror each other
    assert_allclose(np.exp(1j * uMinus), np.exp(-1j * uPlus), atol=1e-12)


def test_bad_membrane_data():
    phi = np.linspace(0., 1., 8)
    ones, rest = np.ones(8), np.zeros(8)

    with pytest.raises(TPZRangeError):
        TPZMembraneState(phi, ones - 1., ones, rest, rest, 1.)
    with pytest.raises(TPZError):
        TPZMembraneState(phi, ones, ones, rest, rest, 0.)
    with pytest.raises(TPZError):
        TPZMembraneState(phi, ones[:5], ones, rest, rest, 1.)
    with pytest.raises(TPZRangeError):
        TPZPhysicalGauge.Torus(16, major=1., minor=0.6, bump=0.5)


def test_pack_round_trip_keeps_the_grid():
    state = TPZPhysicalGauge.CollapsingCircle(8)
    copy = state.Unpack(state.Pack())

    assert copy.fZSlope == state.fZSlope
    assert_allclose(copy.fZ, state.fZ)


# radius equation

def test_constant_radius_is_static():
    state = TPZRState(np.full(32, 1.5), np.zeros(32))
    trajectory = TPZRHamiltonian.Evolve(state, 0.01, 50, record=5)

    assert_allclose(trajectory.Final().fR, 1.5, atol=1e-12)
    assert_allclose(trajectory.Final().fP, 0., atol=1e-12)

    zeta, defect = TPZRHamiltonian.ReconstructZeta(trajectory)
    assert np.max(np.abs(zeta)) <= 1e-12
    assert np.max(np.abs(defect)) <= 1e-12


def test_energy_is_conserved():
    trajectory = TPZRHamiltonian.Evolve(RippledRing(256), 1e-3, 1000, record=50)

    assert not trajectory.BlewUp()
    assert len(trajectory) == 21
    assert np.max(trajectory.Monitor()) <= 1e-8


def test_energy_drift_is_fourth_order():
    state = RippledRing(32)
    coarse = TPZRHamiltonian.Evolve(state, 0.04, 50)
    fine = TPZRHamiltonian.Evolve(state, 0.02, 100)

    assert np.max(coarse.Monitor()) / np.max(fine.Monitor()) > 8


def test_momentum_vanishes_from_rest():
    trajectory = TPZRHamiltonian.Evolve(RippledRing(128, 0.1), 0.005, 200, record=20)

    assert max(abs(state.Momentum()) for state in trajectory.fStates) <= 1e-10


def test_zeta_compatibility_is_fourth_order():
    trajectory = TPZRHamiltonian.Evolve(RippledRing(64, 0.2), 0.005, 400, record=10)
    snapshots = len(trajectory)

    fine = TPZRHamiltonian.ReconstructZeta(trajectory)[1]
    coarse = TPZRHamiltonian.ReconstructZeta(Subsample(trajectory, 2))[1]

    assert snapshots == 41
    assert np.max(np.abs(fine)) <= 1e-4
    assert np.max(np.abs(coarse)) / np.max(np.abs(fine)) > 8


def test_zeta_starts_flat_from_rest():
    trajectory = TPZRHamiltonian.Evolve(RippledRing(64, 0.2), 0.005, 40, record=8)
    zeta, _ = TPZRHamiltonian.ReconstructZeta(trajectory)

    assert_allclose(zeta[0], 0., atol=1e-14)
    # zeta grows at the rate of the energy density
    assert np.all(zeta[-1] > 0)


def test_zeta_needs_enough_snapshots():
    trajectory = TPZRHamiltonian.Evolve(RippledRing(16), 0.01, 3)

    with pytest.raises(TPZError):
        TPZRHamiltonian.ReconstructZeta(trajectory)


def test_radius_must_be_positive():
    with pytest.raises(TPZRangeError):
        TPZRState(-np.ones(8), np.zeros(8))


def test_open_grid_spans_both_ends():
    state = TPZGaugeMap.RippledPlane(31, amplitude=0.)

    assert_allclose(state.fPhi[[0, -1]], [1., 4.])
    assert_allclose(state.Spacing(), 0.1)
    assert_allclose(state.Derivative(state.fR), 1 / np.sqrt(state.fPhi), atol=1e-3)


# cross gauge

def test_flat_plane_is_static_on_open_grid():
    state = TPZGaugeMap.RippledPlane(41, amplitude=0.)
    trajectory = TPZRHamiltonian.Evolve(state, 0.002, 50)

    assert_allclose(trajectory.Final().fR, state.fR, atol=1e-5)


def test_flat_plane_cut_is_at_rest():
    state = TPZGaugeMap.RippledPlane(41, amplitude=0.)
    trajectory = TPZRHamiltonian.Evolve(state, 0.002, 40)
    zeta, _ = TPZRHamiltonian.ReconstructZeta(trajectory)

    v, r, z, rDot, zDot = TPZGaugeMap.PhysicalSlice(trajectory, zeta, 0.05)

    assert_allclose(zeta[-1], 2 * trajectory.Times()[-1], atol=1e-4)
    assert_allclose(r, state.fR, atol=1e-5)
    assert_allclose(z, 0., atol=1e-4)
    assert_allclose(zDot, 0., atol=1e-4)
    assert_allclose(rDot, 0., atol=1e-4)
    # swept area r |x'| of the plane is R R' = 2
    assert_allclose(v, 2 * (state.fPhi - 1), atol=1e-4)


def test_rippled_plane_cut_satisfies_the_physical_constraints():
    trajectory = TPZRHamiltonian.Evolve(TPZGaugeMap.RippledPlane(81), 0.001, 150)
    zeta, _ = TPZRHamiltonian.ReconstructZeta(trajectory)

    initial = TPZGaugeMap.MembraneState(TPZGaugeMap.PhysicalSlice(trajectory, zeta, 0.))
    later = TPZGaugeMap.MembraneState(TPZGaugeMap.PhysicalSlice(trajectory, zeta, 0.1))

    assert np.max(np.abs(initial.fZDot)) > 0.1
    assert_allclose(initial.fRDot, 0., atol=1e-12)
    assert initial.MaxDefect() <= 1e-3
    assert later.MaxDefect() <= 1e-3


def test_cut_outside_the_covered_window():
    trajectory = TPZRHamiltonian.Evolve(TPZGaugeMap.RippledPlane(41), 0.002, 20)
    zeta, _ = TPZRHamiltonian.ReconstructZeta(trajectory)

    with pytest.raises(TPZRangeError):
        TPZGaugeMap.PhysicalSlice(trajectory, zeta, -0.01)

    with pytest.raises(TPZRangeError):
        TPZGaugeMap.PhysicalSlice(trajectory, zeta, 1.)


def test_folded_ripple_is_rejected():
    with pytest.raises(TPZRangeError):
        TPZGaugeMap.RippledPlane(41, amplitude=1.)


def test_cross_gauge_distance_shrinks_under_refinement():
    coarse, start, _ = TPZGaugeMap.CrossGauge(TPZGaugeMap.RippledPlane(41), 0.3, 0.002, 0.02)
    fine, _, physical = TPZGaugeMap.CrossGauge(TPZGaugeMap.RippledPlane(81), 0.3, 0.001, 0.01)

    assert start == 0.
    assert np.max(np.abs(physical.Final().fZ)) > 5e-3
    assert fine < coarse / 4
    assert fine < 1e-3


def test_cross_gauge_duration_must_fit_the_physical_step():
    with pytest.raises(TPZRangeError):
        TPZGaugeMap.CrossGauge(TPZGaugeMap.RippledPlane(41), 0.3, 0.002, 0.07)


def Subsample(trajectory, stride):
    subsampled = type(trajectory)()
    for time, state, monitor in zip(trajectory.fTimes[::stride], trajectory.fStates[::stride], trajectory.fMonitor[::stride]):
        subsampled.Append(time, state, monitor)

    return subsampled


# linearized catenoid

def test_ground_mode_grows_at_the_predicted_rate():
    eigenvalue, mode = TPZRHamiltonian.GroundMode(6., 601)
    eps = TPZRHamiltonian.EvolveLinearized(mode, 0.01, 500)

    center = len(mode) // 2
    times = 0.01 * np.arange(501)
    rate = TPZRHamiltonian.GrowthRate(times, eps[:, center])

    assert eigenvalue < -8 / 15
    assert abs(rate / np.sqrt(-eigenvalue) - 1) <= 0.02


def test_zero_mode_velocity_drifts_linearly():
    z = np.linspace(-6., 6., 601)
    still = TPZGridFunction(np.zeros_like(z), z[0], z[1] - z[0])
    eps = TPZRHamiltonian.EvolveLinearized(still, 0.01, 200, velocity=np.sinh(z))

    assert_allclose(eps[-1], 2 * np.sinh(z), atol=1e-6)


def test_odd_packet_stays_bounded():
    z = np.linspace(-6., 6., 301)
    packet = TPZGridFunction(z * np.exp(-z**2), z[0], z[1] - z[0])
    eps = TPZRHamiltonian.EvolveLinearized(packet, 0.01, 500)

    norms = np.sqrt(np.sum(eps**2, axis=1))
    assert np.max(norms) <= 1.05 * norms[0]


def test_linearized_operator_annihilates_zero_modes():
    z = np.linspace(-4., 4., 401)
    operator = TPZRHamiltonian.LinearizedOperator(z)

    assert np.max(np.abs(operator @ np.sinh(z))) <= 1e-6
    assert np.max(np.abs(operator @ (np.cosh(z) - z * np.sinh(z)))) <= 1e-6


def test_growth_rate_of_exact_cosh():
    times = np.linspace(0., 3., 31)

    assert_allclose(TPZRHamiltonian.GrowthRate(times, 0.5 * np.cosh(0.7 * times)), 0.7, rtol=1e-10)
