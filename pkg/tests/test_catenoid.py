import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.TPZCatenoid import TPZCatenoid
from src.TPZCatenoidBranch import TPZCatenoidBranch
from src.TPZErrors import TPZError, TPZNoInstabilityError
from src.TPZSLProblem import TPZSLProblem
from src.TPZSturmLiouville import TPZSturmLiouville


def test_critical_ratio(w0):
    w, rhoBar = TPZCatenoid.CriticalRatio()

    assert_allclose(w, w0, atol=1e-13)
    assert round(rhoBar, 5) == 1.50888


def test_branches_at_rho_two():
    outer, inner = TPZCatenoid(2.).SolveBranches()

    assert (outer.fBranch, inner.fBranch) == ('outer', 'inner')
    assert round(outer.fW, 5) == 0.58939
    assert round(inner.fW, 5) == 2.12679
    assert_allclose([outer.Ratio(), inner.Ratio()], 2., rtol=1e-12)


def test_no_catenoid_below_the_critical_ratio():
    assert TPZCatenoid(1.4).SolveBranches() == []


def test_critical_ratio_gives_one_branch():
    _, rhoBar = TPZCatenoid.CriticalRatio()
    branches = TPZCatenoid(rhoBar).SolveBranches()

    assert len(branches) == 1
    assert branches[0].fBranch == 'critical'


def test_nonpositive_ratio_is_rejected():
    with pytest.raises(TPZError):
        TPZCatenoid(0.)


@pytest.mark.parametrize('rho', [1.6, 2., 3.5, 10.])
def test_outer_branch_has_less_area(rho):
    outer, inner = TPZCatenoid(rho).SolveBranches()
    difference, witness = TPZCatenoid.CompareAreas(outer, inner)

    assert difference > 0
    assert_allclose(difference, witness / (outer.fW * inner.fW), rtol=1e-9)


def test_area_curve_skips_ratios_without_catenoid():
    rows = TPZCatenoid(2.).AreaCurve([1., 1.4, 1.6, 2., 3.])

    assert [row["rho"] for row in rows] == [1.6, 2., 3.]
    assert all(row["A2"] > row["A1"] for row in rows)
    assert all(row["w1"] < row["w2"] for row in rows)


def test_profile_spans_the_rings():
    branch = TPZCatenoidBranch(0.58939, 'outer')
    z, r = branch.Profile(101)

    assert_allclose([z[0], z[-1]], [-0.5, 0.5], atol=1e-14)
    assert_allclose(r[[0, -1]], branch.Ratio() / 2, rtol=1e-12)
    assert_allclose(r.min(), branch.fAOverD, rtol=1e-12)


def test_outer_stable_inner_unstable():
    catenoid = TPZCatenoid(2.)
    outer, inner = catenoid.SolveBranches()

    outerReport = catenoid.Stability(outer)
    innerReport = catenoid.Stability(inner)

    assert outerReport.fStable and outerReport.fLowestEigenvalue > 0
    assert not innerReport.fStable and innerReport.fLowestEigenvalue < 0


def test_critical_branch_is_marginal():
    _, rhoBar = TPZCatenoid.CriticalRatio()
    catenoid = TPZCatenoid(rhoBar)
    report = catenoid.Stability(catenoid.SolveBranches()[0])

    assert report.fAnnotation == 'marginal'
    assert not report.fStable
    assert abs(report.fLowestEigenvalue) <= 1e-8


@pytest.mark.parametrize('offset', [0.01, 0.1])
def test_instability_mode_matches_shooting(w0, offset):
    w2 = w0 + offset
    k, mode = TPZCatenoid(2.).InstabilityMode(w2)
    shot = TPZSturmLiouville(TPZSLProblem(TPZCatenoid.JacobiPotential, -w2, w2), tol=1e-12).Solve(0)

    assert_allclose(-k**2, shot.fEigenvalue, atol=1e-6)
    assert_allclose(mode.Evaluate(0.), 1., atol=1e-12)
    assert_allclose(mode.fSamples[[0, -1]], 0., atol=1e-9)
    assert mode.SupDistance(shot.fEigenfunction) <= 1e-5


@pytest.mark.parametrize('w2', [2., 2.5])
def test_instability_mode_far_from_critical(w2):
    k, _ = TPZCatenoid(2.).InstabilityMode(w2)
    shot = TPZSturmLiouville(TPZSLProblem(TPZCatenoid.JacobiPotential, -w2, w2), tol=1e-12).Solve(0)

    assert_allclose(-k**2, shot.fEigenvalue, atol=1e-6)


def test_instability_mode_needs_a_longer_interval(w0):
    with pytest.raises(TPZNoInstabilityError):
        TPZCatenoid(2.).InstabilityMode(w0 - 0.01)


def test_small_wavenumber_near_critical(w0):
    k, _ = TPZCatenoid(2.).InstabilityMode(w0 + 0.01)

    assert_allclose(k, 0.15812, rtol=0.03)


def test_perturbative_eigenvalue():
    exact, firstOrder = TPZCatenoid.PerturbativeEigenvalue(0.01)

    assert_allclose(firstOrder, -0.0250066, atol=1e-7)
    assert_allclose(exact, firstOrder, atol=5e-4)

    ratio = abs(np.subtract(*TPZCatenoid.PerturbativeEigenvalue(0.01))) / abs(np.subtract(*TPZCatenoid.PerturbativeEigenvalue(0.005)))
    assert 3. < ratio < 5.


@pytest.mark.parametrize('eps', [1e-1, 1e-2, 1e-3])
def test_shooting_eigenvalue_is_first_order_in_eps(w0, eps):
    shot = TPZSturmLiouville(TPZSLProblem(TPZCatenoid.JacobiPotential, -(w0 + eps), w0 + eps), tol=1e-12).Solve(0)

    assert abs(shot.fEigenvalue + 3 * eps / w0) / eps**2 < 10.


def test_moment_closed_forms(w0):
    assert_allclose(TPZCatenoid.JMoment(0), 1 / w0, rtol=1e-12)
    assert_allclose(TPZCatenoid.JMoment(1), 1 / w0 - w0 / 2, rtol=1e-11)
    assert_allclose(TPZCatenoid.KMoment(0), w0, rtol=1e-12)

    k = [TPZCatenoid.KMoment(n) for n in range(3)]
    assert_allclose(k[0] - 2 * k[1] + k[2], w0**3 / 3, rtol=1e-10)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_moment_recursion(n):
    assert abs(TPZCatenoid.MomentRecursionDefect(n)) <= 1e-12


def test_moment_identity_and_first_order_shift(w0):
    assert_allclose(TPZCatenoid.JnKnIdentity(), 1., rtol=1e-10)
    assert_allclose(TPZCatenoid.FirstOrderEigenvalue(0.01), -0.03 / w0, rtol=1e-10)


def test_flat_direction_is_cubic(w0):
    small, large = TPZCatenoid.FlatDirectionArea(0.005), TPZCatenoid.FlatDirectionArea(0.01)

    assert TPZCatenoid.FlatDirectionArea(0.) == 0.
    assert_allclose(large / small, 8., atol=0.8)
    assert_allclose(large / 0.01**3, w0 / 3, rtol=0.15)
    assert abs(small + TPZCatenoid.FlatDirectionArea(-0.005)) <= 0.2 * abs(small)


def test_factorization_of_the_jacobi_form(rng):
    w = 1.7
    bump = np.polynomial.Polynomial([w**2, 0., -1.])

    for _ in range(5):
        phi = np.polynomial.Polynomial(rng.normal(size=4)) * bump
        dphi, d2phi = phi.deriv(), phi.deriv(2)

        assert abs(TPZCatenoid.FactorizationDefect(phi, dphi, d2phi, w)) <= 1e-9
