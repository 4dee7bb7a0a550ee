import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.TPZErrors import TPZError, TPZRangeError
from src.TPZS3Torus import TPZS3Torus
from src.TPZTorusFamily import TPZTorusFamily

FAMILY = [0., 0.5, 1., 2.]


#   ******************
#     PROFILE ANGLE
#   ******************
def test_clifford_angle():
    theta, sin, cos = TPZTorusFamily(0.).ThetaOfPhi(np.linspace(-3., 3., 13))

    assert_allclose(theta, np.pi / 4)
    assert_allclose(sin, 1.)
    assert_allclose(cos, 0., atol=1e-16)


def test_angle_at_the_phase():
    theta, sin, _ = TPZTorusFamily(1., phi0=0.4).ThetaOfPhi(0.4)

    assert sin == 1.
    assert_allclose(theta, np.pi / 4)


def test_negative_parameter_is_rejected():
    with pytest.raises(TPZError):
        TPZTorusFamily(-0.1)


@pytest.mark.parametrize('e', FAMILY)
def test_conserved_energy(e):
    family = TPZTorusFamily(e, phi0=0.3)
    phi = np.linspace(0., 2 * np.pi, 200)
    theta, _, _ = family.ThetaOfPhi(phi)

    energy = TPZS3Torus.ProfileEnergy(1., 1., theta, family.ThetaDot(phi))

    assert np.std(energy) <= 1e-10
    assert_allclose(energy, family.fEnergy, rtol=1e-12)
    assert family.fEnergy <= 0.5


@pytest.mark.parametrize('e', FAMILY)
def test_alpha_equation(e):
    family = TPZTorusFamily(e)
    phi = np.linspace(0., 2 * np.pi, 200)
    _, sin, _ = family.Alpha(phi)

    residual = family.AlphaDot(phi)**2 + sin**2 * (1 - (1 + e**2) * sin**2)

    assert np.max(np.abs(residual)) <= 1e-9


@pytest.mark.parametrize('e', FAMILY)
def test_turning_points(e):
    family = TPZTorusFamily(e)
    lower, upper = family.TurningAngles()
    alpha, _, _ = family.Alpha(np.linspace(0., 2 * np.pi, 1001))

    assert_allclose(family.Alpha(-np.pi / 2)[0], lower, atol=1e-9)
    assert_allclose(family.Alpha(np.pi / 2)[0], upper, atol=1e-9)
    assert alpha.min() >= lower - 1e-12
    assert alpha.max() <= upper + 1e-12


@pytest.mark.parametrize('e', FAMILY)
def test_reduced_equation_with_unit_wave_numbers(e):
    family = TPZTorusFamily(e)
    phi = np.linspace(0.05, 6.2, 150)
    theta, _, _ = family.ThetaOfPhi(phi)

    acceleration = TPZS3Torus.ProfileAcceleration(1., 1., theta, family.ThetaDot(phi))

    assert_allclose(acceleration, family.ThetaDDot(phi), atol=1e-8)


#   ******************
#      EMBEDDING
#   ******************
def test_clifford_embedding():
    phi1, phi2 = 0.7, -1.9

    assert_allclose(TPZTorusFamily(0.).Point(phi1, phi2), TPZS3Torus.CliffordPoint(phi1, phi2), atol=1e-15)


@pytest.mark.parametrize('e', FAMILY)
def test_points_lie_on_the_sphere(e, rng):
    phi1, phi2 = rng.uniform(0, 2 * np.pi, (2, 50))

    assert_allclose(np.linalg.norm(TPZTorusFamily(e, 0.2).Point(phi1, phi2), axis=0), 1., atol=1e-12)


def test_embedding_uses_the_profile_angle():
    family = TPZTorusFamily(1., phi0=0.6)
    theta, _, _ = family.ThetaOfPhi(0.6)
    point = family.Point(0.3, 0.3)

    assert_allclose(point, [np.cos(theta) * np.cos(0.3), np.cos(theta) * np.sin(0.3),
                            np.sin(theta) * np.cos(0.3), np.sin(theta) * np.sin(0.3)])


def test_jacobian_against_differences(rng):
    family = TPZTorusFamily(0.5)
    for phi1, phi2 in rng.uniform(0, 2 * np.pi, (5, 2)):
        h = 1e-6
        numeric = np.column_stack([(family.Point(phi1 + h, phi2) - family.Point(phi1 - h, phi2)) / (2 * h),
                                   (family.Point(phi1, phi2 + h) - family.Point(phi1, phi2 - h)) / (2 * h)])

        assert_allclose(family.Jacobian(phi1, phi2), numeric, atol=1e-8)


#   ******************
#      MINIMALITY
#   ******************
def test_clifford_torus_is_minimal():
    surface = TPZTorusFamily(0.).Map()

    for phi1, phi2 in [(0., 0.), (1.1, -0.4), (3., 2.5)]:
        assert surface.MinimalityResidual(phi1, phi2) <= 1e-8


def test_family_is_minimal(rng):
    surface = TPZTorusFamily(0.5).Map()

    assert max(surface.MinimalityResidual(*p) for p in rng.uniform(0, 2 * np.pi, (100, 2))) <= 1e-6


def test_product_torus_off_the_clifford_angle():
    surface = TPZS3Torus.ProductTorus(np.pi / 6)

    assert_allclose(surface.MinimalityResidual(0.4, 1.3), np.sqrt(1 / 3 + 1), rtol=1e-6)


#   ******************
#   FUNDAMENTAL FORMS
#   ******************
@pytest.mark.parametrize('e', FAMILY)
def test_forms_trace_and_determinant(e):
    family = TPZTorusFamily(e)

    for phi in np.linspace(0., 2 * np.pi, 25):
        forms = family.FundamentalForms(phi)

        assert abs(forms.MeanCurvatureTrace()) <= 1e-12
        assert abs(forms.DeterminantDefect()) <= 1e-12


def test_clifford_forms():
    forms = TPZTorusFamily(0.).FundamentalForms(1.)

    assert_allclose(forms.fG, 0.5 * np.eye(2), atol=1e-15)
    assert_allclose(forms.fH, 0.5 * np.diag([1., -1.]), atol=1e-15)


@pytest.mark.parametrize('e', [0.5, 1.])
def test_closed_forms_match_the_embedding(e):
    family = TPZTorusFamily(e)
    surface = family.Map()

    for phi1, phi2 in [(0.2, 0.5), (1.7, -2.2), (4., 1.)]:
        closed = family.FundamentalForms(phi1 + phi2)

        assert closed.Distance(surface.NumericalForms(phi1, phi2), up_to_sign=True) <= 1e-6


@pytest.mark.parametrize('e', FAMILY)
def test_reparametrization(e):
    family = TPZTorusFamily(e)

    for phi in np.linspace(0., 2 * np.pi, 25):
        u, v, uExplicit, vExplicit = family.ReparamUV(phi)
        theta, _, _ = family.ThetaOfPhi(phi)

        assert_allclose([u, v], [uExplicit, vExplicit], atol=1e-12)
        assert_allclose(u - v, np.cos(2 * theta), atol=1e-12)
        assert family.FundamentalForms(phi).Distance(family.TransformedCliffordForms(phi)) <= 1e-10


def test_clifford_reparametrization_is_trivial():
    assert_allclose(TPZTorusFamily(0.).ReparamJacobian(0.8), np.eye(2), atol=1e-15)


#   ******************
#      CONGRUENCE
#   ******************
@pytest.mark.parametrize('e', FAMILY)
def test_congruence_matrix_is_orthogonal(e):
    assert TPZS3Torus.OrthogonalityDefect(e) <= 1e-12


def test_clifford_congruence_is_the_identity():
    assert_allclose(TPZS3Torus.CongruenceMatrix(0.), np.eye(4))


@pytest.mark.parametrize('e', [0.5, 1., 2.])
def test_congruence(e):
    assert TPZS3Torus.CongruenceCheck(TPZTorusFamily(e)) <= 1e-8


def test_congruence_needs_zero_phase():
    with pytest.raises(TPZRangeError):
        TPZS3Torus.CongruenceCheck(TPZTorusFamily(1., phi0=0.5))


def test_tangent_identity_and_squares():
    family = TPZTorusFamily(1.5)
    phi = np.linspace(0.1, 3., 30)
    theta, _, _ = family.ThetaOfPhi(phi)

    assert_allclose(family.fE * np.tan(2 * theta) * np.sin(phi), -1., rtol=1e-10)

    c, s = 1 / np.sqrt(1 + 1.5**2), 1.5 / np.sqrt(1 + 1.5**2)
    ct, st = np.cos(theta), np.sin(theta)
    first = (1 + c) * ct + (1 - c) * st * np.cos(phi) + s * st * np.sin(phi)
    second = -s * ct + s * st * np.cos(phi) - (1 - c) * st * np.sin(phi)

    assert_allclose(first**2 + second**2, 2., rtol=1e-12)


#   ******************
#      HOPF IMAGES
#   ******************
def test_hopf_base_point():
    assert_allclose(TPZS3Torus.Hopf([1., 0., 0., 0.]), [1., 0., 0.])


@pytest.mark.parametrize('e', FAMILY)
def test_hopf_image_of_the_family(e, rng):
    family = TPZTorusFamily(e, 0.3)

    for phi1, phi2 in rng.uniform(0, 2 * np.pi, (20, 2)):
        theta, _, _ = family.ThetaOfPhi(phi1 + phi2)
        image = TPZS3Torus.Hopf(family.Point(phi1, phi2))

        assert_allclose(np.linalg.norm(image), 1., atol=1e-12)
        assert_allclose(image, [np.cos(2 * theta), np.sin(2 * theta) * np.sin(phi2 - phi1),
                                np.sin(2 * theta) * np.cos(phi2 - phi1)], atol=1e-12)


@pytest.mark.parametrize('e', FAMILY)
def test_conjugate_hopf_image_is_a_great_circle(e, rng):
    family = TPZTorusFamily(e, 0.7)
    normal = TPZS3Torus.GreatCircleNormal(family)

    for phi1, phi2 in rng.uniform(0, 2 * np.pi, (20, 2)):
        image = TPZS3Torus.ConjugateHopf(family.Point(phi1, phi2))

        assert abs(normal @ image) <= 1e-8


#   ******************
#   GENERAL PROFILES
#   ******************
def test_flow_reproduces_the_closed_form():
    family = TPZTorusFamily(1.)
    trajectory = TPZS3Torus.ProfileFlow(1., 1., family.fEnergy, 3., 3000)
    t = np.linspace(0., 3., 3001)
    theta, _, _ = family.ThetaOfPhi(t - np.pi / 2)

    assert_allclose(trajectory[:, 0], theta, atol=1e-8)


@pytest.mark.parametrize('k, l', [(0., 1.), (1., 2.)])
def test_flow_conserves_energy(k, l):
    trajectory = TPZS3Torus.ProfileFlow(k, l, 0.4, 20., 20000)
    energy = TPZS3Torus.ProfileEnergy(k, l, trajectory[:, 0], trajectory[:, 1])
    lower = np.arcsin(0.8) / 2

    assert np.max(np.abs(energy - 0.4)) <= 1e-8
    assert trajectory[:, 0].max() <= np.pi / 2 - lower + 1e-8
    assert trajectory[:, 0].max() >= np.pi / 2 - lower - 1e-4


def test_flow_energy_range():
    with pytest.raises(TPZRangeError):
        TPZS3Torus.ProfileFlow(1., 1., 0.6, 1., 10)


#   ******************
#     EMBEDDEDNESS
#   ******************
@pytest.mark.parametrize('e', [0.5, 1., 2.])
def test_family_is_embedded(e):
    assert TPZS3Torus.MinimumSeparation(TPZTorusFamily(e)) > 1e-6
