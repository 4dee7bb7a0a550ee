import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.TPZErrors import (TPZNoRealProfileError, TPZNotARealSurfaceError, TPZOffSurfaceError, TPZRangeError,
                           TPZSingularPointError)
from src.TPZLevelSet import TPZLevelSet
from src.TPZLevelSetSpec import TPZLevelSetSpec


def CatenoidGradient(p):
    x, y, z = p
    return np.array([2 * x, 2 * y, -np.sinh(2 * z)])


def CatenoidHessian(p):
    return np.diag([2., 2., -2 * np.cosh(2 * p[2])])


#   ******************
#   LEVEL SET RESIDUAL
#   ******************
def test_catenoid_level_set(rng):
    for _ in range(20):
        z, angle = rng.uniform(-1.5, 1.5), rng.uniform(0, 2 * np.pi)
        point = np.array([np.cosh(z) * np.cos(angle), np.cosh(z) * np.sin(angle), z])

        assert abs(TPZLevelSet.LevelsetResidual(CatenoidGradient, CatenoidHessian, point)) <= 1e-10


def test_hyperplane_and_sphere():
    plane = TPZLevelSet.LevelsetResidual(lambda p: np.array([1., 0., 0.]), lambda p: np.zeros((3, 3)), [0., 0.3, 0.7])
    sphere = TPZLevelSet.LevelsetResidual(lambda p: 2 * np.asarray(p), lambda p: 2 * np.eye(3), [0., 0.6, 0.8])

    assert plane == 0.
    assert_allclose(sphere, 2., rtol=1e-14)


@pytest.mark.parametrize('scale', [-2., 0.5, 10.])
def test_residual_is_scale_free(scale):
    point = [0.3, -0.4, 1.2]
    gradient = lambda p: 2 * np.asarray(p)
    hessian = lambda p: 2 * np.eye(3)

    reference = TPZLevelSet.LevelsetResidual(gradient, hessian, point)
    scaled = TPZLevelSet.LevelsetResidual(lambda p: scale * gradient(p), lambda p: scale * hessian(p), point)

    assert_allclose(abs(scaled), abs(reference), rtol=1e-13)


def test_vanishing_gradient():
    with pytest.raises(TPZSingularPointError):
        TPZLevelSet.LevelsetResidual(lambda p: np.zeros(3), lambda p: np.eye(3), [0., 0., 0.])


#   ******************
#       CATALOG
#   ******************
@pytest.mark.parametrize('name', ['catenoid', 'helicoid', 'scherk1', 'scherk2', 'quadric4', 'clifford_cone',
                                  'scherk1_variant_mirror', 'scherk1_variant_scaled'])
def test_catalog_surfaces_are_minimal(name, rng):
    spec = TPZLevelSet.Catalog(name)
    points = TPZLevelSet.SampleSurface(spec, 100, rng)

    assert spec.DerivativeDefect(points[:10]) <= 1e-6
    assert max(abs(TPZLevelSet.SeparableResidual(spec, p)) for p in points) <= 1e-8


@pytest.mark.parametrize('name', ['helicoid', 'scherk1', 'scherk2', 'quadric4', 'scherk1_variant_mirror',
                                  'scherk1_variant_scaled'])
def test_exponential_coefficient_triples(name, rng):
    spec = TPZLevelSet.Catalog(name)

    assert spec.TripleDefect(TPZLevelSet.SampleSurface(spec, 20, rng)) <= 1e-9


@pytest.mark.slow
def test_weierstrass_surface(rng):
    spec = TPZLevelSet.Catalog('weier4')
    points = TPZLevelSet.SampleSurface(spec, 50, rng)

    assert max(abs(TPZLevelSet.SeparableResidual(spec, p)) for p in points) <= 1e-6
    assert spec.TripleDefect(points) <= 1e-5


def test_helicoid_is_the_ruled_surface(rng):
    spec = TPZLevelSet.Catalog('helicoid')

    for x, y, z in TPZLevelSet.SampleSurface(spec, 10, rng):
        assert_allclose(y * np.cos(z), x * np.sin(z), atol=1e-12)


def test_scherk_second_surface(rng):
    for x, y, z in TPZLevelSet.SampleSurface(TPZLevelSet.Catalog('scherk2'), 10, rng):
        assert_allclose(np.sin(z), np.sinh(x) * np.sinh(y), atol=1e-12)


def test_mixed_hyperbolic_variant_is_not_minimal(rng):
    components = [(lambda x: np.log(np.cosh(x)), np.tanh, lambda x: 1 / np.cosh(x)**2),
                  (lambda y: -np.log(np.cosh(y)), lambda y: -np.tanh(y), lambda y: -1 / np.cosh(y)**2),
                  (lambda z: z, lambda z: 1. + 0 * z, lambda z: 0. * z)]
    spec = TPZLevelSetSpec('cosh_linear', components, [(-1., 1.), (0.5, 1.5), (-5., 5.)])
    points = TPZLevelSet.SampleSurface(spec, 20, rng)

    assert max(abs(TPZLevelSet.SeparableResidual(spec, p)) for p in points) > 1e-3


def test_off_surface_point():
    spec = TPZLevelSet.Catalog('catenoid')

    with pytest.raises(TPZOffSurfaceError) as error:
        TPZLevelSet.SeparableResidual(spec, [1., 1., 0.])

    assert_allclose(error.value.fDefect, 1.)


def test_unknown_catalog_name():
    with pytest.raises(KeyError):
        TPZLevelSet.Catalog('enneper')


#   ******************
#  EXPONENTIAL FAMILY
#   ******************
def test_elliptic_member_of_the_family():
    pairing, residual = TPZLevelSet.VerifyExponentialFamily([1., 1., -1., -1.], [-1., -1., 1., 1.], 2.)

    assert pairing
    assert residual <= 1e-8


def test_quadric_degeneration():
    pairing, residual = TPZLevelSet.VerifyExponentialFamily([1., 1., 0., 0.], [0., 0., 1., 1.], 2.)

    assert pairing
    assert residual <= 1e-8


def test_broken_pairing():
    ranges = [(-0.5, 0.5)] * 3 + [(-1.5, 1.5)]
    pairing, residual = TPZLevelSet.VerifyExponentialFamily([1., 1., 1., 1.], [1., 1., 1., 2.], 1., ranges=ranges)

    assert not pairing
    assert residual > 1e-3


def test_negative_slope_square_is_rejected():
    with pytest.raises(TPZNotARealSurfaceError):
        TPZLevelSet.VerifyExponentialFamily([1., 1., -1., -1.], [-1., -1., 1., 1.], 2., ranges=[(-1., 1.)] * 4)


#   ******************
#     LINEAR CONES
#   ******************
def test_cone_coefficients():
    assert TPZLevelSet.LinearConeCoefficients(4, 2) == [1., 1., -1., -1.]
    assert TPZLevelSet.LinearConeCoefficients(6, 2) == [3., 3., -1., -1., -1., -1.]

    with pytest.raises(TPZRangeError):
        TPZLevelSet.LinearConeCoefficients(6, 4)


@pytest.mark.parametrize('n, r', [(5, 2), (6, 2), (6, 3), (7, 3)])
def test_cones_are_minimal(n, r, rng):
    spec = TPZLevelSet.ConeSpec(TPZLevelSet.LinearConeCoefficients(n, r))
    points = TPZLevelSet.SampleSurface(spec, 30, rng)

    assert max(abs(TPZLevelSet.SeparableResidual(spec, p)) for p in points) <= 1e-8


#   ******************
#  ROTATIONAL PROFILES
#   ******************
def test_three_dimensional_profile_is_the_catenoid():
    profile = TPZLevelSet.RotationalProfile(3, 1., 2., 1.5)

    assert profile.SupDistance(np.cosh) <= 1e-10


def test_four_dimensional_profile_is_weierstrass():
    wp = TPZLevelSet.WeierstrassTable()
    profile = TPZLevelSet.RotationalProfile(4, -1., 2., 1.)

    assert profile.SupDistance(lambda z: np.sqrt(wp.Evaluate(z + wp.fHalfPeriod))) <= 1e-8
    assert TPZLevelSet.ProfileDefect(4, -1., 2., 1.) <= 1e-8


def test_inadmissible_profile():
    with pytest.raises(TPZNoRealProfileError):
        TPZLevelSet.RotationalProfile(3, 0., 2., 1.)
