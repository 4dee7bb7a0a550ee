"""
This class runs the subcommands, collects what they check and produce
and writes it to the output directory.
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZCatenoid import TPZCatenoid
from src.TPZCharacteristicFields import TPZCharacteristicFields
from src.TPZCheckReport import TPZCheckReport
from src.TPZDeterminantalVariety import TPZDeterminantalVariety
from src.TPZErrors import TPZError, TPZUsageError
from src.TPZGaugeMap import TPZGaugeMap
from src.TPZGmshToolkit import TPZGmshToolkit
from src.TPZLaxFields import TPZLaxFields
from src.TPZLevelSet import TPZLevelSet
from src.TPZNullMarch import TPZNullMarch
from src.TPZPhysicalGauge import TPZPhysicalGauge
from src.TPZRHamiltonian import TPZRHamiltonian
from src.TPZRState import TPZRState
from src.TPZRiccatiSolution import TPZRiccatiSolution
from src.TPZRotatingShape import TPZRotatingShape
from src.TPZRunConfig import TPZRunConfig
from src.TPZS3Torus import TPZS3Torus
from src.TPZSLProblem import TPZSLProblem
from src.TPZSolitonSpectrum import TPZSolitonSpectrum
from src.TPZStiefelCone import TPZStiefelCone
from src.TPZSturmLiouville import TPZSturmLiouville
from src.TPZTorusFamily import TPZTorusFamily
from src.TPZTrajectory import TPZTrajectory
from src.TPZVtkGenerator import TPZVtkGenerator
from src.TPZZeroCurvature import TPZZeroCurvature

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZModel(TPZBasicDataStructure):
    """
    Fields:
        - config: the run configuration
        - report: checks and tables of the run
        - surfaces: name -> (points (nu, nv, 3), closedU, closedV, point scalars)
        - curves: name -> (points (n, 3), closed, point scalars)
    """
    runners: ClassVar[dict] = {
        'catenoid': 'Catenoid',
        'spectrum': 'Spectrum',
        'separable': 'Separable',
        'rotate': 'Rotate',
        's3-torus': 'S3Torus',
        'stiefel': 'Stiefel',
        'detvar': 'Detvar',
        'membrane': 'Membrane',
    }
    membraneRunners: ClassVar[dict] = {
        'collapsing-circle': 'CollapsingCircle',
        'static-catenoid': 'StaticCatenoid',
        'torus': 'MembraneTorus',
        'rippled-ring': 'RippledRing',
        'linearized-catenoid': 'LinearizedCatenoid',
        'null-catenoid': 'NullCatenoid',
        'cross-gauge': 'CrossGauge',
    }
    # non constant spectral parameters (lambda, lambda+, lambda-) of the Lax pair
    spectralGauges: ClassVar[tuple] = (
        (lambda p, m: 1 + 0.3 * np.sin(p) * np.cos(m),
         lambda p, m: 0.3 * np.cos(p) * np.cos(m),
         lambda p, m: -0.3 * np.sin(p) * np.sin(m)),
        (lambda p, m: np.exp(0.2 * p - 0.1 * m),
         lambda p, m: 0.2 * np.exp(0.2 * p - 0.1 * m),
         lambda p, m: -0.1 * np.exp(0.2 * p - 0.1 * m)),
        (lambda p, m: 3 + p * m,
         lambda p, m: m,
         lambda p, m: p),
    )
    rapidity: ClassVar[float] = 0.3

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, config: TPZRunConfig) -> None:
        super().__init__()

        self.fConfig: TPZRunConfig = config
        self.fReport: TPZCheckReport = TPZCheckReport(config)
        self.fSurfaces: dict = {}
        self.fCurves: dict = {}

        self.DeactivateAttr()

        return

#   ******************
#        DRIVER
#   ******************
    def Run(self) -> int:
        """
        Returns the exit status: 0 when every check passed, 1 otherwise
        """
        if self.fConfig.fSubcommand == 'verify-all':
            for subcommand in self.runners:
                if subcommand == 'membrane':
                    for preset in self.membraneRunners:
                        self.RunSubcommand(subcommand, self.SubConfig(subcommand, {'preset': preset}))
                else:
                    self.RunSubcommand(subcommand, self.SubConfig(subcommand))
        else:
            self.RunSubcommand(self.fConfig.fSubcommand, self.fConfig)

        self.WriteArtifacts()

        failures = self.fReport.Failures()
        if failures:
            logger.warning('%d of %d checks failed: %s', len(failures), len(self.fReport.fChecks), ', '.join(failures))

        return 0 if self.fReport.Passed() else 1

    def SubConfig(self, subcommand: str, parameters: dict = None) -> TPZRunConfig:
        config = self.fConfig
        return TPZRunConfig(subcommand, parameters, config.fOutputDir, config.fSeed, config.fFormat, config.fQuick)

    def RunSubcommand(self, subcommand: str, config: TPZRunConfig) -> None:
        logger.info('running %s with %s', subcommand, config.fParameters)

        try:
            getattr(self, self.runners[subcommand])(config)

        except TPZUsageError:
            raise

        except TPZError as error:
            logger.error('%s stopped: %s', subcommand, error)
            self.fReport.Flag(f'{subcommand}.completed', False)

        return

    def WriteArtifacts(self) -> None:
        outputDir = self.fConfig.fOutputDir
        outputDir.mkdir(parents=True, exist_ok=True)

        self.fReport.WriteTables(outputDir)

        if self.fConfig.fVtk:
            for name, (points, closedU, closedV, scalars) in self.fSurfaces.items():
                vtk = TPZVtkGenerator()
                vtk.AddSurface(points, scalars, closedU, closedV)
                self.fReport.fArtifacts.append(vtk.WriteVTK(outputDir / name).name)

            for name, (points, closed, scalars) in self.fCurves.items():
                vtk = TPZVtkGenerator()
                vtk.AddCurve(points, scalars, closed)
                self.fReport.fArtifacts.append(vtk.WriteVTK(outputDir / name).name)

        if self.fConfig.fMsh and (self.fSurfaces or self.fCurves):
            path = TPZGmshToolkit.WriteGeometries(outputDir / self.fConfig.fSubcommand.replace('-', '_'),
                                                  {name: surface[:3] for name, surface in self.fSurfaces.items()},
                                                  {name: curve[:2] for name, curve in self.fCurves.items()})
            self.fReport.fArtifacts.append(path.name)

        self.fReport.WriteManifest(outputDir)

        return

#   ******************
#       GEOMETRY
#   ******************
    @staticmethod
    def Revolve(z, r, count: int = 64) -> np.ndarray:
        """
        Surface of revolution of the meridian (z, r) about the z axis, shape (len(z), count, 3)
        """
        angle = np.linspace(0., 2 * np.pi, count, endpoint=False)
        z, r = np.asarray(z)[:, None], np.asarray(r)[:, None]

        return np.stack(np.broadcast_arrays(r * np.cos(angle), r * np.sin(angle), z), axis=-1)

    @staticmethod
    def Stereographic(q) -> np.ndarray:
        """
        Projection of points of S3 (leading axis of size 4) from (0, 0, 0, 1)
        """
        q = np.asarray(q)
        return np.moveaxis(q[:3] / (1 - q[3]), 0, -1)

#   ******************
#       CATENOID
#   ******************
    def Catenoid(self, config: TPZRunConfig) -> None:
        report, parameters = self.fReport, config.fParameters
        rho, resolution = parameters['rho'], parameters['resolution']

        catenoid = TPZCatenoid(rho, resolution)
        branches = catenoid.SolveBranches()

        rows = []
        for branch in branches:
            stability = catenoid.Stability(branch)
            report.Check(f'catenoid.root_residual.{branch.fBranch}', abs(np.cosh(branch.fW) - rho * branch.fW), 1e-10)

            rows.append({"rho": rho, "branch": branch.fBranch, "w": branch.fW, "a_over_d": branch.fAOverD,
                         "area": branch.fAreaCoeff, "lowest_eigenvalue": stability.fLowestEigenvalue,
                         "stable": stability.fStable, "annotation": stability.fAnnotation})

            z, r = branch.Profile(65)
            self.fSurfaces[f'catenoid_{branch.fBranch}'] = (self.Revolve(z, r), False, True, np.repeat(r, 64))

        report.Table('catenoid_branches', rows)

        if len(branches) == 2:
            difference, witness = TPZCatenoid.CompareAreas(*branches)
            report.Check('catenoid.area_difference', difference, 0., '>')
            report.Check('catenoid.area_witness', witness, 0., '>')

        report.Check(f'catenoid.roots_below_critical.rho={parameters["below_critical"]:g}',
                     len(TPZCatenoid(parameters['below_critical']).SolveBranches()), 0.)

        for sweepRho in config.Floats('stability_rhos'):
            sweep = TPZCatenoid(sweepRho, resolution)
            pair = sweep.SolveBranches()
            if len(pair) != 2:
                report.Flag(f'catenoid.two_branches.rho={sweepRho:g}', False)
                continue

            report.Check(f'catenoid.outer_stable.rho={sweepRho:g}', sweep.Stability(pair[0]).fLowestEigenvalue, 0., '>')
            report.Check(f'catenoid.inner_unstable.rho={sweepRho:g}', sweep.Stability(pair[1]).fLowestEigenvalue, 0., '<')

        w0, rhoBar = TPZCatenoid.CriticalRatio()
        critical = TPZCatenoid(rhoBar, resolution)
        marginal = critical.Stability(critical.SolveBranches()[0])
        report.Check('catenoid.critical_eigenvalue', abs(marginal.fLowestEigenvalue), 1e-8)
        report.Check('catenoid.critical_mode', marginal.fEigenfunction.SupDistance(lambda v: 1 - v * np.tanh(v)), 1e-6)

        self.PerturbationLaw(config, w0)

        report.Check('catenoid.moment_identity', abs(TPZCatenoid.JnKnIdentity() - 1), 1e-10)

        rhoValues = np.linspace(parameters['rho_min'], parameters['rho_max'], parameters['rho_count'])
        report.Table('catenoid_area_curve', catenoid.AreaCurve(rhoValues))

        return

    def PerturbationLaw(self, config: TPZRunConfig, w0: float) -> None:
        """
        Shooting eigenvalue on [-(w0 + eps), w0 + eps] against -3 eps/w0
        """
        rows, constants = [], []
        for eps in config.Floats('eps_values'):
            problem = TPZSLProblem(TPZCatenoid.JacobiPotential, -(w0 + eps), w0 + eps)
            energy = TPZSturmLiouville(problem, tol=1e-12, resolution=config.fParameters['resolution']).Solve(0).fEigenvalue
            constant = abs(energy + 3 * eps / w0) / eps**2
            constants.append(constant)

            self.fReport.Check(f'catenoid.perturbation_constant.eps={eps:g}', constant, 10.)
            rows.append({"eps": eps, "shooting": energy, "first_order": -3 * eps / w0,
                         "moment_first_order": TPZCatenoid.FirstOrderEigenvalue(eps),
                         "closed_form": TPZCatenoid.PerturbativeEigenvalue(eps)[0], "constant": constant})

        if len(constants) > 1:
            self.fReport.Check('catenoid.perturbation_constant_spread', max(constants) / min(constants), 2.)

        self.fReport.Table('catenoid_perturbation', rows)

        return

#   ******************
#       SPECTRUM
#   ******************
    def Spectrum(self, config: TPZRunConfig) -> None:
        report, parameters = self.fReport, config.fParameters

        sech = TPZSolitonSpectrum.RayleighQuotient(lambda z: 1 / np.cosh(z))
        report.Check('spectrum.sech_quotient', abs(sech + 8 / 15), 1e-9)

        even, odd = TPZSolitonSpectrum.ZeroModeResiduals()
        report.Check('spectrum.even_zero_mode', even, 1e-10)
        report.Check('spectrum.odd_zero_mode', odd, 1e-10)

        oddTrial = TPZSolitonSpectrum.RayleighQuotient(lambda z: np.tanh(z) / np.cosh(z),
                                                       lambda z: (1 - 2 * np.tanh(z)**2) / np.cosh(z))
        report.Check('spectrum.odd_trial_quotient', oddTrial, 0., '>')

        powers = config.Floats('trial_powers')
        quotients = TPZSolitonSpectrum.TrialQuotients(tuple(powers))
        ground = TPZSolitonSpectrum.GroundState()

        report.Check('spectrum.ground_below_sech', ground.fEigenvalue, -8 / 15, '<')
        report.Check('spectrum.ground_below_trials', ground.fEigenvalue - min(quotients), 0., '<')

        rows = [{"trial": f"sech^{power:g}", "quotient": quotient} for power, quotient in zip(powers, quotients)]
        rows += [{"trial": "tanh*sech", "quotient": oddTrial}, {"trial": "ground", "quotient": ground.fEigenvalue}]

        if parameters['excited']:
            excited = TPZSolitonSpectrum.GroundState(index=1)
            report.Check('spectrum.no_second_bound_state', excited.fEigenvalue, 0., '>')
            rows.append({"trial": "first excited", "quotient": excited.fEigenvalue})

        report.Table('spectrum_quotients', rows)

        scattering = []
        for k in config.Floats('scattering_k'):
            wave, bound = TPZSolitonSpectrum.HEigenCheck(k)
            report.Check(f'spectrum.scattering_state.k={k:g}', wave, 1e-10)
            report.Check(f'spectrum.bound_state.k={k:g}', bound, 1e-12)
            scattering.append({"k": k, "scattering_residual": wave, "bound_residual": bound})

        report.Table('spectrum_scattering', scattering)

        riccati = TPZRiccatiSolution(0.)
        x = np.geomspace(1e-2, 1e3, 50)
        report.Check('spectrum.riccati_particular', np.max(np.abs(riccati.ParticularResidual(x))), 1e-10)
        report.Table('spectrum_riccati', [{"c_tilde": 0., "pole": riccati.Pole()}])

        return

#   ******************
#      SEPARABLE
#   ******************
    def Separable(self, config: TPZRunConfig) -> None:
        report, parameters = self.fReport, config.fParameters
        rng = config.Rng()

        rows = []
        for name in TPZLevelSet.names:
            weierstrass = name == 'weier4'
            count = parameters['weierstrass_points'] if weierstrass else parameters['points']
            tolerance = 1e-6 if weierstrass else 1e-8
            if count <= 0:
                continue

            spec = TPZLevelSet.Catalog(name)
            points = TPZLevelSet.SampleSurface(spec, count, rng)
            residual = max(abs(TPZLevelSet.SeparableResidual(spec, point)) for point in points)

            report.Check(f'separable.residual.{name}', residual, tolerance)
            rows.append({"surface": name, "points": count, "max_residual": residual, "tolerance": tolerance})

        for n, r in ((5, 2), (6, 3)):
            spec = TPZLevelSet.ConeSpec(TPZLevelSet.LinearConeCoefficients(n, r), name=f'cone_{n}_{r}')
            points = TPZLevelSet.SampleSurface(spec, parameters['points'], rng)
            residual = max(abs(TPZLevelSet.SeparableResidual(spec, point)) for point in points)

            report.Check(f'separable.residual.{spec.fName}', residual, 1e-8)
            rows.append({"surface": spec.fName, "points": parameters['points'], "max_residual": residual, "tolerance": 1e-8})

        report.Table('separable_catalog', rows)

        wp = TPZLevelSet.WeierstrassTable()
        x = np.linspace(0.3, 2 * wp.fHalfPeriod - 0.3, 400)
        report.Check('separable.weierstrass_ode', np.max(np.abs(wp.Residual(x))), 1e-8)
        report.Check('separable.weierstrass_half_period', abs(wp.Evaluate(wp.fHalfPeriod) - 1), 1e-12)

        return

#   ******************
#       ROTATING
#   ******************
    def Rotate(self, config: TPZRunConfig) -> None:
        report, parameters = self.fReport, config.fParameters

        for n, k in config.Sizes('fixtures'):
            label = f'{n}_{k}'
            epicycloid = TPZRotatingShape.Epicycloid(n, k)
            curve, w = epicycloid.Curve(), epicycloid.AngularVelocity()

            report.Check(f'rotate.w2.{label}', abs(epicycloid.fW2 - 4 * n**2 * k**2 / (n - k)**2), 1e-12)

            phi = TPZRotatingShape.RegularAngles(curve, parameters['residual_points'])
            gamma = TPZRotatingShape.InferGamma(curve, w, phi[1])
            residual, gamma0 = TPZRotatingShape.ShapeResidual(curve, w, gamma, phi)

            report.Check(f'rotate.shape_residual.{label}', np.max(np.abs(residual)), 1e-10)
            report.Check(f'rotate.gamma0_constant.{label}', np.std(gamma0), 1e-10)
            report.Check(f'rotate.gamma0_value.{label}', abs(np.mean(gamma0) / epicycloid.Gamma0() - 1), 1e-10)

            angles = np.linspace(0., 2 * np.pi, 400)
            report.Check(f'rotate.minimality.{label}', np.max(TPZRotatingShape.MinimalityDefect(curve, w, angles)), 1e-9)
            report.Check(f'rotate.cusps.{label}', abs(TPZRotatingShape.CuspCount(curve) - abs(n - k)), 0.)

            top = epicycloid.Gamma0()**2
            quadrature, closed = TPZRotatingShape.IntegrateShape(epicycloid.Gamma0(), np.linspace(1.01, top - 0.01, 50))
            report.Check(f'rotate.shape_quadrature.{label}', np.max(np.abs(quadrature - closed)), 1e-8)

            times = np.linspace(0., 2 * np.pi / abs(w), parameters['times'], endpoint=False)
            cloud = TPZRotatingShape.Surface(curve, w, times, parameters['cloud_points'])
            report.Table(f'rotate_cloud_{label}', [{"t": point[0], "x": point[1], "y": point[2]}
                                                   for point in cloud.reshape(-1, 3)])

            self.fSurfaces[f'rotate_sheet_{label}'] = (cloud, False, True, cloud[..., 0].reshape(-1))
            self.fCurves[f'epicycloid_{label}'] = (curve.Sample(parameters['cloud_points']), True, None)

        self.TangentIdentity()

        return

    def TangentIdentity(self, a: int = 3, b: int = 1) -> None:
        """
        tan of the polar angle of the minus epicycloid from the closed form of the shape integral
        """
        epicycloid = TPZRotatingShape.Epicycloid(a, b, '-')
        curve = epicycloid.Curve()
        phi = np.linspace(0.05, 1.4, 30)

        values = epicycloid.fW2 * curve.Radius(phi)**2
        _, closed = TPZRotatingShape.IntegrateShape((a + b) / (a - b), values)
        formula = TPZRotatingShape.TangentFormula(a, b, phi)

        relative = np.max(np.abs(np.tan(closed) - formula) / np.abs(formula))
        self.fReport.Check(f'rotate.tangent_identity.{a}_{b}', relative, 1e-8)

        return

#   ******************
#       S3 TORI
#   ******************
    def S3Torus(self, config: TPZRunConfig) -> None:
        report, parameters = self.fReport, config.fParameters
        rng = config.Rng()

        rows = []
        for e in config.Floats('family'):
            label = f'e={e:g}'
            family = TPZTorusFamily(e)
            phi1, phi2 = rng.uniform(0., 2 * np.pi, (2, parameters['samples']))
            points = family.Point(phi1, phi2)

            sphere = np.max(np.abs(np.linalg.norm(points, axis=0) - 1))
            surface = family.Map()
            laplace = max(surface.MinimalityResidual(a, b) for a, b in zip(phi1, phi2))

            forms = [family.FundamentalForms(phi) for phi in np.linspace(0., 2 * np.pi, 25)]
            trace = max(abs(form.MeanCurvatureTrace()) for form in forms)
            determinant = max(abs(form.DeterminantDefect()) for form in forms)

            orthogonality = TPZS3Torus.OrthogonalityDefect(e)
            congruence = TPZS3Torus.CongruenceCheck(family) if e > 0 else np.max(np.abs(TPZS3Torus.CongruenceMatrix(0.) - np.eye(4)))
            hopf = np.max(np.abs(TPZS3Torus.GreatCircleNormal(family) @ TPZS3Torus.ConjugateHopf(points)))

            report.Check(f's3_torus.sphere.{label}', sphere, 1e-12)
            report.Check(f's3_torus.laplace.{label}', laplace, 1e-6)
            report.Check(f's3_torus.trace.{label}', trace, 1e-9)
            report.Check(f's3_torus.determinant.{label}', determinant, 1e-9)
            report.Check(f's3_torus.orthogonality.{label}', orthogonality, 1e-12)
            report.Check(f's3_torus.congruence.{label}', congruence, 1e-8)
            report.Check(f's3_torus.great_circle.{label}', hopf, 1e-8)

            if e == 0:
                clifford = np.max(np.abs(points - TPZS3Torus.CliffordPoint(phi1, phi2)))
                report.Check('s3_torus.clifford', clifford, 1e-15)

            rows.append({"e": e, "energy": family.fEnergy, "sphere": sphere, "laplace": laplace, "trace": trace,
                         "determinant": determinant, "orthogonality": orthogonality, "congruence": congruence,
                         "great_circle": hopf})

            angles = np.linspace(0., 2 * np.pi, parameters['grid'], endpoint=False)
            grid = family.Point(*np.meshgrid(angles, angles, indexing='ij'))
            self.fSurfaces[f's3_torus_e{e:g}'.replace('.', 'p')] = (self.Stereographic(grid), True, True, grid[3].reshape(-1))

        report.Table('s3_torus_family', rows)

        return

#   ******************
#    ALGEBRAIC CONES
#   ******************
    def Stiefel(self, config: TPZRunConfig) -> None:
        report, parameters = self.fReport, config.fParameters
        rng = config.Rng()

        rows = []
        for n, k in config.Sizes('sizes'):
            reports = [TPZStiefelCone.Minimality(TPZStiefelCone.RandomPoint(n, k, rng)) for _ in range(parameters['points'])]
            trace = np.max(np.array([projector.MaxResidual() for projector in reports]))
            idempotency = max(projector.fIdempotency for projector in reports)

            report.Check(f'stiefel.trace.{n}x{k}', trace, 1e-9)
            report.Check(f'stiefel.idempotency.{n}x{k}', idempotency, 1e-12)
            rows.append({"n": n, "k": k, "points": parameters['points'], "max_trace": trace, "idempotency": idempotency})

        report.Table('stiefel_minimality', rows)

        s2 = 1.7
        for k in range(2, parameters['max_k'] + 1):
            size = k * (k + 1) // 2 - 1
            identity = TPZStiefelCone.ClosedFormInverse(k, s2) @ TPZStiefelCone.ClosedFormGram(k, s2)
            report.Check(f'stiefel.closed_inverse.k={k}', np.max(np.abs(identity - np.eye(size))), 1e-12)

            point = TPZStiefelCone.RandomPoint(k + 1, k, rng)
            closed = TPZStiefelCone.Projector(point, closedForm=True)
            generic = TPZStiefelCone.Projector(point, closedForm=False)
            report.Check(f'stiefel.closed_projector.k={k}', np.max(np.abs(closed - generic)), 1e-12)

        return

    def Detvar(self, config: TPZRunConfig) -> None:
        report, parameters = self.fReport, config.fParameters
        rng = config.Rng()

        rows = []
        for p, q in config.Sizes('sizes'):
            points = [TPZDeterminantalVariety.RandomPoint(p, q, rng) for _ in range(parameters['points'])]
            traces = max(np.max(np.abs(TPZDeterminantalVariety.MeanCurvature(point))) for point in points)
            report.Check(f'detvar.lambda_chart.{p}x{q}', traces, 1e-9)

            row = {"p": p, "q": q, "points": parameters['points'], "lambda_chart": traces, "svd_chart": float('nan')}
            if (p, q) == (3, 2):
                svd = max(np.max(np.abs(TPZDeterminantalVariety.ChartMeanCurvature(
                    TPZDeterminantalVariety.SvdTangents, TPZDeterminantalVariety.SvdFit(point.Matrix())))) for point in points)
                report.Check('detvar.svd_chart.3x2', svd, 1e-7)
                row["svd_chart"] = svd

            rows.append(row)

        report.Table('detvar_mean_curvature', rows)

        formula = []
        for p, q in config.Sizes('formula_sizes'):
            lhs, rhs = TPZDeterminantalVariety.DeterminantFormula(TPZDeterminantalVariety.RandomPoint(p, q, rng))
            relative = abs(lhs - rhs) / abs(lhs)

            report.Check(f'detvar.determinant_formula.{p}x{q}', relative, 1e-10)
            formula.append({"p": p, "q": q, "gram_determinant": lhs, "formula": rhs, "relative_error": relative})

        report.Table('detvar_determinant', formula)

        return

#   ******************
#       MEMBRANE
#   ******************
    def Membrane(self, config: TPZRunConfig) -> None:
        getattr(self, self.membraneRunners[config.fParameters['preset']])(config.fParameters)
        return

    def TrajectoryTable(self, name: str, trajectory: TPZTrajectory) -> None:
        rows = [{"t": time, "r_min": float(np.min(state.fR)), "r_max": float(np.max(state.fR)), "monitor": monitor}
                for time, state, monitor in zip(trajectory.fTimes, trajectory.fStates, trajectory.fMonitor)]
        self.fReport.Table(name, rows)
        return

    def CollapsingCircle(self, parameters: dict) -> None:
        report = self.fReport
        dt = parameters['dt']

        state = TPZPhysicalGauge.CollapsingCircle(parameters['npoints'])
        trajectory = TPZPhysicalGauge.Evolve(state, dt, parameters['steps'], parameters['record'])
        self.TrajectoryTable('membrane_collapsing_circle', trajectory)

        times, integrals, accelerations, blowupTime = TPZPhysicalGauge.SingularitySearch(trajectory)
        report.Check('membrane.collapse.acceleration', np.max(accelerations), 0., '<')

        if dt * parameters['steps'] > np.pi / 2:
            report.Flag('membrane.collapse.blowup', trajectory.BlewUp())
            if trajectory.BlewUp():
                report.Check('membrane.collapse.last_time', abs(trajectory.fBlowup.fLastTime - np.pi / 2), max(0.01, 2 * dt))
            report.Check('membrane.collapse.blowup_estimate', abs(blowupTime - np.pi / 2) if blowupTime else np.nan, 0.05)

        coarse = TPZPhysicalGauge.Evolve(state, 0.1, 12)
        fine = TPZPhysicalGauge.Evolve(state, 0.05, 24)
        report.Check('membrane.collapse.constraint_order', coarse.Monitor()[-1] / fine.Monitor()[-1], 8., '>')

        report.Table('membrane_blowup', [{
            "last_time": trajectory.fBlowup.fLastTime if trajectory.BlewUp() else times[-1],
            "location": trajectory.fBlowup.fLocation if trajectory.BlewUp() else float('nan'),
            "blowup_estimate": blowupTime if blowupTime is not None else float('nan'),
            "radius_integral": integrals[-1],
        }])

        return

    def StaticCatenoid(self, parameters: dict) -> None:
        report = self.fReport

        state = TPZPhysicalGauge.StaticCatenoid(parameters['npoints'])
        trajectory = TPZPhysicalGauge.Evolve(state, parameters['dt'], parameters['steps'], parameters['record'])
        self.TrajectoryTable('membrane_static_catenoid', trajectory)

        report.Flag('membrane.static.no_blowup', not trajectory.BlewUp())
        report.Check('membrane.static.stationary', np.max(np.abs(trajectory.Final().fR - state.fR)), 1e-4)

        _, integrals, accelerations, _ = TPZPhysicalGauge.SingularitySearch(trajectory)
        report.Check('membrane.static.acceleration', np.max(np.abs(accelerations)) / integrals[0], 1e-3)

        self.fCurves['membrane_static_profile'] = (np.column_stack([state.fR, np.zeros(len(state.fR)), state.fZ]), False, state.fR)

        return

    def MembraneTorus(self, parameters: dict) -> None:
        report = self.fReport

        state = TPZPhysicalGauge.Torus(parameters['npoints'], bump=0.1)
        trajectory = TPZPhysicalGauge.Evolve(state, parameters['dt'], parameters['steps'], parameters['record'])
        self.TrajectoryTable('membrane_torus', trajectory)

        report.Flag('membrane.torus.constraints_kept', not trajectory.fLosses and not trajectory.BlewUp())
        report.Check('membrane.torus.constraint_drift', np.max(trajectory.Monitor()), 1e-6)
        report.Check('membrane.torus.u_angles', state.UAngles()[2], 1e-7)

        final = trajectory.Final()
        self.fCurves['membrane_torus_profile'] = (np.column_stack([final.fR, np.zeros(len(final.fR)), final.fZ]), True, final.fR)

        return

    def RippledRing(self, parameters: dict) -> None:
        report = self.fReport
        npoints = parameters['npoints']

        phi = 2 * np.pi * np.arange(npoints) / npoints
        state = TPZRState(1 + 0.1 * np.cos(phi), np.zeros(npoints))
        trajectory = TPZRHamiltonian.Evolve(state, parameters['dt'], parameters['steps'], parameters['record'])

        report.Flag('membrane.ring.no_blowup', not trajectory.BlewUp())
        report.Check('membrane.ring.energy_drift', np.max(trajectory.Monitor()), 1e-8)
        report.Check('membrane.ring.momentum', max(abs(snapshot.Momentum()) for snapshot in trajectory.fStates), 1e-10)

        rows = [{"t": time, "energy": snapshot.Energy(), "drift": monitor, "r_min": float(np.min(snapshot.fR)),
                 "r_max": float(np.max(snapshot.fR))}
                for time, snapshot, monitor in zip(trajectory.fTimes, trajectory.fStates, trajectory.fMonitor)]
        report.Table('membrane_rippled_ring', rows)

        if len(trajectory) >= 5:
            zeta, defect = TPZRHamiltonian.ReconstructZeta(trajectory)
            report.Check('membrane.ring.zeta_compatibility', np.max(np.abs(defect)), 1e-4)
            report.Table('membrane_zeta', [{"t": time, "phi": angle, "zeta": value}
                                           for time, line in zip(trajectory.fTimes, zeta) for angle, value in zip(phi, line)])

        return

    def CrossGauge(self, parameters: dict) -> None:
        report = self.fReport
        npoints, dt = parameters['npoints'], parameters['dt']
        duration = dt * parameters['steps']

        rows = []
        for points, step in (((npoints + 1) // 2, 2 * dt), (npoints, dt)):
            distance, start, physical = TPZGaugeMap.CrossGauge(TPZGaugeMap.RippledPlane(points), duration, step, 10 * step)
            rows.append({"npoints": points, "dt": step, "t0": start, "t1": start + duration, "l2_distance": distance,
                         "max_defect": float(np.max(physical.Monitor()))})

        report.Table('membrane_cross_gauge', rows)
        report.Check('membrane.cross_gauge.distance', rows[-1]['l2_distance'], 1e-3)
        report.Check('membrane.cross_gauge.refinement', rows[0]['l2_distance'] / rows[-1]['l2_distance'], 4., '>')

        return

    def LinearizedCatenoid(self, parameters: dict) -> None:
        report = self.fReport
        dt, steps = parameters['dt'], parameters['steps']

        eigenvalue, mode = TPZRHamiltonian.GroundMode(6., parameters['npoints'])
        eps = TPZRHamiltonian.EvolveLinearized(mode, dt, steps)
        times = dt * np.arange(steps + 1)
        amplitude = eps[:, len(mode) // 2]

        rate = TPZRHamiltonian.GrowthRate(times, amplitude)
        report.Check('membrane.linearized.ground_eigenvalue', eigenvalue, -8 / 15, '<')
        report.Check('membrane.linearized.growth_rate', abs(rate / np.sqrt(-eigenvalue) - 1), 0.02)

        z = np.linspace(-4., 4., 401)
        operator = TPZRHamiltonian.LinearizedOperator(z)
        zeroModes = max(np.max(np.abs(operator @ np.sinh(z))), np.max(np.abs(operator @ (np.cosh(z) - z * np.sinh(z)))))
        report.Check('membrane.linearized.zero_modes', zeroModes, 1e-6)

        report.Table('membrane_linearized', [{"t": time, "amplitude": value, "predicted": np.cosh(np.sqrt(-eigenvalue) * time)}
                                             for time, value in zip(times, amplitude)])

        return

    def NullCatenoid(self, parameters: dict) -> None:
        report = self.fReport
        npoints = parameters['npoints']

        thetaPlus, thetaMinus = np.linspace(0.6, 1.4, npoints), np.linspace(-1.4, -0.6, npoints)
        fields = TPZCharacteristicFields.Catenoid(thetaPlus, thetaMinus, rapidity=self.rapidity)

        rows = []
        for name, value in fields.Report().items():
            report.Check(f'membrane.characteristic.{name}', value, 1e-6)
            rows.append({"suite": name, "max_residual": value})

        for name, residual in TPZNullMarch.LightCone(fields).items():
            value = np.max(np.abs(residual))
            report.Check(f'membrane.light_cone.{name}', value, 1e-6)
            rows.append({"suite": f'light_cone.{name}', "max_residual": value})

        reference = TPZZeroCurvature.Residual(fields)
        for gauge, lam in enumerate((None,) + self.spectralGauges):
            residuals = reference if lam is None else TPZZeroCurvature.Residual(fields, lam)
            for representation, value, base in zip(('3x3', '2x2'), residuals, reference):
                report.Check(f'membrane.zero_curvature.{representation}.gauge={gauge}', value, 1e-6)
                rows.append({"suite": f'zero_curvature.{representation}.gauge={gauge}', "max_residual": value})
                if lam is not None:
                    report.Check(f'membrane.zero_curvature.{representation}.gauge={gauge}.invariance', abs(value - base), 1e-8)

        lax = TPZLaxFields(fields, self.spectralGauges[0])
        for name, residual in lax.GcmpResiduals().items():
            report.Check(f'membrane.gcmp.{name}', np.max(np.abs(residual)), 1e-6)

        report.Check('membrane.gcmp.minimality', np.max(np.abs(lax.MinimalityDefect())), 1e-6)

        _, metricDefect, transportDefect = TPZZeroCurvature.LaxFrame(lax)
        report.Check('membrane.lax_frame.metric', metricDefect, 1e-12)
        report.Check('membrane.lax_frame.transport', transportDefect, 1e-6)

        position = fields.Position()
        marched = TPZNullMarch.March(thetaPlus, thetaMinus, position[:, :, 0], position[:, 0, :])
        report.Check('membrane.march.error', np.max(np.abs(marched.Position() - position)), 1e-3)
        report.Check('membrane.march.null_defect', max(np.max(np.abs(defect)) for defect in marched.NullDefects()), 1e-3)

        report.Table('membrane_residual_suites', rows)

        sheet = np.moveaxis(marched.Position(), 0, -1)
        self.fSurfaces['membrane_null_catenoid'] = (sheet, False, False, marched.fR.reshape(-1))

        return
