import json

import numpy as np
import pytest

from MainMinimalSurfaces import main
from src.TPZCheckReport import TPZCheckReport
from src.TPZErrors import TPZError, TPZUsageError
from src.TPZGmshToolkit import TPZGmshToolkit
from src.TPZModel import TPZModel
from src.TPZRunConfig import TPZRunConfig
from src.TPZVtkGenerator import TPZVtkGenerator


# configuration

def test_presets_fill_missing_parameters():
    config = TPZRunConfig('catenoid', {'rho': 3.})

    assert config.fParameters['rho'] == 3.
    assert config.fParameters['resolution'] == 2048
    assert config.Floats('stability_rhos') == [1.6, 2., 3.]


def test_quick_then_user_values():
    config = TPZRunConfig('separable', {'points': 7}, quick=True)

    assert config.fParameters == {'points': 7, 'weierstrass_points': 5}


def test_none_keeps_the_default():
    config = TPZRunConfig('stiefel', {'points': None, 'max_k': 4})

    assert config.fParameters['points'] == 20
    assert config.fParameters['max_k'] == 4


def test_values_are_coerced_to_the_default_type():
    config = TPZRunConfig('detvar', {'points': '12'})

    assert config.fParameters['points'] == 12
    assert isinstance(config.fParameters['points'], int)


@pytest.mark.parametrize('subcommand, parameters, tableFormat', [
    ('catenoid', {'radius': 1.}, 'csv'),
    ('catenoid', {'rho': 'two'}, 'csv'),
    ('spline', {}, 'csv'),
    ('stiefel', {}, 'xml'),
    ('membrane', {'preset': 'sphere'}, 'csv'),
])
def test_usage_errors(subcommand, parameters, tableFormat):
    with pytest.raises(TPZUsageError):
        TPZRunConfig(subcommand, parameters, tableFormat=tableFormat)


def test_membrane_presets_fill_zeros():
    ring = TPZRunConfig('membrane', {'preset': 'rippled-ring'})
    circle = TPZRunConfig('membrane', {'preset': 'collapsing-circle', 'steps': 1000})

    assert ring.fParameters == {'preset': 'rippled-ring', 'npoints': 256, 'dt': 1e-3, 'steps': 1000, 'record': 50}
    assert circle.fParameters['steps'] == 1000
    assert circle.fParameters['dt'] == 0.01


def test_sizes():
    config = TPZRunConfig('stiefel', {'sizes': '3x2,5X4'})

    assert config.Sizes('sizes') == [(3, 2), (5, 4)]

    with pytest.raises(TPZUsageError):
        TPZRunConfig('stiefel', {'sizes': '3-2'}).Sizes('sizes')


def test_seeded_generator_is_reproducible():
    config = TPZRunConfig('detvar', seed=7)

    assert np.array_equal(config.Rng().normal(size=5), config.Rng().normal(size=5))


def test_environment_overrides_output_dir(monkeypatch, tmp_path):
    monkeypatch.setenv('MINSURF_OUT', str(tmp_path))
    assert TPZRunConfig.ResolveOutputDir('elsewhere') == tmp_path

    monkeypatch.setenv('MINSURF_OUT', '')
    assert str(TPZRunConfig.ResolveOutputDir('elsewhere')) == 'elsewhere'


def test_locked_attributes():
    config = TPZRunConfig('separable')

    with pytest.raises(TPZError):
        config.fPoints = 3

    config.fSeed = 3
    assert config.fSeed == 3


def test_printing_summarizes_arrays():
    vtk = TPZVtkGenerator()
    vtk.AddCurve(np.zeros((10, 3)))

    assert 'fPoints=[array(10, 3)]' in str(vtk)
    assert 'fPointCount=10' in str(vtk)


# check report

def test_relations_and_non_finite_values():
    report = TPZCheckReport(TPZRunConfig('separable'))

    assert report.Check('small', 1e-12, 1e-10)
    assert report.Check('positive', 0.5, 0., '>')
    assert not report.Check('large', 1e-3, 1e-10)
    assert not report.Check('nan', float('nan'), 1.)
    assert not report.Check('inf', np.inf, 0., '>')
    assert report.Flag('flag', True)

    assert report.Failures() == ['large', 'nan', 'inf']
    assert not report.Passed()

    with pytest.raises(TPZError):
        report.Check('relation', 1., 1., '==')


def test_csv_tables_keep_full_precision(tmp_path):
    report = TPZCheckReport(TPZRunConfig('separable'))
    report.Table('values', [{"x": 0.1, "n": 3, "stable": True, "name": "outer"}])
    report.WriteTables(tmp_path)

    lines = (tmp_path / 'values.csv').read_text().splitlines()

    assert lines == ['x,n,stable,name', '0.10000000000000001,3,true,outer']
    assert report.fArtifacts == ['values.csv']


def test_json_tables_and_manifest(tmp_path):
    config = TPZRunConfig('separable', tableFormat='json')
    report = TPZCheckReport(config)
    report.Check('residual', 1e-12, 1e-8)
    report.Table('values', [{"x": float('nan'), "y": np.float64(2.)}])
    report.WriteTables(tmp_path)

    rows = json.loads((tmp_path / 'values.json').read_text())
    manifest = json.loads(report.WriteManifest(tmp_path).read_text())

    assert rows == [{"x": None, "y": 2.}]
    assert set(manifest) == {'version', 'subcommand', 'config', 'wall_time', 'checks', 'passed', 'artifacts'}
    assert manifest['passed'] is True
    assert manifest['config']['parameters'] == config.fParameters
    assert manifest['checks'][0] == {"name": "residual", "value": 1e-12, "relation": "<=", "tolerance": 1e-8, "passed": True}


# surface files

def Grid(nu: int, nv: int) -> np.ndarray:
    u, v = np.meshgrid(np.linspace(0., 1., nu), np.linspace(0., 2., nv), indexing='ij')
    return np.stack([u, v, u * v], axis=-1)


def test_vtk_counts(tmp_path):
    vtk = TPZVtkGenerator()
    vtk.AddSurface(Grid(4, 5), np.arange(20.))
    vtk.AddSurface(Grid(4, 5), closedU=True, closedV=True)
    vtk.AddCurve(np.zeros((6, 2)), closed=True)

    text = vtk.WriteVTK(tmp_path / 'grid').read_text()

    assert vtk.fPointCount == 46
    assert len(vtk.fCells) == 12 + 20 + 1
    assert vtk.fCells[-1] == [40, 41, 42, 43, 44, 45, 40]
    assert 'POINTS 46 double' in text
    assert f'CELLS 33 {32 * 5 + 8}' in text
    assert 'CELL_TYPES 33' in text
    assert 'POINT_DATA 46' in text


def test_vtk_rejects_bad_input(tmp_path):
    vtk = TPZVtkGenerator()

    with pytest.raises(TPZError):
        vtk.WriteVTK(tmp_path / 'empty')

    with pytest.raises(TPZError):
        vtk.AddCurve(np.zeros((3, 2)), scalars=np.zeros(2))


def test_gmsh_file(tmp_path):
    path = TPZGmshToolkit.WriteGeometries(tmp_path / 'grid', {'sheet': (Grid(4, 5), False, True)},
                                          {'ring': (np.zeros((6, 2)), True)})
    text = path.read_text()

    assert path.name == 'grid.msh'
    assert '$MeshFormat' in text
    assert '$Elements' in text
    assert 'sheet' in text and 'ring' in text


def test_revolve_and_stereographic():
    surface = TPZModel.Revolve(np.array([-1., 0., 1.]), np.array([2., 1., 2.]), 8)
    q = np.array([[1., 0.], [0., 0.], [0., 1.], [0., 0.]])

    assert surface.shape == (3, 8, 3)
    assert np.allclose(np.hypot(surface[..., 0], surface[..., 1]), [[2.], [1.], [2.]])
    assert np.allclose(TPZModel.Stereographic(q), [[1., 0., 0.], [0., 0., 1.]])


# command line

def test_bad_flags_exit_2(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(['separable', '--radius', '1', '--output-dir', str(tmp_path)])
    assert info.value.code == 2

    with pytest.raises(SystemExit) as info:
        main(['membrane', '--preset', 'sphere'])
    assert info.value.code == 2


def test_bad_sizes_exit_2(tmp_path):
    assert main(['stiefel', '--sizes', '3-2', '--output-dir', str(tmp_path)]) == 2


def test_quick_separable_run(tmp_path):
    status = main(['separable', '--quick', '--output-dir', str(tmp_path)])
    manifest = json.loads((tmp_path / 'separable_manifest.json').read_text())

    assert status == 0
    assert manifest['passed'] is True
    assert 'separable_catalog.csv' in manifest['artifacts']
    assert any(check['name'] == 'separable.weierstrass_ode' for check in manifest['checks'])


def test_reruns_are_byte_identical(tmp_path):
    first, second = tmp_path / 'first', tmp_path / 'second'
    main(['separable', '--quick', '--output-dir', str(first)])
    main(['separable', '--quick', '--output-dir', str(second)])

    assert (first / 'separable_catalog.csv').read_bytes() == (second / 'separable_catalog.csv').read_bytes()


@pytest.mark.slow
def test_catenoid_run_with_surfaces(tmp_path):
    status = main(['catenoid', '--rho', '2.0', '--quick', '--vtk', '--msh', '--output-dir', str(tmp_path)])
    manifest = json.loads((tmp_path / 'catenoid_manifest.json').read_text())
    rows = (tmp_path / 'catenoid_branches.csv').read_text().splitlines()

    assert status == 0
    assert rows[1].startswith('2,outer,0.5893')
    assert rows[2].startswith('2,inner,2.1267')
    assert {'catenoid_outer.vtk', 'catenoid_inner.vtk', 'catenoid.msh'} <= set(manifest['artifacts'])
