"""
Run configuration
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
import os
from pathlib import Path
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZErrors import TPZUsageError

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZRunConfig(TPZBasicDataStructure):
    """
    Fields:
        - subcommand: one of the PRESETS keys
        - parameters: preset values updated by the quick overrides and the user values
        - outputDir: directory receiving tables, manifest and surface files
        - seed: seed of numpy.random.default_rng for every random sweep
        - format: 'csv' or 'json' tables
        - quick: smaller sweeps
        - vtk, msh: also write surfaces as legacy VTK and gmsh files
    """
    formats: ClassVar[tuple] = ('csv', 'json')
    environment: ClassVar[str] = 'MINSURF_OUT'

    # list valued parameters are comma separated strings, sizes are written 'nxk'
    PRESETS: ClassVar[dict] = {
        'catenoid': {'rho': 2.0, 'rho_min': 1.55, 'rho_max': 4.0, 'rho_count': 25, 'resolution': 2048,
                     'stability_rhos': '1.6,2,3', 'below_critical': 1.2, 'eps_values': '0.1,0.01,0.001'},
        'spectrum': {'trial_powers': '1,1.5,2', 'scattering_k': '0,0.5,1,2', 'excited': 1},
        'separable': {'points': 100, 'weierstrass_points': 50},
        'rotate': {'fixtures': '1x3,2x5', 'cloud_points': 256, 'times': 8, 'residual_points': 500},
        's3-torus': {'family': '0,0.5,1,2', 'samples': 64, 'grid': 32},
        'stiefel': {'sizes': '3x2,3x3,4x3,5x4', 'points': 20, 'max_k': 6},
        'detvar': {'sizes': '3x2,4x3', 'formula_sizes': '3x2,4x3,5x3,5x4', 'points': 50},
        'membrane': {'preset': 'collapsing-circle', 'npoints': 0, 'dt': 0.0, 'steps': 0, 'record': 0},
        'verify-all': {},
    }
    QUICK: ClassVar[dict] = {
        'catenoid': {'rho_count': 8},
        'spectrum': {'excited': 0},
        'separable': {'points': 20, 'weierstrass_points': 5},
        'rotate': {'cloud_points': 64, 'times': 4, 'residual_points': 100},
        's3-torus': {'samples': 16, 'grid': 16},
        'stiefel': {'points': 3},
        'detvar': {'points': 5},
        'membrane': {},
        'verify-all': {},
    }
    # zeros in the membrane parameters select these values
    MEMBRANE_PRESETS: ClassVar[dict] = {
        'collapsing-circle': {'npoints': 32, 'dt': 0.01, 'steps': 200, 'record': 1},
        'static-catenoid': {'npoints': 101, 'dt': 0.002, 'steps': 100, 'record': 1},
        'torus': {'npoints': 64, 'dt': 0.005, 'steps': 100, 'record': 10},
        'rippled-ring': {'npoints': 256, 'dt': 1e-3, 'steps': 1000, 'record': 50},
        'linearized-catenoid': {'npoints': 601, 'dt': 0.01, 'steps': 500, 'record': 1},
        'null-catenoid': {'npoints': 41, 'dt': 0.0, 'steps': 0, 'record': 1},
        'cross-gauge': {'npoints': 81, 'dt': 0.001, 'steps': 300, 'record': 1},
    }

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, subcommand: str, parameters: dict = None, outputDir='.', seed: int = 20240613,
                 tableFormat: str = 'csv', quick: bool = False, vtk: bool = False, msh: bool = False) -> None:
        super().__init__()

        self.fSubcommand: str = subcommand
        self.fParameters: dict = {}
        self.fOutputDir: Path = Path(outputDir)
        self.fSeed: int = seed
        self.fFormat: str = tableFormat
        self.fQuick: bool = quick
        self.fVtk: bool = vtk
        self.fMsh: bool = msh

        self.DeactivateAttr()

        self.__post_init__(parameters or {})

        return

    def __post_init__(self, overrides: dict) -> None:
        if self.fSubcommand not in self.PRESETS:
            self.DebugStop(f'ERROR: unknown subcommand {self.fSubcommand!r}', TPZUsageError)

        if self.fFormat not in self.formats:
            self.DebugStop(f'ERROR: unknown table format {self.fFormat!r}', TPZUsageError)

        defaults = self.PRESETS[self.fSubcommand]
        unknown = sorted(set(overrides) - set(defaults))
        if unknown:
            self.DebugStop(f'ERROR: {self.fSubcommand} does not take {", ".join(unknown)}', TPZUsageError)

        parameters = dict(defaults)
        if self.fQuick:
            parameters.update(self.QUICK[self.fSubcommand])

        for key, value in overrides.items():
            if value is not None:
                parameters[key] = self.Coerce(key, value, type(defaults[key]))

        if self.fSubcommand == 'membrane':
            parameters = self.MembraneParameters(parameters)

        self.fParameters = parameters

        return

#   ******************
#       METHODS
#   ******************
    def Coerce(self, key: str, value, kind: type):
        try:
            return kind(value)

        except (TypeError, ValueError):
            self.DebugStop(f'ERROR: parameter {key} expects {kind.__name__}, got {value!r}', TPZUsageError)

    def MembraneParameters(self, parameters: dict) -> dict:
        preset = parameters['preset']
        if preset not in self.MEMBRANE_PRESETS:
            self.DebugStop(f'ERROR: unknown membrane preset {preset!r}', TPZUsageError)

        for key, value in self.MEMBRANE_PRESETS[preset].items():
            if not parameters[key]:
                parameters[key] = value

        return parameters

    def Floats(self, key: str) -> list[float]:
        return [float(item) for item in str(self.fParameters[key]).split(',') if item]

    def Sizes(self, key: str) -> list[tuple[int, int]]:
        """
        '3x2,4x3' -> [(3, 2), (4, 3)]
        """
        sizes = []
        for item in str(self.fParameters[key]).split(','):
            try:
                rows, columns = item.lower().split('x')
                sizes.append((int(rows), int(columns)))

            except ValueError:
                self.DebugStop(f'ERROR: size {item!r} of {key} is not of the form nxk', TPZUsageError)

        return sizes

    def Rng(self) -> np.random.Generator:
        return np.random.default_rng(self.fSeed)

    def Echo(self) -> dict:
        return {"subcommand": self.fSubcommand, "parameters": dict(self.fParameters), "output_dir": str(self.fOutputDir),
                "seed": self.fSeed, "format": self.fFormat, "quick": self.fQuick, "vtk": self.fVtk, "msh": self.fMsh}

    @staticmethod
    def ResolveOutputDir(outputDir) -> Path:
        """
        MINSURF_OUT, when set and not empty, wins over the command-line directory
        """
        override = os.environ.get(TPZRunConfig.environment)
        if override:
            logger.info('output directory taken from %s: %s', TPZRunConfig.environment, override)
            return Path(override)

        return Path(outputDir)
