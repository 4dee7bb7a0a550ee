"""
Command-line front end of the minimal surface laboratory. Every subcommand writes
its tables and a JSON manifest to the output directory; the exit status is 0 when
every check passes, 1 when one fails and 2 on a usage error.

    python MainMinimalSurfaces.py catenoid --rho 2.0
    python MainMinimalSurfaces.py membrane --preset collapsing-circle --steps 1000
    python MainMinimalSurfaces.py verify-all --quick
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import argparse
import logging
import sys

from src.TPZErrors import TPZUsageError
from src.TPZModel import TPZModel
from src.TPZRunConfig import TPZRunConfig

logger = logging.getLogger(__name__)

#%% ******************
#     ARGUMENTS
#   ******************
def BuildParser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--output-dir', default='.',
        help='directory of the tables, manifest and surface files (MINSURF_OUT wins when set)')
    common.add_argument('--seed', default=20240613, type=int,
        help='seed of the random point sweeps')
    common.add_argument('--format', default='csv', choices=TPZRunConfig.formats, dest='table_format',
        help='format of the tables')
    common.add_argument('--quick', action='store_true',
        help='smaller sweeps')
    common.add_argument('--vtk', action='store_true',
        help='also write the sampled surfaces as legacy VTK files')
    common.add_argument('--msh', action='store_true',
        help='also write the sampled surfaces as gmsh meshes')
    common.add_argument('-v', '--verbose', action='store_true',
        help='debug logging')

    parser = argparse.ArgumentParser(
        prog='python MainMinimalSurfaces.py',
        description='Numerical checks of minimal surfaces, zero mean curvature membranes and their spectra')
    subparsers = parser.add_subparsers(dest='subcommand', required=True)

    for subcommand, defaults in TPZRunConfig.PRESETS.items():
        subparser = subparsers.add_parser(subcommand, parents=[common])

        for key, value in defaults.items():
            choices = list(TPZRunConfig.MEMBRANE_PRESETS) if key == 'preset' else None
            subparser.add_argument(f'--{key}', type=type(value), choices=choices, default=None,
                help=f'default {value!r}')

    return parser

#%% ******************
#     MAIN FUNCTION
#   ******************
def main(argv: list[str] = None) -> int:
    """
    Returns the exit status
    """
    args = BuildParser().parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    parameters = {key: getattr(args, key) for key in TPZRunConfig.PRESETS[args.subcommand]}

    try:
        config = TPZRunConfig(args.subcommand, parameters, TPZRunConfig.ResolveOutputDir(args.output_dir), args.seed,
                              args.table_format, args.quick, args.vtk, args.msh)
        model = TPZModel(config)
        status = model.Run()

    except TPZUsageError as error:
        logger.error('%s', error)
        return 2

    report = model.fReport
    print(f"{args.subcommand}: {len(report.fChecks) - len(report.Failures())}/{len(report.fChecks)} checks passed, "
          f"artifacts in {config.fOutputDir}")

    return status

if __name__ == '__main__':
    sys.exit(main())
