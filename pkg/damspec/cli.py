import argparse
import logging
import sys
import typing

from damspec.config import ExitCode, RunMode, SolverMethod
from damspec.config_helper import ConfigHelper
from damspec.error import ConfigError, DiscrepancyError, DomainError, SolverError
from damspec.run_property import RunProperty
from damspec.runner import CompareReport, run
from damspec.utils import PackageInfo, configure_logging

_logger: logging.Logger = logging.getLogger(__name__)


def make_parser() -> argparse.ArgumentParser:
    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="damspec",
        description="Dressed-atom multiphoton spectroscopy: pathway analysis and optical Bloch spectra.",
    )
    parser.add_argument("--version", action="version", version=PackageInfo.package_full_name())
    parser.add_argument("verb", choices=RunMode.list(), help="What to run.")
    parser.add_argument("--config", required=True, help="Path to a JSON run configuration.")
    parser.add_argument("--out", default=None, help="Output directory, overrides output_dir.")
    parser.add_argument("--method", choices=SolverMethod.list(), default=None, help="Oracle solver method.")
    parser.add_argument("--grid", default=None, metavar="MIN:MAX:POINTS", help="Probe detuning grid, units of gamma.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Log debug output.")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Log warnings and errors only.")
    return parser


def load(args: argparse.Namespace) -> RunProperty:
    info: RunProperty = ConfigHelper.read_config(args.config)
    return ConfigHelper.apply_overrides(
        info, output_dir=args.out, method=args.method, grid=args.grid, mode=RunMode(args.verb)
    )


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """
    Command line entry point; returns the process exit code.
    """
    args: argparse.Namespace = make_parser().parse_args(argv)
    configure_logging(verbose=args.verbose, quiet=args.quiet)
    try:
        info: RunProperty = load(args)
        result: typing.Any = run(info)
        if isinstance(result, CompareReport) and not result.concordant:
            raise DiscrepancyError(
                "{} predicted two-photon peaks have no oracle counterpart within {:.3g}".format(
                    sum(1 for p in result.unmatched_predictions if p.photons == 2), result.tolerance
                )
            )
    except (ConfigError, DomainError) as e:
        _logger.error("Invalid run configuration: {}".format(e))
        return ExitCode.CONFIG_ERROR
    except SolverError as e:
        _logger.error("Solver failure: {}".format(e))
        return ExitCode.SOLVER_ERROR
    except DiscrepancyError as e:
        _logger.error("Discrepant compare: {}".format(e))
        return ExitCode.DISCREPANT
    return ExitCode.SUCCESS


if __name__ == "__main__":
    sys.exit(main())
