import sys
from typing import Any, Dict, List, Optional
from dotenv import load_dotenv
from pandas import DataFrame
from .cli_build import _build_parser, _build_points, _build_settings
from .cli_print import _print_error, _print_frame, _print_points_status, _print_text
from .cli_process import (
    FUNCTIONAL_COLUMNS,
    FUNCTIONAL_QUANTITIES,
    LINK_COLUMNS,
    _process_functional_point,
    _process_link_point,
    _process_points,
    _process_simulations
)
from .cli_validate import _validate_format, _validate_required
from .cli_verify import verify_suite
from .combinatorics_main import dump_matrices
from .utils import AccuracyError, InterferenceError, load_config


EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ACCURACY = 3
EXIT_VERIFY_FAILED = 4


def _run_evaluations(settings: Dict[str, Any], quantity: str) -> DataFrame:
    """Evaluate the analytic quantity of every point of the settings."""
    points = _build_points(dict(settings, quantity = settings.get("quantity") or quantity))
    for point in points:
        _validate_required(point, "intensity", "--lambda")
    if points[0]["quantity"] in FUNCTIONAL_QUANTITIES:
        return _process_points(points, _process_functional_point, FUNCTIONAL_COLUMNS, settings["n_jobs"] or 1, not settings["quiet"])
    return _process_points(points, _process_link_point, LINK_COLUMNS, settings["n_jobs"] or 1, not settings["quiet"])



def _run_simulations(settings: Dict[str, Any]) -> DataFrame:
    points = _build_points(settings)
    for point in points:
        _validate_required(point, "intensity", "--lambda")
    return _process_simulations(points, not settings["quiet"])



def _run_command(command: str, settings: Dict[str, Any]) -> DataFrame:
    """Dispatch a subcommand and return its result rows."""
    if command == "functional":
        return _run_evaluations(settings, "functional")
    if command == "outage":
        return _run_evaluations(settings, "outage")
    if command == "joint":
        return _run_evaluations(settings, "joint")
    if command == "simulate":
        return _run_simulations(settings)
    if command == "sweep":
        if settings.get("preset") is None:
            _validate_required(settings, "quantity", "--quantity or --preset")
        return _run_evaluations(settings, settings.get("quantity") or "outage")
    return verify_suite(
        suite = settings["suite"],
        seed = settings["seed"],
        reps = settings["reps"],
        n_jobs = settings["n_jobs"],
        interactive_mode = not settings["quiet"]
    )



def run(argv: Optional[List[str]] = None) -> int:
    """Run the command-line interface.

    Subcommands: functional, outage, joint, simulate, sweep and verify. Results go to
    standard output or --out as CSV (default) or JSON lines; status messages go to
    standard error.

    Args:
        argv (Optional[List[str]]): The arguments without the program name. Defaults to
            sys.argv[1:].

    Returns:
        int: 0 on success, 2 on a usage error, 3 on a numerical accuracy failure and 4
            when a verify check fails.

    Examples:
        >>> from interferencepy.cli_main import run
        >>> run(["outage", "--m", "3", "--theta", "0.5", "--d", "2", "--lambda", "0.01", "--quiet"])  # doctest: +SKIP
        0
    """
    load_dotenv()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        config = load_config(args.config) if args.config else {}
    except InterferenceError as e:
        _print_error(str(e))
        return EXIT_USAGE
    try:
        settings = _build_settings(args, config)
        _validate_format(settings["format"])
        if args.command == "functional" and settings["dump_matrices"]:
            _print_text(dump_matrices(settings["p"]) + "\n", settings["out"])
            return EXIT_OK
        df = _run_command(args.command, settings)
    except AccuracyError as e:
        _print_error(str(e))
        return EXIT_ACCURACY
    except ValueError as e:
        _print_error(str(e))
        return EXIT_USAGE
    except InterferenceError as e:
        _print_error(str(e))
        return EXIT_ACCURACY
    _print_frame(df, settings["format"], settings["out"])
    if args.command == "verify":
        return EXIT_OK if df["passed"].all() else EXIT_VERIFY_FAILED
    _print_points_status(df, args.command, not settings["quiet"])
    return EXIT_OK



def main() -> None:
    """Console entry point."""
    sys.exit(run())
