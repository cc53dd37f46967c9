import argparse
from typing import Any, Dict, List, Tuple
from .cli_option import SweepSpec
from .cli_validate import VALID_FORMATS, VALID_QUANTITIES, VALID_SCALES, VALID_SUITES, _validate_quantity
from .functionals_option import FunctionalSpec, NetworkConfig
from .models_build import parse_fading, parse_pathloss
from .models_option import FadingModel, PathLossModel
from .outage_option import LinkConfig
from .outage_validate import VALID_METHODS
from .quadrature_option import QuadratureOption
from .simulator_option import SimConfig


TRUE_WORDS = {"1", "true", "yes", "on"}
FALSE_WORDS = {"0", "false", "no", "off"}


def _build_exponents(text: str) -> Tuple[int, ...]:
    """Parse an exponent vector such as '2' or '1,1'."""
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid exponent vector: '{text}' (expected integers such as 1,1)")
    if any(value < 0 for value in values) or sum(values) == 0:
        raise argparse.ArgumentTypeError(f"invalid exponent vector: '{text}' (non-negative with a positive sum)")
    return values



def _build_range(text: str) -> Tuple[float, float, int]:
    """Parse a sweep range 'lo:hi:steps'."""
    parts = text.split(":")
    try:
        if len(parts) != 3:
            raise ValueError
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range: '{text}' (expected lo:hi:steps)")



def _build_flag(text: str) -> bool:
    """Parse a boolean configuration value."""
    word = text.strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise argparse.ArgumentTypeError(f"invalid boolean: '{text}'")


# Every option shared by the subcommands: (flag, argparse keyword arguments). Config files
# use the same names without the leading dashes.
FLAGS: List[Tuple[str, Dict[str, Any]]] = [
    ("--lambda", {"dest": "intensity", "type": float, "help": "interferer intensity (nodes per unit area)"}),
    ("--tx-prob", {"dest": "tx_prob", "type": float, "help": "ALOHA transmit probability in [0, 1]"}),
    ("--alpha", {"type": float, "help": "path loss exponent, alpha > 2"}),
    ("--pathloss", {"type": str, "help": "singular, min, eps:e or dist1"}),
    ("--epsilon", {"type": float, "help": "offset of the eps path loss model"}),
    ("--fading", {"type": str, "help": "rayleigh, erlang:k, rice:k,psi or nakagami:m"}),
    ("--m", {"type": int, "help": "Nakagami shape of the link and interferers; overrides --fading"}),
    ("--theta", {"type": float, "help": "SIR threshold"}),
    ("--d", {"type": float, "help": "link distance"}),
    ("--d-base", {"dest": "d_base", "type": float, "help": "use d = d_base^(1/alpha) instead of --d"}),
    ("--p", {"type": _build_exponents, "help": "per-slot exponents, e.g. 1,1"}),
    ("--c", {"type": float, "help": "damping constant of the functional"}),
    ("--method", {"choices": sorted(VALID_METHODS), "help": "evaluation path of outage quantities"}),
    ("--reps", {"type": int, "help": "Monte Carlo replications"}),
    ("--seed", {"type": int, "help": "Monte Carlo base seed"}),
    ("--window", {"type": float, "help": "simulation window radius (chosen automatically if omitted)"}),
    ("--batch-size", {"dest": "batch_size", "type": int, "help": "replications per batch"}),
    ("--bias-tol", {"dest": "bias_tol", "type": float, "help": "relative truncation bias target"}),
    ("--max-points", {"dest": "max_points", "type": float, "help": "cap on expected points per replication"}),
    ("--tail-compensation", {"dest": "tail_compensation", "action": "store_true", "help": "add the mean interference beyond the window"}),
    ("--quantity", {"choices": sorted(VALID_QUANTITIES), "help": "quantity of a sweep or simulation"}),
    ("--preset", {"type": str, "help": "figure preset fig1 ... fig7"}),
    ("--lambda-sweep", {"dest": "lambda_sweep", "type": _build_range, "help": "sweep lambda over lo:hi:steps"}),
    ("--alpha-sweep", {"dest": "alpha_sweep", "type": _build_range, "help": "sweep alpha over lo:hi:steps"}),
    ("--scale", {"choices": sorted(VALID_SCALES), "help": "grid scale of a sweep"}),
    ("--suite", {"choices": sorted(VALID_SUITES), "help": "verify suite"}),
    ("--dump-matrices", {"dest": "dump_matrices", "action": "store_true", "help": "write the matrix classes of --p as JSON and exit"}),
    ("--format", {"choices": sorted(VALID_FORMATS), "help": "output format"}),
    ("--out", {"type": str, "help": "output path (standard output if omitted)"}),
    ("--n-jobs", {"dest": "n_jobs", "type": int, "help": "worker count, -1 for every core"}),
    ("--quiet", {"action": "store_true", "help": "suppress status messages and progress bars"}),
    ("--abs-tol", {"dest": "abs_tol", "type": float, "help": "absolute quadrature tolerance"}),
    ("--rel-tol", {"dest": "rel_tol", "type": float, "help": "relative quadrature tolerance"})
]

CLI_DEFAULTS: Dict[str, Any] = {
    "intensity": None,
    "tx_prob": 1.0,
    "alpha": 4.0,
    "pathloss": "singular",
    "epsilon": None,
    "fading": "rayleigh",
    "m": None,
    "theta": 1.0,
    "d": 1.0,
    "d_base": None,
    "p": (1,),
    "c": 1.0,
    "method": "auto",
    "reps": None,
    "seed": 0,
    "window": None,
    "batch_size": 1000,
    "bias_tol": 1e-3,
    "max_points": 50_000,
    "tail_compensation": False,
    "quantity": None,
    "preset": None,
    "lambda_sweep": None,
    "alpha_sweep": None,
    "scale": "linear",
    "suite": "quick",
    "dump_matrices": False,
    "format": "csv",
    "out": None,
    "n_jobs": None,
    "quiet": False,
    "abs_tol": None,
    "rel_tol": None
}

_ALPHAS = [{"alpha": alpha} for alpha in (2.5, 3.0, 4.0, 5.0)]
_SHAPES = [{"m": m} for m in range(1, 6)]
_LINK = {"m": 3, "theta": 0.5, "d": 2.0, "tx_prob": 1.0, "pathloss": "singular"}

# Figure presets: quantity, swept grid and one settings map per curve.
PRESETS: Dict[str, Dict[str, Any]] = {
    "fig1": {
        "quantity": "i-exp-i",
        "sweep": SweepSpec("lambda", 0.0, 0.8, 81, fixed = {"tx_prob": 1.0, "pathloss": "singular", "fading": "rayleigh", "m": None}),
        "series": _ALPHAS
    },
    "fig2": {"quantity": "outage", "sweep": SweepSpec("lambda", 0.001, 0.03, 30, fixed = _LINK), "series": _ALPHAS},
    "fig3": {
        "quantity": "success",
        "sweep": SweepSpec("alpha", 2.05, 4.0, 40, fixed = {**_LINK, "intensity": 0.03, "theta": 1.0}),
        "series": _SHAPES
    },
    "fig4": {
        "quantity": "outage",
        "sweep": SweepSpec("lambda", 0.002, 0.1, 50, fixed = {**_LINK, "alpha": 3.0}),
        "series": _SHAPES
    },
    "fig5": {
        "quantity": "outage",
        "sweep": SweepSpec("alpha", 2.05, 5.0, 60, fixed = {**_LINK, "intensity": 0.01, "d_base": 4.0}),
        "series": _SHAPES
    },
    "fig6": {"quantity": "joint-outage", "sweep": SweepSpec("lambda", 0.001, 0.03, 30, fixed = _LINK), "series": _ALPHAS},
    "fig7": {
        "quantity": "diversity",
        "sweep": SweepSpec("lambda", 0.002, 0.1, 50, fixed = _LINK),
        "series": [{"alpha": alpha} for alpha in (2.5, 3.0, 5.0)]
    }
}


def _build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    shared = argparse.ArgumentParser(add_help = False)
    shared.add_argument("--config", type = str, default = None, help = "key-value file mirroring the flags")
    for flag, kwargs in FLAGS:
        shared.add_argument(flag, default = None, **kwargs)
    parser = argparse.ArgumentParser(
        prog = "interferencepy",
        description = "Interference functionals and outage of Poisson networks with ALOHA and fading."
    )
    commands = parser.add_subparsers(dest = "command", required = True)
    commands.add_parser("functional", parents = [shared], help = "interference functional E[prod I_i^p_i exp(-c I_i)]")
    commands.add_parser("outage", parents = [shared], help = "single-transmission success and outage")
    commands.add_parser("joint", parents = [shared], help = "joint success, joint outage and time diversity")
    commands.add_parser("simulate", parents = [shared], help = "Monte Carlo estimate of a functional or outage")
    commands.add_parser("sweep", parents = [shared], help = "parameter sweep or figure preset")
    commands.add_parser("verify", parents = [shared], help = "compare analytic values with simulation")
    return parser



def _build_config_settings(values: Dict[str, str]) -> Dict[str, Any]:
    """Convert the entries of a configuration file with the types of the matching flags.

    Raises:
        ValueError: If a key matches no flag or a value does not parse.
    """
    table = dict(FLAGS)
    settings = {}
    for key, text in values.items():
        kwargs = table.get(f"--{key}")
        if kwargs is None:
            raise ValueError(f"Invalid configuration key: '{key}'. Must name a command-line flag.")
        dest = kwargs.get("dest", key.replace("-", "_"))
        try:
            if kwargs.get("action") == "store_true":
                value = _build_flag(text)
            else:
                value = kwargs.get("type", str)(text)
        except (argparse.ArgumentTypeError, ValueError) as e:
            raise ValueError(f"Invalid configuration value for '{key}': '{text}'. {e}")
        if "choices" in kwargs and value not in kwargs["choices"]:
            raise ValueError(f"Invalid configuration value for '{key}': '{text}'. Must be one of {kwargs['choices']}.")
        settings[dest] = value
    return settings



def _build_settings(args: argparse.Namespace, config: Dict[str, str]) -> Dict[str, Any]:
    """Merge defaults, configuration file entries and command-line flags, in that order."""
    settings = dict(CLI_DEFAULTS)
    settings.update(_build_config_settings(config))
    settings.update({key: value for key, value in vars(args).items() if value is not None and key != "config"})
    return settings



def _build_fading(settings: Dict[str, Any]) -> FadingModel:
    if settings.get("m") is not None:
        return FadingModel(kind = "nakagami", m = settings["m"])
    return parse_fading(settings["fading"])



def _build_pathloss(settings: Dict[str, Any]) -> PathLossModel:
    return parse_pathloss(settings["pathloss"], settings["alpha"], settings.get("epsilon"))



def _build_network(settings: Dict[str, Any]) -> NetworkConfig:
    """Build the interferer network of one evaluation point."""
    return NetworkConfig(
        intensity = settings["intensity"],
        tx_prob = settings["tx_prob"],
        fading = _build_fading(settings),
        pathloss = _build_pathloss(settings)
    )



def _build_distance(settings: Dict[str, Any]) -> float:
    """Link distance, d_base^(1/alpha) when a base is set."""
    if settings.get("d_base") is not None:
        return settings["d_base"] ** (1.0 / settings["alpha"])
    return settings["d"]



def _build_link(settings: Dict[str, Any]) -> LinkConfig:
    return LinkConfig(network = _build_network(settings), theta = settings["theta"], d = _build_distance(settings))



def _build_spec(settings: Dict[str, Any]) -> FunctionalSpec:
    """Build the functional; 'i-exp-i' fixes p = (1,) and c = 1."""
    if settings.get("quantity") == "i-exp-i":
        return FunctionalSpec(p = (1,), c = 1.0)
    return FunctionalSpec(p = settings["p"], c = settings["c"])



def _build_option(settings: Dict[str, Any]) -> QuadratureOption:
    return QuadratureOption(abs_tol = settings.get("abs_tol"), rel_tol = settings.get("rel_tol"))



def _build_sim(settings: Dict[str, Any]) -> SimConfig:
    """Build the Monte Carlo options of the simulate and verify subcommands."""
    optional = {key: settings[key] for key in ("reps", "n_jobs") if settings.get(key) is not None}
    return SimConfig(
        seed = settings["seed"],
        window = settings["window"],
        bias_tol = settings["bias_tol"],
        max_points = settings["max_points"],
        batch_size = settings["batch_size"],
        tail_compensation = settings["tail_compensation"],
        interactive_mode = not settings["quiet"],
        **optional
    )



def _build_points(settings: Dict[str, Any]) -> List[Dict[str, Any]]:
    """Expand the settings into the ordered list of evaluation points.

    A preset yields one curve per series, each over the preset grid. Otherwise a
    --lambda-sweep or --alpha-sweep yields one point per grid value, and without a sweep
    the settings are the single point.

    Raises:
        ValueError: If the preset is unknown or both sweeps are given.
    """
    if settings.get("preset") is not None:
        preset = PRESETS.get(settings["preset"])
        if preset is None:
            raise ValueError(f"Invalid preset: '{settings['preset']}'. Must be one of {sorted(PRESETS)}.")
        base = dict(settings, quantity = preset["quantity"])
        points = []
        for series in preset["series"]:
            for point in preset["sweep"].points(base):
                point.update(series)
                points.append(point)
        return points
    if settings.get("lambda_sweep") is not None and settings.get("alpha_sweep") is not None:
        raise ValueError("Invalid sweep: give either --lambda-sweep or --alpha-sweep, not both.")
    for parameter, key in (("lambda", "lambda_sweep"), ("alpha", "alpha_sweep")):
        if settings.get(key) is not None:
            lo, hi, steps = settings[key]
            return SweepSpec(parameter, lo, hi, steps, scale = settings["scale"]).points(settings)
    return [dict(settings)]



def _build_quantity(settings: Dict[str, Any], default: str) -> str:
    quantity = settings.get("quantity") or default
    _validate_quantity(quantity)
    return quantity
