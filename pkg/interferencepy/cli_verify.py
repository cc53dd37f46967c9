import math
from typing import Callable, List, Optional, Tuple
from pandas import DataFrame
from .cli_print import _print_verify_status
from .cli_validate import _validate_suite
from .functionals_main import interference_functional
from .functionals_option import FunctionalSpec, NetworkConfig
from .models_option import FadingModel, PathLossModel
from .outage_main import joint_success_probability_singular, success_probability_singular
from .outage_option import LinkConfig
from .simulator_main import estimate_functional, estimate_joint, estimate_outage
from .simulator_option import MonteCarloEstimate, SimConfig


VERIFY_COLUMNS = ["check", "analytic", "estimate", "std_error", "z", "passed"]
Z_LIMIT = 4.0
SUITE_REPS = {"quick": 20_000, "full": 1_000_000}

# (check name, analytic value, estimator taking the Monte Carlo options)
Check = Tuple[str, Callable[[], float], Callable[[SimConfig], MonteCarloEstimate]]


def _verify_i_exp_i_check(intensity: float) -> Check:
    """E[I exp(-I)] of the Rayleigh Singular network with alpha = 4 against its closed form."""
    cfg = NetworkConfig(intensity = intensity)
    spec = FunctionalSpec(p = (1,))
    return (
        f"i-exp-i singular alpha=4 lambda={intensity:g}",
        lambda: 0.25 * intensity * math.pi ** 2 * math.exp(-intensity * math.pi ** 2 / 2.0),
        lambda sim: estimate_functional(cfg, spec, sim)
    )



def _verify_two_slot_check(intensity: float) -> Check:
    """E[I_1 I_2 exp(-I_1 - I_2)] of a Minimum path loss network by quadrature."""
    cfg = NetworkConfig(intensity = intensity, pathloss = PathLossModel(kind = "min", alpha = 4.0))
    spec = FunctionalSpec(p = (1, 1))
    return (
        f"functional p=1,1 min alpha=4 lambda={intensity:g}",
        lambda: interference_functional(cfg, spec),
        lambda sim: estimate_functional(cfg, spec, sim)
    )



def _verify_link_checks(alpha: float, intensity: float) -> List[Check]:
    """Success and joint success of the m = 3, theta = 0.5, d = 2 link."""
    network = NetworkConfig(intensity = intensity, fading = FadingModel(kind = "nakagami", m = 3), pathloss = PathLossModel(alpha = alpha))
    link = LinkConfig(network = network, theta = 0.5, d = 2.0)
    return [
        (
            f"success m=3 alpha={alpha:g} lambda={intensity:g}",
            lambda: success_probability_singular(link),
            lambda sim: estimate_outage(link, sim)
        ),
        (
            f"joint m=3 alpha={alpha:g} lambda={intensity:g}",
            lambda: joint_success_probability_singular(link),
            lambda sim: estimate_joint(link, sim)
        )
    ]



def _verify_checks(suite: str) -> List[Check]:
    """The checks of a suite; 'full' covers the alpha x lambda acceptance grid."""
    checks = [_verify_i_exp_i_check(0.1), _verify_two_slot_check(0.1)]
    if suite == "quick":
        checks += _verify_link_checks(4.0, 0.01)
    else:
        for alpha in (2.5, 3.0, 4.0, 5.0):
            for intensity in (0.005, 0.015, 0.03):
                checks += _verify_link_checks(alpha, intensity)
    return checks



def verify_suite(
    suite: str = "quick",
    seed: int = 0,
    reps: Optional[int] = None,
    n_jobs: Optional[int] = None,
    interactive_mode: bool = True
) -> DataFrame:
    """Compare analytic values with independent Monte Carlo estimates.

    Each check runs with tail compensation and its own seed, seed + index. A check
    passes when the estimate lies within 4 standard errors of the analytic value.

    Args:
        suite (str): 'quick' (a few seconds) or 'full' (the acceptance grids).
            Defaults to 'quick'.
        seed (int): Base seed. Defaults to 0.
        reps (Optional[int]): Replications per check. Defaults to 20000 for 'quick' and
            1000000 for 'full'.
        n_jobs (Optional[int]): Worker count of the batch pool. Defaults to None.
        interactive_mode (bool): Whether to print status messages. Defaults to True.

    Returns:
        DataFrame: One row per check with columns check, analytic, estimate,
            std_error, z and passed.

    Raises:
        ValueError: If the suite is unknown.
        AccuracyError: If an analytic value misses its tolerance.

    Examples:
        >>> from interferencepy import verify_suite
        >>> report = verify_suite("quick", seed = 7, interactive_mode = False)
        >>> bool(report["passed"].all())
        True
    """
    _validate_suite(suite)
    count = reps if reps is not None else SUITE_REPS[suite]
    rows = []
    for index, (name, analytic, estimator) in enumerate(_verify_checks(suite)):
        sim = SimConfig(
            reps = count,
            seed = seed + index,
            n_jobs = n_jobs,
            tail_compensation = True,
            interactive_mode = interactive_mode
        )
        value = analytic()
        estimate = estimator(sim)
        z = estimate.z_score(value)
        rows.append({
            "check": name,
            "analytic": value,
            "estimate": estimate.mean,
            "std_error": estimate.std_error,
            "z": z,
            "passed": bool(abs(z) <= Z_LIMIT)
        })
    df = DataFrame(rows, columns = VERIFY_COLUMNS)
    _print_verify_status(df, interactive_mode)
    return df
