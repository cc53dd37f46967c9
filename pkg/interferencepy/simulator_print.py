import sys
from .simulator_option import MonteCarloEstimate, SimConfig


def _print_simulation_start(label: str, window: float, sim: SimConfig) -> None:
    """Print the parameters of a Monte Carlo run before it starts.

    Args:
        label (str): What is being estimated.
        window (float): The window radius in use.
        sim (SimConfig): The Monte Carlo options.
    """
    if sim.interactive_mode:
        compensation = ", tail compensated" if sim.tail_compensation else ""
        print(
            f"ℹ Estimating {label} with {sim.reps} replications (seed {sim.seed}, window {window:.6g}{compensation}).",
            file = sys.stderr
        )



def _print_simulation_status(estimate: MonteCarloEstimate, label: str, sim: SimConfig) -> None:
    """Print the result of a Monte Carlo run."""
    if sim.interactive_mode:
        print(
            f"✔ Estimated {label}: {estimate.mean:.6g} ± {estimate.std_error:.2g} "
            f"(truncation bound {estimate.bias_bound:.2g}) in {estimate.elapsed:.1f}s.",
            file = sys.stderr
        )



def _print_window_warning(window: float, wanted: float, sim: SimConfig) -> None:
    if sim.interactive_mode:
        print(
            f"⚠️ Window capped at {window:.6g} by max_points={sim.max_points:g}; "
            f"radius {wanted:.6g} was needed to meet bias_tol={sim.bias_tol:g}.",
            file = sys.stderr
        )
