import math
from typing import Optional


def _validate_sim_parameters(
    reps: int,
    seed: int,
    window: Optional[float],
    bias_tol: float,
    max_points: float,
    batch_size: int,
    n_jobs: int
) -> None:
    """Validate the parameters of a Monte Carlo run.

    Raises:
        ValueError: If any parameter is out of range.
    """
    if isinstance(reps, bool) or int(reps) != reps or reps < 1:
        raise ValueError(f"Invalid reps: {reps!r}. Must be a positive integer.")
    if isinstance(seed, bool) or int(seed) != seed or seed < 0:
        raise ValueError(f"Invalid seed: {seed!r}. Must be a non-negative integer.")
    if window is not None and (not math.isfinite(window) or window <= 0):
        raise ValueError(f"Invalid window: {window!r}. The window radius must be a positive number.")
    if not bias_tol > 0:
        raise ValueError(f"Invalid bias_tol: {bias_tol!r}. Must be positive.")
    if not max_points > 0:
        raise ValueError(f"Invalid max_points: {max_points!r}. Must be positive.")
    if isinstance(batch_size, bool) or int(batch_size) != batch_size or batch_size < 1:
        raise ValueError(f"Invalid batch_size: {batch_size!r}. Must be a positive integer.")
    if isinstance(n_jobs, bool) or int(n_jobs) != n_jobs or n_jobs == 0:
        raise ValueError(f"Invalid n_jobs: {n_jobs!r}. Must be a non-zero integer (-1 uses every core).")



def _validate_window_radius(window: float, d: float) -> None:
    """Validate that the window encloses the receiver's own link.

    Raises:
        ValueError: If window <= d.
    """
    if not window > d:
        raise ValueError(f"Invalid window: {window!r}. The window radius must exceed the link distance d={d!r}.")



def _validate_slots(slots: int) -> None:
    """Validate the number of slots of a realisation.

    Raises:
        ValueError: If slots is not a positive integer.
    """
    if isinstance(slots, bool) or int(slots) != slots or slots < 1:
        raise ValueError(f"Invalid slots: {slots!r}. Must be a positive integer.")
