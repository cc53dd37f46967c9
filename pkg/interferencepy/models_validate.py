import math
from typing import Optional


VALID_PATHLOSS_KINDS = {"singular", "min", "eps", "dist1"}
VALID_FADING_KINDS = {"rayleigh", "erlang", "rice", "nakagami"}


def _validate_pathloss_kind(kind: str) -> None:
    """Validate the path gain model name.

    Args:
        kind (str): The model name, e.g. 'singular'.

    Raises:
        ValueError: If the name is not a known path gain model.
    """
    if kind not in VALID_PATHLOSS_KINDS:
        raise ValueError(f"Invalid path loss kind: '{kind}'. Must be one of {VALID_PATHLOSS_KINDS}")



def _validate_alpha(alpha: float) -> None:
    """Validate the path loss exponent.

    Raises:
        ValueError: If alpha is not a finite number greater than 2.
    """
    if not isinstance(alpha, (int, float)) or isinstance(alpha, bool) or not math.isfinite(alpha) or alpha <= 2:
        raise ValueError(f"Invalid alpha: {alpha!r}. The path loss exponent must be a finite number > 2.")



def _validate_epsilon(kind: str, epsilon: Optional[float]) -> None:
    """Validate the offset of the 'eps' path gain model.

    Raises:
        ValueError: If kind is 'eps' and epsilon is missing or not positive.
    """
    if kind != "eps":
        return
    if epsilon is None or not math.isfinite(epsilon) or epsilon <= 0:
        raise ValueError(f"Invalid epsilon: {epsilon!r}. The 'eps' path loss model needs epsilon > 0.")



def _validate_fading_kind(kind: str) -> None:
    """Validate the fading model name.

    Raises:
        ValueError: If the name is not a known fading model.
    """
    if kind not in VALID_FADING_KINDS:
        raise ValueError(f"Invalid fading kind: '{kind}'. Must be one of {VALID_FADING_KINDS}")



def _validate_fading_parameters(kind: str, k: int, psi: float, m: float) -> None:
    """Validate the shape parameters of a fading model.

    Args:
        kind (str): The fading model name.
        k (int): Erlang shape or Rice degrees of freedom.
        psi (float): Rice non-centrality.
        m (float): Nakagami shape.

    Raises:
        ValueError: If a parameter used by `kind` is out of range.
    """
    if kind in {"erlang", "rice"}:
        if isinstance(k, bool) or int(k) != k or k < 1:
            raise ValueError(f"Invalid k for {kind} fading: {k!r}. Must be a positive integer.")
    if kind == "rice":
        if not math.isfinite(psi) or psi <= 0:
            raise ValueError(f"Invalid psi for rice fading: {psi!r}. Must be a positive real.")
    if kind == "nakagami":
        if not math.isfinite(m) or m <= 0:
            raise ValueError(f"Invalid m for nakagami fading: {m!r}. Must be a positive real.")



def _validate_delta(delta: float) -> None:
    """Validate a fractional moment order.

    Raises:
        ValueError: If delta is not in the open interval (0, 1).
    """
    if not 0 < delta < 1:
        raise ValueError(f"Invalid delta: {delta!r}. Must lie in (0, 1).")



def _validate_moment_arguments(gain: float, j: int, c: float) -> None:
    """Validate the arguments of an exponential fading moment.

    Raises:
        ValueError: If gain is negative, j is not a non-negative integer, or c is not positive.
    """
    if math.isnan(gain) or gain < 0:
        raise ValueError(f"Invalid gain: {gain!r}. Must be non-negative.")
    if isinstance(j, bool) or int(j) != j or j < 0:
        raise ValueError(f"Invalid moment order j: {j!r}. Must be a non-negative integer.")
    if not c > 0:
        raise ValueError(f"Invalid damping constant c: {c!r}. Must be positive.")
