import math
from typing import Sequence, Tuple
from .models_option import FadingModel, PathLossModel


def _validate_intensity(intensity: float) -> None:
    """Validate the node intensity lambda.

    Raises:
        ValueError: If the intensity is not a positive finite number.
    """
    if isinstance(intensity, bool) or not isinstance(intensity, (int, float)) or not math.isfinite(intensity) or intensity <= 0:
        raise ValueError(f"Invalid intensity: {intensity!r}. Must be a positive number.")



def _validate_tx_prob(tx_prob: float) -> None:
    """Validate the ALOHA transmit probability.

    Zero is accepted as the degenerate network without transmitters.

    Raises:
        ValueError: If the probability is outside [0, 1].
    """
    if isinstance(tx_prob, bool) or not isinstance(tx_prob, (int, float)) or not 0 <= tx_prob <= 1:
        raise ValueError(f"Invalid tx_prob: {tx_prob!r}. Must lie in [0, 1].")



def _validate_models(fading: FadingModel, pathloss: PathLossModel) -> None:
    """Validate the model objects of a network.

    Raises:
        ValueError: If fading or pathloss has the wrong type.
    """
    if not isinstance(fading, FadingModel):
        raise ValueError(f"Invalid fading: {fading!r}. Must be a FadingModel.")
    if not isinstance(pathloss, PathLossModel):
        raise ValueError(f"Invalid pathloss: {pathloss!r}. Must be a PathLossModel.")



def _validate_damping(c: float) -> None:
    """Validate the damping constant c.

    Raises:
        ValueError: If c is not positive.
    """
    if isinstance(c, bool) or not isinstance(c, (int, float)) or not math.isfinite(c) or c <= 0:
        raise ValueError(f"Invalid damping constant c: {c!r}. Must be a positive number.")



def _validate_weak_exponents(p: Sequence[int]) -> Tuple[int, ...]:
    """Validate an exponent vector that may be all zeros.

    Returns:
        Tuple[int, ...]: The exponents as a tuple of ints.

    Raises:
        ValueError: If p is empty or holds negative or non-integer entries.
    """
    if p is None or len(p) == 0:
        raise ValueError("Exponent vector p must hold at least one entry.")
    exponents = []
    for value in p:
        if isinstance(value, bool) or int(value) != value or value < 0:
            raise ValueError(f"Invalid exponent {value!r} in p={tuple(p)}. Entries must be non-negative integers.")
        exponents.append(int(value))
    return tuple(exponents)



def _validate_moment_order(k: int) -> None:
    """Validate the order k of a moment E[I^k exp(-I)].

    Raises:
        ValueError: If k is not a positive integer.
    """
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise ValueError(f"Invalid moment order k: {k!r}. Must be a positive integer.")



def _validate_laplace_argument(s: float) -> None:
    """Validate the argument s of the Laplace transform.

    Raises:
        ValueError: If s is not positive.
    """
    if not s > 0:
        raise ValueError(f"Invalid Laplace argument s: {s!r}. Must be positive.")
