import math
from .models_option import FadingModel, PathLossModel


VALID_METHODS = {"auto", "quadrature", "closed_form"}


def _validate_link_geometry(theta: float, d: float) -> None:
    """Validate the SIR threshold and the link distance.

    Raises:
        ValueError: If theta or d is not a positive finite number.
    """
    if isinstance(theta, bool) or not isinstance(theta, (int, float)) or not math.isfinite(theta) or theta <= 0:
        raise ValueError(f"Invalid theta: {theta!r}. The SIR threshold must be a positive number.")
    if isinstance(d, bool) or not isinstance(d, (int, float)) or not math.isfinite(d) or d <= 0:
        raise ValueError(f"Invalid d: {d!r}. The link distance must be a positive number.")



def _validate_integer_nakagami(fading: FadingModel) -> int:
    """Validate that the fading is Nakagami with an integer shape and return m.

    Rayleigh fading is accepted as Nakagami with m = 1.

    Raises:
        ValueError: If the fading is not Nakagami/Rayleigh or m is not a positive integer.
    """
    if fading.kind == "rayleigh":
        return 1
    if fading.kind != "nakagami":
        raise ValueError(f"Invalid fading for outage evaluation: '{fading.kind}'. Must be 'nakagami' or 'rayleigh'.")
    if float(fading.m) != int(fading.m):
        raise ValueError(
            f"Invalid Nakagami m: {fading.m!r}. Outage evaluation expands the gamma ccdf into a "
            "finite sum, which needs m to be a positive integer."
        )
    return int(fading.m)



def _validate_singular(pathloss: PathLossModel, function: str) -> None:
    """Validate that a closed form is asked for the Singular model.

    Raises:
        ValueError: If the path gain model is not 'singular'.
    """
    if pathloss.kind != "singular":
        raise ValueError(f"{function} needs the 'singular' path loss model, got '{pathloss.kind}'.")



def _validate_method(method: str) -> None:
    """Validate the evaluation method of an outage curve.

    Raises:
        ValueError: If the method is unknown.
    """
    if method not in VALID_METHODS:
        raise ValueError(f"Invalid method: '{method}'. Must be one of {VALID_METHODS}")
