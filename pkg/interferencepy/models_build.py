from typing import Optional
from .models_option import FadingModel, PathLossModel


NORMALIZED_SUFFIX = "/normalized"


def parse_fading(text: str) -> FadingModel:
    """Build a FadingModel from its command-line spelling.

    Accepted forms are 'rayleigh', 'erlang:k', 'rice:k,psi' and 'nakagami:m'. A trailing
    '/normalized' switches on mean normalisation, so the string of a model parses back
    to the same model.

    Args:
        text (str): The model string, case-insensitive.

    Returns:
        FadingModel: The parsed model.

    Raises:
        ValueError: If the string does not follow the grammar or a parameter is out of range.

    Examples:
        >>> from interferencepy import parse_fading
        >>> model = parse_fading("nakagami:3")
        >>> model = parse_fading("rice:2,1.5")
    """
    raw = text.strip().lower()
    normalize_mean = raw.endswith(NORMALIZED_SUFFIX)
    if normalize_mean:
        raw = raw[: -len(NORMALIZED_SUFFIX)]
    kind, _, arguments = raw.partition(":")
    try:
        if kind == "rayleigh" and not arguments:
            return FadingModel(kind = "rayleigh", normalize_mean = normalize_mean)
        if kind == "erlang" and arguments:
            return FadingModel(kind = "erlang", k = int(arguments), normalize_mean = normalize_mean)
        if kind == "rice" and arguments.count(",") == 1:
            k_text, psi_text = arguments.split(",")
            return FadingModel(kind = "rice", k = int(k_text), psi = float(psi_text), normalize_mean = normalize_mean)
        if kind == "nakagami" and arguments:
            return FadingModel(kind = "nakagami", m = float(arguments), normalize_mean = normalize_mean)
    except ValueError as e:
        raise ValueError(f"Invalid fading model: '{text}'. {e}")
    raise ValueError(f"Invalid fading model: '{text}'. Must be one of rayleigh, erlang:k, rice:k,psi or nakagami:m.")



def parse_pathloss(text: str, alpha: float, epsilon: Optional[float] = None) -> PathLossModel:
    """Build a PathLossModel from its command-line spelling.

    Accepted forms are 'singular', 'min', 'eps:e' and 'dist1'.

    Args:
        text (str): The model string, case-insensitive.
        alpha (float): The path loss exponent.
        epsilon (Optional[float]): Offset for 'eps' when the string carries none.

    Returns:
        PathLossModel: The parsed model.

    Raises:
        ValueError: If the string does not follow the grammar or a parameter is out of range.

    Examples:
        >>> from interferencepy import parse_pathloss
        >>> model = parse_pathloss("eps:0.5", alpha = 3.0)
    """
    raw = text.strip().lower()
    kind, _, arguments = raw.partition(":")
    if kind in {"singular", "min", "dist1"} and not arguments:
        return PathLossModel(kind = kind, alpha = alpha)
    if kind == "eps":
        try:
            value = float(arguments) if arguments else epsilon
        except ValueError:
            raise ValueError(f"Invalid path loss model: '{text}'. The offset of 'eps:e' must be a number.")
        return PathLossModel(kind = "eps", alpha = alpha, epsilon = value)
    raise ValueError(f"Invalid path loss model: '{text}'. Must be one of singular, min, eps:e or dist1.")
