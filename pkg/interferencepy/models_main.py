import math
from typing import Optional, Tuple, Union
import numpy as np
from .models_option import FadingModel, PathLossModel
from .models_process import (
    _process_raw_delta_moment,
    _process_raw_exp_moment,
    _process_raw_laplace_complement,
    _process_raw_pdf,
    _process_raw_sample
)
from .models_validate import _validate_alpha, _validate_delta, _validate_moment_arguments
from .utils import DomainError, _sinc


ArrayLike = Union[float, np.ndarray]


def _as_output(value: np.ndarray, like: ArrayLike) -> ArrayLike:
    """Return a float for scalar input and an array otherwise."""
    if np.ndim(like) == 0:
        return float(value)
    return value



def inverse_gain(model: PathLossModel, r: ArrayLike) -> ArrayLike:
    """Evaluate the reciprocal path gain 1 / l(r).

    The reciprocal is finite everywhere, including the Singular pole where it is 0, and
    overflows to inf only for astronomically large distances.

    Args:
        model (PathLossModel): The path gain model.
        r (ArrayLike): Distance(s), r >= 0.

    Returns:
        ArrayLike: The reciprocal gain(s), a float for scalar input.

    Examples:
        >>> from interferencepy import PathLossModel, inverse_gain
        >>> inverse_gain(PathLossModel(kind = "dist1", alpha = 3.0), 1.0)
        8.0
    """
    radius = np.asarray(r, dtype = float)
    if np.any(np.isnan(radius)) or np.any(radius < 0):
        raise ValueError(f"Invalid distance r: {r!r}. Must be non-negative.")
    with np.errstate(over = "ignore"):
        if model.kind == "singular":
            value = radius ** model.alpha
        elif model.kind == "min":
            value = np.maximum(1.0, radius ** model.alpha)
        elif model.kind == "eps":
            value = model.epsilon + radius ** model.alpha
        else:
            value = (1.0 + radius) ** model.alpha
    return _as_output(value, r)



def path_gain(model: PathLossModel, r: ArrayLike) -> ArrayLike:
    """Evaluate the path gain l(r) of a model.

    Args:
        model (PathLossModel): The path gain model.
        r (ArrayLike): Distance(s), r >= 0; r > 0 for the Singular model.

    Returns:
        ArrayLike: The gain(s), a float for scalar input.

    Raises:
        DomainError: If the Singular model is evaluated at its pole r = 0.
        ValueError: If a distance is negative.

    Examples:
        >>> from interferencepy import PathLossModel, path_gain
        >>> path_gain(PathLossModel(kind = "singular", alpha = 4.0), 2.0)
        0.0625
        >>> path_gain(PathLossModel(kind = "min", alpha = 4.0), 0.5)
        1.0
    """
    radius = np.asarray(r, dtype = float)
    if model.kind == "singular" and np.any(radius == 0):
        raise DomainError("The singular path gain has a pole at the origin", function = "path_gain", parameter = "r", value = r)
    inverse = np.asarray(inverse_gain(model, radius), dtype = float)
    return _as_output(1.0 / inverse, r)



def _gain_value(model: PathLossModel, r: float) -> float:
    """Path gain of a scalar distance with inf at the Singular pole."""
    inverse = float(inverse_gain(model, r))
    if inverse == 0:
        return math.inf
    return 1.0 / inverse



def fading_pdf(model: FadingModel, x: ArrayLike) -> ArrayLike:
    """Evaluate the density of the fading power h.

    The Rice density is the non-central chi-square density, which carries the modified
    Bessel function of order k/2 - 1.

    Args:
        model (FadingModel): The fading model.
        x (ArrayLike): Power value(s), x >= 0.

    Returns:
        ArrayLike: The density value(s), a float for scalar input.

    Examples:
        >>> from interferencepy import FadingModel, fading_pdf
        >>> fading_pdf(FadingModel(kind = "rayleigh"), 0.0)
        1.0
    """
    values = np.asarray(x, dtype = float)
    if np.any(np.isnan(values)) or np.any(values < 0):
        raise ValueError(f"Invalid power x: {x!r}. Must be non-negative.")
    scale = model.scale
    density = scale * np.asarray(_process_raw_pdf(model, scale * values), dtype = float)
    return _as_output(density, x)



def fading_sample(model: FadingModel, rng: np.random.Generator, size: Optional[Union[int, Tuple[int, ...]]] = None) -> ArrayLike:
    """Draw fading power samples.

    Rayleigh, Erlang and Nakagami are drawn by gamma sampling and Rice by non-central
    chi-square sampling. The random stream is supplied by the caller.

    Args:
        model (FadingModel): The fading model.
        rng (np.random.Generator): The random stream to draw from.
        size (Optional[Union[int, Tuple[int, ...]]]): Output shape. A single float is
            returned when None. Defaults to None.

    Returns:
        ArrayLike: The drawn power(s).

    Examples:
        >>> import numpy as np
        >>> from interferencepy import FadingModel, fading_sample
        >>> rng = np.random.default_rng(7)
        >>> h = fading_sample(FadingModel(kind = "nakagami", m = 3), rng, size = 1000)
    """
    draws = _process_raw_sample(model, rng, size) / model.scale
    if size is None:
        return float(draws)
    return draws



def exp_moment(model: FadingModel, gain: float, j: int, c: float = 1.0) -> float:
    """Compute the damped fading moment E[(h l)^j exp(-c h l)].

    Closed forms are used for Rayleigh, Erlang and Nakagami at every j and for Rice at
    j in {0, 1}; Rice with j >= 2 integrates against the density. The evaluation is
    finite for every gain in [0, inf], returning 0 at an infinite gain.

    Args:
        model (FadingModel): The fading model.
        gain (float): The path gain l >= 0.
        j (int): The power of (h l), j >= 0.
        c (float): The damping constant, c > 0. Defaults to 1.0.

    Returns:
        float: The moment.

    Raises:
        ValueError: If an argument is out of range.
        AccuracyError: If the Rice quadrature misses its tolerance.

    Examples:
        >>> from interferencepy import FadingModel, exp_moment
        >>> exp_moment(FadingModel(kind = "rayleigh"), 1.0, 3)
        0.375
    """
    _validate_moment_arguments(gain, j, c)
    return _process_raw_exp_moment(model, gain / model.scale, int(j), c)



def delta_moment(model: FadingModel, delta: float) -> float:
    """Compute the fractional moment E[h^delta].

    For Nakagami(m) this is Gamma(m + delta) / (Gamma(m) m^delta). For Rice it is
    2^delta exp(-psi/2) Gamma(k/2 + delta) / Gamma(k/2) 1F1(k/2 + delta; k/2; psi/2).

    Args:
        model (FadingModel): The fading model.
        delta (float): The moment order, 0 < delta < 1.

    Returns:
        float: The moment.

    Examples:
        >>> from interferencepy import FadingModel, delta_moment
        >>> round(delta_moment(FadingModel(kind = "nakagami", m = 3), 0.5), 4)
        0.9594
    """
    _validate_delta(delta)
    return _process_raw_delta_moment(model, delta) / model.scale ** delta



def fading_mean(model: FadingModel) -> float:
    """Return E[h]: 1 for Rayleigh and Nakagami, k for Erlang, k + psi for Rice, 1 when normalised."""
    return model.raw_mean / model.scale



def derived_exponents(alpha: float, tx_prob: float = 1.0, intensity: float = 1.0) -> Tuple[float, float]:
    """Compute the tail index delta = 2 / alpha and kappa = p lambda pi / sinc(delta).

    Args:
        alpha (float): The path loss exponent, alpha > 2.
        tx_prob (float): The ALOHA transmit probability. Defaults to 1.0.
        intensity (float): The node intensity. Defaults to 1.0.

    Returns:
        Tuple[float, float]: (delta, kappa).

    Examples:
        >>> from interferencepy import derived_exponents
        >>> delta, kappa = derived_exponents(4.0, 1.0, 2.0 / 3.141592653589793 ** 2)
    """
    _validate_alpha(alpha)
    delta = 2.0 / alpha
    return delta, tx_prob * intensity * math.pi / _sinc(delta)



def _laplace_complement(model: FadingModel, gain: float, c: float = 1.0) -> float:
    """1 - E[exp(-c h l)], accurate for small l and equal to 1 at l = inf."""
    return _process_raw_laplace_complement(model, gain / model.scale, c)



def _fading_second_moment(model: FadingModel) -> float:
    """E[h^2] of the fading power, honouring mean normalisation."""
    if model.kind == "rayleigh":
        raw = 2.0
    elif model.kind == "erlang":
        raw = float(model.k * (model.k + 1))
    elif model.kind == "nakagami":
        raw = 1.0 + 1.0 / model.m
    else:
        raw = 2.0 * (model.k + 2.0 * model.psi) + (model.k + model.psi) ** 2
    return raw / model.scale ** 2
