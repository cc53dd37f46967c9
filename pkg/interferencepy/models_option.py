from typing import Optional
from .models_validate import (
    _validate_alpha,
    _validate_epsilon,
    _validate_fading_kind,
    _validate_fading_parameters,
    _validate_pathloss_kind
)


class PathLossModel:
    """Deterministic path gain model of a link.

    Four decaying gain laws of the distance r between transmitter and receiver:

    - 'singular': r^(-alpha), with a pole at the origin;
    - 'min': min(1, r^(-alpha)), clamped at one;
    - 'eps': 1 / (epsilon + r^alpha);
    - 'dist1': (1 + r)^(-alpha).

    Every model is non-increasing in r and tends to zero at infinity.

    Args:
        kind (str): One of 'singular', 'min', 'eps' or 'dist1'. Defaults to 'singular'.
        alpha (float): The path loss exponent, alpha > 2. Defaults to 4.0.
        epsilon (Optional[float]): The offset of the 'eps' model, epsilon > 0. Ignored by
            the other models. Defaults to None.

    Attributes:
        kind (str): The model name.
        alpha (float): The path loss exponent.
        epsilon (Optional[float]): The offset of the 'eps' model.

    Raises:
        ValueError: If the kind is unknown, alpha <= 2, or epsilon is missing for 'eps'.

    Examples:
        >>> from interferencepy import PathLossModel
        >>> model = PathLossModel(kind = "singular", alpha = 4.0)
        >>> model = PathLossModel(kind = "eps", alpha = 3.0, epsilon = 0.5)
    """
    def __init__(
        self,
        kind: str = "singular",
        alpha: float = 4.0,
        epsilon: Optional[float] = None
    ):
        self.kind = kind
        self.alpha = alpha
        self.epsilon = epsilon
        self._validate()

    def _validate(self) -> None:
        """Validate the path loss model parameters."""
        _validate_pathloss_kind(self.kind)
        _validate_alpha(self.alpha)
        _validate_epsilon(self.kind, self.epsilon)

    @property
    def delta(self) -> float:
        """The tail index 2 / alpha."""
        return 2.0 / self.alpha

    def with_alpha(self, alpha: float) -> "PathLossModel":
        """Return a copy of the model with another exponent."""
        return PathLossModel(kind = self.kind, alpha = alpha, epsilon = self.epsilon)

    def __str__(self) -> str:
        if self.kind == "eps":
            return f"eps:{self.epsilon:g}"
        return self.kind

    def __repr__(self) -> str:
        return f"PathLossModel(kind={self.kind!r}, alpha={self.alpha!r}, epsilon={self.epsilon!r})"



class FadingModel:
    """Distribution of the fading power h of a link.

    The densities of the power h are:

    - 'rayleigh': exp(-x);
    - 'erlang': x^(k-1) exp(-x) / (k-1)!, with mean k;
    - 'rice': the non-central chi-square density with k degrees of freedom and
      non-centrality psi, with mean k + psi;
    - 'nakagami': m^m x^(m-1) exp(-m x) / Gamma(m), with mean 1.

    Rayleigh, Erlang with k = 1 and Nakagami with m = 1 are the same distribution.

    Args:
        kind (str): One of 'rayleigh', 'erlang', 'rice' or 'nakagami'. Defaults to 'rayleigh'.
        k (int): Shape of 'erlang', degrees of freedom of 'rice'. Defaults to 1.
        psi (float): Non-centrality of 'rice'. Defaults to 1.0.
        m (float): Shape of 'nakagami', any positive real. Defaults to 1.0.
        normalize_mean (bool): Whether to rescale h by its mean so that E[h] = 1. The
            density, the sampler and every moment honour the rescaling. Defaults to False.

    Attributes:
        kind (str): The model name.
        k (int): Erlang shape or Rice degrees of freedom.
        psi (float): Rice non-centrality.
        m (float): Nakagami shape.
        normalize_mean (bool): Whether h is rescaled to unit mean.

    Raises:
        ValueError: If the kind is unknown or a shape parameter is out of range.

    Examples:
        >>> from interferencepy import FadingModel
        >>> model = FadingModel(kind = "nakagami", m = 3)
        >>> model = FadingModel(kind = "rice", k = 2, psi = 1.5, normalize_mean = True)
    """
    def __init__(
        self,
        kind: str = "rayleigh",
        k: int = 1,
        psi: float = 1.0,
        m: float = 1.0,
        normalize_mean: bool = False
    ):
        self.kind = kind
        self.k = k
        self.psi = psi
        self.m = m
        self.normalize_mean = normalize_mean
        self._validate()

    def _validate(self) -> None:
        """Validate the fading model parameters."""
        _validate_fading_kind(self.kind)
        _validate_fading_parameters(self.kind, self.k, self.psi, self.m)

    @property
    def raw_mean(self) -> float:
        """E[h] of the density as parameterised, before any rescaling."""
        if self.kind == "erlang":
            return float(self.k)
        if self.kind == "rice":
            return float(self.k + self.psi)
        return 1.0

    @property
    def scale(self) -> float:
        """The divisor applied to h: the raw mean when normalising, else 1."""
        return self.raw_mean if self.normalize_mean else 1.0

    def __str__(self) -> str:
        if self.kind == "erlang":
            label = f"erlang:{self.k}"
        elif self.kind == "rice":
            label = f"rice:{self.k},{self.psi:g}"
        elif self.kind == "nakagami":
            label = f"nakagami:{self.m:g}"
        else:
            label = "rayleigh"
        return label + ("/normalized" if self.normalize_mean else "")

    def __repr__(self) -> str:
        return (
            f"FadingModel(kind={self.kind!r}, k={self.k!r}, psi={self.psi!r}, "
            f"m={self.m!r}, normalize_mean={self.normalize_mean!r})"
        )
