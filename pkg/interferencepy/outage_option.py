from .functionals_option import NetworkConfig
from .models_main import inverse_gain
from .outage_validate import _validate_integer_nakagami, _validate_link_geometry


class LinkConfig:
    """A source-destination link of length d inside a Poisson network of interferers.

    The link succeeds in a slot when SIR = h l(d) / I >= theta, with h the Nakagami(m)
    fading of the desired link and I the interference of the network. Interferers use
    the same Nakagami(m) fading. The source and destination are not points of the
    interferer process.

    Args:
        network (NetworkConfig): The interferer network; its fading must be Nakagami with
            integer m, or Rayleigh.
        theta (float): The SIR threshold, theta > 0.
        d (float): The link distance, d > 0.

    Attributes:
        network (NetworkConfig): The interferer network.
        theta (float): The SIR threshold.
        d (float): The link distance.
        m (int): The Nakagami shape.
        theta_hat (float): The threshold divided by the link gain, theta / l(d).

    Raises:
        ValueError: If theta or d is not positive or m is not a positive integer.

    Examples:
        >>> from interferencepy import LinkConfig, NetworkConfig, FadingModel, PathLossModel
        >>> link = LinkConfig(
        ...     network = NetworkConfig(
        ...         intensity = 0.01,
        ...         fading = FadingModel(kind = "nakagami", m = 3),
        ...         pathloss = PathLossModel(kind = "singular", alpha = 4.0)
        ...     ),
        ...     theta = 0.5,
        ...     d = 2.0
        ... )
        >>> link.theta_hat
        8.0
    """
    def __init__(self, network: NetworkConfig, theta: float = 1.0, d: float = 1.0):
        self.network = network
        self.theta = theta
        self.d = d
        self._validate()
        self.m = _validate_integer_nakagami(network.fading)

    def _validate(self) -> None:
        """Validate the link parameters."""
        _validate_link_geometry(self.theta, self.d)
        _validate_integer_nakagami(self.network.fading)

    @property
    def theta_hat(self) -> float:
        return self.theta * float(inverse_gain(self.network.pathloss, self.d))

    def replace(self, **changes) -> "LinkConfig":
        """Return a copy with network or link fields replaced, e.g. link.replace(intensity = 0.02)."""
        link_fields = {"theta": self.theta, "d": self.d}
        network_changes = {}
        for key, value in changes.items():
            if key in link_fields:
                link_fields[key] = value
            else:
                network_changes[key] = value
        network = self.network.replace(**network_changes) if network_changes else self.network
        return LinkConfig(network = network, **link_fields)

    def __repr__(self) -> str:
        return f"LinkConfig(network={self.network!r}, theta={self.theta!r}, d={self.d!r})"
