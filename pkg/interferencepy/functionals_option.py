from typing import Optional, Sequence
from .combinatorics_validate import _validate_exponents
from .functionals_validate import _validate_damping, _validate_intensity, _validate_models, _validate_tx_prob
from .models_option import FadingModel, PathLossModel


class NetworkConfig:
    """A stationary Poisson network of ALOHA interferers on the plane.

    Interferers form a Poisson point process of intensity lambda. In every slot each
    node transmits independently with probability tx_prob, and every link draws an
    i.i.d. fading power per slot.

    Args:
        intensity (float): Nodes per unit area, lambda > 0.
        tx_prob (float): ALOHA transmit probability in [0, 1]; 0 is the empty network.
            Defaults to 1.0.
        fading (Optional[FadingModel]): Fading of the interfering links. Defaults to
            Rayleigh fading.
        pathloss (Optional[PathLossModel]): Path gain law. Defaults to the Singular
            model with alpha = 4.

    Attributes:
        intensity (float): The node intensity.
        tx_prob (float): The transmit probability.
        fading (FadingModel): The fading model.
        pathloss (PathLossModel): The path gain model.

    Raises:
        ValueError: If any parameter is out of range.

    Examples:
        >>> from interferencepy import NetworkConfig, FadingModel, PathLossModel
        >>> cfg = NetworkConfig(
        ...     intensity = 0.1,
        ...     tx_prob = 1.0,
        ...     fading = FadingModel(kind = "nakagami", m = 3),
        ...     pathloss = PathLossModel(kind = "singular", alpha = 4.0)
        ... )
    """
    def __init__(
        self,
        intensity: float,
        tx_prob: float = 1.0,
        fading: Optional[FadingModel] = None,
        pathloss: Optional[PathLossModel] = None
    ):
        self.intensity = intensity
        self.tx_prob = tx_prob
        self.fading = fading if fading is not None else FadingModel()
        self.pathloss = pathloss if pathloss is not None else PathLossModel()
        self._validate()

    def _validate(self) -> None:
        """Validate the network parameters."""
        _validate_intensity(self.intensity)
        _validate_tx_prob(self.tx_prob)
        _validate_models(self.fading, self.pathloss)

    @property
    def active_intensity(self) -> float:
        """Intensity of the transmitters of one slot, tx_prob * lambda."""
        return self.tx_prob * self.intensity

    def replace(self, **changes) -> "NetworkConfig":
        """Return a copy with some fields replaced, e.g. cfg.replace(intensity = 0.2).

        The key 'alpha' replaces the exponent of the path loss model.
        """
        if "alpha" in changes:
            changes["pathloss"] = changes.get("pathloss", self.pathloss).with_alpha(changes.pop("alpha"))
        fields = {
            "intensity": self.intensity,
            "tx_prob": self.tx_prob,
            "fading": self.fading,
            "pathloss": self.pathloss
        }
        fields.update(changes)
        return NetworkConfig(**fields)

    def __repr__(self) -> str:
        return (
            f"NetworkConfig(intensity={self.intensity!r}, tx_prob={self.tx_prob!r}, "
            f"fading={self.fading!r}, pathloss={self.pathloss!r})"
        )



class FunctionalSpec:
    """Exponents and damping of an interference functional E[prod_i I_i^p_i exp(-c I_i)].

    Args:
        p (Sequence[int]): Per-slot exponents (p_1, ..., p_q) with ||p||_1 > 0.
        c (float): The damping constant, c > 0. Defaults to 1.0.

    Attributes:
        p (Tuple[int, ...]): The exponents.
        c (float): The damping constant.
        q (int): The number of slots.

    Raises:
        ValueError: If p is invalid or c is not positive.

    Examples:
        >>> from interferencepy import FunctionalSpec
        >>> spec = FunctionalSpec(p = (1, 1), c = 1.0)
        >>> spec.q
        2
    """
    def __init__(self, p: Sequence[int], c: float = 1.0):
        self.p = p
        self.c = c
        self._validate()
        self.p = _validate_exponents(p)

    def _validate(self) -> None:
        """Validate the functional parameters."""
        _validate_exponents(self.p)
        _validate_damping(self.c)

    @property
    def q(self) -> int:
        return len(self.p)

    def __repr__(self) -> str:
        return f"FunctionalSpec(p={self.p!r}, c={self.c!r})"
